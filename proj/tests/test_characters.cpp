#include <doctest.h>

#include <set>

#include "core/characters.hpp"
#include "support/freudenthal.hpp"
#include "support/oracles.hpp"

using namespace liecoh;
using liecoh::testsupport::brute_multiset_partitions;
using liecoh::testsupport::freudenthal_character;

namespace {

std::vector<std::vector<int>> all_subsets(int rank) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << rank); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < rank; ++i)
            if (mask & (1 << i)) J.push_back(i);
        out.push_back(J);
    }
    return out;
}

long long binomial(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("q-partition basics") {
    auto a2 = RootSystem::build("A2");
    auto phi = a2.positive_roots();

    CHECK(q_partition(a2, a2.zero_root(), phi) == QPolynomial::one());
    CHECK(q_partition(a2, RootVector({1, 1}), phi) == QPolynomial({0, 1, 1}));

    auto complement = a2.positive_roots_complement({0});
    CHECK(q_partition(a2, RootVector({1, 2}), complement) == QPolynomial({0, 0, 1}));
    CHECK(q_partition(a2, RootVector({-1, 0}), phi).is_zero());
}

TEST_CASE("q-partition agrees with exhaustive multiset enumeration") {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        for (const auto& J : all_subsets(rs.rank())) {
            auto S = rs.positive_roots_complement(J);
            // all mu of height <= 6
            std::vector<RootVector> targets;
            for (int a = 0; a <= 6; ++a)
                for (int b = 0; a + b <= 6; ++b) {
                    if (rs.rank() == 1) {
                        if (b == 0) targets.push_back(RootVector({a}));
                    } else {
                        targets.push_back(RootVector({a, b}));
                    }
                }
            for (const auto& mu : targets) {
                auto brute = brute_multiset_partitions(rs, mu, S);
                auto poly = q_partition(rs, mu, S);
                std::map<int, long long> got;
                for (int k = 0; k <= poly.degree(); ++k)
                    if (poly.at(k) != 0) got[k] = poly.at(k);
                CHECK(got == brute);
            }
        }
    }
}

TEST_CASE("weyl characters: pinned small cases") {
    auto a1 = RootSystem::build("A1");
    auto a2 = RootSystem::build("A2");

    const Character& trivial = weyl_character(a2, a2.zero_weight());
    CHECK(trivial.terms.size() == 1);
    CHECK(trivial.mult(a2.zero_weight()) == 1);

    const Character& v2 = weyl_character(a1, Weight({2}));
    CHECK(v2.terms.size() == 3);
    CHECK(v2.mult(Weight({2})) == 1);
    CHECK(v2.mult(Weight({0})) == 1);
    CHECK(v2.mult(Weight({-2})) == 1);

    const Character& adjoint = weyl_character(a2, a2.rho());
    CHECK(adjoint.mass() == 8);
    CHECK(adjoint.mult(a2.zero_weight()) == 2);

    CHECK_THROWS_AS(weyl_character(a2, Weight({-1, 0})), Error);
}

TEST_CASE("weyl characters match the Freudenthal oracle") {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        std::vector<Weight> lambdas{rs.zero_weight(), rs.rho()};
        for (int i = 0; i < rs.rank(); ++i) lambdas.push_back(rs.fundamental_weight(i));
        lambdas.push_back(rs.rho() + rs.fundamental_weight(0));
        for (const auto& lambda : lambdas) {
            CAPTURE(lambda.coords);
            Character expected = freudenthal_character(rs, lambda);
            CHECK(weyl_character(rs, lambda) == expected);
            CHECK(weyl_dim(rs, lambda) == expected.mass());
        }
    }
}

TEST_CASE("weyl dimension formula") {
    auto a2 = RootSystem::build("A2");
    CHECK(weyl_dim(a2, a2.zero_weight()) == 1);
    CHECK(weyl_dim(a2, a2.rho()) == 8);
    CHECK(weyl_dim(a2, Weight({6, 0})) == 28);
    CHECK(weyl_dim(RootSystem::build("B2"), Weight({0, 2})) == 10);
}

TEST_CASE("levi characters") {
    auto a2 = RootSystem::build("A2");
    // H^0_J(-alpha_2) for J = {1} (0-based {0}): two weights
    Weight top = -a2.root_to_weight(a2.simple_root(1));
    const Character& ch = weyl_character_levi(a2, {0}, top);
    CHECK(ch.terms.size() == 2);
    CHECK(ch.mult(top) == 1);
    CHECK(ch.mult(top - a2.root_to_weight(a2.simple_root(0))) == 1);
    CHECK(weyl_dim_levi(a2, {0}, top) == 2);

    // torus Levi: one-dimensional
    const Character& torus = weyl_character_levi(a2, {}, Weight({-3, 1}));
    CHECK(torus.terms.size() == 1);
    CHECK(torus.mult(Weight({-3, 1})) == 1);

    // J = all: agrees with the ambient character on dominant weights
    CHECK(weyl_character_levi(a2, {0, 1}, a2.rho()) == weyl_character(a2, a2.rho()));
}

TEST_CASE("symmetric power characters") {
    auto a1 = RootSystem::build("A1");
    auto a2 = RootSystem::build("A2");

    Character s0 = sym_character(a2, {}, 0);
    CHECK(s0.terms.size() == 1);
    CHECK(s0.mult(a2.zero_weight()) == 1);

    Character s3 = sym_character(a1, {}, 3);
    CHECK(s3.terms.size() == 1);
    CHECK(s3.mult(Weight({6})) == 1);

    Character s2 = sym_character(a2, {0}, 2);
    CHECK(s2.terms.size() == 3);
    for (const auto& root : {RootVector({0, 2}), RootVector({1, 2}), RootVector({2, 2})})
        CHECK(s2.mult(a2.root_to_weight(root)) == 1);

    // mass of S^n(u^*) for J = empty is C(N + n - 1, n)
    for (const char* name : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(name);
        for (int n = 0; n <= 5; ++n)
            CHECK(sym_character(rs, {}, n).mass()
                  == binomial(rs.num_positive_roots() + n - 1, n));
    }
}

TEST_CASE("euler characteristics of line bundles") {
    auto a2 = RootSystem::build("A2");
    CHECK(bott_euler(a2, -a2.rho()).is_zero());
    CHECK(bott_euler(a2, a2.rho()) == weyl_character(a2, a2.rho()));
    for (int i = 0; i < 2; ++i) {
        Character c = bott_euler(a2, -a2.root_to_weight(a2.simple_root(i)));
        CHECK(c.terms.size() == 1);
        CHECK(c.mult(a2.zero_weight()) == -1);
    }
}

TEST_CASE("dot alternation law for euler characteristics") {
    for (const char* name : {"A2", "B2"}) {
        auto rs = RootSystem::build(name);
        WeylGroup group(rs);
        std::vector<Weight> sample{rs.zero_weight(), rs.rho(), rs.fundamental_weight(0),
                                   Weight(std::vector<int>(rs.rank(), -1)) + rs.fundamental_weight(0)};
        for (const auto& mu : sample)
            for (const auto& w : group.elements()) {
                Character lhs = bott_euler(rs, dot(rs, w, mu));
                Character rhs = bott_euler(rs, mu).scaled((w.length() % 2) ? -1 : 1);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("euler induction") {
    auto a1 = RootSystem::build("A1");
    auto a2 = RootSystem::build("A2");

    Character point;
    point.add(a2.zero_weight(), 1);
    CHECK(euler_induction(a2, point, a2.rho()) == weyl_character(a2, a2.rho()));

    Character s1 = sym_character(a1, {}, 1);
    Character ind = euler_induction(a1, s1, a1.zero_weight());
    CHECK(ind == weyl_character(a1, Weight({2})));
    CHECK(ind.mass() == 3);

    // S^1(u_J^*) for A2, J = {1}: one singular line bundle drops out
    Character s = sym_character(a2, {0}, 1);
    Character out = euler_induction(a2, s, a2.zero_weight());
    auto dec = decompose(a2, out);
    REQUIRE(dec.size() == 1);
    CHECK(dec.at(a2.rho()) == 1);
}

TEST_CASE("decomposition into Weyl characters") {
    auto a1 = RootSystem::build("A1");
    auto a2 = RootSystem::build("A2");

    auto self = decompose(a2, weyl_character(a2, a2.rho()));
    REQUIRE(self.size() == 1);
    CHECK(self.at(a2.rho()) == 1);

    Character cg = tensor(weyl_character(a1, Weight({1})), weyl_character(a1, Weight({1})));
    auto dec = decompose(a1, cg);
    REQUIRE(dec.size() == 2);
    CHECK(dec.at(Weight({2})) == 1);
    CHECK(dec.at(Weight({0})) == 1);

    CHECK(decompose(a2, Character{}).empty());

    Character bad;
    bad.add(a2.fundamental_weight(0), 1);
    CHECK_THROWS_AS(decompose(a2, bad), Error);
}

TEST_CASE("graded multiplicities: generalized exponents") {
    auto a2 = RootSystem::build("A2");
    auto gm = graded_multiplicity(a2, {}, a2.zero_weight(), a2.rho());
    CHECK(gm.poly == QPolynomial({0, 1, 1}));
    CHECK_FALSE(gm.assumption_violated);
    CHECK(gm.poly.str() == "q + q^2");

    auto b2 = RootSystem::build("B2");
    auto gm2 = graded_multiplicity(b2, {}, b2.zero_weight(), Weight({0, 2}));
    CHECK(gm2.poly == QPolynomial({0, 1, 0, 1}));

    // J = all simple roots: only sigma = gamma survives, in degree 0
    for (const auto& gamma : {a2.zero_weight()}) {
        auto full = graded_multiplicity(a2, {0, 1}, gamma, gamma);
        CHECK(full.poly == QPolynomial::one());
        auto other = graded_multiplicity(a2, {0, 1}, gamma, a2.rho() + gamma);
        CHECK(other.poly.is_zero());
    }

    CHECK_THROWS_AS(graded_multiplicity(a2, {0}, a2.fundamental_weight(0), a2.rho()), Error);
}

TEST_CASE("graded multiplicity constant term is delta(sigma = gamma)") {
    for (const char* name : {"A2", "B2"}) {
        auto rs = RootSystem::build(name);
        for (const auto& J : all_subsets(rs.rank())) {
            std::vector<Weight> gammas{rs.zero_weight()};
            for (int i = 0; i < rs.rank(); ++i) {
                Weight om = rs.fundamental_weight(i);
                if (rs.in_X_PJ(om, J)) gammas.push_back(om);
            }
            for (const auto& gamma : gammas) {
                CHECK(graded_multiplicity(rs, J, gamma, gamma).poly.at(0) == 1);
                Weight bigger = gamma + rs.rho() + rs.rho();
                CHECK(graded_multiplicity(rs, J, gamma, bigger).poly.at(0) == 0);
            }
        }
    }
}

TEST_CASE("dual route: alternating formula vs per-degree decomposition") {
    auto a2 = RootSystem::build("A2");
    for (const auto& J : all_subsets(2)) {
        std::vector<Weight> gammas{a2.zero_weight()};
        for (int i = 0; i < 2; ++i)
            if (a2.in_X_PJ(a2.fundamental_weight(i), J)) gammas.push_back(a2.fundamental_weight(i));
        for (const auto& gamma : gammas) {
            for (int n = 0; n <= 4; ++n) {
                Character euler = euler_induction(a2, sym_character(a2, J, n), gamma);
                auto dec = decompose(a2, euler);
                for (const auto& sigma : induction_candidates(a2, J, gamma, n)) {
                    long long via_formula = graded_multiplicity(a2, J, gamma, sigma).poly.at(n);
                    long long via_euler = dec.count(sigma) ? dec.at(sigma) : 0;
                    CHECK(via_formula == via_euler);
                }
                for (const auto& [sigma, m] : dec)
                    CHECK(graded_multiplicity(a2, J, gamma, sigma).poly.at(n) == m);
            }
        }
    }
}

TEST_CASE("poincare series") {
    auto a1 = RootSystem::build("A1");
    auto a2 = RootSystem::build("A2");

    CHECK(poincare_series(a1, {}, a1.zero_weight(), 4)
          == std::vector<long long>{1, 3, 5, 7, 9});
    CHECK(poincare_series(a2, {0, 1}, a2.zero_weight(), 3)
          == std::vector<long long>{1, 0, 0, 0});

    // mass route: entry n is the dimension of the induced Euler characteristic
    auto series = poincare_series(a2, {}, a2.zero_weight(), 3);
    for (int n = 0; n <= 3; ++n) {
        Character euler = euler_induction(a2, sym_character(a2, {}, n), a2.zero_weight());
        CHECK(series[n] == euler.mass());
    }
}

TEST_CASE("character twist") {
    auto a1 = RootSystem::build("A1");
    Character c;
    c.add(Weight({1}), 1);
    CHECK(twist_character(c, 1) == c);
    Character c5 = twist_character(c, 5);
    CHECK(c5.mult(Weight({5})) == 1);
    CHECK_THROWS_AS(twist_character(c, 0), Error);

    // twist is multiplicative over tensor products
    Character a = weyl_character(a1, Weight({1}));
    Character b = weyl_character(a1, Weight({2}));
    CHECK(twist_character(tensor(a, b), 3) == tensor(twist_character(a, 3), twist_character(b, 3)));
}
