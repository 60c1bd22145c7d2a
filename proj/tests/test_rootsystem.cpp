#include <doctest.h>

#include "core/rootsystem.hpp"
#include "support/oracles.hpp"

using namespace liecoh;
using liecoh::testsupport::reflection_closure;

namespace {

const char* kDeskTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2"};

RootVector rv(const RootSystem& rs, std::vector<int> c) {
    rs.check_rank(c.size(), "root");
    return RootVector(std::move(c));
}

}  // namespace

TEST_CASE("small systems have the expected counts") {
    auto a1 = RootSystem::build("A1");
    CHECK(a1.num_positive_roots() == 1);
    CHECK(a1.coxeter_number() == 2);

    auto a2 = RootSystem::build("A2");
    CHECK(a2.num_positive_roots() == 3);
    CHECK(a2.coxeter_number() == 3);
    CHECK(a2.highest_root() == rv(a2, {1, 1}));

    auto g2 = RootSystem::build("G2");
    CHECK(g2.num_positive_roots() == 6);
    CHECK(g2.coxeter_number() == 6);
    CHECK(g2.symmetrizers() == std::vector<int>{1, 3});
    CHECK(g2.highest_root() == rv(g2, {3, 2}));
    CHECK(g2.highest_short_root() == rv(g2, {2, 1}));
}

TEST_CASE("inadmissible ranks are rejected") {
    for (const char* name : {"A0", "B1", "C1", "D2", "D3", "E5", "E9", "F3", "G1", "G3"}) {
        CHECK_THROWS_AS(RootSystem::build(name), Error);
    }
    CHECK_THROWS_AS(RootSystem::build("H3"), Error);
    CHECK_THROWS_AS(RootSystem::build("A"), Error);
    CHECK_THROWS_AS(RootSystem::build("Ax"), Error);
}

TEST_CASE("positive roots agree with the reflection-closure oracle") {
    for (const char* name : kDeskTypes) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        auto closure = reflection_closure(rs);
        // oracle yields all roots; positive ones should match exactly
        std::set<RootVector> positive;
        for (const auto& r : closure) {
            bool neg = true, pos = true;
            for (int c : r.coords) {
                if (c > 0) neg = false;
                if (c < 0) pos = false;
            }
            REQUIRE((neg || pos));
            if (pos) positive.insert(r);
        }
        std::set<RootVector> got(rs.positive_roots().begin(), rs.positive_roots().end());
        CHECK(got == positive);
        CHECK(closure.size() == 2 * got.size());
    }
}

TEST_CASE("counting identity |Phi| = rank * h") {
    for (const char* name : kDeskTypes) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        CHECK(2 * rs.num_positive_roots() == rs.rank() * rs.coxeter_number());
    }
}

TEST_CASE("positive roots are sorted by height then lexicographically") {
    for (const char* name : kDeskTypes) {
        auto rs = RootSystem::build(name);
        const auto& roots = rs.positive_roots();
        for (std::size_t k = 1; k < roots.size(); ++k) {
            bool ordered = roots[k - 1].height() < roots[k].height()
                           || (roots[k - 1].height() == roots[k].height()
                               && roots[k - 1].coords < roots[k].coords);
            CHECK(ordered);
        }
        // simple roots come first
        for (int i = 0; i < rs.rank(); ++i) CHECK(rs.is_positive_root(rs.simple_root(i)));
    }
}

TEST_CASE("pairing basics") {
    auto a2 = RootSystem::build("A2");
    for (int i = 0; i < 2; ++i) CHECK(a2.pairing(a2.rho(), a2.simple_root(i)) == 1);
    CHECK(a2.pairing(a2.rho(), rv(a2, {1, 1})) == 2);
    CHECK(a2.pairing(a2.fundamental_weight(0), a2.simple_root(1)) == 0);

    // <rho, alpha^vee> = 2 on every root whose weight is computed back
    for (const char* name : kDeskTypes) {
        auto rs = RootSystem::build(name);
        for (const auto& alpha : rs.positive_roots())
            CHECK(rs.pairing(rs.root_to_weight(alpha), alpha) == 2);
    }
}

TEST_CASE("pairing with the highest short coroot is h - 1 on rho") {
    for (const char* name : kDeskTypes) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        CHECK(rs.pairing(rs.rho(), rs.highest_short_root()) == rs.coxeter_number() - 1);
    }
}

TEST_CASE("root lattice membership") {
    auto a2 = RootSystem::build("A2");
    CHECK(a2.root_to_weight(a2.simple_root(0)) == Weight({2, -1}));
    CHECK_FALSE(a2.weight_in_root_lattice(a2.fundamental_weight(0)).has_value());
    auto zero = a2.weight_in_root_lattice(a2.zero_weight());
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());

    for (const char* name : kDeskTypes) {
        auto rs = RootSystem::build(name);
        for (const auto& alpha : rs.positive_roots()) {
            auto back = rs.weight_in_root_lattice(rs.root_to_weight(alpha));
            REQUIRE(back.has_value());
            CHECK(*back == alpha);
        }
    }
}

TEST_CASE("dominance and X_PJ membership") {
    auto a2 = RootSystem::build("A2");
    CHECK(a2.dominant(a2.rho()));
    CHECK_FALSE(a2.dominant(Weight({-1, 2})));
    CHECK(a2.in_X_PJ(a2.fundamental_weight(1), {0}));
    CHECK_FALSE(a2.in_X_PJ(a2.fundamental_weight(0), {0}));
    CHECK(a2.in_X_PJ(a2.zero_weight(), {0, 1}));
}

TEST_CASE("closure under root addition") {
    for (const char* name : kDeskTypes) {
        auto rs = RootSystem::build(name);
        for (const auto& a : rs.positive_roots())
            for (const auto& b : rs.positive_roots()) {
                RootVector sum = a + b;
                if (reflection_closure(rs).count(sum)) CHECK(rs.is_positive_root(sum));
            }
    }
}

TEST_CASE("rank mismatches are rejected") {
    auto a2 = RootSystem::build("A2");
    auto a3 = RootSystem::build("A3");
    CHECK_THROWS_AS(a2.pairing(a3.rho(), a2.simple_root(0)), Error);
    CHECK_THROWS_AS(a2.root_to_weight(a3.simple_root(0)), Error);
}
