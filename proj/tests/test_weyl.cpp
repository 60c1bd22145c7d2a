#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "core/weyl.hpp"

using namespace liecoh;

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

RootVector sum_roots(const RootSystem& rs, const std::vector<RootVector>& roots) {
    RootVector s = rs.zero_root();
    for (const auto& r : roots) s = s + r;
    return s;
}

}  // namespace

TEST_CASE("dot action on zero") {
    auto a2 = RootSystem::build("A2");
    for (int i = 0; i < 2; ++i) {
        auto si = weyl_from_word(a2, {i});
        CHECK(dot(a2, si, a2.zero_weight()) == -a2.root_to_weight(a2.simple_root(i)));
    }
    // s2 s1 (1-based) sends 0 to -(alpha1 + 2 alpha2)
    auto w = weyl_from_word(a2, {1, 0});
    CHECK(dot(a2, w, a2.zero_weight()) == -a2.root_to_weight(RootVector({1, 2})));
    auto inv = inversion_set(a2, w);
    CHECK(inv == std::vector<RootVector>{RootVector({0, 1}), RootVector({1, 1})});
}

TEST_CASE("dot(w, 0) equals minus the inversion sum") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        WeylGroup group(rs);
        for (const auto& w : group.elements()) {
            auto inv = inversion_set(rs, w);
            CHECK(static_cast<int>(inv.size()) == w.length());
            CHECK(dot(rs, w, rs.zero_weight()) == -rs.root_to_weight(sum_roots(rs, inv)));
        }
    }
}

TEST_CASE("longest element negates the dominant chamber") {
    for (const char* name : {"A2", "B2", "G2", "D4"}) {
        auto rs = RootSystem::build(name);
        auto w0 = longest_element(rs);
        CHECK(w0.length() == rs.num_positive_roots());
        CHECK(act(rs, w0, rs.rho()) == -rs.rho());
    }
}

TEST_CASE("group orders") {
    CHECK(WeylGroup(RootSystem::build("A1")).order() == 2);
    CHECK(WeylGroup(RootSystem::build("A2")).order() == 6);
    CHECK(WeylGroup(RootSystem::build("B2")).order() == 8);
    CHECK(WeylGroup(RootSystem::build("G2")).order() == 12);
    CHECK(WeylGroup(RootSystem::build("A3")).order() == 24);
    CHECK(WeylGroup(RootSystem::build("B2")).longest().length() == 4);
    CHECK_THROWS_AS(WeylGroup(RootSystem::build("A3"), std::size_t{10}), Error);
}

TEST_CASE("basic inversion sets") {
    auto a2 = RootSystem::build("A2");
    CHECK(inversion_set(a2, weyl_identity(a2)).empty());
    for (int i = 0; i < 2; ++i)
        CHECK(inversion_set(a2, weyl_from_word(a2, {i}))
              == std::vector<RootVector>{a2.simple_root(i)});
    CHECK(inversion_set(a2, weyl_from_word(a2, {0, 1}))
          == std::vector<RootVector>{RootVector({1, 0}), RootVector({1, 1})});
}

TEST_CASE("coset representatives") {
    auto a2 = RootSystem::build("A2");
    CHECK(min_coset_reps(a2, {0, 1}).size() == 1);
    CHECK(min_coset_reps(a2, {}).size() == 6);
    auto reps = min_coset_reps(a2, {0});
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].word.empty());
    CHECK(reps[1].word == std::vector<int>{1});
    CHECK(reps[2].word == std::vector<int>{1, 0});
}

TEST_CASE("unique length-additive factorization through ^JW") {
    for (const char* name : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        WeylGroup group(rs);
        for (const auto& J : all_subsets(rs.rank())) {
            WeylGroup wj(rs, J);
            auto reps = min_coset_reps(rs, J);
            CHECK(reps.size() * wj.order() == group.order());
            std::set<std::vector<std::vector<int>>> seen;
            for (const auto& u : wj.elements())
                for (const auto& v : reps) {
                    auto uv = weyl_multiply(rs, u, v);
                    CHECK(uv.length() == u.length() + v.length());
                    CHECK(seen.insert(uv.action).second);
                }
            CHECK(seen.size() == group.order());
        }
    }
}

TEST_CASE("^JW membership matches inversion sets avoiding Phi_J+") {
    for (const char* name : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(name);
        WeylGroup group(rs);
        for (const auto& J : all_subsets(rs.rank())) {
            auto phiJ = rs.positive_roots_of(J);
            std::set<RootVector> levi_roots(phiJ.begin(), phiJ.end());
            for (const auto& w : group.elements()) {
                bool avoids = true;
                for (const auto& alpha : inversion_set(rs, w))
                    if (levi_roots.count(alpha)) avoids = false;
                CHECK(in_min_coset_reps(rs, J, w) == avoids);
            }
        }
    }
}

TEST_CASE("adapted word for w0 and its root ordering") {
    auto a2 = RootSystem::build("A2");
    auto adapted = adapted_w0_word(a2, {0});
    CHECK(adapted.word == std::vector<int>{0, 1, 0});
    CHECK(adapted.prefix_length == 1);
    CHECK(adapted.root_order[0] == a2.simple_root(0));

    for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(name);
        const int N = rs.num_positive_roots();
        for (const auto& J : all_subsets(rs.rank())) {
            auto ad = adapted_w0_word(rs, J);
            CHECK(static_cast<int>(ad.word.size()) == N);
            // whole word is reduced and multiplies to w0
            auto w = weyl_from_word(rs, ad.word);
            CHECK(w.length() == N);
            // prefix is a reduced word for w0J
            auto par = parabolic(rs, J);
            CHECK(ad.prefix_length == par.N_J);
            std::vector<int> prefix(ad.word.begin(), ad.word.begin() + ad.prefix_length);
            CHECK(weyl_from_word(rs, prefix) == par.w0J);
            // the induced order enumerates Phi+ exactly once, Levi part first
            std::set<RootVector> seen(ad.root_order.begin(), ad.root_order.end());
            CHECK(static_cast<int>(seen.size()) == N);
            for (const auto& r : ad.root_order) CHECK(rs.is_positive_root(r));
            std::set<RootVector> head(ad.root_order.begin(),
                                      ad.root_order.begin() + ad.prefix_length);
            std::set<RootVector> levi(par.phi_J_plus.begin(), par.phi_J_plus.end());
            CHECK(head == levi);
        }
    }
}

TEST_CASE("regularization to the dominant chamber") {
    auto a2 = RootSystem::build("A2");
    auto [we, lam] = to_dominant(a2, a2.rho());
    CHECK(we.is_identity());
    CHECK(lam == a2.rho());

    CHECK_FALSE(dot_regularize(a2, -a2.rho()).has_value());
    for (int i = 0; i < 2; ++i) {
        auto reg = dot_regularize(a2, -a2.root_to_weight(a2.simple_root(i)));
        REQUIRE(reg.has_value());
        CHECK(reg->first.word == std::vector<int>{i});
        CHECK(reg->second.is_zero());
    }

    // dot_regularize(dot(w, lambda)) recovers lambda for regular dominant lambda
    for (const char* name : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(name);
        WeylGroup group(rs);
        for (const auto& lambda : {rs.zero_weight(), rs.rho(), rs.fundamental_weight(0)}) {
            for (const auto& w : group.elements()) {
                auto reg = dot_regularize(rs, dot(rs, w, lambda));
                REQUIRE(reg.has_value());
                CHECK(reg->second == lambda);
            }
        }
    }
}

TEST_CASE("affine linkage over a Levi") {
    auto a2 = RootSystem::build("A2");
    const std::vector<int> J{0};
    auto zero = a2.zero_weight();

    auto self = affine_linked_J(a2, a2.rho(), a2.rho(), 7, J);
    REQUIRE(self.has_value());
    CHECK(self->x.is_identity());
    CHECK(self->sigma.is_zero());

    auto linked = affine_linked_J(a2, zero, -a2.root_to_weight(a2.simple_root(0)), 7, J);
    REQUIRE(linked.has_value());
    CHECK(linked->x.word == std::vector<int>{0});
    CHECK(linked->sigma.is_zero());

    CHECK_FALSE(affine_linked_J(a2, zero, a2.fundamental_weight(1), 7, J).has_value());
}

TEST_CASE("affine linkage is symmetric on a finite sample") {
    auto a2 = RootSystem::build("A2");
    const std::vector<int> J{0};
    std::vector<Weight> sample;
    for (int a = -4; a <= 4; a += 2)
        for (int b = -4; b <= 4; b += 2) sample.push_back(Weight({a, b}));
    for (const auto& lam : sample)
        for (const auto& mu : sample) {
            bool lm = affine_linked_J(a2, lam, mu, 5, J).has_value();
            bool ml = affine_linked_J(a2, mu, lam, 5, J).has_value();
            CHECK(lm == ml);
        }
}
