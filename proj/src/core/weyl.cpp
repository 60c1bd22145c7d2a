#include "weyl.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace liecoh {

namespace {

std::vector<std::vector<int>> identity_matrix(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Matrix of s_i on fundamental-weight coordinates: column i becomes
// e_i - (Cartan column i).
std::vector<std::vector<int>> reflection_matrix(const RootSystem& rs, int i) {
    const int n = rs.rank();
    auto m = identity_matrix(n);
    for (int k = 0; k < n; ++k) m[k][i] -= rs.cartan()[k][i];
    return m;
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

Weight apply_matrix(const std::vector<std::vector<int>>& m, const Weight& lambda) {
    const int n = static_cast<int>(m.size());
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i) {
        long long v = 0;
        for (int j = 0; j < n; ++j) v += static_cast<long long>(m[i][j]) * lambda[j];
        out[i] = static_cast<int>(v);
    }
    return Weight(out);
}

bool root_negative(const RootVector& r) {
    bool nonzero = false;
    for (int x : r.coords) {
        if (x > 0) return false;
        if (x < 0) nonzero = true;
    }
    return nonzero;
}

// Canonical reduced word: repeatedly strip the smallest left descent.
// l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0 iff <w(rho), alpha_i^vee> < 0.
std::vector<int> canonical_word(const RootSystem& rs, std::vector<std::vector<int>> m) {
    const int n = rs.rank();
    const auto id = identity_matrix(n);
    std::vector<int> word;
    while (m != id) {
        Weight wrho = apply_matrix(m, rs.rho());
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (wrho[i] < 0) { pick = i; break; }
        if (pick < 0) fail(ErrorCode::InvalidArgument, "matrix is not a Weyl group element");
        word.push_back(pick);
        m = mat_mul(reflection_matrix(rs, pick), m);
    }
    return word;
}

}  // namespace

WeylElement weyl_identity(const RootSystem& rs) {
    return WeylElement{{}, identity_matrix(rs.rank())};
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
    auto m = identity_matrix(rs.rank());
    for (int i : word) {
        if (i < 0 || i >= rs.rank()) fail(ErrorCode::IndexOutOfRange, "word letter out of range");
        m = mat_mul(m, reflection_matrix(rs, i));
    }
    return WeylElement{canonical_word(rs, m), std::move(m)};
}

WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    return weyl_from_word(rs, rev);
}

WeylElement weyl_multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    auto m = mat_mul(u.action, v.action);
    return WeylElement{canonical_word(rs, m), std::move(m)};
}

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    rs.check_rank(lambda.rank(), "weight");
    return apply_matrix(w.action, lambda);
}

RootVector act_root(const RootSystem& rs, const WeylElement& w, const RootVector& alpha) {
    rs.check_rank(alpha.rank(), "root");
    RootVector r = alpha;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = rs.simple_reflect_root(*it, r);
    return r;
}

Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    return act(rs, w, lambda + rs.rho()) - rs.rho();
}

std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w) {
    std::vector<RootVector> out;
    for (const auto& alpha : rs.positive_roots()) {
        // w^{-1}(alpha): apply the word letters in forward order
        RootVector r = alpha;
        for (int i : w.word) r = rs.simple_reflect_root(i, r);
        if (root_negative(r)) out.push_back(alpha);
    }
    return out;
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J) {
    rs.check_subset(J);
    // Send the J-regular dominant weight sum_{j in J} omega_j to its
    // J-antidominant conjugate; the letters used form a reduced word.
    std::vector<int> c(rs.rank(), 0);
    for (int j : J) c[j] = 1;
    Weight x(c);
    std::vector<int> letters;
    for (;;) {
        int pick = -1;
        for (int j : J)
            if (x[j] > 0) { pick = j; break; }
        if (pick < 0) break;
        x = rs.simple_reflect(pick, x);
        letters.push_back(pick);
    }
    std::reverse(letters.begin(), letters.end());
    return weyl_from_word(rs, letters);
}

WeylElement longest_element(const RootSystem& rs) {
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    return longest_element(rs, all);
}

ParabolicSubset parabolic(const RootSystem& rs, const std::vector<int>& J) {
    rs.check_subset(J);
    ParabolicSubset p;
    p.J = J;
    p.phi_J_plus = rs.positive_roots_of(J);
    p.N_J = static_cast<int>(p.phi_J_plus.size());
    p.w0J = longest_element(rs, J);
    return p;
}

void WeylGroup::enumerate(const RootSystem& rs, const std::vector<int>& generators, std::size_t cap) {
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    const int n = rs.rank();
    std::vector<std::vector<std::vector<int>>> gen_mats;
    for (int i : generators) gen_mats.push_back(reflection_matrix(rs, i));

    auto flatten = [n](const std::vector<std::vector<int>>& m) {
        std::vector<int> f;
        f.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    };

    std::unordered_map<std::vector<int>, std::size_t, VecHash> seen;
    std::vector<std::pair<std::vector<std::vector<int>>, std::vector<int>>> table;  // matrix, word
    auto id = identity_matrix(n);
    seen.emplace(flatten(id), 0);
    table.emplace_back(id, std::vector<int>{});
    std::size_t frontier_begin = 0;
    while (frontier_begin < table.size()) {
        std::size_t frontier_end = table.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (std::size_t g = 0; g < gen_mats.size(); ++g) {
                auto m = mat_mul(table[k].first, gen_mats[g]);
                auto key = flatten(m);
                if (seen.find(key) != seen.end()) continue;
                if (table.size() >= cap)
                    fail(ErrorCode::GroupTooLarge,
                         "Weyl group enumeration exceeds cap of " + std::to_string(cap));
                auto word = table[k].second;
                word.push_back(generators[g]);
                seen.emplace(std::move(key), table.size());
                table.emplace_back(std::move(m), std::move(word));
            }
        }
        frontier_begin = frontier_end;
    }

    elements_.reserve(table.size());
    for (auto& [m, word] : table)
        elements_.push_back(WeylElement{canonical_word(rs, m), std::move(m)});
    std::sort(elements_.begin(), elements_.end());
}

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t cap) {
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    enumerate(rs, all, cap);
}

WeylGroup::WeylGroup(const RootSystem& rs, const std::vector<int>& J, std::size_t cap) {
    rs.check_subset(J);
    enumerate(rs, J, cap);
}

bool in_min_coset_reps(const RootSystem& rs, const std::vector<int>& J, const WeylElement& w) {
    // w in ^J W iff w^{-1}(alpha_j) in Phi+ for all j in J.
    for (int j : J) {
        RootVector r = rs.simple_root(j);
        for (int i : w.word) r = rs.simple_reflect_root(i, r);
        if (root_negative(r)) return false;
    }
    return true;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& J,
                                        std::size_t cap) {
    rs.check_subset(J);
    WeylGroup w_full(rs, cap);
    std::vector<WeylElement> out;
    for (const auto& w : w_full.elements())
        if (in_min_coset_reps(rs, J, w)) out.push_back(w);
    return out;
}

AdaptedWord adapted_w0_word(const RootSystem& rs, const std::vector<int>& J) {
    rs.check_subset(J);
    AdaptedWord out;
    WeylElement w = longest_element(rs, J);
    out.word = w.word;
    out.prefix_length = static_cast<int>(out.word.size());
    const int N = rs.num_positive_roots();
    // Extend on the right, always appending the smallest ascent.
    while (w.length() < N) {
        int pick = -1;
        for (int i = 0; i < rs.rank() && pick < 0; ++i) {
            if (!root_negative(act_root(rs, w, rs.simple_root(i)))) pick = i;
        }
        if (pick < 0) break;
        out.word.push_back(pick);
        w = weyl_multiply(rs, w, weyl_from_word(rs, {pick}));
    }
    // gamma_k = s_{b_1} ... s_{b_{k-1}} (alpha_{b_k})
    for (std::size_t k = 0; k < out.word.size(); ++k) {
        RootVector g = rs.simple_root(out.word[k]);
        for (std::size_t j = k; j-- > 0;) g = rs.simple_reflect_root(out.word[j], g);
        out.root_order.push_back(g);
    }
    return out;
}

std::pair<WeylElement, Weight> to_dominant(const RootSystem& rs, const Weight& lambda) {
    rs.check_rank(lambda.rank(), "weight");
    Weight x = lambda;
    std::vector<int> letters;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < rs.rank(); ++i)
            if (x[i] < 0) { pick = i; break; }
        if (pick < 0) break;
        x = rs.simple_reflect(pick, x);
        letters.push_back(pick);
    }
    std::reverse(letters.begin(), letters.end());
    return {weyl_from_word(rs, letters), x};
}

std::optional<std::pair<WeylElement, Weight>> dot_regularize(const RootSystem& rs, const Weight& lambda) {
    auto [w, mu] = to_dominant(rs, lambda + rs.rho());
    // lambda + rho is regular iff its dominant conjugate is strictly dominant.
    for (int i = 0; i < rs.rank(); ++i)
        if (mu[i] == 0) return std::nullopt;
    return std::make_pair(w, mu - rs.rho());
}

std::vector<LinkageWitness> affine_linkage_witnesses(const RootSystem& rs, const Weight& lambda,
                                                     const Weight& mu, long long ell,
                                                     const std::vector<int>& J, std::size_t cap) {
    if (ell < 2) fail(ErrorCode::PreconditionFailed, "affine linkage requires ell >= 2");
    rs.check_rank(lambda.rank(), "weight");
    rs.check_rank(mu.rank(), "weight");
    std::vector<bool> in_j(rs.rank(), false);
    for (int j : J) in_j[j] = true;
    WeylGroup wj(rs, J, cap);
    std::vector<LinkageWitness> out;
    for (const auto& x : wj.elements()) {
        Weight diff = mu - dot(rs, x, lambda);
        bool divisible = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (diff[i] % ell != 0) { divisible = false; break; }
        if (!divisible) continue;
        Weight sigma_wt = diff;
        for (auto& c : sigma_wt.coords) c = static_cast<int>(c / ell);
        auto sigma = rs.weight_in_root_lattice(sigma_wt);
        if (!sigma) continue;
        bool supported_on_j = true;
        for (int i = 0; i < rs.rank(); ++i)
            if ((*sigma)[i] != 0 && !in_j[i]) { supported_on_j = false; break; }
        if (!supported_on_j) continue;
        out.push_back(LinkageWitness{x, *sigma});
    }
    return out;
}

std::optional<LinkageWitness> affine_linked_J(const RootSystem& rs, const Weight& lambda,
                                              const Weight& mu, long long ell,
                                              const std::vector<int>& J, std::size_t cap) {
    auto all = affine_linkage_witnesses(rs, lambda, mu, ell, J, cap);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace liecoh
