// Weyl group elements and group-level enumeration.
//
// An element is canonically identified by its action matrix on
// fundamental-weight coordinates; the stored word is the reduced word
// obtained by repeatedly stripping the smallest left descent, so equal
// elements always carry equal words.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootsystem.hpp"

namespace liecoh {

struct WeylElement {
    std::vector<int> word;                    // canonical reduced word, 0-based letters
    std::vector<std::vector<int>> action;     // rank x rank, fundamental-weight coords

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }
    bool operator==(const WeylElement& o) const { return action == o.action; }
    bool operator<(const WeylElement& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        if (word != o.word) return word < o.word;
        return action < o.action;
    }
};

WeylElement weyl_identity(const RootSystem& rs);
// Builds the element of an arbitrary word (not necessarily reduced).
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);
WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w);
WeylElement weyl_multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
RootVector act_root(const RootSystem& rs, const WeylElement& w, const RootVector& alpha);
// Dot action w.lambda = w(lambda + rho) - rho.
Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

// {alpha in Phi+ : w^{-1}(alpha) in Phi-}, in the default positive-root order.
std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w);

struct ParabolicSubset {
    std::vector<int> J;                 // sorted 0-based simple indices
    std::vector<RootVector> phi_J_plus; // Phi+ meet ZJ
    int N_J = 0;
    WeylElement w0J;                    // longest element of W_J
};

ParabolicSubset parabolic(const RootSystem& rs, const std::vector<int>& J);

// Longest element of W_J (J = all simple indices gives w_0).
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J);
WeylElement longest_element(const RootSystem& rs);

// Full enumeration of W (or of the parabolic subgroup W_J), sorted by
// (length, word). Throws GroupTooLarge beyond the cap.
class WeylGroup {
public:
    static constexpr std::size_t kDefaultCap = 1000000;

    WeylGroup(const RootSystem& rs, std::size_t cap = kDefaultCap);
    WeylGroup(const RootSystem& rs, const std::vector<int>& J, std::size_t cap = kDefaultCap);

    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& longest() const { return elements_.back(); }

private:
    void enumerate(const RootSystem& rs, const std::vector<int>& generators, std::size_t cap);
    std::vector<WeylElement> elements_;
};

// Minimal-length representatives of the cosets W_J \ W, sorted by (length, word).
// Every w factors uniquely as w = u * v with u in W_J, v a representative,
// lengths adding.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& J,
                                        std::size_t cap = WeylGroup::kDefaultCap);

bool in_min_coset_reps(const RootSystem& rs, const std::vector<int>& J, const WeylElement& w);

struct AdaptedWord {
    std::vector<int> word;               // reduced word for w_0, prefix reduced for w_{0,J}
    int prefix_length = 0;               // N_J
    std::vector<RootVector> root_order;  // gamma_k = s_{b_1}...s_{b_{k-1}}(alpha_{b_k})
};

// Reduced word for w_0 starting with a reduced word for w_{0,J}, together
// with the induced ordering of Phi+ (first N_J entries exhaust Phi_J^+).
AdaptedWord adapted_w0_word(const RootSystem& rs, const std::vector<int>& J);

// Minimal w with w(lambda) dominant, and the dominant conjugate.
std::pair<WeylElement, Weight> to_dominant(const RootSystem& rs, const Weight& lambda);

// nullopt iff lambda + rho is singular; otherwise the unique (w, mu) with
// mu dominant and mu = w . lambda.
std::optional<std::pair<WeylElement, Weight>> dot_regularize(const RootSystem& rs, const Weight& lambda);

struct LinkageWitness {
    WeylElement x;        // element of W_J
    RootVector sigma;     // element of Z Phi_J (supported on J)
};

// All witnesses (x, sigma) with mu = x . lambda + ell * sigma, x in W_J,
// sigma in Z Phi_J; sorted by x.
std::vector<LinkageWitness> affine_linkage_witnesses(const RootSystem& rs, const Weight& lambda,
                                                     const Weight& mu, long long ell,
                                                     const std::vector<int>& J,
                                                     std::size_t cap = WeylGroup::kDefaultCap);

// First witness if any.
std::optional<LinkageWitness> affine_linked_J(const RootSystem& rs, const Weight& lambda,
                                              const Weight& mu, long long ell,
                                              const std::vector<int>& J,
                                              std::size_t cap = WeylGroup::kDefaultCap);

}  // namespace liecoh
