// Finite root systems of types A-G with exact Cartan data.
//
// Coordinates are always integral: Weight holds fundamental-weight
// coordinates (coords[i] = <lambda, alpha_i^vee>), RootVector holds
// simple-root coordinates.  Simple roots follow the Bourbaki numbering
// (see docs/conventions.md).  The inner product is normalized so that
// short roots have squared length 2; the normalization lives entirely in
// the symmetrizers d_i, raw inner products are never exposed.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace liecoh {

struct Weight {
    std::vector<int> coords;  // fundamental-weight basis

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    std::size_t rank() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const { return coords < o.coords; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(int m) const;
    bool is_zero() const;
};

struct RootVector {
    std::vector<int> coords;  // simple-root basis

    RootVector() = default;
    explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}

    std::size_t rank() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const RootVector&) const = default;
    bool operator<(const RootVector& o) const { return coords < o.coords; }

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;
    RootVector operator-() const;
    bool is_zero() const;
    int height() const;  // sum of coordinates
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemSpec {
    Family family;
    int rank;

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// Parses names like "A2", "E6"; throws InvalidRank / InvalidArgument.
RootSystemSpec parse_spec(const std::string& name);

class RootSystem {
public:
    static RootSystem build(const RootSystemSpec& spec);
    static RootSystem build(const std::string& name) { return build(parse_spec(name)); }

    const RootSystemSpec& spec() const { return spec_; }
    std::string name() const { return spec_.name(); }
    int rank() const { return spec_.rank; }

    // cartan()[i][j] = <alpha_j, alpha_i^vee>
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<int>& symmetrizers() const { return d_; }

    // Positive roots ordered by height, then lexicographically by root coords.
    const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
    int coxeter_number() const { return coxeter_number_; }

    Weight rho() const;                       // all-ones weight
    Weight zero_weight() const;
    RootVector zero_root() const;
    RootVector simple_root(int i) const;      // 0-based
    Weight fundamental_weight(int i) const;

    const RootVector& highest_root() const { return highest_root_; }
    const RootVector& highest_short_root() const { return highest_short_root_; }

    bool is_positive_root(const RootVector& alpha) const;

    // (alpha,alpha)/2 for any root-lattice vector; short roots give 1.
    long long norm_half(const RootVector& alpha) const;

    // <lambda, alpha^vee> = 2(lambda,alpha)/(alpha,alpha), exact.
    // Requires alpha to be a root (norm_half in {1,2,3}).
    long long pairing(const Weight& lambda, const RootVector& alpha) const;

    // Symmetrized bilinear form (lambda, beta) for beta in the root lattice.
    long long weight_root_form(const Weight& lambda, const RootVector& beta) const;
    // (alpha, beta) for root-lattice vectors.
    long long root_form(const RootVector& alpha, const RootVector& beta) const;

    Weight root_to_weight(const RootVector& alpha) const;
    std::optional<RootVector> weight_in_root_lattice(const Weight& lambda) const;

    bool dominant(const Weight& lambda) const;
    // lambda vanishes on J (0-based simple indices)?
    bool in_X_PJ(const Weight& lambda, const std::vector<int>& J) const;
    // <lambda, alpha_j^vee> >= 0 for all j in J?
    bool j_dominant(const Weight& lambda, const std::vector<int>& J) const;

    Weight simple_reflect(int i, const Weight& lambda) const;
    RootVector simple_reflect_root(int i, const RootVector& alpha) const;

    // Positive roots lying in the span of the simple roots indexed by J.
    std::vector<RootVector> positive_roots_of(const std::vector<int>& J) const;
    // Positive roots outside the span of J (the weights of u_J^*).
    std::vector<RootVector> positive_roots_complement(const std::vector<int>& J) const;

    void check_rank(std::size_t n, const char* what) const;
    void check_subset(const std::vector<int>& J) const;  // sorted, 0-based, in range

private:
    RootSystem() = default;

    RootSystemSpec spec_{};
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<RootVector> positive_roots_;
    std::vector<long long> norm_half_;        // parallel to positive_roots_
    RootVector highest_root_;
    RootVector highest_short_root_;
    int coxeter_number_ = 0;
    // det(cartan) and adjugate, for exact root-lattice membership tests
    long long cartan_det_ = 0;
    std::vector<std::vector<long long>> cartan_adjugate_;
};

}  // namespace liecoh
