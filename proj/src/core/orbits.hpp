// Type-A dictionary between subsets of simple roots, Levi block-size
// partitions, Richardson orbits, orbit dimensions, and coordinate-ring
// Poincare series.  Orbit dimensions are computed in gl_n; the ambient
// root system used for series is A_{n-1}.

#pragma once

#include <vector>

#include "errors.hpp"

namespace liecoh {

struct Partition {
    std::vector<int> parts;  // weakly decreasing positive integers

    explicit Partition(std::vector<int> p);
    Partition() = default;

    int total() const;
    bool operator==(const Partition&) const = default;
};

// Block sizes of the Levi of GL_n attached to J (0-based indices into the
// simple roots of A_{n-1}): a run of r consecutive indices contributes a
// part r+1, leftover slots contribute parts 1; parts sum to n.
Partition sigma_partition(const std::vector<int>& J, int n);

Partition transpose(const Partition& p);

// Partial-sum dominance; requires equal totals.
bool dominance_leq(const Partition& a, const Partition& b);

struct OrbitDescriptor {
    int n = 0;
    Partition lambda;             // partition of the orbit, sigma(J)^t
    Partition sigma;              // sigma(J)
    std::vector<int> J_source;    // 0-based
    long long dim = 0;            // n^2 - sum sigma(J)_i^2
};

OrbitDescriptor richardson_orbit(const std::vector<int>& J, int n);

// Graded dimensions of k[G x_{P_J} u_J] for GL_n, which in type A is the
// coordinate ring of the closure of the orbit sigma(J)^t.
std::vector<long long> orbit_ring_series(const std::vector<int>& J, int n, int up_to);

}  // namespace liecoh
