#include "orbits.hpp"

#include <algorithm>
#include <numeric>

#include "characters.hpp"
#include "rootsystem.hpp"

namespace liecoh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    }
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition sigma_partition(const std::vector<int>& J, int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be positive");
    std::vector<bool> in_j(n, false);  // valid indices: 0..n-2
    for (int j : J) {
        if (j < 0 || j >= n - 1)
            fail(ErrorCode::IndexOutOfRange, "J index " + std::to_string(j + 1) + " outside 1.." +
                                                 std::to_string(n - 1));
        in_j[j] = true;
    }
    // Nodes 0..n-2 sit between the n slots of GL_n; a maximal run of marked
    // nodes glues its slots into one block.
    std::vector<int> parts;
    int run = 0;
    for (int i = 0; i <= n - 1; ++i) {
        if (i < n - 1 && in_j[i]) {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

Partition transpose(const Partition& p) {
    if (p.parts.empty()) return Partition{};
    std::vector<int> t(p.parts[0], 0);
    for (int part : p.parts)
        for (int i = 0; i < part; ++i) ++t[i];
    return Partition(t);
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.total() != b.total()) fail(ErrorCode::SizeMismatch, "partitions of different totals");
    long long sa = 0, sb = 0;
    const std::size_t len = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

OrbitDescriptor richardson_orbit(const std::vector<int>& J, int n) {
    OrbitDescriptor o;
    o.n = n;
    o.sigma = sigma_partition(J, n);
    o.lambda = transpose(o.sigma);
    o.J_source = J;
    long long sq = 0;
    for (int part : o.sigma.parts) sq += static_cast<long long>(part) * part;
    o.dim = static_cast<long long>(n) * n - sq;
    return o;
}

std::vector<long long> orbit_ring_series(const std::vector<int>& J, int n, int up_to) {
    if (up_to < 0) fail(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
    sigma_partition(J, n);  // validates J against n
    if (n == 1) {
        // gl_1: the nilpotent cone is a point.
        std::vector<long long> out(up_to + 1, 0);
        out[0] = 1;
        return out;
    }
    RootSystem rs = RootSystem::build(RootSystemSpec{Family::A, n - 1});
    return poincare_series(rs, J, rs.zero_weight(), up_to);
}

}  // namespace liecoh
