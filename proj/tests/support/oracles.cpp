#include "oracles.hpp"

#include <functional>

namespace liecoh::testsupport {

std::set<RootVector> reflection_closure(const RootSystem& rs) {
    std::set<RootVector> roots;
    std::vector<RootVector> frontier;
    for (int i = 0; i < rs.rank(); ++i) {
        roots.insert(rs.simple_root(i));
        frontier.push_back(rs.simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<RootVector> next;
        for (const auto& r : frontier)
            for (int i = 0; i < rs.rank(); ++i) {
                RootVector s = rs.simple_reflect_root(i, r);
                if (roots.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return roots;
}

std::map<int, long long> brute_multiset_partitions(const RootSystem& rs, const RootVector& mu,
                                                   const std::vector<RootVector>& S) {
    rs.check_rank(mu.rank(), "target");
    std::map<int, long long> out;
    std::function<void(std::vector<int>, std::size_t, int)> walk =
        [&](std::vector<int> rest, std::size_t k, int used) {
            bool zero = true;
            for (int c : rest) {
                if (c < 0) return;
                if (c != 0) zero = false;
            }
            if (zero) {
                ++out[used];
                return;
            }
            if (k == S.size()) return;
            walk(rest, k + 1, used);  // never use S[k] again
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= S[k][i];
            walk(std::move(rest), k, used + 1);
        };
    walk(mu.coords, 0, 0);
    return out;
}

}  // namespace liecoh::testsupport
