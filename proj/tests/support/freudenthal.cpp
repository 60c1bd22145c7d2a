#include "freudenthal.hpp"

#include <set>

namespace liecoh::testsupport {

Character freudenthal_character(const RootSystem& rs, const Weight& lambda) {
    if (!rs.dominant(lambda)) fail(ErrorCode::NotDominant, "freudenthal needs a dominant weight");
    Character ch;
    ch.add(lambda, 1);

    const auto& pos = rs.positive_roots();
    const Weight rho = rs.rho();
    const Weight top_shifted = lambda + rho;

    // Saturation: every weight below the top arises from the previous level
    // by subtracting a simple root.
    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::set<Weight> candidates;
        for (const auto& nu : level)
            for (int i = 0; i < rs.rank(); ++i)
                candidates.insert(nu - rs.root_to_weight(rs.simple_root(i)));
        std::vector<Weight> next;
        for (const auto& mu : candidates) {
            if (ch.terms.count(mu)) continue;
            // denominator (lambda + mu + 2 rho, lambda - mu)
            auto diff = rs.weight_in_root_lattice(lambda - mu);
            if (!diff) continue;
            long long denom = rs.weight_root_form(top_shifted + mu + rho, *diff);
            if (denom == 0) continue;
            long long num = 0;
            for (const auto& alpha : pos) {
                long long base = rs.weight_root_form(mu, alpha);
                long long step = rs.root_form(alpha, alpha);
                Weight walpha = rs.root_to_weight(alpha);
                Weight probe = mu + walpha;
                for (int k = 1;; ++k) {
                    // walk the alpha-string while probe stays under lambda
                    // in the root order
                    auto gap = rs.weight_in_root_lattice(lambda - probe);
                    bool inside = static_cast<bool>(gap);
                    if (gap)
                        for (int c : gap->coords)
                            if (c < 0) { inside = false; break; }
                    if (!inside) break;
                    num += (base + k * step) * ch.mult(probe);
                    probe = probe + walpha;
                }
            }
            if (num == 0) continue;
            long long twice = 2 * num;
            if (twice % denom != 0) fail(ErrorCode::InvalidArgument, "freudenthal division failed");
            long long mult = twice / denom;
            if (mult > 0) {
                ch.add(mu, mult);
                next.push_back(mu);
            }
        }
        level = std::move(next);
    }
    return ch;
}

}  // namespace liecoh::testsupport
