#include "characters.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace liecoh {

void Character::add(const Weight& mu, long long m) {
    if (m == 0) return;
    auto it = terms.find(mu);
    if (it == terms.end()) {
        terms.emplace(mu, m);
    } else {
        it->second += m;
        if (it->second == 0) terms.erase(it);
    }
}

long long Character::mult(const Weight& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? 0 : it->second;
}

long long Character::mass() const {
    long long s = 0;
    for (const auto& [mu, m] : terms) s += m;
    return s;
}

Character& Character::operator+=(const Character& o) {
    for (const auto& [mu, m] : o.terms) add(mu, m);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    for (const auto& [mu, m] : o.terms) add(mu, -m);
    return *this;
}

Character Character::scaled(long long m) const {
    Character r;
    if (m == 0) return r;
    for (const auto& [mu, c] : terms) r.terms.emplace(mu, c * m);
    return r;
}

void GradedCharacter::add(const Weight& mu, const QPolynomial& p) {
    if (p.is_zero()) return;
    auto it = terms.find(mu);
    if (it == terms.end()) {
        terms.emplace(mu, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
}

QPolynomial GradedCharacter::poly(const Weight& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? QPolynomial{} : it->second;
}

Character GradedCharacter::slice(int degree) const {
    Character c;
    for (const auto& [mu, p] : terms) c.add(mu, p.at(degree));
    return c;
}

// ---------------------------------------------------------------------------
// Kostant partition function

namespace {

struct PartitionKey {
    std::vector<int> mu;
    int suffix;
    bool operator==(const PartitionKey&) const = default;
};

struct PartitionKeyHash {
    std::size_t operator()(const PartitionKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k.mu) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        h ^= static_cast<std::size_t>(k.suffix) * 0x9e3779b97f4a7c15ull;
        return h;
    }
};

// Memo table for one (system, root multiset S), S kept in the default
// positive-root order.
class PartitionTable {
public:
    explicit PartitionTable(std::vector<RootVector> roots) : roots_(std::move(roots)) {}

    QPolynomial evaluate(const RootVector& mu) {
        std::lock_guard<std::mutex> lock(mutex_);
        return eval_rec(mu.coords, 0);
    }

private:
    QPolynomial eval_rec(const std::vector<int>& mu, int k) {
        bool zero = true;
        for (int x : mu) {
            if (x < 0) return {};  // unreachable: roots never subtract
            if (x != 0) zero = false;
        }
        if (zero) return QPolynomial::one();
        if (k == static_cast<int>(roots_.size())) return {};
        PartitionKey key{mu, k};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        // skip roots_[k], or use it once more (stay at index k)
        QPolynomial result = eval_rec(mu, k + 1);
        std::vector<int> rest(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) rest[i] = mu[i] - roots_[k][i];
        result += eval_rec(rest, k).shifted(1);
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::vector<RootVector> roots_;
    std::mutex mutex_;
    std::unordered_map<PartitionKey, QPolynomial, PartitionKeyHash> memo_;
};

std::string roots_key(const RootSystem& rs, const std::vector<RootVector>& S) {
    std::ostringstream os;
    os << rs.name();
    for (const auto& r : S) {
        os << '|';
        for (int x : r.coords) os << x << ',';
    }
    return os.str();
}

PartitionTable& partition_table(const RootSystem& rs, const std::vector<RootVector>& S) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<PartitionTable>> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = roots_key(rs, S);
    auto it = tables.find(key);
    if (it == tables.end()) {
        auto sorted = S;
        std::sort(sorted.begin(), sorted.end(), [](const RootVector& x, const RootVector& y) {
            if (x.height() != y.height()) return x.height() < y.height();
            return x.coords < y.coords;
        });
        it = tables.emplace(key, std::make_unique<PartitionTable>(std::move(sorted))).first;
    }
    return *it->second;
}

const WeylGroup& cached_weyl_group(const RootSystem& rs) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<WeylGroup>> groups;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = groups.find(rs.name());
    if (it == groups.end()) it = groups.emplace(rs.name(), std::make_unique<WeylGroup>(rs)).first;
    return *it->second;
}

const WeylGroup& cached_weyl_group_levi(const RootSystem& rs, const std::vector<int>& J) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<WeylGroup>> groups;
    std::ostringstream os;
    os << rs.name() << "|J";
    for (int j : J) os << j << ',';
    std::lock_guard<std::mutex> lock(mutex);
    auto it = groups.find(os.str());
    if (it == groups.end()) it = groups.emplace(os.str(), std::make_unique<WeylGroup>(rs, J)).first;
    return *it->second;
}

}  // namespace

QPolynomial q_partition(const RootSystem& rs, const RootVector& mu, const std::vector<RootVector>& S) {
    rs.check_rank(mu.rank(), "partition target");
    for (const auto& r : S)
        if (!rs.is_positive_root(r))
            fail(ErrorCode::PreconditionFailed, "partition root set must consist of positive roots");
    return partition_table(rs, S).evaluate(mu);
}

long long partition_count(const RootSystem& rs, const RootVector& mu, const std::vector<RootVector>& S) {
    return q_partition(rs, mu, S).eval_at_one();
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu) {
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    return weyl_orbit_levi(rs, all, mu);
}

std::vector<Weight> weyl_orbit_levi(const RootSystem& rs, const std::vector<int>& J, const Weight& mu) {
    rs.check_rank(mu.rank(), "weight");
    rs.check_subset(J);
    std::set<Weight> seen{mu};
    std::vector<Weight> frontier{mu};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& x : frontier)
            for (int j : J) {
                Weight y = rs.simple_reflect(j, x);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    if (!rs.dominant(lambda)) fail(ErrorCode::NotDominant, "lambda must be dominant");
    const int n = rs.rank();
    Weight floor = act(rs, longest_element(rs), lambda);
    auto box = rs.weight_in_root_lattice(lambda - floor);
    if (!box) fail(ErrorCode::InvalidArgument, "lambda - w0(lambda) must lie in the root lattice");
    std::vector<Weight> out;
    std::vector<int> beta(n, 0);
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            Weight mu = lambda - rs.root_to_weight(RootVector(beta));
            if (rs.dominant(mu)) out.push_back(mu);
            return;
        }
        for (beta[i] = 0; beta[i] <= (*box)[i]; ++beta[i]) walk(i + 1);
        beta[i] = 0;
    };
    walk(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Shared implementation of the alternating multiplicity formula; ambient
// case is J = all simple indices relative data.
Character kostant_character(const RootSystem& rs, const std::vector<int>& J, const Weight& lambda,
                            bool ambient) {
    if (ambient) {
        if (!rs.dominant(lambda)) fail(ErrorCode::NotDominant, "highest weight must be dominant");
    } else if (!rs.j_dominant(lambda, J)) {
        fail(ErrorCode::NotDominant, "highest weight must be J-dominant");
    }
    const auto& group = ambient ? cached_weyl_group(rs) : cached_weyl_group_levi(rs, J);
    const auto roots = ambient ? rs.positive_roots() : rs.positive_roots_of(J);

    // Precompute w(lambda) and the rho-shift sum_{alpha in inv(w)} alpha for
    // every w; the multiplicity of mu is
    //   sum_w (-1)^{l(w)} P( rootcoords(w(lambda) - mu) - shift(w) ).
    struct Contribution {
        Weight wlambda;
        RootVector shift;
        int sign;
    };
    std::vector<Contribution> contribs;
    contribs.reserve(group.order());
    for (const auto& w : group.elements()) {
        RootVector shift = rs.zero_root();
        for (const auto& alpha : inversion_set(rs, w)) shift = shift + alpha;
        contribs.push_back({act(rs, w, lambda), shift, (w.length() % 2) ? -1 : 1});
    }

    // Candidate dominant weights: lambda minus the box of root combinations
    // reaching down to the lowest weight.
    const WeylElement& w_long = group.elements().back();
    Weight floor = act(rs, w_long, lambda);
    auto box = rs.weight_in_root_lattice(lambda - floor);
    if (!box) fail(ErrorCode::InvalidArgument, "weight does not descend integrally");

    auto& ptable = partition_table(rs, roots);
    Character result;
    const int n = rs.rank();
    std::vector<int> beta(n, 0);
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            Weight mu = lambda - rs.root_to_weight(RootVector(beta));
            bool dom = ambient ? rs.dominant(mu) : rs.j_dominant(mu, J);
            if (!dom) return;
            long long m = 0;
            for (const auto& c : contribs) {
                auto arg = rs.weight_in_root_lattice(c.wlambda - mu);
                if (!arg) continue;
                RootVector shifted = *arg - c.shift;
                m += c.sign * ptable.evaluate(shifted).eval_at_one();
            }
            if (m == 0) return;
            auto orbit = ambient ? weyl_orbit(rs, mu) : weyl_orbit_levi(rs, J, mu);
            for (const auto& nu : orbit) result.add(nu, m);
            return;
        }
        for (beta[i] = 0; beta[i] <= (*box)[i]; ++beta[i]) walk(i + 1);
        beta[i] = 0;
    };
    walk(0);
    return result;
}

std::string levi_key(const RootSystem& rs, const std::vector<int>& J, const Weight& lambda) {
    std::ostringstream os;
    os << rs.name() << "|J";
    for (int j : J) os << j << ',';
    os << '|';
    for (int x : lambda.coords) os << x << ',';
    return os.str();
}

}  // namespace

const Character& weyl_character(const RootSystem& rs, const Weight& lambda) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Character>> cache;
    rs.check_rank(lambda.rank(), "weight");
    std::ostringstream os;
    os << rs.name() << '|';
    for (int x : lambda.coords) os << x << ',';
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(os.str()); it != cache.end()) return *it->second;
    }
    auto ch = std::make_unique<Character>(kostant_character(rs, {}, lambda, true));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(os.str(), std::move(ch));
    return *it->second;
}

const Character& weyl_character_levi(const RootSystem& rs, const std::vector<int>& J,
                                     const Weight& lambda) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Character>> cache;
    rs.check_rank(lambda.rank(), "weight");
    rs.check_subset(J);
    auto key = levi_key(rs, J, lambda);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto ch = std::make_unique<Character>(kostant_character(rs, J, lambda, false));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(ch));
    return *it->second;
}

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long long dim_by_products(const RootSystem& rs, const std::vector<RootVector>& roots,
                          const Weight& numer_weight, const Weight& denom_weight) {
    __int128 num = 1;
    __int128 den = 1;
    for (const auto& alpha : roots) {
        long long nk = rs.pairing(numer_weight, alpha);
        long long dk = rs.pairing(denom_weight, alpha);
        long long g = gcd_ll(nk, dk);
        if (g != 0) {
            nk /= g;
            dk /= g;
        }
        num *= nk;
        den *= dk;
        if (den != 1 && num % den == 0) {
            num /= den;
            den = 1;
        }
    }
    if (den == 0 || num % den != 0)
        fail(ErrorCode::InvalidArgument, "dimension product did not reduce to an integer");
    num /= den;
    if (num > static_cast<__int128>(0x7fffffffffffffffLL) || num < 0)
        fail(ErrorCode::TooLarge, "dimension exceeds 64-bit range");
    return static_cast<long long>(num);
}

}  // namespace

long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!rs.dominant(lambda)) fail(ErrorCode::NotDominant, "weyl_dim needs a dominant weight");
    return dim_by_products(rs, rs.positive_roots(), lambda + rs.rho(), rs.rho());
}

long long weyl_dim_levi(const RootSystem& rs, const std::vector<int>& J, const Weight& lambda) {
    if (!rs.j_dominant(lambda, J)) fail(ErrorCode::NotDominant, "weyl_dim_levi needs a J-dominant weight");
    // <rho, alpha^vee> = <rho_J, alpha^vee> for alpha in Phi_J, so rho can
    // stand in for rho_J in both products.
    auto roots = rs.positive_roots_of(J);
    // <lambda + rho_J, alpha^vee> = <lambda, alpha^vee> + <rho, alpha^vee>
    // is what dim_by_products computes with numerator lambda + rho.
    return dim_by_products(rs, roots, lambda + rs.rho(), rs.rho());
}

GradedCharacter sym_graded(const RootSystem& rs, const std::vector<int>& J, int up_to) {
    if (up_to < 0) fail(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
    auto roots = rs.positive_roots_complement(J);
    GradedCharacter acc;
    acc.add(rs.zero_weight(), QPolynomial::one());
    for (const auto& alpha : roots) {
        Weight walpha = rs.root_to_weight(alpha);
        GradedCharacter next;
        for (const auto& [mu, p] : acc.terms) {
            Weight target = mu;
            for (int k = 0; k <= up_to; ++k) {
                QPolynomial shifted = p.shifted(k).truncated(up_to);
                if (shifted.is_zero()) break;
                next.add(target, shifted);
                target = target + walpha;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

// Shared truncated products of sym_graded; a table computed up to degree D
// serves every request for degree <= D.
std::shared_ptr<const GradedCharacter> cached_sym_graded(const RootSystem& rs,
                                                         const std::vector<int>& J, int up_to) {
    static std::mutex mutex;
    static std::map<std::string, std::pair<int, std::shared_ptr<const GradedCharacter>>> cache;
    std::ostringstream os;
    os << rs.name() << "|J";
    for (int j : J) os << j << ',';
    const auto key = os.str();
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.first >= up_to) return it->second.second;
    }
    auto fresh = std::make_shared<const GradedCharacter>(sym_graded(rs, J, up_to));
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[key];
    if (!slot.second || slot.first < up_to) slot = {up_to, fresh};
    return slot.second;
}

}  // namespace

Character sym_character(const RootSystem& rs, const std::vector<int>& J, int degree) {
    if (degree < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
    return cached_sym_graded(rs, J, degree)->slice(degree);
}

Character bott_euler(const RootSystem& rs, const Weight& mu) {
    auto reg = dot_regularize(rs, mu);
    if (!reg) return {};
    const auto& [w, dom] = *reg;
    Character ch = weyl_character(rs, dom);
    return (w.length() % 2) ? ch.scaled(-1) : ch;
}

Character euler_induction(const RootSystem& rs, const Character& c, const Weight& gamma) {
    Character out;
    for (const auto& [mu, m] : c.terms) out += bott_euler(rs, mu + gamma).scaled(m);
    return out;
}

std::map<Weight, long long> decompose(const RootSystem& rs, const Character& c) {
    // Up-front W-invariance check: every simple reflection fixes the
    // multiplicity function.
    for (const auto& [mu, m] : c.terms)
        for (int i = 0; i < rs.rank(); ++i)
            if (c.mult(rs.simple_reflect(i, mu)) != m)
                fail(ErrorCode::NotWInvariant, "character is not W-invariant");

    auto dominance_height = [&](const Weight& mu) {
        long long h = 0;
        for (const auto& alpha : rs.positive_roots()) h += rs.pairing(mu, alpha);
        return h;
    };

    std::map<Weight, long long> out;
    Character rest = c;
    while (!rest.is_zero()) {
        const Weight* best = nullptr;
        long long best_height = 0;
        for (const auto& [mu, m] : rest.terms) {
            if (!rs.dominant(mu)) continue;
            long long h = dominance_height(mu);
            if (!best || h > best_height || (h == best_height && best->coords < mu.coords)) {
                best = &mu;
                best_height = h;
            }
        }
        if (!best) fail(ErrorCode::NotWInvariant, "no dominant weight left in a nonzero character");
        Weight sigma = *best;
        long long m = rest.mult(sigma);
        out.emplace(sigma, m);
        rest -= weyl_character(rs, sigma).scaled(m);
    }
    return out;
}

GradedMultiplicityResult graded_multiplicity(const RootSystem& rs, const std::vector<int>& J,
                                             const Weight& gamma, const Weight& sigma) {
    rs.check_subset(J);
    if (!rs.dominant(gamma) || !rs.in_X_PJ(gamma, J))
        fail(ErrorCode::PreconditionFailed, "gamma must be dominant and vanish on J");
    if (!rs.dominant(sigma)) fail(ErrorCode::NotDominant, "sigma must be dominant");

    static std::mutex mutex;
    static std::map<std::string, GradedMultiplicityResult> cache;
    std::ostringstream os;
    os << levi_key(rs, J, gamma) << '|';
    for (int x : sigma.coords) os << x << ',';
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(os.str()); it != cache.end()) return it->second;
    }

    auto roots = rs.positive_roots_complement(J);
    auto& ptable = partition_table(rs, roots);
    const auto& group = cached_weyl_group(rs);
    QPolynomial poly;
    const Weight target = sigma + rs.rho();
    for (const auto& w : group.elements()) {
        Weight arg = act(rs, w, target) - rs.rho() - gamma;
        auto rc = rs.weight_in_root_lattice(arg);
        if (!rc) continue;
        QPolynomial p = ptable.evaluate(*rc);
        if (p.is_zero()) continue;
        if (w.length() % 2)
            poly -= p;
        else
            poly += p;
    }
    GradedMultiplicityResult result{poly, false};
    for (long long coeff : poly.coeffs)
        if (coeff < 0) result.assumption_violated = true;

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(os.str(), result);
    return result;
}

std::vector<Weight> induction_candidates(const RootSystem& rs, const std::vector<int>& J,
                                         const Weight& gamma, int degree) {
    std::set<Weight> out;
    Character sym = sym_character(rs, J, degree);
    for (const auto& [mu, m] : sym.terms) {
        auto reg = dot_regularize(rs, mu + gamma);
        if (reg) out.insert(reg->second);
    }
    return {out.begin(), out.end()};
}

std::vector<long long> poincare_series(const RootSystem& rs, const std::vector<int>& J,
                                       const Weight& gamma, int up_to) {
    std::vector<long long> out;
    out.reserve(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        long long total = 0;
        for (const auto& sigma : induction_candidates(rs, J, gamma, n)) {
            long long m = graded_multiplicity(rs, J, gamma, sigma).poly.at(n);
            if (m != 0) total += m * weyl_dim(rs, sigma);
        }
        out.push_back(total);
    }
    return out;
}

Character twist_character(const Character& c, int m) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "twist factor must be >= 1");
    Character out;
    for (const auto& [mu, mult] : c.terms) out.add(mu * m, mult);
    return out;
}

Character tensor(const Character& a, const Character& b) {
    Character out;
    for (const auto& [mu, ma] : a.terms)
        for (const auto& [nu, mb] : b.terms) out.add(mu + nu, ma * mb);
    return out;
}

}  // namespace liecoh
