#include "rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace liecoh {

namespace {

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b, int sb) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sb * b[i];
    return r;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const { return Weight(add_vec(coords, o.coords, 1)); }
Weight Weight::operator-(const Weight& o) const { return Weight(add_vec(coords, o.coords, -1)); }
Weight Weight::operator-() const {
    Weight r(*this);
    for (auto& x : r.coords) x = -x;
    return r;
}
Weight Weight::operator*(int m) const {
    Weight r(*this);
    for (auto& x : r.coords) x *= m;
    return r;
}
bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

RootVector RootVector::operator+(const RootVector& o) const { return RootVector(add_vec(coords, o.coords, 1)); }
RootVector RootVector::operator-(const RootVector& o) const { return RootVector(add_vec(coords, o.coords, -1)); }
RootVector RootVector::operator-() const {
    RootVector r(*this);
    for (auto& x : r.coords) x = -x;
    return r;
}
bool RootVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}
int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

RootSystemSpec parse_spec(const std::string& name) {
    if (name.size() < 2) fail(ErrorCode::InvalidArgument, "root system name must look like 'A2'");
    char f = name[0];
    if (f < 'A' || f > 'G') fail(ErrorCode::InvalidArgument, "unknown family in '" + name + "'");
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(name[i])))
            fail(ErrorCode::InvalidArgument, "bad rank in '" + name + "'");
    int rank = std::stoi(name.substr(1));
    return RootSystemSpec{static_cast<Family>(f), rank};
}

namespace {

// Bourbaki Cartan matrices, a[i][j] = <alpha_j, alpha_i^vee>, and the
// symmetrizers d_i = (alpha_i,alpha_i)/2 (short = 1).
void cartan_data(const RootSystemSpec& spec, std::vector<std::vector<int>>& a, std::vector<int>& d) {
    const int n = spec.rank;
    auto admissible = [&]() -> bool {
        switch (spec.family) {
        case Family::A: return n >= 1;
        case Family::B: return n >= 2;
        case Family::C: return n >= 2;
        case Family::D: return n >= 4;
        case Family::E: return n >= 6 && n <= 8;
        case Family::F: return n == 4;
        case Family::G: return n == 2;
        }
        return false;
    };
    if (!admissible())
        fail(ErrorCode::InvalidRank, spec.name() + " is not an admissible (family, rank)");

    a.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    d.assign(n, 1);

    auto chain_edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };

    switch (spec.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
        a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2 (alpha_n short)
        for (int i = 0; i + 1 < n; ++i) d[i] = 2;
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
        a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee> = -2 (alpha_n long)
        d[n - 1] = 2;
        break;
    case Family::D:
        for (int i = 0; i + 1 < n - 1; ++i) chain_edge(i, i + 1);
        chain_edge(n - 3, n - 1);
        break;
    case Family::E:
        // nodes 1-3-4-5-6[-7[-8]] in a chain, node 2 attached to node 4
        chain_edge(0, 2);
        for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
        chain_edge(1, 3);
        break;
    case Family::F:
        chain_edge(0, 1);
        chain_edge(2, 3);
        a[1][2] = -1;
        a[2][1] = -2;
        d[0] = d[1] = 2;
        break;
    case Family::G:
        a[0][1] = -3;  // alpha_1 short, alpha_2 long
        a[1][0] = -1;
        d[1] = 3;
        break;
    }
}

// Exact adjugate and determinant of a small integer matrix (Gauss over
// long-long rationals; entries stay tiny at rank <= 8).
void adjugate_det(const std::vector<std::vector<int>>& m, std::vector<std::vector<long long>>& adj,
                  long long& det) {
    const int n = static_cast<int>(m.size());
    // Fraction-free Bareiss elimination for det; cofactor minors for adj.
    // Entries stay tiny at rank <= 8.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m[i][j];
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (w[r][k] != 0) { p = r; break; }
            if (p < 0) fail(ErrorCode::InvalidArgument, "singular Cartan matrix");
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    det = sign * w[n - 1][n - 1];
    adj.assign(n, std::vector<long long>(n, 0));
    // adj = C^T with cofactor C_ij = (-1)^{i+j} det(minor_ij)
    auto minor_det = [&](int skip_r, int skip_c) -> long long {
        std::vector<std::vector<long long>> mm;
        for (int i = 0; i < n; ++i) {
            if (i == skip_r) continue;
            std::vector<long long> row;
            for (int j = 0; j < n; ++j) {
                if (j == skip_c) continue;
                row.push_back(m[i][j]);
            }
            mm.push_back(std::move(row));
        }
        const int k = n - 1;
        if (k == 0) return 1;
        // Bareiss on mm
        long long pv = 1, sg = 1;
        for (int c = 0; c < k; ++c) {
            if (mm[c][c] == 0) {
                int p = -1;
                for (int r = c + 1; r < k; ++r)
                    if (mm[r][c] != 0) { p = r; break; }
                if (p < 0) return 0;
                std::swap(mm[c], mm[p]);
                sg = -sg;
            }
            for (int i = c + 1; i < k; ++i) {
                for (int j = c + 1; j < k; ++j)
                    mm[i][j] = (mm[i][j] * mm[c][c] - mm[i][c] * mm[c][j]) / pv;
                mm[i][c] = 0;
            }
            pv = mm[c][c];
        }
        return sg * mm[k - 1][k - 1];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long c = minor_det(i, j);
            adj[j][i] = (((i + j) % 2) ? -c : c);
        }
}

}  // namespace

RootSystem RootSystem::build(const RootSystemSpec& spec) {
    RootSystem rs;
    rs.spec_ = spec;
    cartan_data(spec, rs.cartan_, rs.d_);
    const int n = spec.rank;

    // Enumerate positive roots: close the simple roots under the simple
    // reflections, keeping whatever stays in the positive cone.
    std::set<std::vector<int>> pos;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    auto reflect = [&](const std::vector<int>& r, int i) {
        long long pr = 0;
        for (int j = 0; j < n; ++j) pr += static_cast<long long>(rs.cartan_[i][j]) * r[j];
        std::vector<int> out = r;
        out[i] -= static_cast<int>(pr);
        return out;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < n; ++i) {
                auto s = reflect(r, i);
                bool positive = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
                if (positive && pos.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }

    rs.positive_roots_.reserve(pos.size());
    for (const auto& r : pos) rs.positive_roots_.push_back(RootVector(r));
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
              [](const RootVector& x, const RootVector& y) {
                  if (x.height() != y.height()) return x.height() < y.height();
                  return x.coords < y.coords;
              });

    rs.norm_half_.reserve(rs.positive_roots_.size());
    for (const auto& r : rs.positive_roots_) {
        long long form = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                form += static_cast<long long>(r[i]) * r[j] * rs.d_[i] * rs.cartan_[i][j];
        rs.norm_half_.push_back(form / 2);
    }

    // Highest root: unique maximum in the dominance order; it is the last
    // root in height order. The highest short root is the maximal root of
    // minimal norm.
    rs.highest_root_ = rs.positive_roots_.back();
    long long min_norm = *std::min_element(rs.norm_half_.begin(), rs.norm_half_.end());
    for (std::size_t k = rs.positive_roots_.size(); k-- > 0;) {
        if (rs.norm_half_[k] == min_norm) {
            rs.highest_short_root_ = rs.positive_roots_[k];
            break;
        }
    }
    rs.coxeter_number_ = rs.highest_root_.height() + 1;

    adjugate_det(rs.cartan_, rs.cartan_adjugate_, rs.cartan_det_);
    return rs;
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank(), 1)); }
Weight RootSystem::zero_weight() const { return Weight(std::vector<int>(rank(), 0)); }
RootVector RootSystem::zero_root() const { return RootVector(std::vector<int>(rank(), 0)); }

RootVector RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank()) fail(ErrorCode::IndexOutOfRange, "simple root index");
    std::vector<int> c(rank(), 0);
    c[i] = 1;
    return RootVector(c);
}

Weight RootSystem::fundamental_weight(int i) const {
    if (i < 0 || i >= rank()) fail(ErrorCode::IndexOutOfRange, "fundamental weight index");
    std::vector<int> c(rank(), 0);
    c[i] = 1;
    return Weight(c);
}

bool RootSystem::is_positive_root(const RootVector& alpha) const {
    check_rank(alpha.rank(), "root");
    return std::binary_search(positive_roots_.begin(), positive_roots_.end(), alpha,
                              [](const RootVector& x, const RootVector& y) {
                                  if (x.height() != y.height()) return x.height() < y.height();
                                  return x.coords < y.coords;
                              });
}

long long RootSystem::norm_half(const RootVector& alpha) const {
    check_rank(alpha.rank(), "root");
    long long form = root_form(alpha, alpha);
    return form / 2;
}

long long RootSystem::root_form(const RootVector& alpha, const RootVector& beta) const {
    check_rank(alpha.rank(), "root");
    check_rank(beta.rank(), "root");
    long long form = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (alpha[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            form += static_cast<long long>(alpha[i]) * beta[j] * d_[i] * cartan_[i][j];
    }
    return form;
}

long long RootSystem::weight_root_form(const Weight& lambda, const RootVector& beta) const {
    check_rank(lambda.rank(), "weight");
    check_rank(beta.rank(), "root");
    // (lambda, alpha_j) = d_j * <lambda, alpha_j^vee>
    long long form = 0;
    for (int j = 0; j < rank(); ++j)
        form += static_cast<long long>(beta[j]) * d_[j] * lambda[j];
    return form;
}

long long RootSystem::pairing(const Weight& lambda, const RootVector& alpha) const {
    check_rank(lambda.rank(), "weight");
    check_rank(alpha.rank(), "root");
    long long dalpha = norm_half(alpha);
    if (dalpha <= 0) fail(ErrorCode::InvalidArgument, "pairing: alpha has nonpositive norm");
    long long form = weight_root_form(lambda, alpha);
    if (form % dalpha != 0)
        fail(ErrorCode::InvalidArgument, "pairing: alpha is not a root of this system");
    return form / dalpha;
}

Weight RootSystem::root_to_weight(const RootVector& alpha) const {
    check_rank(alpha.rank(), "root");
    std::vector<int> c(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
        long long v = 0;
        for (int j = 0; j < rank(); ++j) v += static_cast<long long>(cartan_[i][j]) * alpha[j];
        c[i] = static_cast<int>(v);
    }
    return Weight(c);
}

std::optional<RootVector> RootSystem::weight_in_root_lattice(const Weight& lambda) const {
    check_rank(lambda.rank(), "weight");
    std::vector<int> c(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
        long long v = 0;
        for (int j = 0; j < rank(); ++j) v += cartan_adjugate_[i][j] * lambda[j];
        if (v % cartan_det_ != 0) return std::nullopt;
        c[i] = static_cast<int>(v / cartan_det_);
    }
    return RootVector(c);
}

bool RootSystem::dominant(const Weight& lambda) const {
    check_rank(lambda.rank(), "weight");
    return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](int x) { return x >= 0; });
}

bool RootSystem::in_X_PJ(const Weight& lambda, const std::vector<int>& J) const {
    check_rank(lambda.rank(), "weight");
    check_subset(J);
    return std::all_of(J.begin(), J.end(), [&](int j) { return lambda[j] == 0; });
}

bool RootSystem::j_dominant(const Weight& lambda, const std::vector<int>& J) const {
    check_rank(lambda.rank(), "weight");
    check_subset(J);
    return std::all_of(J.begin(), J.end(), [&](int j) { return lambda[j] >= 0; });
}

Weight RootSystem::simple_reflect(int i, const Weight& lambda) const {
    check_rank(lambda.rank(), "weight");
    if (i < 0 || i >= rank()) fail(ErrorCode::IndexOutOfRange, "reflection index");
    Weight out = lambda;
    const int li = lambda[i];
    if (li == 0) return out;
    for (int k = 0; k < rank(); ++k) out[k] -= li * cartan_[k][i];
    return out;
}

RootVector RootSystem::simple_reflect_root(int i, const RootVector& alpha) const {
    check_rank(alpha.rank(), "root");
    if (i < 0 || i >= rank()) fail(ErrorCode::IndexOutOfRange, "reflection index");
    long long pr = 0;
    for (int j = 0; j < rank(); ++j) pr += static_cast<long long>(cartan_[i][j]) * alpha[j];
    RootVector out = alpha;
    out[i] -= static_cast<int>(pr);
    return out;
}

std::vector<RootVector> RootSystem::positive_roots_of(const std::vector<int>& J) const {
    check_subset(J);
    std::vector<bool> in_j(rank(), false);
    for (int j : J) in_j[j] = true;
    std::vector<RootVector> out;
    for (const auto& r : positive_roots_) {
        bool ok = true;
        for (int i = 0; i < rank(); ++i)
            if (r[i] != 0 && !in_j[i]) { ok = false; break; }
        if (ok) out.push_back(r);
    }
    return out;
}

std::vector<RootVector> RootSystem::positive_roots_complement(const std::vector<int>& J) const {
    check_subset(J);
    std::vector<bool> in_j(rank(), false);
    for (int j : J) in_j[j] = true;
    std::vector<RootVector> out;
    for (const auto& r : positive_roots_) {
        bool inside = true;
        for (int i = 0; i < rank(); ++i)
            if (r[i] != 0 && !in_j[i]) { inside = false; break; }
        if (!inside) out.push_back(r);
    }
    return out;
}

void RootSystem::check_rank(std::size_t n, const char* what) const {
    if (n != static_cast<std::size_t>(rank()))
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + " has rank " + std::to_string(n) + ", expected " + std::to_string(rank()));
}

void RootSystem::check_subset(const std::vector<int>& J) const {
    int prev = -1;
    for (int j : J) {
        if (j < 0 || j >= rank()) fail(ErrorCode::IndexOutOfRange, "J contains index " + std::to_string(j));
        if (j <= prev) fail(ErrorCode::InvalidArgument, "J must be sorted and duplicate-free");
        prev = j;
    }
}

}  // namespace liecoh
