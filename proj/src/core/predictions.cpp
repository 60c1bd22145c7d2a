#include "predictions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liecoh {

Realization realization_from_id(const std::string& id) {
    if (id == "3.3") return Realization::QGeneric;
    if (id == "4.2") return Realization::QNonShifted;
    if (id == "5.1") return Realization::QShifted;
    if (id == "7.1") return Realization::FGeneric;
    if (id == "7.3") return Realization::FNonShifted;
    if (id == "7.4") return Realization::FShifted;
    fail(ErrorCode::InvalidArgument, "unknown realization id '" + id + "'");
}

std::string realization_id(Realization r) {
    switch (r) {
    case Realization::QGeneric: return "3.3";
    case Realization::QNonShifted: return "4.2";
    case Realization::QShifted: return "5.1";
    case Realization::FGeneric: return "7.1";
    case Realization::FNonShifted: return "7.3";
    case Realization::FShifted: return "7.4";
    }
    fail(ErrorCode::InvalidArgument, "bad realization");
}

Mode realization_regime(Realization r) {
    switch (r) {
    case Realization::QGeneric:
    case Realization::QNonShifted:
    case Realization::QShifted: return Mode::Quantum;
    default: return Mode::Frobenius;
    }
}

Weight epsilon_weight(const RootSystem& rs, long long ell, const std::vector<int>& J) {
    rs.check_subset(J);
    if (ell < 2) fail(ErrorCode::PreconditionFailed, "ell must be >= 2");
    std::vector<int> c(rs.rank(), 0);
    for (int j : J) c[j] = static_cast<int>(ell - 1);
    return Weight(c);
}

namespace {

void require_min_coset_rep(const RootSystem& rs, const std::vector<int>& J, const WeylElement& w) {
    if (!in_min_coset_reps(rs, J, w))
        fail(ErrorCode::NotInJW, "w is not a minimal-length coset representative for this J");
}

bool g2_ell_ok(const RootSystem& rs, long long ell) {
    return !(rs.spec().family == Family::G && rs.rank() == 2 && ell % 3 == 0);
}

}  // namespace

Weight sigma_wJ(const RootSystem& rs, long long ell, const std::vector<int>& J, const WeylElement& w) {
    require_min_coset_rep(rs, J, w);
    Weight eps = epsilon_weight(rs, ell, J);
    WeylElement w0J = longest_element(rs, J);
    Weight sigma = eps - act(rs, w0J, eps) + act(rs, w0J, dot(rs, w, rs.zero_weight()));
    if (!rs.j_dominant(sigma, J))
        fail(ErrorCode::PreconditionFailed, "sigma_wJ produced a weight that is not J-dominant");
    return sigma;
}

bool check_condition_b(const RootSystem& rs, long long ell, const std::vector<int>& J,
                       const WeylElement& w, const Weight& gamma) {
    require_min_coset_rep(rs, J, w);
    if (!rs.in_X_PJ(gamma, J))
        fail(ErrorCode::PreconditionFailed, "gamma must vanish on J");
    WeylElement w0J = longest_element(rs, J);
    Weight value = epsilon_weight(rs, ell, J) - act(rs, w0J, dot(rs, w, rs.zero_weight()))
                   + gamma * static_cast<int>(ell);
    return rs.dominant(value);
}

namespace {

struct ParityPlan {
    int t = 0;
    std::vector<Hypothesis> hypotheses;
};

ParityPlan plan_for(const RootSystem& rs, Realization r, long long ell, const std::vector<int>& J,
                    const Weight& gamma, const WeylElement& w, int t) {
    ParityPlan plan;
    const long long h = rs.coxeter_number();
    const bool frob = realization_regime(r) == Mode::Frobenius;

    if (frob) {
        if (ell < 3) fail(ErrorCode::PreconditionFailed, "frobenius regime requires p >= 3");
        plan.hypotheses.push_back({"(A1) higher vanishing and good filtration of the induced algebra",
                                   true, false});
        plan.hypotheses.push_back({"(A2) normality of G.u_J (orbit-closure statements only)", true,
                                   false});
    } else {
        if (ell < 2) fail(ErrorCode::PreconditionFailed, "quantum regime requires ell >= 2");
        if (ell % 2 == 0) fail(ErrorCode::PreconditionFailed, "quantum regime requires odd ell");
        if (!g2_ell_ok(rs, ell))
            fail(ErrorCode::PreconditionFailed, "type G2 requires ell coprime to 3");
    }

    const char* bound_param = frob ? "p" : "ell";
    switch (r) {
    case Realization::QGeneric:
    case Realization::FGeneric:
        if (t < 0) fail(ErrorCode::PreconditionFailed, "parity offset t must be >= 0");
        plan.t = t;
        plan.hypotheses.push_back({"one-dimensional Hom in degree t and vanishing elsewhere", true,
                                   false});
        break;
    case Realization::QNonShifted:
    case Realization::FNonShifted: {
        require_min_coset_rep(rs, J, w);
        plan.t = 0;
        bool is_id = w.is_identity();
        std::string bound = std::string(bound_param) + (is_id ? " > h" : " > 2h-1");
        bool bound_ok = is_id ? (ell > h) : (ell > 2 * h - 1);
        plan.hypotheses.push_back({bound, bound_ok, true});
        plan.hypotheses.push_back({"condition (b): epsilon_J - w0J(w.0) + " + std::string(bound_param)
                                       + "*gamma dominant",
                                   check_condition_b(rs, ell, J, w, gamma), true});
        if (!is_id)
            plan.hypotheses.push_back({"condition (a): multiplicity-one Hom for this w", true, false});
        break;
    }
    case Realization::QShifted:
    case Realization::FShifted: {
        require_min_coset_rep(rs, J, w);
        plan.t = w.length();
        plan.hypotheses.push_back({std::string(bound_param) + " > h", ell > h, true});
        EnvelopeResult env = tilting_weight_envelope_check(rs, ell, J, w, gamma);
        plan.hypotheses.push_back({"all tilting weights dominant after the twist (envelope: "
                                       + envelope_result_name(env) + ")",
                                   env == EnvelopeResult::Dominant,
                                   env != EnvelopeResult::Inconclusive});
        break;
    }
    }
    return plan;
}

}  // namespace

CohomologyPrediction predicted_cohomology(const RootSystem& rs, Realization realization,
                                          long long ell, const std::vector<int>& J,
                                          const Weight& gamma, const WeylElement& w, int t,
                                          int up_to) {
    rs.check_subset(J);
    rs.check_rank(gamma.rank(), "gamma");
    if (up_to < 0) fail(ErrorCode::PreconditionFailed, "degree bound must be >= 0");
    if (!rs.dominant(gamma) || !rs.in_X_PJ(gamma, J))
        fail(ErrorCode::PreconditionFailed, "gamma must be dominant and vanish on J");

    ParityPlan plan = plan_for(rs, realization, ell, J, gamma, w, t);
    CohomologyPrediction out;
    out.realization = realization_id(realization);
    out.mode = realization_regime(realization);
    out.ell = ell;
    out.parity_offset = plan.t;
    out.twist = out.mode == Mode::Frobenius ? ell : 1;
    out.hypotheses = std::move(plan.hypotheses);

    for (int n = 0; n <= up_to; ++n) {
        DegreeData row;
        const int shifted = n - plan.t;
        if (shifted >= 0 && shifted % 2 == 0) {
            const int m = shifted / 2;
            for (const auto& sigma : induction_candidates(rs, J, gamma, m)) {
                auto gm = graded_multiplicity(rs, J, gamma, sigma);
                if (gm.assumption_violated) out.assumption_violated = true;
                long long mult = gm.poly.at(m);
                if (mult == 0) continue;
                row.decomposition.emplace(sigma, mult);
                row.dimension += mult * weyl_dim(rs, sigma);
            }
        }
        out.per_degree.emplace(n, std::move(row));
    }
    return out;
}

CohomologyPrediction frobenius_predictions(const RootSystem& rs, Realization realization,
                                           long long p, const std::vector<int>& J,
                                           const Weight& gamma, const WeylElement& w, int t,
                                           int up_to) {
    if (realization_regime(realization) != Mode::Frobenius)
        fail(ErrorCode::PreconditionFailed, "frobenius_predictions needs a 7.x realization");
    return predicted_cohomology(rs, realization, p, J, gamma, w, t, up_to);
}

WeighteqReport verify_weighteq(const RootSystem& rs, long long ell, const std::vector<int>& J,
                               const WeylElement& w, long long cap) {
    rs.check_subset(J);
    require_min_coset_rep(rs, J, w);
    if (ell < 2) fail(ErrorCode::PreconditionFailed, "ell must be >= 2");

    WeighteqReport report;
    report.ell = ell;
    report.J = J;
    report.w = w;

    const long long h = rs.coxeter_number();
    const bool is_id = w.is_identity();
    report.hypotheses.push_back({"ell odd", ell % 2 == 1, true});
    if (rs.spec().family == Family::G)
        report.hypotheses.push_back({"3 does not divide ell", ell % 3 != 0, true});
    report.hypotheses.push_back(
        {is_id ? "ell > h" : "ell > 2h-1", is_id ? (ell > h) : (ell > 2 * h - 1), true});

    const Weight eps = epsilon_weight(rs, ell, J);
    report.dim_h0_epsilon = weyl_dim(rs, eps);
    if (report.dim_h0_epsilon > cap)
        fail(ErrorCode::TooLarge, "dim H^0(epsilon_J) = " + std::to_string(report.dim_h0_epsilon)
                                      + " exceeds cap " + std::to_string(cap));

    const Character& ch_big = weyl_character(rs, eps);
    const Weight w_dot_zero = dot(rs, w, rs.zero_weight());
    const Character& ch_levi = weyl_character_levi(rs, J, w_dot_zero);
    const Weight zero = rs.zero_weight();

    for (const auto& y : min_coset_reps(rs, J)) {
        const Weight y0 = dot(rs, y, zero);
        for (const auto& [sigma, sm] : ch_levi.terms) {
            const Weight base = y0 + sigma - eps;
            for (const auto& [mu, mm] : ch_big.terms) {
                Weight diff = mu + base;  // = ell * nu when a solution exists
                bool divisible = true;
                for (int i = 0; i < rs.rank(); ++i)
                    if (diff[i] % ell != 0) { divisible = false; break; }
                if (!divisible) continue;
                Weight nu = diff;
                for (auto& c : nu.coords) c = static_cast<int>(c / ell);
                if (!rs.j_dominant(nu, J)) continue;
                WeighteqSolution sol;
                sol.y = y;
                sol.nu = nu;
                sol.mu = mu;
                sol.mu_mult = mm;
                sol.sigma = sigma;
                sol.sigma_mult = sm;
                sol.trivial = y.is_identity() && nu.is_zero() && sigma.is_zero() && mu == eps;
                report.solutions.push_back(std::move(sol));
            }
        }
    }
    report.conformant = std::all_of(report.solutions.begin(), report.solutions.end(),
                                    [](const WeighteqSolution& s) { return s.trivial; });
    return report;
}

KempfReport verify_kempf_dominance(const RootSystem& rs, long long ell, const std::vector<int>& J,
                                   const WeylElement& w, const Weight& gamma) {
    rs.check_subset(J);
    require_min_coset_rep(rs, J, w);
    if (ell < 2) fail(ErrorCode::PreconditionFailed, "ell must be >= 2");
    if (!rs.in_X_PJ(gamma, J)) fail(ErrorCode::PreconditionFailed, "gamma must vanish on J");

    KempfReport report;
    report.ell = ell;
    report.J = J;
    report.w = w;
    report.gamma = gamma;

    const long long h = rs.coxeter_number();
    const bool is_id = w.is_identity();
    report.hypotheses.push_back(
        {is_id ? "ell > h" : "ell > 2h-1", is_id ? (ell > h) : (ell > 2 * h - 1), true});
    report.hypotheses.push_back(
        {"condition (b): epsilon_J - w0J(w.0) + ell*gamma dominant",
         check_condition_b(rs, ell, J, w, gamma), true});

    const Weight eps = epsilon_weight(rs, ell, J);
    WeylElement w0J = longest_element(rs, J);
    const Weight top = -act(rs, w0J, dot(rs, w, rs.zero_weight()));
    const Character& ch = weyl_character_levi(rs, J, top);
    const Weight shift = eps + gamma * static_cast<int>(ell);
    for (const auto& [mu, m] : ch.terms) {
        ++report.weights_checked;
        if (!rs.dominant(shift + mu)) report.violations.push_back(mu);
    }
    report.conformant = report.violations.empty();
    return report;
}

LinkageReport verify_linkage_uniqueness(const RootSystem& rs, long long ell,
                                        const std::vector<int>& J, const WeylElement& w,
                                        int nu_bound) {
    rs.check_subset(J);
    require_min_coset_rep(rs, J, w);
    if (ell < 2) fail(ErrorCode::PreconditionFailed, "ell must be >= 2");
    if (nu_bound < 0) fail(ErrorCode::PreconditionFailed, "nu_bound must be >= 0");

    LinkageReport report;
    report.ell = ell;
    report.J = J;
    report.w = w;
    report.nu_bound = nu_bound;
    report.hypotheses.push_back({"ell > h", ell > rs.coxeter_number(), true});

    std::vector<bool> in_j(rs.rank(), false);
    for (int j : J) in_j[j] = true;
    const Weight w0_target = dot(rs, w, rs.zero_weight());

    // nu sweep: J-coordinates in [0, b], free coordinates in [-b, b].
    std::vector<int> coords(rs.rank(), 0);
    std::vector<Weight> nus;
    std::function<void(int)> walk = [&](int i) {
        if (i == rs.rank()) {
            nus.push_back(Weight(coords));
            return;
        }
        const int lo = in_j[i] ? 0 : -nu_bound;
        for (coords[i] = lo; coords[i] <= nu_bound; ++coords[i]) walk(i + 1);
        coords[i] = 0;
    };
    walk(0);

    report.conformant = true;
    for (const auto& y : min_coset_reps(rs, J)) {
        const Weight y0 = dot(rs, y, rs.zero_weight());
        for (const auto& nu : nus) {
            Weight candidate = y0 + nu * static_cast<int>(ell);
            auto witnesses = affine_linkage_witnesses(rs, w0_target, candidate, ell, J);
            if (witnesses.empty()) continue;
            LinkagePair pair;
            pair.y = y;
            pair.nu = nu;
            pair.expected = (y == w);
            for (const auto& wit : witnesses) {
                if (!wit.x.is_identity() || rs.root_to_weight(wit.sigma) != nu)
                    pair.expected = false;
            }
            pair.witnesses = std::move(witnesses);
            if (!pair.expected) report.conformant = false;
            report.linked_pairs.push_back(std::move(pair));
        }
    }
    return report;
}

std::string envelope_result_name(EnvelopeResult r) {
    switch (r) {
    case EnvelopeResult::Dominant: return "Dominant";
    case EnvelopeResult::NotDominant: return "NotDominant";
    case EnvelopeResult::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

EnvelopeResult tilting_weight_envelope_check(const RootSystem& rs, long long ell,
                                             const std::vector<int>& J, const WeylElement& w,
                                             const Weight& gamma) {
    rs.check_subset(J);
    if (!rs.in_X_PJ(gamma, J)) fail(ErrorCode::PreconditionFailed, "gamma must vanish on J");
    const Weight sigma = sigma_wJ(rs, ell, J, w);
    const Weight shift = gamma * static_cast<int>(ell);

    // Necessary part: the W_J-orbit of sigma consists of genuine weights.
    bool orbit_ok = true;
    for (const auto& mu : weyl_orbit_levi(rs, J, sigma))
        if (!rs.dominant(mu + shift)) orbit_ok = false;
    if (!orbit_ok) return EnvelopeResult::NotDominant;

    // Sufficient part: every lattice point of conv(W_J . sigma) in
    // sigma + Z Phi_J. Enumerate J-dominant points below sigma and close
    // under W_J.
    WeylElement w0J = longest_element(rs, J);
    Weight floor = act(rs, w0J, sigma);
    auto box = rs.weight_in_root_lattice(sigma - floor);
    if (!box) fail(ErrorCode::InvalidArgument, "sigma does not descend integrally");
    bool all_ok = true;
    std::vector<int> beta(rs.rank(), 0);
    std::function<void(int)> walk = [&](int i) {
        if (!all_ok) return;
        if (i == rs.rank()) {
            Weight mu = sigma - rs.root_to_weight(RootVector(beta));
            if (!rs.j_dominant(mu, J)) return;
            for (const auto& point : weyl_orbit_levi(rs, J, mu))
                if (!rs.dominant(point + shift)) { all_ok = false; return; }
            return;
        }
        for (beta[i] = 0; beta[i] <= (*box)[i] && all_ok; ++beta[i]) walk(i + 1);
        beta[i] = 0;
    };
    walk(0);
    return all_ok ? EnvelopeResult::Dominant : EnvelopeResult::Inconclusive;
}

}  // namespace liecoh
