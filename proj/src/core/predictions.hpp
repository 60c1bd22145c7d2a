// Cohomology predictions for the small quantum group (and first Frobenius
// kernel) with coefficients in the realization modules, plus exhaustive
// verification of the weight-combinatorial facts those realizations rest
// on: the weight equation sweep, Kempf dominance of the induced weights,
// affine linkage uniqueness, and the tilting weight envelope.
//
// Verification never silently enforces a bound: every hypothesis is
// evaluated and reported, and the computation runs either way, so sweeps
// can probe configurations where a bound fails.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace liecoh {

enum class Mode { Quantum, Frobenius };

// The six realization families exposed by the predictor, in two regimes:
// a generic parity offset t, the non-shifted case (t = 0), and the shifted
// case (t = l(w)).
enum class Realization {
    QGeneric,      // id "3.3"
    QNonShifted,   // id "4.2"
    QShifted,      // id "5.1"
    FGeneric,      // id "7.1"
    FNonShifted,   // id "7.3"
    FShifted,      // id "7.4"
};

Realization realization_from_id(const std::string& id);
std::string realization_id(Realization r);
Mode realization_regime(Realization r);

struct Hypothesis {
    std::string name;
    bool satisfied = false;
    bool checked = false;  // false: recorded as an assumption, not decidable here
};

struct DegreeData {
    std::map<Weight, long long> decomposition;  // sigma -> multiplicity of H^0(sigma)
    long long dimension = 0;
};

struct CohomologyPrediction {
    std::string realization;
    Mode mode = Mode::Quantum;
    long long ell = 0;         // ell (quantum) or p (frobenius)
    int parity_offset = 0;     // t
    long long twist = 1;       // 1 in quantum mode, p in frobenius mode
    std::map<int, DegreeData> per_degree;  // every n in 0..D, zero rows explicit
    std::vector<Hypothesis> hypotheses;
    bool assumption_violated = false;      // some multiplicity went negative
};

// (ell-1) sum_{j in J} omega_j.
Weight epsilon_weight(const RootSystem& rs, long long ell, const std::vector<int>& J);

// epsilon_J - w_{0,J} epsilon_J + w_{0,J}(w . 0) for w in ^J W; always
// J-dominant (checked).
Weight sigma_wJ(const RootSystem& rs, long long ell, const std::vector<int>& J, const WeylElement& w);

// epsilon_J - w_{0,J}(w . 0) + ell * gamma dominant?
bool check_condition_b(const RootSystem& rs, long long ell, const std::vector<int>& J,
                       const WeylElement& w, const Weight& gamma);

// Per-degree decomposition of ind_{P_J}^G (S^{(n-t)/2}(u_J^*) tensor gamma)
// into H^0(sigma) multiplicities, for n = 0..up_to; degrees with n != t
// mod 2 are explicit zero rows.  `w` feeds the hypothesis report (and the
// parity offset in the shifted realizations); `t` is only read by the
// generic realizations.
CohomologyPrediction predicted_cohomology(const RootSystem& rs, Realization realization,
                                          long long ell, const std::vector<int>& J,
                                          const Weight& gamma, const WeylElement& w, int t,
                                          int up_to);

// Frobenius-regime convenience wrapper (p >= 3); identical character
// computation with the twist marker set to p.
CohomologyPrediction frobenius_predictions(const RootSystem& rs, Realization realization,
                                           long long p, const std::vector<int>& J,
                                           const Weight& gamma, const WeylElement& w, int t,
                                           int up_to);

struct WeighteqSolution {
    WeylElement y;       // in ^J W
    Weight nu;           // J-dominant, determined by exact division
    Weight mu;           // weight of H^0(epsilon_J)
    long long mu_mult = 0;
    Weight sigma;        // weight of H^0_J(w . 0)
    long long sigma_mult = 0;
    bool trivial = false;  // (y, nu, sigma, mu) = (e, 0, 0, epsilon_J)
};

struct WeighteqReport {
    long long ell = 0;
    std::vector<int> J;
    WeylElement w;
    std::vector<Hypothesis> hypotheses;
    long long dim_h0_epsilon = 0;
    std::vector<WeighteqSolution> solutions;
    bool conformant = false;  // no nontrivial solutions
};

// Enumerates every solution of  epsilon_J + ell*nu = mu + y.0 + sigma
// over y in ^J W, mu a weight of H^0(epsilon_J), sigma a weight of
// H^0_J(w . 0), with nu in X_J^+ recovered by exact division by ell.
// Throws TooLarge when dim H^0(epsilon_J) exceeds the cap.
WeighteqReport verify_weighteq(const RootSystem& rs, long long ell, const std::vector<int>& J,
                               const WeylElement& w, long long cap = 100000);

struct KempfReport {
    long long ell = 0;
    std::vector<int> J;
    WeylElement w;
    Weight gamma;
    std::vector<Hypothesis> hypotheses;
    long long weights_checked = 0;
    std::vector<Weight> violations;  // mu with epsilon_J + mu + ell*gamma not dominant
    bool conformant = false;
};

// Checks epsilon_J + mu + ell*gamma in X^+ for every weight mu of
// H^0_J(-w_{0,J}(w . 0)).
KempfReport verify_kempf_dominance(const RootSystem& rs, long long ell, const std::vector<int>& J,
                                   const WeylElement& w, const Weight& gamma);

struct LinkagePair {
    WeylElement y;
    Weight nu;
    std::vector<LinkageWitness> witnesses;
    bool expected = false;  // y = w and every witness is (e, sigma = nu)
};

struct LinkageReport {
    long long ell = 0;
    std::vector<int> J;
    WeylElement w;
    int nu_bound = 0;
    std::vector<Hypothesis> hypotheses;
    std::vector<LinkagePair> linked_pairs;  // only pairs with a witness
    bool conformant = false;
};

// Sweeps y in ^J W and nu in X_J^+ with |coords| <= nu_bound (J-coords
// nonnegative), testing whether y.0 + ell*nu is Phi_J-linked to w.0.
LinkageReport verify_linkage_uniqueness(const RootSystem& rs, long long ell,
                                        const std::vector<int>& J, const WeylElement& w,
                                        int nu_bound);

enum class EnvelopeResult { Dominant, NotDominant, Inconclusive };

std::string envelope_result_name(EnvelopeResult r);

// Dominance test for the superset of the weights of T_J(sigma_{w,J})
// shifted by ell*gamma: conv(W_J . sigma) meet (sigma + Z Phi_J).
// Dominant is sufficient for the tilting hypothesis, NotDominant refutes
// it on the W_J-orbit of sigma itself, otherwise Inconclusive.
EnvelopeResult tilting_weight_envelope_check(const RootSystem& rs, long long ell,
                                             const std::vector<int>& J, const WeylElement& w,
                                             const Weight& gamma);

}  // namespace liecoh
