// Formal characters and the multiplicity machinery built on them:
// q-graded Kostant partition functions, Weyl characters for the ambient
// group and its Levi subgroups, symmetric powers of u_J^*, Euler
// characteristics of induced modules, decomposition into Weyl characters,
// and the alternating-sum graded multiplicity formula.
//
// Everything is exact integer arithmetic; results are independent of
// thread schedule (internal memo tables are mutex guarded and only avoid
// recomputation).

#pragma once

#include <map>
#include <vector>

#include "qpoly.hpp"
#include "rootsystem.hpp"
#include "weyl.hpp"

namespace liecoh {

// Finite weight -> integer map; signed (virtual) characters allowed.
// No zero-valued entries are stored.
struct Character {
    std::map<Weight, long long> terms;

    void add(const Weight& mu, long long m);
    long long mult(const Weight& mu) const;
    long long mass() const;  // sum of multiplicities ("dimension" when effective)
    bool is_zero() const { return terms.empty(); }

    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    Character scaled(long long m) const;
    bool operator==(const Character&) const = default;
};

// Finite weight -> q-polynomial map; no zero polynomials stored.
struct GradedCharacter {
    std::map<Weight, QPolynomial> terms;

    void add(const Weight& mu, const QPolynomial& p);
    QPolynomial poly(const Weight& mu) const;
    // The plain character of one q-degree.
    Character slice(int degree) const;
};

// Coefficient of q^k = number of size-k multisets from S summing to mu.
// Zero polynomial if mu is not a nonnegative combination reachable from S.
QPolynomial q_partition(const RootSystem& rs, const RootVector& mu, const std::vector<RootVector>& S);
// The q = 1 specialization.
long long partition_count(const RootSystem& rs, const RootVector& mu, const std::vector<RootVector>& S);

// Full W-orbit (resp. W_J-orbit) of a weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu);
std::vector<Weight> weyl_orbit_levi(const RootSystem& rs, const std::vector<int>& J, const Weight& mu);

// Dominant mu with lambda - mu in N Phi+ (candidates for character support).
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

// Character of the induced module H^0(lambda), lambda dominant, via the
// alternating Kostant multiplicity formula. Cached per (system, lambda).
const Character& weyl_character(const RootSystem& rs, const Weight& lambda);
// Levi variant: lambda J-dominant, W_J / Phi_J^+ / rho_J in place of the
// ambient data. Cached per (system, J, lambda).
const Character& weyl_character_levi(const RootSystem& rs, const std::vector<int>& J,
                                     const Weight& lambda);

// prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>, exact.
long long weyl_dim(const RootSystem& rs, const Weight& lambda);
long long weyl_dim_levi(const RootSystem& rs, const std::vector<int>& J, const Weight& lambda);

// Character of S^n(u_J^*); weights of u_J^* are Phi+ minus Phi_J^+.
Character sym_character(const RootSystem& rs, const std::vector<int>& J, int degree);
// All of S^0..S^D at once, graded by symmetric degree.
GradedCharacter sym_graded(const RootSystem& rs, const std::vector<int>& J, int up_to);

// Euler characteristic of the line bundle of weight mu: 0 if mu + rho is
// singular, else (-1)^{l(w)} ch H^0(w . mu) for the regularizing w.
Character bott_euler(const RootSystem& rs, const Weight& mu);

// sum_mu c(mu) * bott_euler(mu + gamma); linear in c.
Character euler_induction(const RootSystem& rs, const Character& c, const Weight& gamma);

// Writes a W-invariant (virtual) character as sum m_sigma ch H^0(sigma).
// Throws NotWInvariant when orbit sums disagree.
std::map<Weight, long long> decompose(const RootSystem& rs, const Character& c);

struct GradedMultiplicityResult {
    QPolynomial poly;
    // Negative coefficients signal failure of the cohomological vanishing
    // hypotheses for this configuration; they are flagged, never hidden.
    bool assumption_violated = false;
};

// [ind_{P_J}^G (S^bullet(u_J^*) tensor gamma) : H^0(sigma)]_q
//   = sum_w (-1)^{l(w)} P_q(w(sigma + rho) - rho - gamma) over Phi+ minus Phi_J^+.
// Requires gamma in X_{P_J} and dominant, sigma dominant.
GradedMultiplicityResult graded_multiplicity(const RootSystem& rs, const std::vector<int>& J,
                                             const Weight& gamma, const Weight& sigma);

// Entry n = sum_sigma coeff_n(graded_multiplicity) * weyl_dim(sigma):
// the dimension of the degree-n graded piece of k[G x_{P_J} u_J] twisted
// by gamma.
std::vector<long long> poincare_series(const RootSystem& rs, const std::vector<int>& J,
                                       const Weight& gamma, int up_to);

// Candidate highest weights contributing in symmetric degree n: the
// dot-regularizations of gamma + mu over mu in the support of S^n(u_J^*).
std::vector<Weight> induction_candidates(const RootSystem& rs, const std::vector<int>& J,
                                         const Weight& gamma, int degree);

// Scale every weight by m (character-level Frobenius twist); m >= 1.
Character twist_character(const Character& c, int m);

// Pointwise convolution (character of a tensor product).
Character tensor(const Character& a, const Character& b);

}  // namespace liecoh
