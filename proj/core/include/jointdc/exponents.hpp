#pragma once

#include <vector>

#include "jointdc/pmf.hpp"

namespace jointdc {

// E_Q coeffs(X) <= bound, coefficients in nats. A -inf coefficient is only
// permitted on symbols excluded from every feasible support.
struct LinearConstraint {
    std::vector<double> coeffs;
    double bound = 0.0;
};

// Result of a constrained KL program: optimal value, optimizer, Lagrange
// multipliers and which constraints bind.
struct ExponentResult {
    double value = 0.0;       // nats/symbol
    Pmf q_opt;                // optimizing distribution
    std::vector<double> multipliers;
    std::vector<bool> active;
    bool feasible = true;

    explicit ExponentResult(Pmf q) : q_opt(std::move(q)) {}
};

// min_Q D(Q||p) subject to E_Q c(X) <= bound. Solved on the constraint
// boundary through the family Q_s(x) ~ p(x) exp(-s c(x)), s >= 0 found by
// bisection (moment residual <= 1e-10). Infeasible when bound < min_x c(x)
// over the support of p.
ExponentResult min_kl_linear(const Pmf& p, const LinearConstraint& c);

// min_Q D(Q||p) subject to two linear <=-constraints, by active-set
// enumeration: the unconstrained optimum, each single-constraint optimum, and
// the both-active case solved by damped Newton in the two multipliers.
ExponentResult min_kl_two_linear(const Pmf& p, const LinearConstraint& c1,
                                 const LinearConstraint& c2);

// Misdetection exponent: min of the code-length branch e1(beta) and the
// likelihood-ratio branch e2(alpha-beta). active[0]/active[1] report which
// branch attains the minimum.
ExponentResult exponent_e_md(const Pmf& p0, const Pmf& p1, double theta,
                             double alpha, double beta);

// False-alarm exponent: min_Q D(Q||p0) subject to
// -E_Q ln p1 <= beta(1+1/theta) and E_Q ln(p0/p1) <= beta - alpha.
ExponentResult exponent_e_fa(const Pmf& p0, const Pmf& p1, double theta,
                             double alpha, double beta);

// Compression exponent: max_Q theta H(Q) - D(Q||p1) subject to
// E_Q ln p1 >= -beta(1+1/theta) and E_Q ln(p1/p0) >= alpha - beta.
ExponentResult exponent_e_c(const Pmf& p0, const Pmf& p1, double theta,
                            double alpha, double beta);

enum class ExponentBranch { E1, E2, EFA };

// Inverse of an exponent on its strictly monotone branch, by bisection to
// 1e-9 in the argument. For E1 and EFA the returned argument is beta; for E2
// it is alpha - beta. EFA needs the planned alpha - beta, passed as
// `fixed_gap` (its second constraint bound is beta - alpha = -fixed_gap).
// Throws std::domain_error when the target is outside the attainable range;
// the message reports the range.
double invert_exponent(ExponentBranch which, double target, const Pmf& p0,
                       const Pmf& p1, double theta, double fixed_gap = 0.0);

struct PlannedParameters {
    double alpha = 0.0;
    double beta = 0.0;
    double e_fa_inv = 0.0;  // e_FA^{-1}(E_FA)
    double e1_inv = 0.0;    // e_1^{-1}(E_MD)
    double e2_inv = 0.0;    // e_2^{-1}(E_MD)
    bool feasible = false;
    double margin = 0.0;    // e_fa_inv - e1_inv; feasible iff >= 0
};

// Assigns alpha = e_FA^{-1}(E_FA) + e_2^{-1}(E_MD), beta = e_FA^{-1}(E_FA),
// feasible iff e_FA^{-1}(E_FA) >= e_1^{-1}(E_MD).
PlannedParameters plan_parameters(double exp_fa, double exp_md, double theta,
                                  const Pmf& p0, const Pmf& p1);

enum class OracleObjective { KlMin, EcMax };

// Brute-force verification oracle: enumerates rational grid points
// k/resolution on the binary or ternary simplex, filters by the constraints,
// and returns the extremal objective. For EcMax the objective is
// theta H(q) - D(q||p). Accuracy O(1/resolution).
double simplex_grid_oracle(const Pmf& p,
                           const std::vector<LinearConstraint>& constraints,
                           OracleObjective objective, int resolution,
                           double theta = 0.0);

}  // namespace jointdc
