#pragma once

#include <cstdint>
#include <vector>

#include "jointdc/exponents.hpp"
#include "jointdc/pmf.hpp"
#include "jointdc/region.hpp"

namespace jointdc {

// ln sum_{t in accepted} exp(ln|T(t)| + ln p(t-class member)), by stable
// log-sum-exp; -inf for an empty region.
double exact_region_prob(const Region& region, const Pmf& p);

enum class SampleSource { P0, P1 };

struct MonteCarloResult {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

// Empirical acceptance probability under the named source, with a
// deterministic seeded generator: identical (seed, parameters) give
// identical output.
MonteCarloResult monte_carlo_region_prob(const RuleSpec& rule,
                                         const RuleContext& ctx,
                                         SampleSource source, int n,
                                         std::uint64_t trials,
                                         std::uint64_t seed);

struct ExponentFit {
    double slope = 0.0;              // the empirical exponent
    double intercept_log_term = 0.0; // coefficient of the ln n correction
};

// Least squares of -log_prob ~ slope*n + c*ln(n) over >= 3 distinct n.
ExponentFit exponent_fit(const std::vector<std::pair<int, double>>& points);

struct QThreshold {
    double q = 0.0;     // raw value of the max expression / ln 3
    int branch = 1;     // 1: code-length branch, 2: likelihood-ratio branch
    bool in_regime = false;  // q in (1/2, 3/4)
};

// Acceptance threshold on the relative frequency of 1's for the binary
// example P0 = (1/2, 1/2), P1 = (1/4, 3/4):
// q = max{ln 4 - beta(1 + 1/theta), ln 2 + alpha - beta} / ln 3.
QThreshold binary_q_threshold(double theta, double alpha, double beta);

enum class SweepVariable { Theta, Alpha, Beta };

struct SweepRow {
    double value = 0.0;  // the swept parameter
    double theta = 0.0, alpha = 0.0, beta = 0.0;
    double q_threshold = 0.0;  // clamped to [0, 1]
    int branch = 1;
    bool in_regime = false;
    double e_fa_closed = 0.0, e_md_closed = 0.0;  // binary-divergence closed forms
    double e_fa_solver = 0.0, e_md_solver = 0.0;  // generic KL programs
    double e_c_solver = 0.0;
};

struct KinkReport {
    double location = 0.0;        // midpoint of the flip cell
    double derivative_gap = 0.0;  // |left - right| one-sided d(e_fa)/d(param)
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::Beta;
    double from = 0.0, to = 1.0;
    int steps = 5;  // number of grid points, >= 5
    double theta = 1.0, alpha = 0.0, beta = 0.0;  // fixed values
    double kink_threshold = 0.01;  // nats per unit parameter
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<KinkReport> kinks;
};

// Parameter sweep of the binary example, recording closed-form and
// solver-computed exponents side by side, plus phase-transition flags where
// the max branch flips with a one-sided derivative gap above the threshold.
SweepResult sweep_binary_example(const SweepSpec& spec);

}  // namespace jointdc
