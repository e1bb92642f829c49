#include "jointdc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "jointdc/random.hpp"

namespace jointdc {

double exact_region_prob(const Region& region, const Pmf& p) {
    double acc = -kInf;
    for (const auto& t : region.accepted) {
        double term = log_multinomial(t) + seq_log_prob(p, t);
        if (term == -kInf) continue;
        if (acc == -kInf) {
            acc = term;
        } else {
            double m = std::max(acc, term);
            acc = m + std::log(std::exp(acc - m) + std::exp(term - m));
        }
    }
    return std::min(acc, 0.0);
}

MonteCarloResult monte_carlo_region_prob(const RuleSpec& rule,
                                         const RuleContext& ctx,
                                         SampleSource source, int n,
                                         std::uint64_t trials,
                                         std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("monte_carlo_region_prob: trials >= 1");
    const Pmf* p = source == SampleSource::P0 ? (ctx.p0 ? &*ctx.p0 : nullptr)
                                              : (ctx.p1 ? &*ctx.p1 : nullptr);
    if (!p)
        throw std::invalid_argument(
            "monte_carlo_region_prob: sampling source PMF missing");
    SplitMix64 rng(seed);
    MonteCarloResult r;
    r.trials = trials;
    TypeComposition t;
    t.n = n;
    for (std::uint64_t i = 0; i < trials; ++i) {
        t.counts.assign(p->alphabet_size(), 0);
        for (int j = 0; j < n; ++j) ++t.counts[sample_symbol(*p, rng)];
        if (rule_accepts(t, rule, ctx)) ++r.hits;
    }
    r.estimate = static_cast<double>(r.hits) / trials;
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / trials);
    return r;
}

ExponentFit exponent_fit(const std::vector<std::pair<int, double>>& points) {
    std::set<int> distinct;
    for (const auto& [n, _] : points) distinct.insert(n);
    if (distinct.size() < 3)
        throw std::invalid_argument("exponent_fit: need >= 3 distinct n");
    // Normal equations for y = slope*n + c*ln(n), y = -log_prob.
    double snn = 0.0, snl = 0.0, sll = 0.0, sny = 0.0, sly = 0.0;
    for (const auto& [n, log_prob] : points) {
        double a = n, b = std::log(static_cast<double>(n)), y = -log_prob;
        snn += a * a;
        snl += a * b;
        sll += b * b;
        sny += a * y;
        sly += b * y;
    }
    double det = snn * sll - snl * snl;
    if (!(std::abs(det) > 1e-12 * snn * sll))
        throw std::invalid_argument("exponent_fit: degenerate design");
    return ExponentFit{(sll * sny - snl * sly) / det,
                       (snn * sly - snl * sny) / det};
}

QThreshold binary_q_threshold(double theta, double alpha, double beta) {
    if (!(theta > 0.0))
        throw std::invalid_argument("binary_q_threshold: theta must be positive");
    const double ln2 = std::log(2.0), ln3 = std::log(3.0), ln4 = std::log(4.0);
    double b1 = ln4 - beta * (1.0 + 1.0 / theta);
    double b2 = ln2 + alpha - beta;
    QThreshold r;
    r.branch = b1 >= b2 ? 1 : 2;
    r.q = std::max(b1, b2) / ln3;
    r.in_regime = r.q > 0.5 && r.q < 0.75;
    return r;
}

SweepResult sweep_binary_example(const SweepSpec& spec) {
    if (spec.steps < 5)
        throw std::invalid_argument("sweep_binary_example: need >= 5 grid points");
    if (!(spec.to > spec.from))
        throw std::invalid_argument("sweep_binary_example: grid must be increasing");
    const Pmf p0({0.5, 0.5});
    const Pmf p1({0.25, 0.75});

    SweepResult out;
    out.rows.reserve(spec.steps);
    const double step = (spec.to - spec.from) / (spec.steps - 1);
    for (int i = 0; i < spec.steps; ++i) {
        SweepRow row;
        row.value = spec.from + i * step;
        row.theta = spec.theta;
        row.alpha = spec.alpha;
        row.beta = spec.beta;
        switch (spec.variable) {
            case SweepVariable::Theta: row.theta = row.value; break;
            case SweepVariable::Alpha: row.alpha = row.value; break;
            case SweepVariable::Beta: row.beta = row.value; break;
        }
        QThreshold qt = binary_q_threshold(row.theta, row.alpha, row.beta);
        row.branch = qt.branch;
        row.in_regime = qt.in_regime;
        row.q_threshold = std::clamp(qt.q, 0.0, 1.0);
        row.e_fa_closed = binary_divergence(row.q_threshold, 0.5);
        row.e_md_closed = binary_divergence(row.q_threshold, 0.75);
        row.e_fa_solver =
            exponent_e_fa(p0, p1, row.theta, row.alpha, row.beta).value;
        row.e_md_solver =
            exponent_e_md(p0, p1, row.theta, row.alpha, row.beta).value;
        row.e_c_solver =
            exponent_e_c(p0, p1, row.theta, row.alpha, row.beta).value;
        out.rows.push_back(row);
    }

    // Phase transitions: cells where the max branch flips and the one-sided
    // derivatives of the closed-form e_FA differ by more than the threshold.
    const auto& rows = out.rows;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].branch == rows[i - 1].branch) continue;
        double left = i >= 2 ? (rows[i - 1].e_fa_closed - rows[i - 2].e_fa_closed) / step
                             : (rows[i].e_fa_closed - rows[i - 1].e_fa_closed) / step;
        double right = i + 1 < rows.size()
                           ? (rows[i + 1].e_fa_closed - rows[i].e_fa_closed) / step
                           : (rows[i].e_fa_closed - rows[i - 1].e_fa_closed) / step;
        double gap = std::abs(left - right);
        if (gap > spec.kink_threshold)
            out.kinks.push_back(
                KinkReport{0.5 * (rows[i - 1].value + rows[i].value), gap});
    }
    return out;
}

}  // namespace jointdc
