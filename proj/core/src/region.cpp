#include "jointdc/region.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jointdc {

const char* rule_kind_name(RuleKind kind) {
    switch (kind) {
        case RuleKind::Star: return "STAR";
        case RuleKind::Hat: return "HAT";
        case RuleKind::StarUniv: return "STAR_UNIV";
        case RuleKind::Excess: return "EXCESS";
        case RuleKind::UKnownP0: return "U_KNOWN_P0";
        case RuleKind::UCost: return "U_COST";
        case RuleKind::UBlind: return "U_BLIND";
        case RuleKind::UTraining: return "U_TRAINING";
    }
    return "?";
}

std::optional<RuleKind> rule_kind_from_name(const std::string& name) {
    for (RuleKind k : {RuleKind::Star, RuleKind::Hat, RuleKind::StarUniv,
                       RuleKind::Excess, RuleKind::UKnownP0, RuleKind::UCost,
                       RuleKind::UBlind, RuleKind::UTraining})
        if (name == rule_kind_name(k)) return k;
    return std::nullopt;
}

double universal_slack(const RuleSpec& rule, std::size_t alphabet_size, int n) {
    return rule.slack_c * static_cast<double>(alphabet_size) *
           std::log(static_cast<double>(n) + 1.0) / n;
}

std::vector<std::uint64_t> lemma1_region(const ScoredSpace& space, double a,
                                         double b) {
    if (a < 0.0 || b < 0.0)
        throw std::invalid_argument("lemma1_region: a and b must be >= 0");
    std::vector<std::uint64_t> out;
    for (const auto& e : space.elements)
        if (e.f + a * e.g <= b * e.h) out.push_back(e.id);
    return out;
}

namespace {

// ln(e^x + e^y) without overflow; respects -inf operands.
double log_sum_exp(double x, double y) {
    if (x == -kInf) return y;
    if (y == -kInf) return x;
    double m = std::max(x, y);
    return m + std::log1p(std::exp(std::min(x, y) - m));
}

void require_theta(double theta) {
    if (!(theta > 0.0))
        throw std::invalid_argument("membership: theta must be positive");
}

}  // namespace

bool membership_known(const TypeComposition& t, const Pmf& p0, const Pmf& p1,
                      const RuleSpec& rule) {
    if (!p1.full_support())
        throw std::invalid_argument("membership_known: p1 must have full support");
    const double n = t.n;
    const double l0 = seq_log_prob(p0, t);
    const double l1 = seq_log_prob(p1, t);
    switch (rule.kind) {
        case RuleKind::Star: {
            require_theta(rule.theta);
            double lhs = log_sum_exp(l1 / (1.0 + rule.theta), n * rule.alpha + l0);
            return lhs <= n * rule.beta + l1;
        }
        case RuleKind::Hat: {
            require_theta(rule.theta);
            return -l1 <= n * rule.beta * (1.0 + 1.0 / rule.theta) &&
                   l1 - l0 >= n * (rule.alpha - rule.beta);
        }
        case RuleKind::StarUniv: {
            require_theta(rule.theta0);
            require_theta(rule.theta1);
            const double h = type_stats(t).empirical_entropy;
            double lhs = log_sum_exp(l1 + n * rule.theta1 * h,
                                     n * rule.alpha + l0 + n * rule.theta0 * h);
            return lhs <= n * rule.beta + l1;
        }
        case RuleKind::Excess: {
            // f = P1 * I{H >= R}, g = P0 * I{H >= R}, h = P1. With the
            // indicator off, 0 <= b*h holds and the type is accepted.
            const double h = type_stats(t).empirical_entropy;
            if (h < rule.rate_R) return true;
            double lhs = log_sum_exp(l1, n * rule.alpha + l0);
            return lhs <= n * rule.beta + l1;
        }
        default:
            throw std::invalid_argument("membership_known: wrong rule kind");
    }
}

bool membership_universal(const TypeComposition& t, const RuleSpec& rule,
                          const Pmf* p0, const TypeComposition* t0,
                          const TypeComposition* t1) {
    const double n = t.n;
    const double slack = universal_slack(rule, t.alphabet_size(), t.n);
    const double h = type_stats(t).empirical_entropy;
    switch (rule.kind) {
        case RuleKind::UKnownP0: {
            if (!p0) throw std::invalid_argument("membership_universal: p0 required");
            double d = kl_divergence(t.empirical_pmf(), *p0);
            return h <= rule.lambda1 / rule.theta1 + slack &&
                   d >= rule.exp_fa - slack;
        }
        case RuleKind::UCost: {
            if (!p0) throw std::invalid_argument("membership_universal: p0 required");
            double d = kl_divergence(t.empirical_pmf(), *p0);
            return h <= rule.lambda1 / rule.theta1 + slack &&
                   rule.theta0 * h - d <= rule.lambda0 + slack;
        }
        case RuleKind::UBlind:
            return h <= std::min(rule.lambda0 / rule.theta0,
                                 rule.lambda1 / rule.theta1) + slack;
        case RuleKind::UTraining: {
            if (!t0 || !t1)
                throw std::invalid_argument(
                    "membership_universal: training types required");
            const TypeComposition* train[2] = {t0, t1};
            const double theta[2] = {rule.theta0, rule.theta1};
            const double lambda[2] = {rule.lambda0, rule.lambda1};
            for (int i = 0; i < 2; ++i) {
                const TypeComposition& ti = *train[i];
                if (ti.n != rule.m || ti.alphabet_size() != t.alphabet_size())
                    throw std::invalid_argument(
                        "membership_universal: training type length/alphabet mismatch");
                // Empirical PMF of the concatenation of x and the training
                // sequence: (n*Pt + m*Pti) / (n+m).
                TypeComposition cat;
                cat.n = t.n + ti.n;
                cat.counts.resize(t.counts.size());
                for (std::size_t k = 0; k < t.counts.size(); ++k)
                    cat.counts[k] = t.counts[k] + ti.counts[k];
                Pmf pcat = cat.empirical_pmf();
                double stat = theta[i] * h -
                              kl_divergence(t.empirical_pmf(), pcat) -
                              (static_cast<double>(ti.n) / n) *
                                  kl_divergence(ti.empirical_pmf(), pcat);
                if (!(stat <= lambda[i] + slack)) return false;
            }
            return true;
        }
        default:
            throw std::invalid_argument("membership_universal: wrong rule kind");
    }
}

bool rule_accepts(const TypeComposition& t, const RuleSpec& rule,
                  const RuleContext& ctx) {
    switch (rule.kind) {
        case RuleKind::Star:
        case RuleKind::Hat:
        case RuleKind::StarUniv:
        case RuleKind::Excess:
            if (!ctx.p0 || !ctx.p1)
                throw std::invalid_argument("rule_accepts: p0 and p1 required");
            return membership_known(t, *ctx.p0, *ctx.p1, rule);
        default:
            return membership_universal(
                t, rule, ctx.p0 ? &*ctx.p0 : nullptr,
                ctx.train0 ? &*ctx.train0 : nullptr,
                ctx.train1 ? &*ctx.train1 : nullptr);
    }
}

Region materialize_region(const RuleSpec& rule, const RuleContext& ctx, int n,
                          std::size_t alphabet_size, double cap) {
    double total = count_types(n, alphabet_size);
    if (total > cap)
        throw std::invalid_argument(
            "materialize_region: type count " + std::to_string(total) +
            " exceeds cap " + std::to_string(cap));
    Region r;
    r.n = n;
    r.alphabet_size = alphabet_size;
    r.rule = rule;
    for_each_type(n, alphabet_size, [&](const TypeComposition& t) {
        if (rule_accepts(t, rule, ctx)) r.accepted.push_back(t);
    });
    return r;
}

}  // namespace jointdc
