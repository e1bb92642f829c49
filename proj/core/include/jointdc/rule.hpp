#pragma once

#include <optional>
#include <string>

#include "jointdc/pmf.hpp"
#include "jointdc/type_composition.hpp"

namespace jointdc {

enum class RuleKind {
    Star,       // tilted-likelihood sum test
    Hat,        // two-test split (code-length test + likelihood ratio test)
    StarUniv,   // universal-code-based sum test with theta0/theta1
    Excess,     // excess-code-length indicator variant
    UKnownP0,   // universal, P0 known
    UCost,      // universal, FA constraint replaced by compression cost
    UBlind,     // universal, both sources unknown
    UTraining,  // universal with training sequences
};

const char* rule_kind_name(RuleKind kind);
std::optional<RuleKind> rule_kind_from_name(const std::string& name);

// Parameters of a decision rule. Only the fields relevant to `kind` are
// consulted.
struct RuleSpec {
    RuleKind kind = RuleKind::Hat;
    double theta = 1.0;
    double theta0 = 1.0;
    double theta1 = 1.0;
    double alpha = 0.0;   // nats/symbol
    double beta = 0.0;    // nats/symbol
    double lambda0 = 0.0; // nats/symbol
    double lambda1 = 0.0; // nats/symbol
    double rate_R = 0.0;  // nats/symbol, excess-code-length threshold
    double exp_fa = 0.0;  // target FA exponent E_FA, nats/symbol
    double slack_c = 1.0; // universal-rule slack constant
    int m = 0;            // training sequence length
};

// Per-symbol slack of the universal rules: slack_c * |X| * ln(n+1) / n.
double universal_slack(const RuleSpec& rule, std::size_t alphabet_size, int n);

// Optional side inputs a rule may need alongside the observed type.
struct RuleContext {
    std::optional<Pmf> p0;
    std::optional<Pmf> p1;
    std::optional<TypeComposition> train0;
    std::optional<TypeComposition> train1;
};

}  // namespace jointdc
