#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointdc/pmf.hpp"
#include "jointdc/rule.hpp"

namespace jointdc::cli {

// Flat key=value configuration file. '#' starts a comment; keys use section
// prefixes like "rule.theta". Probabilities are renormalized when they sum
// within 1e-6 of 1 and rejected otherwise.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    std::uint64_t get_u64(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<int> get_int_list(const std::string& key) const;

    double get_double_or(const std::string& key, double fallback) const;

    // Parsed and validated PMF from a comma-separated list.
    Pmf get_pmf(const std::string& key) const;
    std::optional<Pmf> maybe_pmf(const std::string& key) const;

    // RuleSpec from the rule.* keys. Throws when rule.kind is missing or
    // unknown.
    RuleSpec rule_spec() const;

    // Training types from rule.train0 / rule.train1 count lists, if present.
    RuleContext rule_context() const;

private:
    std::map<std::string, std::string> values_;
};

// Thrown for malformed configuration; the CLI maps it to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jointdc::cli
