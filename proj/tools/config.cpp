#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jointdc/type_composition.hpp"

namespace jointdc::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": empty key");
        cfg.values_[key] = val;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string s = get_string(key);
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not a number: " + s);
    }
}

double Config::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
    double v = get_double(key);
    int i = static_cast<int>(v);
    if (i != v) throw ConfigError("config key " + key + ": not an integer");
    return i;
}

std::uint64_t Config::get_u64(const std::string& key) const {
    const std::string s = get_string(key);
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an unsigned integer");
    }
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::vector<double> out;
    std::istringstream in(get_string(key));
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": bad list item: " + item);
        }
    }
    if (out.empty()) throw ConfigError("config key " + key + ": empty list");
    return out;
}

std::vector<int> Config::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (double v : get_double_list(key)) {
        int i = static_cast<int>(v);
        if (i != v) throw ConfigError("config key " + key + ": not integers");
        out.push_back(i);
    }
    return out;
}

Pmf Config::get_pmf(const std::string& key) const {
    std::vector<double> p = get_double_list(key);
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0) throw ConfigError("config key " + key + ": negative probability");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw ConfigError("config key " + key + ": probabilities sum to " +
                          std::to_string(sum) + ", not 1 within 1e-6");
    for (double& v : p) v /= sum;
    return Pmf(std::move(p));
}

std::optional<Pmf> Config::maybe_pmf(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return get_pmf(key);
}

RuleSpec Config::rule_spec() const {
    RuleSpec r;
    auto kind = rule_kind_from_name(get_string("rule.kind"));
    if (!kind)
        throw ConfigError("rule.kind: unknown rule: " + get_string("rule.kind"));
    r.kind = *kind;
    r.theta = get_double_or("rule.theta", r.theta);
    r.theta0 = get_double_or("rule.theta0", r.theta0);
    r.theta1 = get_double_or("rule.theta1", r.theta1);
    r.alpha = get_double_or("rule.alpha", r.alpha);
    r.beta = get_double_or("rule.beta", r.beta);
    r.lambda0 = get_double_or("rule.lambda0", r.lambda0);
    r.lambda1 = get_double_or("rule.lambda1", r.lambda1);
    r.rate_R = get_double_or("rule.rate_R", r.rate_R);
    r.exp_fa = get_double_or("rule.exp_fa", r.exp_fa);
    r.slack_c = get_double_or("rule.slack_c", r.slack_c);
    if (has("rule.m")) r.m = get_int("rule.m");
    return r;
}

RuleContext Config::rule_context() const {
    RuleContext ctx;
    ctx.p0 = maybe_pmf("p0");
    ctx.p1 = maybe_pmf("p1");
    for (const char* key : {"rule.train0", "rule.train1"}) {
        if (!has(key)) continue;
        TypeComposition t;
        t.counts = get_int_list(key);
        t.n = 0;
        for (int c : t.counts) t.n += c;
        if (std::string(key) == "rule.train0")
            ctx.train0 = t;
        else
            ctx.train1 = t;
    }
    return ctx;
}

}  // namespace jointdc::cli
