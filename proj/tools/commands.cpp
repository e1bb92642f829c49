#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "jointdc/analysis.hpp"
#include "jointdc/codec.hpp"
#include "jointdc/exponents.hpp"
#include "jointdc/region.hpp"

namespace jointdc::cli {

namespace {

// Decimal with 12 significant digits; infinities spelled out.
std::string num(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

int cmd_plan(const Config& cfg, std::ostream& out) {
    Pmf p0 = cfg.get_pmf("p0");
    Pmf p1 = cfg.get_pmf("p1");
    double theta = cfg.get_double("rule.theta");
    double e_fa = cfg.get_double("plan.e_fa");
    double e_md = cfg.get_double("plan.e_md");
    PlannedParameters plan = plan_parameters(e_fa, e_md, theta, p0, p1);
    out << "alpha,beta,e_fa_inv,e2_inv,feasible\n";
    out << num(plan.alpha) << ',' << num(plan.beta) << ',' << num(plan.e_fa_inv)
        << ',' << num(plan.e2_inv) << ',' << (plan.feasible ? 1 : 0) << '\n';
    return plan.feasible ? kExitOk : kExitInfeasible;
}

int cmd_exponents(const Config& cfg, std::ostream& out) {
    Pmf p0 = cfg.get_pmf("p0");
    Pmf p1 = cfg.get_pmf("p1");
    double theta = cfg.get_double("rule.theta");
    double alpha = cfg.get_double("rule.alpha");
    double beta = cfg.get_double("rule.beta");

    ExponentResult md = exponent_e_md(p0, p1, theta, alpha, beta);
    ExponentResult fa = exponent_e_fa(p0, p1, theta, alpha, beta);
    ExponentResult ec = exponent_e_c(p0, p1, theta, alpha, beta);
    // The two MD branches individually.
    LinearConstraint c1{{}, -beta * (1.0 + 1.0 / theta)};
    c1.coeffs.resize(p1.alphabet_size());
    LinearConstraint c2{{}, alpha - beta};
    c2.coeffs.resize(p1.alphabet_size());
    for (std::size_t x = 0; x < p1.alphabet_size(); ++x) {
        c1.coeffs[x] = p1.log_prob(x);
        c2.coeffs[x] = p1.log_prob(x) - p0.log_prob(x);
    }
    double e1 = min_kl_linear(p1, c1).value;
    double e2 = min_kl_linear(p1, c2).value;

    out << "e1,e2,e_md,e_fa,e_c,e_md_branch,e_fa_active1,e_fa_active2,"
           "e_fa_feasible,e_c_active1,e_c_active2,e_c_feasible\n";
    out << num(e1) << ',' << num(e2) << ',' << num(md.value) << ','
        << num(fa.value) << ',' << num(ec.value) << ','
        << (md.active[0] ? 1 : 2) << ',' << (fa.active[0] ? 1 : 0) << ','
        << (fa.active[1] ? 1 : 0) << ',' << (fa.feasible ? 1 : 0) << ','
        << (ec.active[0] ? 1 : 0) << ',' << (ec.active[1] ? 1 : 0) << ','
        << (ec.feasible ? 1 : 0) << '\n';
    return kExitOk;
}

int cmd_simulate(const Config& cfg, std::ostream& out,
                 std::optional<std::uint64_t> seed_override) {
    RuleSpec rule = cfg.rule_spec();
    RuleContext ctx = cfg.rule_context();
    std::vector<int> ns = cfg.get_int_list("simulate.n");
    std::uint64_t trials = cfg.get_u64("simulate.trials");
    std::uint64_t seed =
        seed_override ? *seed_override : cfg.get_u64("simulate.seed");
    SampleSource source = SampleSource::P0;
    if (cfg.has("simulate.source")) {
        std::string s = cfg.get_string("simulate.source");
        if (s == "P1")
            source = SampleSource::P1;
        else if (s != "P0")
            throw ConfigError("simulate.source must be P0 or P1");
    }
    const Pmf& sampling =
        source == SampleSource::P0 ? ctx.p0.value() : ctx.p1.value();
    std::size_t k = sampling.alphabet_size();
    double cap = cfg.get_double_or("simulate.type_cap", kDefaultTypeCap);

    out << "n,source,exact_log_prob,mc_estimate,std_error\n";
    for (int n : ns) {
        std::string exact_cell;
        try {
            Region region = materialize_region(rule, ctx, n, k, cap);
            exact_cell = num(exact_region_prob(region, sampling));
        } catch (const std::invalid_argument&) {
            exact_cell = "";  // type cap exceeded; Monte Carlo still emitted
        }
        MonteCarloResult mc =
            monte_carlo_region_prob(rule, ctx, source, n, trials, seed ^ static_cast<std::uint64_t>(n));
        out << n << ',' << (source == SampleSource::P0 ? "P0" : "P1") << ','
            << exact_cell << ',' << num(mc.estimate) << ',' << num(mc.std_error)
            << '\n';
    }
    return kExitOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
    SweepSpec spec;
    std::string var = cfg.get_string("sweep.variable");
    if (var == "theta")
        spec.variable = SweepVariable::Theta;
    else if (var == "alpha")
        spec.variable = SweepVariable::Alpha;
    else if (var == "beta")
        spec.variable = SweepVariable::Beta;
    else
        throw ConfigError("sweep.variable must be theta, alpha or beta");
    spec.from = cfg.get_double("sweep.from");
    spec.to = cfg.get_double("sweep.to");
    spec.steps = cfg.get_int("sweep.steps");
    spec.theta = cfg.get_double_or("rule.theta", 1.0);
    spec.alpha = cfg.get_double_or("rule.alpha", 0.0);
    spec.beta = cfg.get_double_or("rule.beta", 0.0);
    spec.kink_threshold = cfg.get_double_or("sweep.kink_threshold", 0.01);

    SweepResult result = sweep_binary_example(spec);
    out << "value,theta,alpha,beta,q_threshold,branch,in_regime,"
           "e_fa_closed,e_md_closed,e_fa_solver,e_md_solver,e_c_solver\n";
    for (const auto& r : result.rows) {
        out << num(r.value) << ',' << num(r.theta) << ',' << num(r.alpha) << ','
            << num(r.beta) << ',' << num(r.q_threshold) << ',' << r.branch
            << ',' << (r.in_regime ? 1 : 0) << ',' << num(r.e_fa_closed) << ','
            << num(r.e_md_closed) << ',' << num(r.e_fa_solver) << ','
            << num(r.e_md_solver) << ',' << num(r.e_c_solver) << '\n';
    }
    for (const auto& kink : result.kinks)
        out << "# kink at " << num(kink.location) << " gap=" << num(kink.derivative_gap)
            << '\n';
    return kExitOk;
}

namespace {

std::vector<int> read_symbols(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    std::vector<int> x;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            x.push_back(std::stoi(line));
        } catch (const std::exception&) {
            throw ConfigError("bad symbol line: " + line);
        }
    }
    return x;
}

}  // namespace

int cmd_codec(const Config& cfg, CodecMode mode, const std::string& input_path,
              const std::string& output_path) {
    if (mode == CodecMode::Encode) {
        std::size_t k = static_cast<std::size_t>(cfg.get_int("alphabet_size"));
        std::vector<int> x = read_symbols(input_path);
        if (x.empty()) {
            std::cerr << "codec: empty input\n";
            return kExitUsage;
        }
        for (int s : x)
            if (s < 0 || static_cast<std::size_t>(s) >= k) {
                std::cerr << "codec: symbol out of range: " << s << '\n';
                return kExitUsage;
            }
        Bitstring bits = two_part_encode(x, k);
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + output_path);
        out.write(reinterpret_cast<const char*>(bits.bytes.data()),
                  static_cast<std::streamsize>(bits.bytes.size()));
        std::ofstream meta(output_path + ".meta");
        meta << "n=" << x.size() << " alphabet=" << k << '\n';
        std::cout << "n=" << x.size() << " alphabet=" << k
                  << " bits=" << bits.bit_count << '\n';
        return kExitOk;
    }

    // Decode: the sidecar next to the input provides (n, alphabet).
    std::ifstream meta(input_path + ".meta");
    int n = 0;
    std::size_t k = 0;
    {
        std::string line;
        if (meta && std::getline(meta, line)) {
            std::sscanf(line.c_str(), "n=%d alphabet=%zu", &n, &k);
        }
    }
    if (n <= 0 || k < 2) {
        std::cerr << "codec: missing or malformed sidecar " << input_path
                  << ".meta\n";
        return kExitUsage;
    }
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open input file: " + input_path);
    Bitstring bits;
    char c;
    while (in.get(c)) bits.bytes.push_back(static_cast<std::uint8_t>(c));
    bits.bit_count = bits.bytes.size() * 8;
    std::vector<int> x;
    try {
        x = two_part_decode(bits, n, k);
    } catch (const std::invalid_argument& e) {
        std::cerr << "codec: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ofstream out(output_path);
    if (!out) throw ConfigError("cannot open output file: " + output_path);
    for (int s : x) out << s << '\n';
    return kExitOk;
}

}  // namespace jointdc::cli
