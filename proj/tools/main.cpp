#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "commands.hpp"

namespace {

using jointdc::cli::Config;

int run(int argc, char** argv) {
    CLI::App app{"Joint detection and lossless compression toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::string encode_path, decode_path;

    for (auto* sub : {app.add_subcommand("plan", "solve for (alpha, beta) from exponent targets"),
                      app.add_subcommand("exponents", "evaluate all exponents at a parameter point"),
                      app.add_subcommand("simulate", "exact and Monte Carlo region probabilities"),
                      app.add_subcommand("sweep", "parameter sweep of the binary example"),
                      app.add_subcommand("codec", "two-part universal encode/decode")}) {
        sub->add_option("--config", config_path, "configuration file")->required();
        sub->add_option("--out", out_path, "output file (default: stdout)");
    }
    auto* simulate = app.get_subcommand("simulate");
    simulate->add_option("--seed", seed, "seed override")->each([&](const std::string&) {
        have_seed = true;
    });
    auto* codec = app.get_subcommand("codec");
    codec->add_option("--encode", encode_path, "symbol file to encode");
    codec->add_option("--decode", decode_path, "bitstream file to decode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : jointdc::cli::kExitUsage;
    }

    try {
        Config cfg = Config::parse_file(config_path);
        std::ostringstream buffer;
        int rc;
        if (app.got_subcommand("plan")) {
            rc = jointdc::cli::cmd_plan(cfg, buffer);
        } else if (app.got_subcommand("exponents")) {
            rc = jointdc::cli::cmd_exponents(cfg, buffer);
        } else if (app.got_subcommand("simulate")) {
            rc = jointdc::cli::cmd_simulate(
                cfg, buffer,
                have_seed ? std::optional<std::uint64_t>(seed) : std::nullopt);
        } else if (app.got_subcommand("sweep")) {
            rc = jointdc::cli::cmd_sweep(cfg, buffer);
        } else {
            if (encode_path.empty() == decode_path.empty()) {
                std::cerr << "codec: exactly one of --encode/--decode required\n";
                return jointdc::cli::kExitUsage;
            }
            if (out_path.empty()) {
                std::cerr << "codec: --out required\n";
                return jointdc::cli::kExitUsage;
            }
            return jointdc::cli::cmd_codec(
                cfg,
                encode_path.empty() ? jointdc::cli::CodecMode::Decode
                                    : jointdc::cli::CodecMode::Encode,
                encode_path.empty() ? decode_path : encode_path, out_path);
        }
        if (out_path.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open output file: " << out_path << '\n';
                return jointdc::cli::kExitUsage;
            }
            out << buffer.str();
        }
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return jointdc::cli::kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
