#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"

namespace jointdc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

int cmd_plan(const Config& cfg, std::ostream& out);
int cmd_exponents(const Config& cfg, std::ostream& out);
int cmd_simulate(const Config& cfg, std::ostream& out,
                 std::optional<std::uint64_t> seed_override);
int cmd_sweep(const Config& cfg, std::ostream& out);

enum class CodecMode { Encode, Decode };
int cmd_codec(const Config& cfg, CodecMode mode, const std::string& input_path,
              const std::string& output_path);

}  // namespace jointdc::cli
