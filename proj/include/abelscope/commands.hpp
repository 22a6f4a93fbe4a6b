#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelscope/serialize.hpp"

namespace abelscope {

/// Process exit codes: every check passed / a check failed / malformed input.
enum class ExitStatus : int { ok = 0, verification_failed = 1, bad_input = 2 };

struct CommandResult {
  ExitStatus status = ExitStatus::ok;
  Json output;
};

inline constexpr std::size_t kDefaultTrials = 1000;
inline constexpr std::uint64_t kDefaultSeed = 0;
inline constexpr std::size_t kDefaultMaxRadius = 6;

/// Rebuilds the weight, kernel, image and homology computations for the
/// 9-dimensional unipotent algebra, solves the preimage identities and runs
/// the group selftest at prime p.
CommandResult cmd_verify(long p, std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

/// Parses an algebra in the JSON schema, checks Jacobi and weight additivity,
/// and returns the Abels verdict.
CommandResult cmd_algebra_check(const std::string& json_text);

CommandResult cmd_group_selftest(long p, std::size_t trials, std::uint64_t seed);

struct Preset {
  enum class Kind { z, z_mod, gamma, gamma_mod_mz };
  Kind kind = Kind::z;
  long modulus = 0;  ///< for z_mod
  std::string str() const;
};

/// Accepts {"z"}, {"z-mod", "<n>"}, {"gamma"}, {"gamma-mod-mz"}. Throws InputError.
Preset parse_preset(const std::vector<std::string>& tokens);

struct BallOptions {
  Preset preset;
  std::size_t radius = 0;
  std::optional<Preset> compare;
  long p = 2;
  std::size_t max_radius = kDefaultMaxRadius;
};

CommandResult cmd_ball(const BallOptions& opts);

/// Indented "key: value" rendering of a JSON document.
std::string render_text(const Json& j);

}  // namespace abelscope
