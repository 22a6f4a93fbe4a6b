// abelscope: command-line front end.
//
//   abelscope verify [--p 2] [--trials 1000] [--seed 0] [--json out.json]
//   abelscope algebra check <file.json>
//   abelscope group selftest --p <prime> --trials <n> --seed <s>
//   abelscope ball --preset {z | z-mod <n> | gamma | gamma-mod-mz} --radius <r> [--compare <preset>]
//
// Exit status: 0 all checks passed, 1 a check failed, 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "abelscope/commands.hpp"

namespace {

using abelscope::CommandResult;
using abelscope::ExitStatus;

int emit(const CommandResult& result, const std::string& json_path) {
  const std::string doc = result.output.dump(2) + "\n";
  if (json_path == "-") {
    std::cout << doc;
  } else {
    std::cout << abelscope::render_text(result.output);
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << json_path << "\n";
        return static_cast<int>(ExitStatus::bad_input);
      }
      out << doc;
    }
  }
  return static_cast<int>(result.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the unipotent Lie algebra, the 5x5 group and its marked balls"};
  app.require_subcommand(1);

  std::string json_path;
  long p = 2;
  std::size_t trials = abelscope::kDefaultTrials;
  std::uint64_t seed = abelscope::kDefaultSeed;

  auto* verify = app.add_subcommand("verify", "Reproduce the homology and group computations");
  verify->add_option("--p", p, "prime")->capture_default_str();
  verify->add_option("--trials", trials, "selftest trials")->capture_default_str();
  verify->add_option("--seed", seed, "selftest seed")->capture_default_str();
  verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* algebra = app.add_subcommand("algebra", "Lie algebra commands");
  algebra->require_subcommand(1);
  auto* check = algebra->add_subcommand("check", "Run Abels' criterion on an algebra file");
  std::string algebra_file;
  check->add_option("file", algebra_file, "algebra JSON file")->required();
  check->add_option("--json", json_path, "write the JSON verdict here ('-' for stdout)");

  auto* group = app.add_subcommand("group", "Group commands");
  group->require_subcommand(1);
  auto* selftest = group->add_subcommand("selftest", "Randomized invariant suite");
  selftest->add_option("--p", p, "prime")->capture_default_str();
  selftest->add_option("--trials", trials, "number of trials")->capture_default_str();
  selftest->add_option("--seed", seed, "seed")->capture_default_str();
  selftest->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* ball = app.add_subcommand("ball", "Cayley ball of a marked group");
  std::vector<std::string> preset_tokens;
  std::vector<std::string> compare_tokens;
  std::size_t radius = 0;
  std::size_t max_radius = abelscope::kDefaultMaxRadius;
  ball->add_option("--preset", preset_tokens, "z | z-mod <n> | gamma | gamma-mod-mz")->required()->expected(1, 2);
  ball->add_option("--radius", radius, "ball radius")->required();
  ball->add_option("--compare", compare_tokens, "second preset to compare against")->expected(1, 2);
  ball->add_option("--p", p, "prime for the gamma presets")->capture_default_str();
  ball->add_option("--max-radius-override", max_radius, "raise the radius cap")->capture_default_str();
  ball->add_option("--json", json_path, "write the JSON output here ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitStatus::bad_input);
  }

  try {
    if (*verify) return emit(abelscope::cmd_verify(p, trials, seed), json_path);
    if (*selftest) return emit(abelscope::cmd_group_selftest(p, trials, seed), json_path);
    if (*check) {
      std::ifstream in(algebra_file);
      if (!in) {
        std::cerr << "cannot read " << algebra_file << "\n";
        return static_cast<int>(ExitStatus::bad_input);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return emit(abelscope::cmd_algebra_check(buf.str()), json_path);
    }
    if (*ball) {
      abelscope::BallOptions opts;
      opts.preset = abelscope::parse_preset(preset_tokens);
      if (!compare_tokens.empty()) opts.compare = abelscope::parse_preset(compare_tokens);
      opts.radius = radius;
      opts.p = p;
      opts.max_radius = max_radius;
      return emit(abelscope::cmd_ball(opts), json_path);
    }
  } catch (const abelscope::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitStatus::bad_input);
  }
  return static_cast<int>(ExitStatus::bad_input);
}
