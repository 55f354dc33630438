#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sallylab/claims.hpp"
#include "sallylab/errors.hpp"
#include "sallylab/report.hpp"
#include "sallylab/search.hpp"
#include "sallylab/spec.hpp"

namespace {

constexpr int kUsageError = 2;

struct Output {
  std::string format = "json";
  std::string path;
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "md", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write the report to FILE instead of stdout");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const sallylab::Report& report, const Output& out) {
  const auto text = sallylab::render(report.doc, sallylab::parse_format(out.format));
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out.path);
    if (!file) {
      std::cerr << "error: cannot write '" << out.path << "'\n";
      return kUsageError;
    }
    file << text;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients, Sally modules and closures of monomial ideals"};
  app.require_subcommand(1);

  struct IdealCommand {
    sallylab::Command command;
    CLI::App* app;
  };
  std::vector<IdealCommand> ideal_commands;
  std::string spec_path;
  std::optional<std::size_t> window;
  Output out;

  const std::pair<sallylab::Command, const char*> descriptions[] = {
      {sallylab::Command::Analyze, "Full report: Hilbert function, Sally lengths, classification, checks"},
      {sallylab::Command::Hilbert, "Hilbert function table and coefficients"},
      {sallylab::Command::Sally, "Sally lengths, rank and m"},
      {sallylab::Command::Classify, "Hypothesis flags, classification and closed-form verification"},
      {sallylab::Command::Closure, "Integral closure and (d = 2) Ratliff-Rush closure"},
      {sallylab::Command::Reduction, "Reduction test and reduction number"},
  };
  for (const auto& [command, description] : descriptions) {
    auto* cmd = app.add_subcommand(sallylab::to_string(command), description);
    cmd->add_option("spec", spec_path, "Ideal spec JSON file, or - for stdin")->required();
    cmd->add_option("--window", window, "Largest n tabulated (default 2d+6)")->check(CLI::PositiveNumber);
    add_output_flags(cmd, out);
    ideal_commands.push_back({command, cmd});
  }

  auto* verify = app.add_subcommand("verify-paper", "Check every claim attached to the built-in worked examples");
  add_output_flags(verify, out);

  sallylab::SearchConfig config;
  std::string mode = sallylab::to_string(config.mode);
  std::string sampler = sallylab::to_string(config.sampler);
  auto* search = app.add_subcommand("search", "Seeded random sweep over (Q, I) pairs");
  search->add_option("--dim", config.dim, "Number of variables")->capture_default_str();
  search->add_option("--box", config.box, "Largest pure-power exponent of Q")->capture_default_str();
  search->add_option("--samples", config.samples, "Number of instances")->capture_default_str();
  search->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
  search->add_option("--mode", mode, "hypotheses, no-m-condition or all")->capture_default_str();
  search->add_option("--sampler", sampler, "box or newton")->capture_default_str();
  search->add_option("--extra-min", config.extra_min, "Fewest extra generators")->capture_default_str();
  search->add_option("--extra-max", config.extra_max, "Most extra generators")->capture_default_str();
  search->add_option("--window", config.window, "Largest n tabulated (default 2d+6)");
  add_output_flags(search, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (verify->parsed()) {
      return emit(sallylab::claims_report(sallylab::run_claims(sallylab::builtin_fixtures())), out);
    }
    if (search->parsed()) {
      config.mode = sallylab::parse_search_mode(mode);
      config.sampler = sallylab::parse_sampler(sampler);
      config.validate();
      return emit(sallylab::search_report(sallylab::sweep(config)), out);
    }
    for (const auto& [command, cmd] : ideal_commands) {
      if (!cmd->parsed()) continue;
      const auto spec = sallylab::parse_spec(read_input(spec_path));
      return emit(sallylab::run_command(command, spec, window), out);
    }
  } catch (const sallylab::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
