// Copyright 2026 The choiscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   choiscope analyze  <channel.json> [--tol R] [--tol-abs A] [--pp-restarts N]
//                      [--pp-iters N] [--seed S] [--normalized]
//   choiscope convert  <channel.json> --to choi|superop|kraus [--tol R] [--normalized]
//   choiscope diagram check <lhs> <rhs> [--env env.json] [--tol R] [--tol-abs A]
//
// Structured output goes to stdout, diagnostics to stderr. Exit codes:
//   0 success (analyze: regardless of verdicts; diagram: EQUIVALENT)
//   1 diagram check: DIFFER
//   2 malformed input (file, expression, flags)
//   3 dimension or type inconsistency
//   4 Kraus form requested for a channel that is not CPP
//   5 I/O failure

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "choiscope/channels.hpp"
#include "choiscope/diagram.hpp"
#include "choiscope/io.hpp"

namespace {

using namespace choiscope;

enum Exit : int {
  kOk = 0,
  kDiffer = 1,
  kMalformed = 2,
  kDimension = 3,
  kNotCpp = 4,
  kIo = 5,
};

struct ToleranceFlags {
  double rel = 1e-9;
  double abs = 1e-12;
  Tol tol() const { return Tol(rel, abs); }
};

void add_tolerance(CLI::App* cmd, ToleranceFlags& t) {
  cmd->add_option("--tol", t.rel, "relative tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol-abs", t.abs, "absolute tolerance floor")->check(CLI::NonNegativeNumber);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* text = std::getenv("CHOISCOPE_SEED");
  if (text == nullptr || *text == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != std::string(text).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw io::FormatError("CHOISCOPE_SEED is not an unsigned integer", "environment");
  }
}

std::string number_text(double x) { return nlohmann::json(x).dump(); }

int run_analyze(const std::string& path, const ToleranceFlags& t, channels::PPOptions options,
                std::optional<std::uint64_t> seed, bool normalized) {
  const Tol tol = t.tol();
  options.seed = Seed{seed ? *seed : seed_from_env().value_or(0)};
  const auto file = io::read_channel_file(path);
  const auto channel = io::to_channel(file, tol, normalized);
  const auto report = channels::property_report(channel, tol, options);
  std::cout << io::write_report(report, options.seed, tol, options);
  return kOk;
}

int run_convert(const std::string& path, const std::string& to, const ToleranceFlags& t,
                bool normalized) {
  const Tol tol = t.tol();
  const auto file = io::read_channel_file(path);
  const auto channel = io::to_channel(file, tol, normalized);
  io::ChannelKind kind = io::parse_kind(to);
  try {
    std::cout << io::write_channel_file(io::from_channel(channel, kind, tol));
  } catch (const PropertyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCpp;
  }
  return kOk;
}

int run_diagram_check(const std::string& lhs, const std::string& rhs, const std::string& env_path,
                      const ToleranceFlags& t) {
  const diagram::Env env = env_path.empty() ? diagram::Env{} : io::read_env_file(env_path);
  for (const auto& [label, text] : {std::pair{"lhs", &lhs}, std::pair{"rhs", &rhs}}) {
    try {
      (void)diagram::parse(*text);
    } catch (const diagram::ParseError& e) {
      std::cerr << "error: " << label << ": " << e.what() << "\n"
                << diagram::caret_excerpt(*text, e.pos()) << "\n";
      return kMalformed;
    }
  }
  const auto eq = diagram::equivalent(lhs, rhs, env, t.tol());
  std::cout << (eq.equivalent ? "EQUIVALENT" : "DIFFER") << " max_abs_diff=" << number_text(eq.max_abs_diff)
            << " threshold=" << number_text(eq.threshold) << "\n";
  return eq.equivalent ? kOk : kDiffer;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"choiscope: channel-state duality toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  std::string path;
  ToleranceFlags tol;
  bool normalized = false;

  auto* analyze = app.add_subcommand("analyze", "report HP/PP/CPP/TP/unital verdicts for a channel");
  channels::PPOptions pp;
  std::optional<std::uint64_t> seed;
  analyze->add_option("path", path, "channel file")->required();
  add_tolerance(analyze, tol);
  analyze->add_option("--pp-restarts", pp.restarts, "see-saw restarts")->check(CLI::PositiveNumber);
  analyze->add_option("--pp-iters", pp.max_iters, "see-saw iterations per restart");
  analyze->add_option("--seed", seed, "random seed (default: $CHOISCOPE_SEED or 0)");
  analyze->add_flag("--normalized", normalized, "choi data is J / dim_in");

  auto* convert = app.add_subcommand("convert", "convert a channel to another representation");
  std::string to;
  convert->add_option("path", path, "channel file")->required();
  convert->add_option("--to", to, "target representation")
      ->required()
      ->check(CLI::IsMember({"choi", "superop", "kraus"}));
  add_tolerance(convert, tol);
  convert->add_flag("--normalized", normalized, "choi data is J / dim_in");

  auto* diag = app.add_subcommand("diagram", "diagram expression tools");
  diag->require_subcommand(1);
  auto* check = diag->add_subcommand("check", "compare two diagram expressions");
  std::string lhs, rhs, env_path;
  check->add_option("lhs", lhs, "left-hand expression")->required();
  check->add_option("rhs", rhs, "right-hand expression")->required();
  check->add_option("--env", env_path, "environment file binding named boxes");
  add_tolerance(check, tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*analyze) return run_analyze(path, tol, pp, seed, normalized);
    if (*convert) return run_convert(path, to, tol, normalized);
    if (*check) return run_diagram_check(lhs, rhs, env_path, tol);
  } catch (const io::FormatError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const diagram::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const DimensionError& e) {
    std::cerr << "error: dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const diagram::TypeError& e) {
    std::cerr << "error: type error: " << e.what() << "\n";
    return kDimension;
  } catch (const PropertyError& e) {
    std::cerr << "error: invalid channel data: " << e.what() << "\n";
    return kMalformed;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kMalformed;
}
