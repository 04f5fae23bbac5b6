#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expara/version.hpp"
#include "support/invariants.hpp"
#include "support/render_svg.hpp"
#include "support/report.hpp"

namespace {

using expara::cli::json;

// 0 success; 1 verification failure; 2 input error; 3 numerical failure;
// 4 iteration cap exceeded.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNumericalError = 3,
  kIterationCap = 4
};

struct IoOptions {
  std::string in_path;
  std::string out_path;
  bool compact = false;
};

void add_io_options(CLI::App* sub, IoOptions* io, bool with_input) {
  if (with_input) {
    sub->add_option("--in", io->in_path,
                    "Read the JSON triangle spec from this file "
                    "(default: stdin)");
  }
  sub->add_option("--out", io->out_path, "Write the output to this file");
  auto* compact = sub->add_flag("--json", io->compact, "Compact JSON output");
  sub->add_flag("--pretty", "Pretty-printed JSON output (default)")
      ->excludes(compact);
}

json read_input(const IoOptions& io) {
  std::string text;
  if (!io.in_path.empty()) {
    std::ifstream f(io.in_path);
    if (!f) {
      throw expara::DomainError("cannot open input file: " + io.in_path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw expara::DomainError(std::string("invalid JSON input: ") + e.what());
  }
}

void write_output(const IoOptions& io, const std::string& data) {
  if (io.out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream f(io.out_path, std::ios::binary);
  if (!f) {
    throw expara::DomainError("cannot open output file: " + io.out_path);
  }
  f << data;
  if (!f) {
    throw expara::DomainError("failed writing output file: " + io.out_path);
  }
}

void write_report(const IoOptions& io, const json& report) {
  write_output(io, io.compact ? report.dump() + "\n" : report.dump(2) + "\n");
}

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr));
}

void print_verify_summary(const json& report) {
  const bool color = use_color();
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  for (const json& row : report.at("invariants")) {
    const bool pass = row.at("pass").get<bool>();
    std::fprintf(stderr, "%s[%s]%s %-40s worst %.3e (tol %.0e, %d trials)\n",
                 pass ? green : red, pass ? "PASS" : "FAIL", reset,
                 row.at("name").get<std::string>().c_str(),
                 row.at("worst_residual").get<double>(),
                 row.at("tolerance").get<double>(),
                 row.at("trials").get<int>());
  }
}

expara::Homogeneous3 barycentric_from_values(const std::vector<double>& v) {
  return expara::cli::parse_barycentric(json::array({v[0], v[1], v[2]}));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inscribed-parabola geometry of a triangle: max-exparabolas, "
               "focal triangles, and the iterated focal sequence"};
  app.set_version_flag("--version", std::string(expara::kVersion));
  app.require_subcommand(1);

  expara::cli::Options opt;
  IoOptions io;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "Convergence / reporting tolerance")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  };

  auto* cmd_max = app.add_subcommand(
      "max", "Roots, tangency points and foci of the three max-exparabolas");
  add_common(cmd_max);
  add_io_options(cmd_max, &io, true);

  auto* cmd_xfocal = app.add_subcommand(
      "xfocal", "Focal triangle of the exparabolas with axes through X");
  std::vector<double> xvals;
  cmd_xfocal->add_option("--x", xvals, "Barycentric coordinates x0,x1,x2")
      ->delimiter(',')
      ->expected(3);
  add_common(cmd_xfocal);
  add_io_options(cmd_xfocal, &io, true);

  auto* cmd_iterate = app.add_subcommand(
      "iterate", "Iterated focal-triangle sequence and its limit hexagon");
  int steps = 40;
  std::vector<double> basevals;
  cmd_iterate->add_option("-n,--steps", steps, "Number of iteration steps")
      ->capture_default_str();
  cmd_iterate
      ->add_option("--base", basevals,
                   "Experimental: barycentric base point instead of the "
                   "centroid (no convergence guarantees)")
      ->delimiter(',')
      ->expected(3);
  add_common(cmd_iterate);
  add_io_options(cmd_iterate, &io, true);

  auto* cmd_verify = app.add_subcommand(
      "verify", "Monte-Carlo verification of every library invariant");
  std::string replay_path;
  cmd_verify->add_option("--trials", opt.trials, "Samples per invariant")
      ->capture_default_str();
  cmd_verify->add_option("--replay", replay_path,
                         "Re-evaluate the worst samples of a previous report");
  add_common(cmd_verify);
  add_io_options(cmd_verify, &io, false);

  auto* cmd_render =
      app.add_subcommand("render", "Render a construction as an SVG figure");
  std::string figure_name;
  double t_param = 0.5;
  cmd_render
      ->add_option("--figure", figure_name,
                   "One of: exparabola, max, anticomplementary, focal, "
                   "sequence")
      ->required();
  cmd_render->add_option("--t", t_param,
                         "Tangency parameter for the exparabola figure")
      ->capture_default_str();
  add_common(cmd_render);
  add_io_options(cmd_render, &io, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cmd_max->parsed()) {
      const auto spec = expara::cli::parse_triangle_spec(read_input(io));
      write_report(io, expara::cli::run_max(spec, opt));
      return kOk;
    }

    if (cmd_xfocal->parsed()) {
      const json input = read_input(io);
      const auto spec = expara::cli::parse_triangle_spec(input);
      expara::Homogeneous3 x{1, 1, 1};
      if (!xvals.empty()) {
        x = barycentric_from_values(xvals);
      } else if (input.contains("x")) {
        x = expara::cli::parse_barycentric(input.at("x"));
      } else {
        throw expara::DomainError("xfocal needs --x or an \"x\" input field");
      }
      write_report(io, expara::cli::run_xfocal(spec, x, opt));
      return kOk;
    }

    if (cmd_iterate->parsed()) {
      const auto spec = expara::cli::parse_triangle_spec(read_input(io));
      std::optional<expara::Homogeneous3> base;
      if (!basevals.empty()) base = barycentric_from_values(basevals);
      const json report = expara::cli::run_iterate(spec, steps, opt, base);
      write_report(io, report);
      const bool converged = report.at("results").at("converged").get<bool>();
      if (!base && !converged) return kIterationCap;
      return kOk;
    }

    if (cmd_verify->parsed()) {
      if (!replay_path.empty()) {
        std::ifstream f(replay_path);
        if (!f) {
          throw expara::DomainError("cannot open replay file: " + replay_path);
        }
        json prev;
        f >> prev;
        write_report(io, expara::cli::run_replay(prev));
        return kOk;
      }
      const json report = expara::cli::run_verify(opt.trials, opt.seed);
      write_report(io, report);
      print_verify_summary(report);
      return report.at("pass").get<bool>() ? kOk : kVerifyFailed;
    }

    if (cmd_render->parsed()) {
      const auto fig = expara::cli::figure_from_name(figure_name);
      if (!fig) {
        throw expara::DomainError("unknown figure: " + figure_name);
      }
      const auto spec = expara::cli::parse_triangle_spec(read_input(io));
      write_output(io, expara::cli::render_figure(spec.tri, *fig, t_param));
      return kOk;
    }
  } catch (const expara::IterationCapExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIterationCap;
  } catch (const expara::NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumericalError;
  } catch (const expara::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
