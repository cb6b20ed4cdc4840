// Command-line front end: mirror tables, classical counts, quantum rings
// and polytope polarity.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mirror/report.hpp"

namespace {

using namespace mirror;

unsigned thread_count() {
  const char* env = std::getenv("MIRROR_ENGINE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<unsigned>(v) : 1;
  } catch (const std::exception&) {
    throw precondition_error(std::string("MIRROR_ENGINE_THREADS must be a positive integer, got '") + env + "'");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw precondition_error("cannot open output file " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mirror-symmetry and enumerative-geometry engine"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", out_path, "Output file (default: standard output)");

  int dimension = 3;
  int order = 0;
  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror map, couplings, n-point function, instanton numbers");
  mirror_cmd->add_option("--dimension", dimension, "Calabi-Yau dimension n (3..6)")->required()->check(CLI::Range(3, 6));
  mirror_cmd->add_option("--order", order, "Truncation order T (default 12, 8, 6, 6 for n = 3..6)")
      ->check(CLI::PositiveNumber);

  auto* count_cmd = app.add_subcommand("count", "Classical enumerative counts");
  count_cmd->require_subcommand(1);
  count_cmd->fallthrough();
  int pn = 2;
  std::vector<long> degrees;
  for (const char* name : {"cubic-surface-lines", "quintic-lines", "quintic-conics", "fermat-census"})
    count_cmd->add_subcommand(name);
  count_cmd->add_subcommand("pn-cotangent")->add_option("--n", pn, "Dimension of P^n")->required()->check(CLI::PositiveNumber);
  count_cmd->add_subcommand("splitting")
      ->add_option("--degrees", degrees, "Comma-separated splitting type, e.g. --degrees=2,-1,-1")
      ->delimiter(',')
      ->allow_extra_args(false);

  auto* qring_cmd = app.add_subcommand("qring", "Quantum cohomology rings");
  qring_cmd->require_subcommand(1);
  qring_cmd->fallthrough();
  int cpn_n = 2;
  long cpn_order = 4;
  auto* cpn_cmd = qring_cmd->add_subcommand("cpn", "Quantum cohomology of CP^n");
  cpn_cmd->add_option("--n", cpn_n, "n")->required()->check(CLI::Range(1, 12));
  cpn_cmd->add_option("--order", cpn_order, "Degree bound for the associativity check")->capture_default_str();
  int cy3_order = 10;
  qring_cmd->add_subcommand("cy3", "Quintic threefold ring from the mirror instanton numbers")
      ->add_option("--order", cy3_order, "Truncation order")->capture_default_str()
      ->check(CLI::PositiveNumber);
  long fa = 1, fb = 1, fc = 1;
  std::string n_gamma_text = "1";
  std::string perturb_text = "0";
  int flop_order = 8;
  auto* flop_cmd = qring_cmd->add_subcommand("flop-check", "Flop invariance of three-point functions");
  flop_cmd->add_option("--a", fa, "A . Gamma")->capture_default_str();
  flop_cmd->add_option("--b", fb, "B . Gamma")->capture_default_str();
  flop_cmd->add_option("--c", fc, "-C . Gamma")->capture_default_str();
  flop_cmd->add_option("--n-gamma", n_gamma_text, "Curve count of Gamma")->capture_default_str();
  flop_cmd->add_option("--perturb", perturb_text, "Added to n_Gamma when transporting (negative control)")->capture_default_str();
  flop_cmd->add_option("--order", flop_order, "Truncation for the series cross-check")->capture_default_str()->check(CLI::PositiveNumber);
  int avhs_dimension = 3;
  int avhs_order = 8;
  auto* avhs_cmd = qring_cmd->add_subcommand("avhs", "A-model connection on the rank-one frame");
  avhs_cmd->add_option("--dimension", avhs_dimension, "n (3..6)")->capture_default_str()->check(CLI::Range(3, 6));
  avhs_cmd->add_option("--order", avhs_order, "Truncation order")->capture_default_str()->check(CLI::PositiveNumber);

  std::string polytope_file;
  app.add_subcommand("polytope", "Polar polytope and reflexivity")
      ->add_option("file", polytope_file, "Vertex file: one vertex per line")
      ->required();

  // Every usage error exits with 64 (EX_USAGE); --help exits with 0.
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 64;
  }

  try {
    const report::Format format = report::parse_format(format_name);
    const unsigned threads = thread_count();
    report::KeyValueReport result;
    if (mirror_cmd->parsed()) {
      const int t = order > 0 ? order : yukawa::default_order(dimension);
      const yukawa::MirrorRun run = yukawa::run_mirror(dimension, t);
      emit(report::render_mirror(run, format), out_path);
      if (!run.instantons.all_integral()) {
        std::cerr << "error: non-integral instanton numbers\n";
        return 1;
      }
      return 0;
    }
    if (count_cmd->parsed()) {
      result = report::count_report(count_cmd->get_subcommands().front()->get_name(), pn, degrees);
    } else if (qring_cmd->parsed()) {
      const std::string which = qring_cmd->get_subcommands().front()->get_name();
      if (which == "cpn") {
        result = report::cpn_report(cpn_n, cpn_order, threads);
      } else if (which == "cy3") {
        result = report::cy3_report(cy3_order, threads);
      } else if (which == "flop-check") {
        result = report::flop_report(fa, fb, fc, parse_rational(n_gamma_text), parse_rational(perturb_text), flop_order);
      } else {
        result = report::avhs_report(avhs_dimension, avhs_order);
      }
    } else {
      std::ifstream in(polytope_file);
      if (!in) throw precondition_error("cannot read " + polytope_file);
      result = report::polytope_report(intersection::read_polytope(in));
    }
    emit(report::render(result, format), out_path);
    return result.ok ? 0 : 1;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 3;
  }
}
