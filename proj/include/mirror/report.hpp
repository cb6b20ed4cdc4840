#pragma once

// Rendering of command results as text, RFC-4180 CSV or JSON. All numbers
// are printed exactly; JSON carries them as decimal strings.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirror/polytope.hpp"
#include "mirror/yukawa.hpp"

namespace mirror::report {

enum class Format { text, csv, json };

Format parse_format(std::string_view text);

/// Quotes a CSV field when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

/// Ordered key/value results of one command; `ok` is false when a check
/// failed (the CLI then exits nonzero).
struct KeyValueReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> items;
  bool ok = true;

  void add(std::string key, std::string value) { items.emplace_back(std::move(key), std::move(value)); }
  /// Adds "key: OK" or "key: FAIL" and folds the verdict into ok.
  void check(std::string key, bool passed);
};

std::string render(const KeyValueReport& report, Format format);

/// Mirror map, couplings, n-point function and instanton numbers.
std::string render_mirror(const yukawa::MirrorRun& run, Format format);

/// count subcommands: cubic-surface-lines, quintic-lines, quintic-conics,
/// fermat-census, pn-cotangent (uses n), splitting (uses degrees).
KeyValueReport count_report(std::string_view which, int n, const std::vector<long>& degrees);

KeyValueReport cpn_report(int n, long order, unsigned threads);
/// Quintic ring from the mirror pipeline's n_d, checked against the
/// B-model n-point function.
KeyValueReport cy3_report(int order, unsigned threads);
/// Synthetic flop with (A.Gamma, B.Gamma, C.Gamma) = (a, b, -c); the check
/// transports with n_Gamma + perturbation.
KeyValueReport flop_report(long a, long b, long c, const Rational& n_gamma, const Rational& perturbation, int order);
KeyValueReport avhs_report(int dimension, int order);
KeyValueReport polytope_report(const intersection::LatticePolytope& p);

}  // namespace mirror::report
