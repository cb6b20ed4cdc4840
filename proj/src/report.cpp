#include "mirror/report.hpp"

#include <algorithm>
#include <sstream>

#include "mirror/avhs.hpp"
#include "mirror/counts.hpp"
#include "mirror/flop.hpp"
#include "mirror/json_io.hpp"
#include "mirror/quantum.hpp"

namespace mirror::report {

using json_io::Json;

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw precondition_error("unknown format '" + std::string(text) + "' (expected text, csv or json)");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\r\n";
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string coupling_name(int a, int b) { return "Y^" + std::to_string(a) + "_" + std::to_string(b); }

struct NamedSeries {
  std::string name;
  int a;
  int b;
  const PowerSeries* series;
};

std::vector<NamedSeries> coupling_list(const yukawa::MirrorRun& run) {
  std::vector<NamedSeries> out;
  for (int j = 0; j < run.dimension; ++j) out.push_back({coupling_name(1, j), 1, j, &run.couplings.y1(j)});
  if (run.couplings.secondary) out.push_back({coupling_name(2, 2), 2, 2, &*run.couplings.secondary});
  return out;
}

}  // namespace

void KeyValueReport::check(std::string key, bool passed) {
  add(std::move(key), passed ? "OK" : "FAIL");
  ok = ok && passed;
}

std::string render(const KeyValueReport& report, Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& [k, v] : report.items) out += k + ": " + v + "\n";
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"key", "value"});
      for (const auto& [k, v] : report.items) out += csv_row({k, v});
      return out;
    }
    case Format::json: {
      Json j;
      j["schema"] = 1;
      j["command"] = report.command;
      j["ok"] = report.ok;
      Json results = Json::object();
      for (const auto& [k, v] : report.items) results[k] = v;
      j["results"] = std::move(results);
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_mirror(const yukawa::MirrorRun& run, Format format) {
  const int n = run.dimension;
  const int t = run.order;
  const auto couplings = coupling_list(run);
  const bool integral = run.instantons.all_integral();

  if (format == Format::json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "mirror";
    j["dimension"] = n;
    j["order"] = t;
    j["mirror_map"] = {{"q_of_z", json_io::to_json(run.map.q_of_z)}, {"z_of_q", json_io::to_json(run.map.z_of_q)}};
    Json list = Json::array();
    for (const auto& c : couplings)
      list.push_back({{"name", c.name}, {"a", c.a}, {"b", c.b}, {"series", json_io::to_json(*c.series)}});
    j["couplings"] = std::move(list);
    j["npoint"] = json_io::to_json(run.npoint);
    Json inst = Json::array();
    for (const auto& e : run.instantons.entries) {
      inst.push_back({{"name", coupling_name(e.a, e.b)},
                      {"a", e.a},
                      {"b", e.b},
                      {"degree_power", e.inversion.degree_power},
                      {"integral", e.inversion.integral},
                      {"numbers", json_io::rational_list(e.inversion.numbers)}});
    }
    j["instantons"] = std::move(inst);
    j["all_integral"] = integral;
    return j.dump(2) + "\n";
  }

  if (format == Format::csv) {
    std::string out = csv_row({"section", "name", "index", "value"});
    for (int k = 0; k <= t; ++k) out += csv_row({"mirror_map", "q(z)", std::to_string(k), to_string(run.map.q_of_z[k])});
    for (int k = 0; k <= t; ++k) out += csv_row({"mirror_map", "z(q)", std::to_string(k), to_string(run.map.z_of_q[k])});
    for (const auto& c : couplings)
      for (int k = 0; k <= t; ++k) out += csv_row({"coupling", c.name, std::to_string(k), to_string((*c.series)[k])});
    for (int k = 0; k <= t; ++k) out += csv_row({"npoint", "n-point", std::to_string(k), to_string(run.npoint[k])});
    for (const auto& e : run.instantons.entries) {
      for (size_t d = 0; d < e.inversion.numbers.size(); ++d) {
        out += csv_row({"instanton", coupling_name(e.a, e.b), std::to_string(d + 1), to_string(e.inversion.numbers[d])});
      }
    }
    return out;
  }

  std::ostringstream os;
  os << "mirror family of degree-" << n + 2 << " hypersurfaces in P^" << n + 1 << " (n = " << n << "), truncation q^"
     << t << "\n\nmirror map\n";
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k <= t; ++k) rows.push_back({std::to_string(k), to_string(run.map.q_of_z[k]), to_string(run.map.z_of_q[k])});
  os << table({"k", "q(z)", "z(q)"}, rows);

  os << "\ncouplings\n";
  std::vector<std::string> header{"k"};
  for (const auto& c : couplings) header.push_back(c.name);
  header.push_back("n-point");
  rows.clear();
  for (int k = 0; k <= t; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (const auto& c : couplings) row.push_back(to_string((*c.series)[k]));
    row.push_back(to_string(run.npoint[k]));
    rows.push_back(std::move(row));
  }
  os << table(header, rows);

  os << "\ninstanton numbers\n";
  header = {"d"};
  for (const auto& e : run.instantons.entries)
    header.push_back(coupling_name(e.a, e.b) + " (d^" + std::to_string(e.inversion.degree_power) + ")");
  rows.clear();
  for (int d = 1; d <= t; ++d) {
    std::vector<std::string> row{std::to_string(d)};
    for (const auto& e : run.instantons.entries) row.push_back(to_string(e.inversion.numbers[static_cast<size_t>(d - 1)]));
    rows.push_back(std::move(row));
  }
  os << table(header, rows);
  os << "\nall instanton numbers integral: " << (integral ? "yes" : "NO") << "\n";
  return os.str();
}

KeyValueReport count_report(std::string_view which, int n, const std::vector<long>& degrees) {
  using namespace intersection;
  KeyValueReport r;
  r.command = "count " + std::string(which);
  if (which == "cubic-surface-lines") {
    r.add("lines on a cubic surface", to_string(count_lines_on_hypersurface(3, 3)));
  } else if (which == "quintic-lines") {
    r.add("lines on a quintic threefold", to_string(count_lines_on_hypersurface(5, 4)));
  } else if (which == "quintic-conics") {
    const ConicCount c = count_conics_on_quintic();
    r.add("rank of B", std::to_string(c.bundle_rank));
    r.add("dim P(Sym^2 U*)", std::to_string(c.space_dimension));
    r.add("conics on a quintic threefold", to_string(c.count));
  } else if (which == "fermat-census") {
    const FermatCensus f = fermat_line_census();
    r.add("first-type lines", std::to_string(f.first_type));
    r.add("one-parameter families", std::to_string(f.families));
    r.add("weighted total 5*" + std::to_string(f.first_type) + " + 20*" + std::to_string(f.families),
          std::to_string(f.katz_total));
    r.add("census", std::to_string(f.first_type) + " / " + std::to_string(f.families) + " / " +
                        std::to_string(f.katz_total));
  } else if (which == "pn-cotangent") {
    r.add("c_top(T*P^" + std::to_string(n) + ")", to_string(projective_space_cotangent_top(n)));
  } else if (which == "splitting") {
    const SplittingCohomology s = splitting_cohomology(degrees);
    r.add("h0", std::to_string(s.h0));
    r.add("h1", std::to_string(s.h1));
    r.add("chi", std::to_string(s.euler));
  } else {
    throw precondition_error("unknown count subcommand '" + std::string(which) + "'");
  }
  return r;
}

KeyValueReport cpn_report(int n, long order, unsigned threads) {
  using namespace quantum;
  KeyValueReport r;
  r.command = "qring cpn";
  const QuantumRing ring = cpn_ring(n);
  QuantumElement expected(ring.size());
  expected[ring.identity_index()] = CurveSeries::monomial({1});
  const QuantumElement power = quantum_power(ring.basis(1), n + 1, ring);
  for (size_t a = 1; a < ring.size(); ++a) {
    for (size_t b = a; b < ring.size(); ++b) {
      const QuantumElement p = ring.product(ring.basis(a), ring.basis(b));
      std::string value;
      for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        value += (value.empty() ? "" : " + ") + std::string("(") + p[k].to_string() + ")*zeta^" + std::to_string(k);
      }
      r.add("zeta^" + std::to_string(a) + " * zeta^" + std::to_string(b), value.empty() ? "0" : value);
    }
  }
  r.check("zeta^*" + std::to_string(n + 1) + " = q*1l", power == expected);
  const AssociativityReport assoc = check_associativity(ring, order, threads);
  r.add("associativity defect (degree <= " + std::to_string(order) + ")", to_string(assoc.max_defect));
  r.check("associative", assoc.max_defect == 0 && assoc.commutativity_defect == 0);
  return r;
}

KeyValueReport cy3_report(int order, unsigned threads) {
  using namespace quantum;
  KeyValueReport r;
  r.command = "qring cy3";
  const yukawa::MirrorRun run = yukawa::run_mirror(3, order);
  const auto& numbers = run.instantons.entries.front().inversion.numbers;
  const QuantumRing ring = cy3_ring(one_parameter_cy3(5, numbers), CoefficientRingPolicy::formal_semigroup({{1}}, order));
  r.add("coefficient ring", ring.policy().describe());
  const CurveSeries hhh = ring.correlation(1, 1, 1);
  const PowerSeries as_series = to_power_series(hhh, order);
  std::string coeffs;
  for (int k = 0; k <= order; ++k) coeffs += (k ? ", " : "") + to_string(as_series[k]);
  r.add("<H H H>", coeffs);
  const PowerSeries direct = cy3_correlation({1, 1, 1}, 5, numbers, order);
  r.check("ring correlation equals the Lambert sum", as_series == direct);
  r.check("<H H H> equals the B-model n-point function", as_series == run.npoint);
  const QuantumElement hh = ring.product(ring.basis(1), ring.basis(1));
  r.add("H * H", "(" + hh[2].to_string() + ")*C");
  const AssociativityReport assoc = check_associativity(ring, order, threads);
  r.add("associativity defect (degree <= " + std::to_string(order) + ")", to_string(assoc.max_defect));
  r.check("associative", assoc.max_defect == 0 && assoc.commutativity_defect == 0);
  return r;
}

KeyValueReport flop_report(long a, long b, long c, const Rational& n_gamma, const Rational& perturbation, int order) {
  using namespace quantum;
  KeyValueReport r;
  r.command = "qring flop-check";
  const Cy3Data data = synthetic_flop_instance(a, b, c, n_gamma);
  const CurveClass gamma{a, b, -c};
  r.add("Gamma", quantum::to_string(gamma));
  r.add("n_Gamma", to_string(n_gamma));
  r.check("x/(1-x) + 1/(x-1) = -1", flop_identity_holds());
  const Rational transported = n_gamma + perturbation;
  const Cy3Data flopped = flop_transform(data, gamma, transported);
  r.add("A.B.C before", to_string(data.triple(0, 1, 2)));
  r.add("A.B.C after", to_string(flopped.triple(0, 1, 2)));
  const FlopCheck check = check_flop_invariance(data, gamma, transported, order);
  r.add("divisor triples compared", std::to_string(check.triples_checked));
  r.add("curve lines", std::to_string(check.lines));
  r.check("symbolic comparison", check.symbolic_agrees);
  r.check("truncated comparison (x^" + std::to_string(order) + ")", check.truncated_agrees);
  r.check("invariant", check.invariant);
  r.check("double flop is the identity", flop_transform(flopped, {-a, -b, c}, transported) == data);
  return r;
}

KeyValueReport avhs_report(int dimension, int order) {
  using namespace quantum;
  KeyValueReport r;
  r.command = "qring avhs";
  const yukawa::MirrorRun run = yukawa::run_mirror(dimension, order);
  const QuantumRing ring = hypersurface_ring(run.instantons, order);
  const Connection conn = avhs_connection_rank1(ring, 1);
  const auto diag = superdiagonal(conn, dimension + 2, order);
  bool matches = true;
  for (int k = 0; k < dimension; ++k) {
    std::string coeffs;
    for (int m = 0; m <= order; ++m) coeffs += (m ? ", " : "") + to_string(diag[static_cast<size_t>(k)][m]);
    r.add((std::to_string(dimension + 2) + "*C[" + std::to_string(k) + "," + std::to_string(k + 1) + "]"), coeffs);
    matches = matches && diag[static_cast<size_t>(k)] == run.couplings.y1(k).truncated(order);
  }
  r.check("superdiagonal matches Y^1_k", matches);
  const ConnectionShape shape = connection_shape(conn);
  r.add("nilpotency index at q = 0", std::to_string(shape.nilpotency_index));
  r.check("nilpotency index is n + 1", shape.nilpotency_index == dimension + 1);
  r.check("degree shifts by exactly 2", shape.griffiths_shift);
  r.check("weight filtration preserved", shape.weight_filtration_invariant);
  const FlatnessReport flat = check_flatness(conn, order);
  r.add("curvature defect", to_string(std::max(flat.symmetry_defect, flat.commutator_defect)));
  r.check("flat", flat.flat());
  return r;
}

KeyValueReport polytope_report(const intersection::LatticePolytope& p) {
  using namespace intersection;
  KeyValueReport r;
  r.command = "polytope";
  auto list = [](const std::vector<Point>& pts) {
    std::string out;
    for (const auto& v : pts) out += (out.empty() ? "" : " ") + to_string(v);
    return out;
  };
  r.add("dimension", std::to_string(p.dimension()));
  r.add("vertices", list(p.vertices()));
  r.add("facets", std::to_string(p.facets().size()));
  const LatticePolytope polar = polar_polytope(p);
  r.add("polar vertices", list(polar.vertices()));
  r.add("reflexive", is_reflexive(p) ? "yes" : "no");
  r.check("double polar equals the input", polar_polytope(polar) == p);
  return r;
}

}  // namespace mirror::report
