#include "mirror/quantum.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace mirror::quantum {

std::string to_string(const CurveClass& eta) {
  std::string out = "(";
  for (size_t i = 0; i < eta.size(); ++i) out += (i ? "," : "") + std::to_string(eta[i]);
  return out + ")";
}

// ---------------------------------------------------------------------------
// CurveSeries

CurveSeries CurveSeries::constant(int rank, const Rational& value) {
  return monomial(CurveClass(static_cast<size_t>(rank), 0), value);
}

CurveSeries CurveSeries::monomial(const CurveClass& eta, const Rational& coeff) {
  CurveSeries out;
  out.add_term(eta, coeff);
  return out;
}

Rational CurveSeries::coefficient(const CurveClass& eta) const {
  auto it = terms_.find(eta);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CurveSeries::max_abs() const {
  Rational m = 0;
  for (const auto& [eta, c] : terms_) m = std::max<Rational>(m, abs(c));
  return m;
}

void CurveSeries::add_term(const CurveClass& eta, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(eta, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CurveSeries& CurveSeries::operator+=(const CurveSeries& o) {
  for (const auto& [eta, c] : o.terms_) add_term(eta, c);
  return *this;
}

CurveSeries& CurveSeries::operator-=(const CurveSeries& o) {
  for (const auto& [eta, c] : o.terms_) add_term(eta, -c);
  return *this;
}

CurveSeries& CurveSeries::operator*=(const Rational& s) {
  if (s == 0) terms_.clear();
  for (auto& [eta, c] : terms_) c *= s;
  return *this;
}

std::string CurveSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [eta, c] : terms_) {
    const bool constant = std::all_of(eta.begin(), eta.end(), [](long x) { return x == 0; });
    os << (first ? "" : " + ") << mirror::to_string(c);
    if (!constant) os << "*q^" << quantum::to_string(eta);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Coefficient rings

namespace {

Rational pair(const std::vector<Rational>& omega, const CurveClass& eta) {
  Rational s = 0;
  for (size_t i = 0; i < eta.size(); ++i) s += omega[i] * eta[i];
  return s;
}

CurveClass add_classes(const CurveClass& a, const CurveClass& b) {
  CurveClass out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Integer functional positive on every generator, searched in growing boxes.
std::optional<std::vector<Rational>> positive_grading(const std::vector<CurveClass>& generators, int rank) {
  constexpr int kBound = 8;
  std::vector<long> w(static_cast<size_t>(rank));
  for (int bound = 1; bound <= kBound; ++bound) {
    std::optional<std::vector<Rational>> found;
    auto rec = [&](auto&& self, int i) -> void {
      if (found) return;
      if (i == rank) {
        const long top = *std::max_element(w.begin(), w.end(), [](long a, long b) { return std::abs(a) < std::abs(b); });
        if (std::abs(top) != bound) return;
        for (const auto& g : generators) {
          long s = 0;
          for (int j = 0; j < rank; ++j) s += w[static_cast<size_t>(j)] * g[static_cast<size_t>(j)];
          if (s <= 0) return;
        }
        found = std::vector<Rational>(w.begin(), w.end());
        return;
      }
      for (long v = -bound; v <= bound; ++v) {
        w[static_cast<size_t>(i)] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

CoefficientRingPolicy CoefficientRingPolicy::polynomial(int rank) {
  if (rank < 1) throw precondition_error("curve lattice rank must be positive");
  CoefficientRingPolicy p;
  p.mode_ = Mode::polynomial;
  p.rank_ = rank;
  p.omega_.assign(static_cast<size_t>(rank), 1);
  return p;
}

CoefficientRingPolicy CoefficientRingPolicy::formal_semigroup(std::vector<CurveClass> generators, long truncation) {
  if (generators.empty()) throw precondition_error("semigroup needs at least one generator");
  const int rank = static_cast<int>(generators.front().size());
  if (rank < 1) throw precondition_error("curve lattice rank must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != rank) throw precondition_error("generators of different ranks");
    if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) throw precondition_error("zero generator");
  }
  auto omega = positive_grading(generators, rank);
  if (!omega) {
    throw precondition_error("no positive grading found on the generators: the cone is not strongly convex "
                             "(finite partition property fails)");
  }
  CoefficientRingPolicy p;
  p.mode_ = Mode::formal_semigroup;
  p.rank_ = rank;
  p.generators_ = std::move(generators);
  p.omega_ = std::move(*omega);
  p.cutoff_ = truncation;
  p.inclusive_ = true;
  return p;
}

CoefficientRingPolicy CoefficientRingPolicy::novikov(std::vector<Rational> omega, const Rational& cutoff) {
  if (omega.empty()) throw precondition_error("Kahler functional must have positive rank");
  CoefficientRingPolicy p;
  p.mode_ = Mode::novikov;
  p.rank_ = static_cast<int>(omega.size());
  p.omega_ = std::move(omega);
  p.cutoff_ = cutoff;
  p.inclusive_ = false;
  return p;
}

std::string CoefficientRingPolicy::describe() const {
  std::string w;
  for (size_t i = 0; i < omega_.size(); ++i) w += (i ? "," : "") + mirror::to_string(omega_[i]);
  switch (mode_) {
    case Mode::polynomial:
      return "polynomial";
    case Mode::formal_semigroup:
      return "formal semigroup, grading (" + w + ") <= " + mirror::to_string(cutoff_);
    case Mode::novikov:
      return "Novikov, omega (" + w + ") < " + mirror::to_string(cutoff_);
  }
  return "";
}

Rational CoefficientRingPolicy::degree(const CurveClass& eta) const {
  if (static_cast<int>(eta.size()) != rank_) throw precondition_error("curve class of the wrong rank");
  return pair(omega_, eta);
}

bool CoefficientRingPolicy::keeps(const CurveClass& eta) const {
  if (mode_ == Mode::polynomial) return true;
  const Rational d = degree(eta);
  return inclusive_ ? d <= cutoff_ : d < cutoff_;
}

CurveSeries CoefficientRingPolicy::filter(const CurveSeries& s) const {
  CurveSeries out;
  for (const auto& [eta, c] : s.terms())
    if (keeps(eta)) out.add_term(eta, c);
  return out;
}

CurveSeries CoefficientRingPolicy::multiply(const CurveSeries& a, const CurveSeries& b) const {
  CurveSeries out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      CurveClass e = add_classes(ea, eb);
      if (keeps(e)) out.add_term(e, ca * cb);
    }
  }
  return out;
}

CurveSeries CoefficientRingPolicy::lambert(const CurveClass& eta) const {
  if (!allows_lambert()) throw precondition_error("polynomial coefficient ring cannot hold q^eta/(1 - q^eta)");
  if (degree(eta) <= 0) throw precondition_error("q^eta/(1 - q^eta) needs eta of positive degree " + to_string(eta));
  CurveSeries out;
  CurveClass m = eta;
  while (keeps(m)) {
    out.add_term(m, 1);
    m = add_classes(m, eta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GWTable

GWTable::GWTable(int dimension, std::vector<int> degrees) : dimension_(dimension), degrees_(std::move(degrees)) {
  if (dimension < 1) throw precondition_error("complex dimension must be positive");
  for (int l : degrees_)
    if (l < 0 || l > 2 * dimension || l % 2) throw precondition_error("basis degree " + std::to_string(l) + " out of range");
}

void GWTable::add_class(const CurveClass& eta, long minus_k_dot) {
  if (eta.empty() || std::all_of(eta.begin(), eta.end(), [](long x) { return x == 0; })) {
    throw precondition_error("GW classes must be nonzero");
  }
  if (rank_ == 0) rank_ = static_cast<int>(eta.size());
  if (static_cast<int>(eta.size()) != rank_) throw precondition_error("curve class of the wrong rank");
  if (minus_k_dot < 0) throw precondition_error("-K . eta < 0: only semipositive manifolds are supported");
  if (minus_k_dot > 2 * dimension_) throw precondition_error("-K . eta exceeds 2n; no invariant can be nonzero");
  auto [it, inserted] = classes_.try_emplace(eta, ClassData{minus_k_dot, {}});
  if (!inserted && it->second.minus_k_dot != minus_k_dot) {
    throw precondition_error("class " + to_string(eta) + " declared with two values of -K . eta");
  }
}

void GWTable::set(const CurveClass& eta, int i, int j, int k, const Rational& value) {
  auto it = classes_.find(eta);
  if (it == classes_.end()) throw precondition_error("class " + to_string(eta) + " was not declared");
  std::array<int, 3> key{i, j, k};
  for (int x : key)
    if (x < 0 || x >= static_cast<int>(degrees_.size())) throw precondition_error("basis index out of range");
  std::sort(key.begin(), key.end());
  if (value == 0) {
    it->second.entries.erase(key);
    return;
  }
  int total = 0;
  for (int x : key) {
    const int l = degrees_[static_cast<size_t>(x)];
    if (l < 2) {
      throw precondition_error("grading-inconsistent entry: insertion of degree " + std::to_string(l) + " for class " +
                               to_string(eta));
    }
    total += l;
  }
  if (total != 2 * dimension_ + 2 * it->second.minus_k_dot) {
    throw precondition_error("grading-inconsistent entry for class " + to_string(eta) + ": degrees sum to " +
                             std::to_string(total) + ", expected " +
                             std::to_string(2 * dimension_ + 2 * it->second.minus_k_dot));
  }
  it->second.entries[key] = value;
}

Rational GWTable::get(const CurveClass& eta, int i, int j, int k) const {
  auto it = classes_.find(eta);
  if (it == classes_.end()) return 0;
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto e = it->second.entries.find(key);
  return e == it->second.entries.end() ? Rational(0) : e->second;
}

GWTable GWTable::from_json(const nlohmann::ordered_json& value) {
  std::vector<int> degrees;
  for (const auto& b : value.at("basis")) degrees.push_back(b.at("degree").get<int>());
  GWTable table(value.at("dimension").get<int>(), std::move(degrees));
  for (const auto& cls : value.at("classes")) {
    const CurveClass eta = cls.at("eta").get<CurveClass>();
    table.add_class(eta, cls.at("minusK_dot").get<long>());
    for (const auto& e : cls.at("entries")) {
      if (!e.is_array() || e.size() != 4) throw precondition_error("GW entry must be [i, j, k, value]");
      const auto& v = e[3];
      const Rational r = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
      table.set(eta, e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), r);
    }
  }
  return table;
}

nlohmann::ordered_json GWTable::to_json() const {
  nlohmann::ordered_json out;
  out["dimension"] = dimension_;
  out["basis"] = nlohmann::ordered_json::array();
  for (int l : degrees_) out["basis"].push_back({{"degree", l}});
  out["classes"] = nlohmann::ordered_json::array();
  for (const auto& [eta, data] : classes_) {
    nlohmann::ordered_json c;
    c["eta"] = eta;
    c["minusK_dot"] = data.minus_k_dot;
    c["entries"] = nlohmann::ordered_json::array();
    for (const auto& [key, v] : data.entries) c["entries"].push_back({key[0], key[1], key[2], mirror::to_string(v)});
    out["classes"].push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuantumElement

QuantumElement QuantumElement::basis(size_t size, size_t i, int rank) {
  QuantumElement out(size);
  out[i] = CurveSeries::constant(rank, 1);
  return out;
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& o) {
  if (o.size() != size()) throw precondition_error("elements of different rings");
  for (size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& o) {
  if (o.size() != size()) throw precondition_error("elements of different rings");
  for (size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Rational QuantumElement::max_abs() const {
  Rational m = 0;
  for (const auto& c : coeffs_) m = std::max(m, c.max_abs());
  return m;
}

// ---------------------------------------------------------------------------
// QuantumRing

QuantumRing::QuantumRing(GWTable gw, TripleTensor classical, CoefficientRingPolicy policy)
    : gw_(std::move(gw)), classical_(std::move(classical)), policy_(std::move(policy)) {
  const size_t n = size();
  if (classical_.size() != n * n * n) throw precondition_error("classical tensor must have N^3 entries");
  const auto& deg = degrees();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        const Rational& v = classical_[index(i, j, k)];
        if (v != classical_[index(j, i, k)] || v != classical_[index(i, k, j)]) {
          throw precondition_error("classical triple intersections are not symmetric");
        }
        if (v != 0 && deg[i] + deg[j] + deg[k] != 2 * dimension()) {
          throw precondition_error("classical triple intersection violates the degree count");
        }
      }
    }
  }
  const auto ids = std::count(deg.begin(), deg.end(), 0);
  if (ids != 1) throw precondition_error("basis needs exactly one degree-0 element");
  identity_ = static_cast<size_t>(std::find(deg.begin(), deg.end(), 0) - deg.begin());

  pairing_ = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) pairing_[i][j] = classical_[index(identity_, i, j)];
  auto inv = inverse(pairing_);
  if (!inv) throw precondition_error("cup pairing is degenerate (not a Frobenius algebra)");
  pairing_inverse_ = std::move(*inv);

  if (gw_.rank() != 0 && gw_.rank() != policy_.rank()) {
    throw precondition_error("GW table rank differs from the coefficient ring rank");
  }
  std::map<CurveClass, CurveSeries> weights;
  for (const auto& [eta, data] : gw_.classes()) {
    if (policy_.mode() != CoefficientRingPolicy::Mode::polynomial && policy_.degree(eta) <= 0) {
      throw precondition_error("class " + to_string(eta) + " has nonpositive degree in the coefficient ring");
    }
    weights[eta] = data.minus_k_dot == 0 ? policy_.lambert(eta) : policy_.filter(CurveSeries::monomial(eta));
  }

  correlations_.assign(n * n * n, CurveSeries());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        CurveSeries c = CurveSeries::constant(policy_.rank(), classical_[index(i, j, k)]);
        for (const auto& [eta, w] : weights) {
          const Rational phi = gw_.get(eta, static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
          if (phi != 0) c += w * phi;
        }
        correlations_[index(i, j, k)] = policy_.filter(c);
      }
    }
  }
  structure_.assign(n * n * n, CurveSeries());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          if (pairing_inverse_[l][k] != 0) structure_[index(i, j, k)] += correlations_[index(i, j, l)] * pairing_inverse_[l][k];
}

const Rational& QuantumRing::classical(size_t i, size_t j, size_t k) const { return classical_.at(index(i, j, k)); }

const CurveSeries& QuantumRing::correlation(size_t i, size_t j, size_t k) const {
  return correlations_.at(index(i, j, k));
}

QuantumElement QuantumRing::product(const QuantumElement& x, const QuantumElement& y) const {
  const size_t n = size();
  if (x.size() != n || y.size() != n) throw precondition_error("elements outside the ring's basis span");
  QuantumElement out(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const CurveSeries xy = policy_.multiply(x[i], y[j]);
      for (size_t k = 0; k < n; ++k) {
        const CurveSeries& s = structure_[index(i, j, k)];
        if (!s.is_zero()) out[k] += policy_.multiply(xy, s);
      }
    }
  }
  return out;
}

CurveSeries QuantumRing::correlation(const QuantumElement& x, const QuantumElement& y, const QuantumElement& z) const {
  const size_t n = size();
  CurveSeries out;
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const CurveSeries xy = policy_.multiply(x[i], y[j]);
      for (size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        out += policy_.multiply(policy_.multiply(xy, z[k]), correlations_[index(i, j, k)]);
      }
    }
  }
  return out;
}

CurveSeries QuantumRing::expectation(const QuantumElement& x) const {
  CurveSeries out;
  for (size_t k = 0; k < size(); ++k)
    if (!x[k].is_zero()) out += policy_.multiply(x[k], correlations_[index(k, identity_, identity_)]);
  return out;
}

QuantumElement QuantumRing::cup_product(const QuantumElement& x, const QuantumElement& y) const {
  const size_t n = size();
  QuantumElement out(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      const CurveSeries xy = policy_.multiply(x[i], y[j]);
      for (size_t k = 0; k < n; ++k) {
        Rational c = 0;
        for (size_t l = 0; l < n; ++l) c += classical_[index(i, j, l)] * pairing_inverse_[l][k];
        if (c != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

QuantumElement quantum_product(const QuantumElement& x, const QuantumElement& y, const QuantumRing& ring) {
  return ring.product(x, y);
}

CurveSeries correlation(const QuantumElement& x, const QuantumElement& y, const QuantumElement& z,
                        const QuantumRing& ring) {
  return ring.correlation(x, y, z);
}

QuantumElement quantum_power(const QuantumElement& x, int k, const QuantumRing& ring) {
  if (k < 1) throw precondition_error("quantum power needs k >= 1");
  QuantumElement out = x;
  for (int i = 1; i < k; ++i) out = ring.product(out, x);
  return out;
}

namespace {

void set_symmetric(TripleTensor& t, size_t n, size_t i, size_t j, size_t k, const Rational& v) {
  const std::array<size_t, 3> idx{i, j, k};
  std::array<size_t, 3> p{0, 1, 2};
  do t[(idx[p[0]] * n + idx[p[1]]) * n + idx[p[2]]] = v;
  while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

QuantumRing cpn_ring(int n) {
  if (n < 1) throw precondition_error("CP^n needs n >= 1");
  const size_t size = static_cast<size_t>(n) + 1;
  std::vector<int> degrees;
  for (int k = 0; k <= n; ++k) degrees.push_back(2 * k);
  GWTable gw(n, degrees);
  const CurveClass line{1};
  gw.add_class(line, n + 1);
  TripleTensor classical(size * size * size, 0);
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const int c = n - a - b;
      if (c >= b) set_symmetric(classical, size, static_cast<size_t>(a), static_cast<size_t>(b), static_cast<size_t>(c), 1);
      const int cq = 2 * n + 1 - a - b;
      if (a >= 1 && cq >= b && cq <= n) gw.set(line, a, b, cq, 1);
    }
  }
  QuantumRing ring(std::move(gw), std::move(classical), CoefficientRingPolicy::polynomial(1));
  // zeta^{*(n+1)} = q 1l.
  QuantumElement expected(size);
  expected[ring.identity_index()] = CurveSeries::monomial(line);
  if (quantum_power(ring.basis(1), n + 1, ring) != expected) throw invariant_error("CP^n ring relation fails");
  return ring;
}

AssociativityReport check_associativity(const QuantumRing& ring, long truncation, unsigned threads) {
  const size_t n = ring.size();
  const auto& policy = ring.policy();
  auto defect = [&](const QuantumElement& e) {
    Rational m = 0;
    for (size_t k = 0; k < e.size(); ++k)
      for (const auto& [eta, c] : e[k].terms())
        if (policy.degree(eta) <= truncation) m = std::max<Rational>(m, abs(c));
    return m;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<AssociativityReport> partial(threads);
  auto work = [&](unsigned t) {
    AssociativityReport& r = partial[t];
    for (size_t i = t; i < n; i += threads) {
      const QuantumElement x = ring.basis(i);
      for (size_t j = 0; j < n; ++j) {
        const QuantumElement xy = ring.product(x, ring.basis(j));
        r.commutativity_defect = std::max(r.commutativity_defect, defect(xy - ring.product(ring.basis(j), x)));
        for (size_t k = 0; k < n; ++k) {
          const QuantumElement lhs = ring.product(xy, ring.basis(k));
          const QuantumElement rhs = ring.product(x, ring.product(ring.basis(j), ring.basis(k)));
          r.max_defect = std::max(r.max_defect, defect(lhs - rhs));
          ++r.triples_checked;
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  AssociativityReport out;
  out.truncation = truncation;
  for (const auto& r : partial) {
    out.max_defect = std::max(out.max_defect, r.max_defect);
    out.commutativity_defect = std::max(out.commutativity_defect, r.commutativity_defect);
    out.triples_checked += r.triples_checked;
  }
  return out;
}

void Cy3Data::set_triple(int a, int b, int c, const Rational& value) {
  if (kappa.size() != static_cast<size_t>(rank * rank * rank)) kappa.assign(static_cast<size_t>(rank * rank * rank), 0);
  const std::array<int, 3> idx{a, b, c};
  std::array<int, 3> p{0, 1, 2};
  do kappa[static_cast<size_t>((idx[p[0]] * rank + idx[p[1]]) * rank + idx[p[2]])] = value;
  while (std::next_permutation(p.begin(), p.end()));
}

QuantumRing cy3_ring(const Cy3Data& data, const CoefficientRingPolicy& policy) {
  const int r = data.rank;
  if (r < 1 || data.kappa.size() != static_cast<size_t>(r * r * r)) throw precondition_error("malformed threefold data");
  const size_t n = 2 * static_cast<size_t>(r) + 2;
  const size_t point = n - 1;
  auto divisor = [](int a) { return static_cast<size_t>(a) + 1; };
  auto curve = [r](int a) { return static_cast<size_t>(r + a) + 1; };
  std::vector<int> degrees(n, 0);
  for (int a = 0; a < r; ++a) {
    degrees[divisor(a)] = 2;
    degrees[curve(a)] = 4;
  }
  degrees[point] = 6;
  TripleTensor classical(n * n * n, 0);
  set_symmetric(classical, n, 0, 0, point, 1);
  for (int a = 0; a < r; ++a) set_symmetric(classical, n, 0, divisor(a), curve(a), 1);
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b)
      for (int c = b; c < r; ++c) set_symmetric(classical, n, divisor(a), divisor(b), divisor(c), data.triple(a, b, c));

  GWTable gw(3, degrees);
  for (const auto& [eta, count] : data.instantons) {
    if (static_cast<int>(eta.size()) != r) throw precondition_error("curve class of the wrong rank");
    if (count == 0) continue;
    gw.add_class(eta, 0);
    for (int a = 0; a < r; ++a)
      for (int b = a; b < r; ++b)
        for (int c = b; c < r; ++c) {
          const Rational v = count * eta[static_cast<size_t>(a)] * eta[static_cast<size_t>(b)] * eta[static_cast<size_t>(c)];
          gw.set(eta, static_cast<int>(divisor(a)), static_cast<int>(divisor(b)), static_cast<int>(divisor(c)), v);
        }
  }
  return QuantumRing(std::move(gw), std::move(classical), policy);
}

Cy3Data one_parameter_cy3(const Rational& triple, std::span<const Rational> instantons) {
  Cy3Data data;
  data.rank = 1;
  data.kappa = {triple};
  for (size_t d = 0; d < instantons.size(); ++d)
    if (instantons[d] != 0) data.instantons[{static_cast<long>(d) + 1}] = instantons[d];
  return data;
}

PowerSeries cy3_correlation(const std::array<Rational, 3>& multiples, const Rational& triple,
                            std::span<const Rational> instantons, int truncation) {
  if (truncation < 0) throw precondition_error("truncation order must be nonnegative");
  const Rational h = multiples[0] * multiples[1] * multiples[2];
  PowerSeries out = PowerSeries::constant(Variable::q, truncation, triple);
  for (size_t i = 0; i < instantons.size() && static_cast<int>(i) < truncation; ++i) {
    const long d = static_cast<long>(i) + 1;
    out += lambert_expand(static_cast<int>(d), truncation) * Rational(instantons[i] * d * d * d);
  }
  return out * h;
}

PowerSeries to_power_series(const CurveSeries& s, int truncation) {
  PowerSeries out(Variable::q, truncation);
  for (const auto& [eta, c] : s.terms()) {
    if (eta.size() != 1) throw precondition_error("power series view needs a rank-one curve lattice");
    if (eta[0] < 0) throw precondition_error("negative curve class in a power series view");
    if (eta[0] <= truncation) out[static_cast<int>(eta[0])] = c;
  }
  return out;
}

}  // namespace mirror::quantum
