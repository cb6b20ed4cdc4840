#include "mirror/grassmann.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mirror::intersection {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw precondition_error("partition with a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw precondition_error("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits_in_box(rows, cols)) throw precondition_error("partition " + to_string() + " does not fit the box");
  std::vector<int> out(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<size_t>(i)] = cols - (*this)[rows - 1 - i];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 0; p <= bound; ++p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Monomial polynomials

namespace {

int total_degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

void add_monomial(MonomialPoly& p, const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

MonomialPoly poly_add(const MonomialPoly& a, const MonomialPoly& b) {
  MonomialPoly out = a;
  for (const auto& [e, c] : b) add_monomial(out, e, c);
  return out;
}

MonomialPoly poly_multiply(const MonomialPoly& a, const MonomialPoly& b) { return poly_multiply(a, b, -1); }

MonomialPoly poly_multiply(const MonomialPoly& a, const MonomialPoly& b, int max_degree) {
  MonomialPoly out;
  std::vector<int> e;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea.size() != eb.size()) throw precondition_error("monomials in different numbers of variables");
      e.resize(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (max_degree >= 0 && total_degree(e) > max_degree) continue;
      add_monomial(out, e, ca * cb);
    }
  }
  return out;
}

MonomialPoly poly_constant(int variables, const Rational& value) {
  MonomialPoly out;
  add_monomial(out, std::vector<int>(static_cast<size_t>(variables), 0), value);
  return out;
}

MonomialPoly complete_symmetric(int variables, int m) {
  MonomialPoly out;
  if (m < 0) return out;
  std::vector<int> e(static_cast<size_t>(variables), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == variables - 1) {
      e[static_cast<size_t>(i)] = left;
      add_monomial(out, e, 1);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  if (variables == 0) return m == 0 ? poly_constant(0, 1) : out;
  rec(rec, 0, m);
  return out;
}

MonomialPoly elementary_symmetric(int variables, int m) {
  MonomialPoly out;
  if (m < 0 || m > variables) return out;
  std::vector<int> e(static_cast<size_t>(variables), 0);
  std::fill(e.end() - m, e.end(), 1);
  do add_monomial(out, e, 1);
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MonomialPoly schur_polynomial(int variables, const Partition& lambda) {
  const int l = lambda.length();
  if (l > variables) return {};
  if (l == 0) return poly_constant(variables, 1);
  // det(h_{lambda_i - i + j}) by the Leibniz expansion; l is small here.
  std::vector<int> perm(static_cast<size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  MonomialPoly out;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inversions += perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)];
    MonomialPoly term = poly_constant(variables, inversions % 2 ? -1 : 1);
    for (int i = 0; i < l && !term.empty(); ++i) {
      term = poly_multiply(term, complete_symmetric(variables, lambda[i] - i + perm[static_cast<size_t>(i)]));
    }
    out = poly_add(out, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Vandermonde a_delta = prod_{i<j} (x_i - x_j).
MonomialPoly vandermonde(int variables) {
  MonomialPoly out = poly_constant(variables, 1);
  for (int i = 0; i < variables; ++i) {
    for (int j = i + 1; j < variables; ++j) {
      MonomialPoly factor;
      std::vector<int> e(static_cast<size_t>(variables), 0);
      e[static_cast<size_t>(i)] = 1;
      add_monomial(factor, e, 1);
      e[static_cast<size_t>(i)] = 0;
      e[static_cast<size_t>(j)] = 1;
      add_monomial(factor, e, -1);
      out = poly_multiply(out, factor);
    }
  }
  return out;
}

bool is_symmetric(const MonomialPoly& f, int variables) {
  for (int i = 0; i + 1 < variables; ++i) {
    for (const auto& [e, c] : f) {
      std::vector<int> swapped = e;
      std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
      auto it = f.find(swapped);
      if (it == f.end() || it->second != c) return false;
    }
  }
  return true;
}

// Schur expansion of a symmetric f: the coefficient of s_nu is the
// coefficient of x^{nu + delta} in f * a_delta.
std::map<Partition, Rational> schur_expansion(const MonomialPoly& f, int variables) {
  std::map<Partition, Rational> out;
  const MonomialPoly g = poly_multiply(f, vandermonde(variables));
  for (const auto& [e, c] : g) {
    bool decreasing = true;
    for (size_t i = 0; i + 1 < e.size(); ++i) decreasing = decreasing && e[i] > e[i + 1];
    if (!decreasing) continue;
    std::vector<int> nu(e.size());
    for (size_t i = 0; i < e.size(); ++i) nu[i] = e[i] - static_cast<int>(e.size() - 1 - i);
    out[Partition(std::move(nu))] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void check_ambient_args(int k, int n) {
  if (k < 1 || n <= k) throw precondition_error("Gr(k, n) needs 1 <= k < n");
}

}  // namespace

// ---------------------------------------------------------------------------
// Schubert structure constants

const std::map<Partition, Rational>& schubert_product(int k, int n, const Partition& lambda, const Partition& mu) {
  using Key = std::tuple<int, int, Partition, Partition>;
  static std::mutex mutex;
  static std::map<Key, std::map<Partition, Rational>> cache;
  Key key{k, n, std::min(lambda, mu), std::max(lambda, mu)};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const MonomialPoly product = poly_multiply(schur_polynomial(k, lambda), schur_polynomial(k, mu));
  std::map<Partition, Rational> table = schur_expansion(product, k);
  std::erase_if(table, [&](const auto& kv) { return !kv.first.fits_in_box(k, n - k); });
  std::lock_guard lock(mutex);
  return cache.try_emplace(std::move(key), std::move(table)).first->second;
}

// ---------------------------------------------------------------------------
// GrassmannClass

GrassmannClass::GrassmannClass(int k, int n) : k_(k), n_(n) { check_ambient_args(k, n); }

GrassmannClass GrassmannClass::schubert(int k, int n, const Partition& lambda, const Rational& coeff) {
  GrassmannClass out(k, n);
  if (!lambda.fits_in_box(k, n - k)) {
    throw precondition_error("partition " + lambda.to_string() + " outside the box of Gr(" + std::to_string(k) + "," +
                             std::to_string(n) + ")");
  }
  out.add_term(lambda, coeff);
  return out;
}

GrassmannClass GrassmannClass::special_column(int k, int n, int i) {
  if (i > k) return GrassmannClass(k, n);
  return schubert(k, n, Partition(std::vector<int>(static_cast<size_t>(i), 1)));
}

GrassmannClass GrassmannClass::from_symmetric(int k, int n, const MonomialPoly& f) {
  check_ambient_args(k, n);
  for (const auto& [e, c] : f)
    if (static_cast<int>(e.size()) != k) throw precondition_error("polynomial must be in k variables");
  if (!is_symmetric(f, k)) throw precondition_error("polynomial is not symmetric");
  GrassmannClass out(k, n);
  for (const auto& [lambda, c] : schur_expansion(f, k))
    if (lambda.fits_in_box(k, n - k)) out.add_term(lambda, c);
  return out;
}

Rational GrassmannClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

GrassmannClass GrassmannClass::homogeneous(int d) const {
  GrassmannClass out(k_, n_);
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == d) out.terms_.emplace(lambda, c);
  return out;
}

void GrassmannClass::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GrassmannClass::check_ambient(const GrassmannClass& o) const {
  if (k_ != o.k_ || n_ != o.n_) {
    throw precondition_error("classes on Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ") and Gr(" +
                             std::to_string(o.k_) + "," + std::to_string(o.n_) + ")");
  }
}

GrassmannClass& GrassmannClass::operator+=(const GrassmannClass& o) {
  check_ambient(o);
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

GrassmannClass& GrassmannClass::operator-=(const GrassmannClass& o) {
  check_ambient(o);
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

GrassmannClass& GrassmannClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= s;
  return *this;
}

GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b) {
  a.check_ambient(b);
  GrassmannClass out(a.k_, a.n_);
  const int top = a.dimension();
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      if (la.size() + lb.size() > top) continue;
      for (const auto& [nu, c] : schubert_product(a.k_, a.n_, la, lb)) out.add_term(nu, ca * cb * c);
    }
  }
  return out;
}

std::string GrassmannClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    os << (first ? "" : " + ") << mirror::to_string(c) << "*s" << lambda.to_string();
    first = false;
  }
  return os.str();
}

GrassmannClass pieri_mult(const GrassmannClass& a, const GrassmannClass& b) { return a * b; }

Rational integrate(const GrassmannClass& a) {
  return a.coefficient(Partition(std::vector<int>(static_cast<size_t>(a.k()), a.n() - a.k())));
}

// ---------------------------------------------------------------------------
// Chern classes

GrassmannClass ChernVector::c(int i) const {
  if (chern_classes.empty()) throw precondition_error("Chern vector without an ambient space");
  const GrassmannClass& any = chern_classes.front();
  if (i == 0) return GrassmannClass::one(any.k(), any.n());
  if (i < 0 || i > rank) return GrassmannClass(any.k(), any.n());
  return chern_classes[static_cast<size_t>(i - 1)];
}

GrassmannClass ChernVector::total() const {
  GrassmannClass out = c(0);
  for (const auto& ci : chern_classes) out += ci;
  return out;
}

ChernVector dual_tautological(int k, int n) {
  ChernVector out{k, {}};
  for (int i = 1; i <= k; ++i) out.chern_classes.push_back(GrassmannClass::special_column(k, n, i));
  return out;
}

MonomialPoly to_elementary(const MonomialPoly& symmetric, int variables) {
  if (!is_symmetric(symmetric, variables)) throw precondition_error("polynomial is not symmetric");
  std::vector<MonomialPoly> e;
  for (int i = 1; i <= variables; ++i) e.push_back(elementary_symmetric(variables, i));
  MonomialPoly rest = symmetric;
  MonomialPoly out;
  while (!rest.empty()) {
    // The lex-largest monomial of a symmetric polynomial has weakly
    // decreasing exponents a; e_1^{a1-a2} ... e_r^{ar} has the same leader.
    const auto& [a, c] = *rest.rbegin();
    std::vector<int> b(static_cast<size_t>(variables));
    MonomialPoly product = poly_constant(variables, c);
    for (int i = 0; i < variables; ++i) {
      const int next = i + 1 < variables ? a[static_cast<size_t>(i) + 1] : 0;
      b[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - next;
      for (int p = 0; p < b[static_cast<size_t>(i)]; ++p) product = poly_multiply(product, e[static_cast<size_t>(i)]);
    }
    add_monomial(out, b, c);
    for (auto& [m, v] : product) v = -v;
    rest = poly_add(rest, product);
  }
  return out;
}

std::vector<MonomialPoly> sym_power_chern_polynomials(int rank, int k, int max_degree) {
  if (rank < 1 || k < 1) throw precondition_error("symmetric power needs rank >= 1 and k >= 1");
  // Formal roots sum_i m_i y_i over multi-indices |m| = k.
  MonomialPoly total = poly_constant(rank, 1);
  std::vector<int> m(static_cast<size_t>(rank), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rank - 1) {
      m[static_cast<size_t>(i)] = left;
      MonomialPoly factor = poly_constant(rank, 1);
      for (int j = 0; j < rank; ++j) {
        std::vector<int> e(static_cast<size_t>(rank), 0);
        e[static_cast<size_t>(j)] = 1;
        add_monomial(factor, e, m[static_cast<size_t>(j)]);
      }
      total = poly_multiply(total, factor, max_degree);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      m[static_cast<size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  std::vector<MonomialPoly> out(static_cast<size_t>(max_degree) + 1);
  for (const auto& [b, c] : to_elementary(total, rank)) {
    int weight = 0;
    for (size_t i = 0; i < b.size(); ++i) weight += static_cast<int>(i + 1) * b[i];
    out.at(static_cast<size_t>(weight))[b] += c;
  }
  return out;
}

ChernVector chern_sym_power(const ChernVector& c, int k) {
  if (k < 1) throw precondition_error("symmetric power needs k >= 1");
  if (c.rank < 1 || static_cast<int>(c.chern_classes.size()) != c.rank) {
    throw precondition_error("Chern vector length must equal its rank");
  }
  const GrassmannClass one = c.c(0);
  const int new_rank = static_cast<int>(binomial(c.rank + k - 1, k).get_si());
  const int top = std::min(new_rank, one.dimension());
  const auto polys = sym_power_chern_polynomials(c.rank, k, top);
  ChernVector out{new_rank, {}};
  for (int d = 1; d <= new_rank; ++d) {
    out.chern_classes.push_back(d <= top ? evaluate_chern_polynomial(polys[static_cast<size_t>(d)], c.chern_classes, one)
                                         : GrassmannClass(one.k(), one.n()));
  }
  return out;
}

ChernVector chern_direct_sum(const ChernVector& a, const ChernVector& b) {
  const GrassmannClass total = a.total() * b.total();
  ChernVector out{a.rank + b.rank, {}};
  for (int d = 1; d <= out.rank; ++d) out.chern_classes.push_back(total.homogeneous(d));
  return out;
}

// ---------------------------------------------------------------------------
// Projective bundles

std::shared_ptr<const ProjectiveBundle> ProjectiveBundle::create(int k, int n, ChernVector e) {
  check_ambient_args(k, n);
  if (e.rank < 1 || static_cast<int>(e.chern_classes.size()) != e.rank) {
    throw precondition_error("projective bundle needs a Chern vector of positive rank");
  }
  return std::shared_ptr<const ProjectiveBundle>(new ProjectiveBundle(k, n, std::move(e)));
}

ProjBundleClass ProjectiveBundle::lift(const GrassmannClass& base) const {
  std::vector<GrassmannClass> c(static_cast<size_t>(rank()), GrassmannClass(k_, n_));
  c[0] = base;
  return ProjBundleClass(shared_from_this(), std::move(c));
}

ProjBundleClass ProjectiveBundle::xi() const {
  std::vector<GrassmannClass> c(static_cast<size_t>(rank()), GrassmannClass(k_, n_));
  if (rank() == 1) {
    // xi = -c_1(E) when E is a line bundle.
    c[0] = -e_.c(1);
  } else {
    c[1] = GrassmannClass::one(k_, n_);
  }
  return ProjBundleClass(shared_from_this(), std::move(c));
}

GrassmannClass ProjectiveBundle::pushforward(const ProjBundleClass& a) const {
  if (&a.bundle() != this) throw precondition_error("class lives on a different projective bundle");
  return a.coefficients().back();
}

Rational ProjectiveBundle::integrate(const ProjBundleClass& a) const { return intersection::integrate(pushforward(a)); }

ProjBundleClass::ProjBundleClass(std::shared_ptr<const ProjectiveBundle> bundle, std::vector<GrassmannClass> coefficients)
    : bundle_(std::move(bundle)), coeffs_(std::move(coefficients)) {
  if (static_cast<int>(coeffs_.size()) != bundle_->rank()) {
    throw precondition_error("normal form needs exactly rank(E) base coefficients");
  }
}

bool ProjBundleClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GrassmannClass& c) { return c.is_zero(); });
}

ProjBundleClass ProjBundleClass::homogeneous(int d) const {
  ProjBundleClass out = *this;
  for (size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j].homogeneous(d - static_cast<int>(j));
  return out;
}

void ProjBundleClass::check_bundle(const ProjBundleClass& o) const {
  if (bundle_ != o.bundle_) throw precondition_error("classes on different projective bundles");
}

ProjBundleClass& ProjBundleClass::operator+=(const ProjBundleClass& o) {
  check_bundle(o);
  for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

ProjBundleClass& ProjBundleClass::operator-=(const ProjBundleClass& o) {
  check_bundle(o);
  for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

ProjBundleClass operator*(ProjBundleClass a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

ProjBundleClass operator*(const ProjBundleClass& a, const ProjBundleClass& b) {
  a.check_bundle(b);
  const ProjectiveBundle& p = *a.bundle_;
  const size_t r = a.coeffs_.size();
  std::vector<GrassmannClass> wide(2 * r - 1, GrassmannClass(p.k(), p.n()));
  for (size_t i = 0; i < r; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < r; ++j)
      if (!b.coeffs_[j].is_zero()) wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // xi^r = -sum_{i>=1} c_i(E) xi^{r-i}, applied from the top down.
  for (size_t top = wide.size(); top-- > r;) {
    if (wide[top].is_zero()) continue;
    const GrassmannClass lead = wide[top];
    for (size_t i = 1; i <= r; ++i) wide[top - i] -= lead * p.bundle().c(static_cast<int>(i));
  }
  wide.resize(r, GrassmannClass(p.k(), p.n()));
  return ProjBundleClass(a.bundle_, std::move(wide));
}

ProjBundleClass twisted_total_chern(const ProjectiveBundle& p, const ChernVector& f, const ProjBundleClass& ell) {
  std::vector<ProjBundleClass> ell_powers{p.one()};
  for (int i = 1; i <= f.rank; ++i) ell_powers.push_back(ell_powers.back() * ell);
  ProjBundleClass total = p.lift(GrassmannClass(p.k(), p.n()));
  for (int d = 0; d <= f.rank; ++d) {
    for (int i = 0; i <= d; ++i) {
      const Rational coeff(binomial(f.rank - i, d - i));
      total += p.lift(f.c(i)) * ell_powers[static_cast<size_t>(d - i)] * coeff;
    }
  }
  return total;
}

ProjBundleClass inverse_total(const ProjBundleClass& total) {
  const ProjectiveBundle& p = total.bundle();
  if (total.homogeneous(0) != p.one()) throw precondition_error("total Chern class must start with 1");
  const ProjBundleClass minus_n = (total - p.one()) * Rational(-1);
  ProjBundleClass out = p.one();
  ProjBundleClass power = p.one();
  for (int k = 1; k <= p.dimension(); ++k) {
    power = power * minus_n;
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

}  // namespace mirror::intersection
