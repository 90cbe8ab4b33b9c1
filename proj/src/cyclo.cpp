#include "skeinrep/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

namespace skeinrep {

namespace {

using IntPoly = std::vector<long>;

// Exact division of monic integer polynomials (low-to-high coefficients).
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

IntPoly cyclotomic_poly(int n) {
  static std::map<int, IntPoly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_poly(d));
  }
  memo[n] = p;
  return p;
}

using RatPoly = std::vector<mpq_class>;

void strip(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// (quotient, remainder) of a / b, b nonzero and stripped.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  strip(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strip(a);
  }
  return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  strip(out);
  return out;
}

bool all_zero(const std::vector<mpq_class>& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

}  // namespace

Level::Level(int r) : r_(r) {
  if (r < 3) throw std::invalid_argument("level r must be >= 3, got " + std::to_string(r));
}

std::shared_ptr<const FieldContext> FieldContext::get(int r) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FieldContext>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(r); it != cache.end()) return it->second;
  Level{r};
  auto f = std::make_shared<FieldContext>();
  f->r = r;
  f->order = 4 * r;
  f->cyclotomic = cyclotomic_poly(f->order);
  f->degree = static_cast<int>(f->cyclotomic.size()) - 1;
  const int d = f->degree;
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < f->order; ++k) {
    f->power_table.push_back(cur);
    // multiply by zeta
    const long top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) cur[i] -= top * f->cyclotomic[i];
  }
  // eta^2 = -(A^2 - A^{-2})^2 / (2r)
  std::vector<mpq_class> diff(d, mpq_class(0));
  for (int i = 0; i < d; ++i)
    diff[i] = f->power_table[2][i] - f->power_table[f->order - 2][i];
  std::vector<mpq_class> sq(d, mpq_class(0)), scratch;
  CycloScalar::mul_into(*f, diff, diff, sq, scratch);
  const mpq_class scale(-1, 2 * r);
  for (auto& c : sq) c *= scale;
  f->eta_squared = sq;
  cache[r] = f;
  return f;
}

void CycloScalar::mul_into(const FieldContext& f, const std::vector<mpq_class>& x,
                           const std::vector<mpq_class>& y, std::vector<mpq_class>& acc,
                           std::vector<mpq_class>& scratch) {
  const int d = f.degree;
  scratch.assign(2 * d - 1, mpq_class(0));
  mpq_class t;
  for (int i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
      scratch[i + j] += t;
    }
  }
  for (int i = 0; i < d; ++i) acc[i] += scratch[i];
  for (int k = d; k < 2 * d - 1; ++k) {
    if (sgn(scratch[k]) == 0) continue;
    const auto& red = f.power_table[k];
    for (int i = 0; i < d; ++i) {
      if (red[i] == 0) continue;
      acc[i] += scratch[k] * red[i];
    }
  }
}

CycloScalar::CycloScalar(long v) {
  if (v != 0) base_.emplace_back(v);
}

CycloScalar::CycloScalar(const mpq_class& q) {
  if (sgn(q) == 0) return;
  base_.push_back(q);
  base_.back().canonicalize();
}

CycloScalar CycloScalar::zero(const Level& L) {
  CycloScalar z;
  z.field_ = FieldContext::get(L.r());
  return z;
}

CycloScalar CycloScalar::one(const Level& L) { return a_power(L, 0); }

CycloScalar CycloScalar::a_power(const Level& L, long k) {
  CycloScalar z = zero(L);
  const int n = z.field_->order;
  long e = k % n;
  if (e < 0) e += n;
  const auto& row = z.field_->power_table[e];
  z.base_.assign(row.begin(), row.end());
  z.trim();
  return z;
}

CycloScalar CycloScalar::eta(const Level& L) {
  CycloScalar z = zero(L);
  z.eta_.assign(z.field_->degree, mpq_class(0));
  z.eta_[0] = 1;
  return z;
}

CycloScalar CycloScalar::from_parts(const Level& L, std::vector<mpq_class> base,
                                    std::vector<mpq_class> eta_part) {
  CycloScalar z = zero(L);
  const std::size_t d = z.field_->degree;
  if (base.size() > d || eta_part.size() > d)
    throw std::invalid_argument("coefficient vector longer than phi(4r)");
  base.resize(d, mpq_class(0));
  eta_part.resize(d, mpq_class(0));
  for (auto& q : base) q.canonicalize();
  for (auto& q : eta_part) q.canonicalize();
  z.base_ = std::move(base);
  z.eta_ = std::move(eta_part);
  z.trim();
  return z;
}

void CycloScalar::trim() {
  if (!base_.empty() && all_zero(base_)) base_.clear();
  if (!eta_.empty() && all_zero(eta_)) eta_.clear();
}

void CycloScalar::adopt(const CycloScalar& o) {
  if (!o.field_) return;
  if (field_) {
    if (field_ != o.field_)
      throw LevelMismatch("scalars at levels " + std::to_string(field_->r) + " and " +
                          std::to_string(o.field_->r));
    return;
  }
  field_ = o.field_;
  if (!base_.empty()) base_.resize(field_->degree, mpq_class(0));
}

bool CycloScalar::is_rational() const {
  if (!eta_.empty()) return false;
  for (std::size_t i = 1; i < base_.size(); ++i)
    if (sgn(base_[i]) != 0) return false;
  return true;
}

mpq_class CycloScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational");
  return base_.empty() ? mpq_class(0) : base_[0];
}

std::vector<mpq_class> CycloScalar::base_coefficients() const {
  std::vector<mpq_class> v = base_;
  v.resize(field_ ? field_->degree : 1, mpq_class(0));
  return v;
}

std::vector<mpq_class> CycloScalar::eta_coefficients() const {
  std::vector<mpq_class> v = eta_;
  v.resize(field_ ? field_->degree : 1, mpq_class(0));
  return v;
}

namespace {
void add_vec(std::vector<mpq_class>& dst, const std::vector<mpq_class>& src, std::size_t d,
             bool subtract) {
  if (src.empty()) return;
  if (dst.empty()) dst.assign(d, mpq_class(0));
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (sgn(src[i]) == 0) continue;
    if (subtract)
      dst[i] -= src[i];
    else
      dst[i] += src[i];
  }
}
}  // namespace

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (o.is_zero()) {
    adopt(o);
    return *this;
  }
  CycloScalar rhs = o;
  rhs.adopt(*this);
  adopt(rhs);
  const std::size_t d = field_ ? field_->degree : 1;
  add_vec(base_, rhs.base_, d, false);
  add_vec(eta_, rhs.eta_, d, false);
  trim();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  if (o.is_zero()) {
    adopt(o);
    return *this;
  }
  CycloScalar rhs = o;
  rhs.adopt(*this);
  adopt(rhs);
  const std::size_t d = field_ ? field_->degree : 1;
  add_vec(base_, rhs.base_, d, true);
  add_vec(eta_, rhs.eta_, d, true);
  trim();
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar z = *this;
  for (auto& c : z.base_) c = -c;
  for (auto& c : z.eta_) c = -c;
  return z;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  CycloScalar out;
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw LevelMismatch("scalars at levels " + std::to_string(a.field_->r) + " and " +
                        std::to_string(b.field_->r));
  out.field_ = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return out;
  // level-free constant times anything: scale coefficients
  if (!a.field_ || !b.field_) {
    const CycloScalar& c = a.field_ ? b : a;
    const CycloScalar& v = a.field_ ? a : b;
    const mpq_class& q = c.base_[0];
    out.base_ = v.base_;
    out.eta_ = v.eta_;
    for (auto& x : out.base_) x *= q;
    for (auto& x : out.eta_) x *= q;
    return out;
  }
  const FieldContext& f = *out.field_;
  const std::size_t d = f.degree;
  std::vector<mpq_class> scratch;
  if (!a.base_.empty() && !b.base_.empty()) {
    out.base_.assign(d, mpq_class(0));
    CycloScalar::mul_into(f, a.base_, b.base_, out.base_, scratch);
  }
  if (!a.eta_.empty() && !b.eta_.empty()) {
    std::vector<mpq_class> ee(d, mpq_class(0));
    CycloScalar::mul_into(f, a.eta_, b.eta_, ee, scratch);
    if (out.base_.empty()) out.base_.assign(d, mpq_class(0));
    CycloScalar::mul_into(f, ee, f.eta_squared, out.base_, scratch);
  }
  if (!a.base_.empty() && !b.eta_.empty()) {
    out.eta_.assign(d, mpq_class(0));
    CycloScalar::mul_into(f, a.base_, b.eta_, out.eta_, scratch);
  }
  if (!a.eta_.empty() && !b.base_.empty()) {
    if (out.eta_.empty()) out.eta_.assign(d, mpq_class(0));
    CycloScalar::mul_into(f, a.eta_, b.base_, out.eta_, scratch);
  }
  out.trim();
  return out;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) return false;
  if (a.field_ == b.field_) return a.base_ == b.base_ && a.eta_ == b.eta_;
  // one side is a level-free constant
  const CycloScalar& c = a.field_ ? b : a;
  const CycloScalar& v = a.field_ ? a : b;
  if (!v.is_rational()) return false;
  return v.rational_value() == (c.base_.empty() ? mpq_class(0) : c.base_[0]);
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  if (!field_) return CycloScalar(mpq_class(1) / base_[0]);
  const FieldContext& f = *field_;
  const Level L(f.r);
  auto base_inverse = [&](const std::vector<mpq_class>& b) {
    RatPoly phi(f.cyclotomic.begin(), f.cyclotomic.end());
    RatPoly r0 = phi, r1 = b;
    strip(r1);
    RatPoly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
      auto [q, rem] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi is irreducible
    if (r0.size() != 1) throw DivisionByZero("non-invertible cyclotomic element");
    auto [q, rem] = divmod(s0, phi);
    for (auto& c : rem) c /= r0[0];
    std::vector<mpq_class> out(f.degree, mpq_class(0));
    for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i];
    return from_parts(L, out, {});
  };
  if (eta_.empty()) return base_inverse(base_);
  // (b + e eta)^{-1} = (b - e eta) / (b^2 - e^2 eta^2)
  CycloScalar b = from_parts(L, base_, {});
  CycloScalar e = from_parts(L, eta_, {});
  CycloScalar eta2 = from_parts(L, f.eta_squared, {});
  CycloScalar norm = b * b - e * e * eta2;
  if (norm.is_zero())
    throw DivisionByZero("zero divisor in Q(zeta)[eta]: eta^2 is a square at r=" +
                         std::to_string(f.r));
  CycloScalar conj = b - e * eta(L);
  return conj * base_inverse(norm.base_);
}

CycloScalar CycloScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloScalar result(1L);
  if (field_) result = one(Level(field_->r));
  CycloScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::complex<long double> CycloScalar::numeric() const {
  using C = std::complex<long double>;
  if (!field_) return C(base_.empty() ? 0.0L : static_cast<long double>(base_[0].get_d()), 0);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const int n = field_->order;
  auto eval = [&](const std::vector<mpq_class>& v) {
    C s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      const long double c = static_cast<long double>(v[i].get_d());
      s += c * std::polar(1.0L, two_pi * static_cast<long double>(i) / n);
    }
    return s;
  };
  const long double r = field_->r;
  const long double eta_num = std::sqrt(2.0L / r) * std::sin(std::numbers::pi_v<long double> / r);
  return eval(base_) + eta_num * eval(eta_);
}

std::string CycloScalar::to_string() const {
  auto poly = [](const std::vector<mpq_class>& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      mpq_class c = v[i];
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      mpq_class a = abs(c);
      if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
      if (i == 1) os << "A";
      else if (i > 1) os << "A^" << i;
    }
    return first ? std::string("0") : os.str();
  };
  if (is_zero()) return "0";
  std::string s;
  if (!base_.empty()) s = poly(base_);
  if (!eta_.empty()) {
    if (!s.empty()) s += " + ";
    s += "eta*(" + poly(eta_) + ")";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.to_string(); }

std::complex<long double> embed_numeric(const CycloScalar& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  auto z = x.numeric();
  if (digits >= 18) return z;
  const long double scale = std::pow(10.0L, digits);
  auto rnd = [&](long double v) { return std::round(v * scale) / scale; };
  return {rnd(z.real()), rnd(z.imag())};
}

CycloScalar field_arith(const CycloScalar& x, const CycloScalar& y, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return x + y;
    case FieldOp::Sub: return x - y;
    case FieldOp::Mul: return x * y;
    case FieldOp::Div: return x / y;
  }
  return {};
}

CycloScalar power_of_A(long k, const Level& L) { return CycloScalar::a_power(L, k); }

CycloScalar loop_value(const Level& L) {
  return -(CycloScalar::a_power(L, 2) + CycloScalar::a_power(L, -2));
}

}  // namespace skeinrep
