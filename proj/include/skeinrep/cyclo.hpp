#pragma once

// Exact arithmetic in Q(zeta_{4r})[eta], eta^2 = -(A^2 - A^{-2})^2 / (2r).
//
// An element is stored as two coefficient vectors in the power basis of
// zeta = A = e^{2 pi i / 4r}, reduced modulo the 4r-th cyclotomic polynomial:
// value = base + eta_part * eta.  Empty vectors denote zero.  Values with no
// level attached are rational constants; they promote on contact with a
// levelled value, which lets Eigen build Scalar(0) / Scalar(1) literals.

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinrep {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LevelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The level r >= 3; fixes A = e^{2 pi i / 4r}.
class Level {
 public:
  explicit Level(int r);
  int r() const { return r_; }
  int order() const { return 4 * r_; }
  int max_color() const { return r_ - 2; }
  int num_colors() const { return r_ - 1; }
  auto operator<=>(const Level&) const = default;

 private:
  int r_;
};

/// Per-level field tables, shared by every scalar at that level.
struct FieldContext {
  int r = 0;
  int order = 0;   // 4r
  int degree = 0;  // phi(4r)
  std::vector<long> cyclotomic;                     // monic, degree+1 coeffs
  std::vector<std::vector<long>> power_table;       // zeta^k mod Phi, k < order
  std::vector<mpq_class> eta_squared;               // base-field element

  static std::shared_ptr<const FieldContext> get(int r);
};

class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(long v);  // NOLINT: implicit rational literal
  CycloScalar(int v) : CycloScalar(static_cast<long>(v)) {}  // NOLINT
  CycloScalar(const mpq_class& q);  // NOLINT

  static CycloScalar zero(const Level& L);
  static CycloScalar one(const Level& L);
  /// A^k, exact; A^{4r} = 1.
  static CycloScalar a_power(const Level& L, long k);
  static CycloScalar eta(const Level& L);
  static CycloScalar from_parts(const Level& L, std::vector<mpq_class> base,
                                std::vector<mpq_class> eta_part);

  /// 0 for a level-free rational constant.
  int level() const { return field_ ? field_->r : 0; }
  bool is_zero() const { return base_.empty() && eta_.empty(); }
  bool has_eta() const { return !eta_.empty(); }
  bool is_rational() const;
  /// Requires is_rational().
  mpq_class rational_value() const;

  /// Coefficients padded to phi(4r) (or length 1 for constants).
  std::vector<mpq_class> base_coefficients() const;
  std::vector<mpq_class> eta_coefficients() const;

  CycloScalar inverse() const;
  CycloScalar pow(long k) const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
  }
  CycloScalar operator-() const;
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// Complex approximation: zeta -> e^{2 pi i/4r}, eta -> sqrt(2/r) sin(pi/r).
  std::complex<long double> numeric() const;
  std::string to_string() const;

  /// acc += x * y in the power basis (vectors of length phi(4r)).
  static void mul_into(const FieldContext& f, const std::vector<mpq_class>& x,
                       const std::vector<mpq_class>& y, std::vector<mpq_class>& acc,
                       std::vector<mpq_class>& scratch);

 private:
  void adopt(const CycloScalar& o);
  void trim();
  std::shared_ptr<const FieldContext> field_;
  std::vector<mpq_class> base_;
  std::vector<mpq_class> eta_;
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& x);

/// Numeric embedding, both parts rounded to `digits` decimal places
/// (unrounded from 18 on).
std::complex<long double> embed_numeric(const CycloScalar& x, int digits);

/// Ring operation dispatch used by the CLI and tests.
enum class FieldOp { Add, Sub, Mul, Div };
CycloScalar field_arith(const CycloScalar& x, const CycloScalar& y, FieldOp op);

/// A^k at level L.
CycloScalar power_of_A(long k, const Level& L);

/// Kauffman loop value delta = -A^2 - A^{-2}.
CycloScalar loop_value(const Level& L);

}  // namespace skeinrep

namespace Eigen {
template <>
struct NumTraits<skeinrep::CycloScalar> : GenericNumTraits<skeinrep::CycloScalar> {
  using Real = skeinrep::CycloScalar;
  using NonInteger = skeinrep::CycloScalar;
  using Nested = skeinrep::CycloScalar;
  using Literal = skeinrep::CycloScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 256
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen
