#include "skeinrep/io.hpp"

#include <cstdio>
#include <limits>

namespace skeinrep {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("scalar json: coefficient must be an integer or decimal string");
}

json coeffs_to_json(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}));
  return a;
}

std::vector<mpq_class> coeffs_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar json: coefficients must be an array");
  std::vector<mpq_class> v;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("scalar json: coefficient must be [num, den]");
    const mpz_class den = integer_from_json(p[1]);
    if (den == 0) throw std::invalid_argument("scalar json: zero denominator");
    mpq_class q(integer_from_json(p[0]), den);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

std::string format_real(long double x, int digits) {
  if (x == 0) x = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

}  // namespace

json scalar_to_json(const CycloScalar& x) {
  json j;
  j["r"] = x.level();
  j["base"] = coeffs_to_json(x.base_coefficients());
  j["eta"] = coeffs_to_json(x.eta_coefficients());
  return j;
}

CycloScalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("base"))
    throw std::invalid_argument("scalar json: expected an object with r and base");
  const int r = j.at("r").get<int>();
  auto base = coeffs_from_json(j.at("base"));
  std::vector<mpq_class> eta;
  if (j.contains("eta")) eta = coeffs_from_json(j.at("eta"));
  if (r == 0) {
    if (base.size() > 1 || (!eta.empty() && (eta.size() > 1 || eta[0] != 0)))
      throw std::invalid_argument("scalar json: a level-free scalar must be rational");
    return base.empty() ? CycloScalar(0L) : CycloScalar(base[0]);
  }
  return CycloScalar::from_parts(Level(r), std::move(base), std::move(eta));
}

json matrix_to_json(const RepMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RepMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix json: expected an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto m = n == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(j[0].size());
  RepMatrix out(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != m)
      throw std::invalid_argument("matrix json: ragged rows");
    for (Eigen::Index k = 0; k < m; ++k) out(i, k) = scalar_from_json(j[i][k]);
  }
  return out;
}

json vector_to_json(const CycloVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(scalar_to_json(v(i)));
  return a;
}

json numeric_to_json(const CycloScalar& x, int digits) {
  const auto z = embed_numeric(x, digits);
  // Round-trip through the printed form so the output does not depend on
  // the last bits of the embedding.
  return json::array({std::stod(format_real(z.real(), digits)), std::stod(format_real(z.imag(), digits))});
}

json matrix_numeric_json(const RepMatrix& m, int digits) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(numeric_to_json(m(i, j), digits));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_numeric(const CycloScalar& x, int digits) {
  const auto z = embed_numeric(x, digits);
  std::string re = format_real(z.real(), digits);
  std::string im = format_real(z.imag(), digits);
  if (im == "0") return re;
  if (im[0] != '-') im = "+" + im;
  return re + im + "i";
}

}  // namespace skeinrep
