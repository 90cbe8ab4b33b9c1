#pragma once

// JSON forms of exact scalars and matrices.
//
// Scalar: {"r": r, "base": [[num, den], ...], "eta": [[num, den], ...]} with
// entry i the coefficient of zeta_{4r}^i (and of eta * zeta_{4r}^i).  Both
// arrays have length phi(4r); r = 0 marks a rational constant with no level.
// Integers that do not fit in 64 bits are written as decimal strings.

#include <complex>
#include <string>

#include "json.hpp"
#include "skeinrep/linalg.hpp"

namespace skeinrep {

using json = nlohmann::json;

json scalar_to_json(const CycloScalar& x);
CycloScalar scalar_from_json(const json& j);

/// Array of rows.
json matrix_to_json(const RepMatrix& m);
RepMatrix matrix_from_json(const json& j);

json vector_to_json(const CycloVector& v);

/// [re, im] rounded to `digits` decimal places.
json numeric_to_json(const CycloScalar& x, int digits);
json matrix_numeric_json(const RepMatrix& m, int digits);

/// "re+imi", or "re" when the imaginary part rounds to zero.
std::string format_numeric(const CycloScalar& x, int digits);

}  // namespace skeinrep
