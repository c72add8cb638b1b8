// JSON serialization for scalars, elements, CDGA/Lie/action/lattice files.
#pragma once

#include <json.hpp>

#include "cdgalab/cdga.hpp"
#include "cdgalab/geomcheck.hpp"

namespace cdgalab::io {

using nlohmann::json;

// Scalars: rationals as "p/q" strings, cyclotomics as {"order", "coeffs"}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// Monomials as arrays of generator names, exponents > 1 as [name, exp].
json monomial_to_json(const Algebra& alg, const Monomial& m);
Monomial monomial_from_json(const Algebra& alg, const json& j);

// Elements as [{"coeff": Scalar, "monomial": [...]}, ...]; reading also
// accepts an expression string such as "x1^x2 + 2*x3^x4".
json element_to_json(const GcaElement& a);
GcaElement element_from_json(const AlgebraPtr& alg, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"field": n?, "generators": [{"name","degree"}...], "differential":
//  {gen: element...}, "conjugation": {gen: gen}?, "cap": k?}
CdgaPtr cdga_from_json(const json& j);
json cdga_to_json(const CdgaPtr& c);

// {"dimension": n, "brackets": [{"i": i, "j": j, "coeffs": {"k": Scalar}}...]}
// with 1-based indices.
LieAlgebraPresentation lie_from_json(const json& j);

// {"order": n, "images": {gen: element}}
GroupAction action_from_json(const CdgaPtr& c, const json& j);

// {"coords": [{"exponent": e, "twist": null | {"by": k} |
//  {"translate_of": k, "times": k}}...], "window": w?}
LatticeModel lattice_from_json(const json& j);

}  // namespace cdgalab::io
