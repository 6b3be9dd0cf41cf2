#pragma once

#include <json.hpp>

#include "repst/algebras.hpp"
#include "repst/fiber.hpp"

namespace repst {

using Json = nlohmann::ordered_json;

Json to_json(const SetPartition& p);
SetPartition partition_from_json(const Json& j);

/// {"num": "..", "den": ".."} with decimal strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"coeffs": [Rational...]} ascending.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Rational, Poly or {"num": Poly, "den": Poly} by kind. The reader also
/// accepts a plain string such as "(t^2-t)/2".
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"dom", "cod", "terms": [{"blocks", "coeff"}]}, terms in canonical order.
Json to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j);

Json to_json(const KObject& x);
KObject kobject_from_json(const Json& j);

/// {"ambient", "subgroup": [cycles...], "idem", "mult", "unit"}
Json to_json(const AlgebraObject& a);
AlgebraObject algebra_from_json(const Json& j);

/// {"rows", "cols", "entries": [[r, c, Rational]...]}
Json to_json(const FiberMatrix& m);

}  // namespace repst
