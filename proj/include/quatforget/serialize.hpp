#ifndef QUATFORGET_SERIALIZE_HPP
#define QUATFORGET_SERIALIZE_HPP

#include "quatforget/atkin_lehner.hpp"
#include "quatforget/eichler.hpp"

#include <json.hpp>

namespace qf {

using Json = nlohmann::ordered_json;

// Integers and rationals are JSON integers when they fit in int64 with
// denominator 1, otherwise strings "p" or "p/q". Parsing accepts both.
Json to_json(const Integer& n);
Json to_json(const Rat& x);
Integer integer_from_json(const Json& j);
Rat rat_from_json(const Json& j);

/// [x, y, z, t]
Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const QuaternionAlgebra& alg, const Json& j);

Json to_json(const QuaternionAlgebra& alg);
QuaternionAlgebra algebra_from_json(const Json& j);

/// {"alg": [a, b], "den": q, "rows": [[...], ...]}
Json to_json(const Lattice& lat);
Lattice lattice_from_json(const Json& j);

/// {"alg", "order", "ideal", "mu"}
Json to_json(const PrincipalDatum& datum);
PrincipalDatum datum_from_json(const Json& j);

/// {"d", "f", "g"}
Json to_json(const EichlerPair& pair);
EichlerPair pair_from_json(const Order& ord, const Json& j);

Json to_json(const ALSubgroup& group);
Json to_json(const DegreeReport& report);

} // namespace qf

#endif
