#include "quatforget/serialize.hpp"

#include "quatforget/errors.hpp"

namespace qf {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_of(const Json& j, std::size_t n, const char* what)
{
    if (!j.is_array() || j.size() != n)
        throw ParseError(std::string(what) + ": expected an array of length " + std::to_string(n));
    return j;
}

} // namespace

Json to_json(const Integer& n)
{
    if (fits_int64(n)) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(to_string(n));
}

Json to_json(const Rat& x)
{
    if (x.get_den() == 1) return to_json(Integer(x.get_num()));
    return Json(to_string(x));
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer");
}

Rat rat_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rat(integer_from_json(j));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational (integer or \"p/q\" string)");
}

Json to_json(const Quaternion& q)
{
    Json out = Json::array();
    for (const auto& c : q.coords()) out.push_back(to_json(c));
    return out;
}

Quaternion quaternion_from_json(const QuaternionAlgebra& alg, const Json& j)
{
    array_of(j, 4, "quaternion");
    return Quaternion(alg, {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3])});
}

Json to_json(const QuaternionAlgebra& alg) { return Json::array({to_json(alg.a()), to_json(alg.b())}); }

QuaternionAlgebra algebra_from_json(const Json& j)
{
    array_of(j, 2, "alg");
    try {
        return QuaternionAlgebra(rat_from_json(j[0]), rat_from_json(j[1]));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const Lattice& lat)
{
    Json rows = Json::array();
    for (const auto& r : lat.rows()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    Json out = Json::object();
    out["alg"] = to_json(lat.algebra());
    out["den"] = to_json(lat.den());
    out["rows"] = std::move(rows);
    return out;
}

Lattice lattice_from_json(const Json& j)
{
    QuaternionAlgebra alg = algebra_from_json(field(j, "alg"));
    Integer den = integer_from_json(field(j, "den"));
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) throw ParseError("rows: expected an array");
    std::vector<IntRow> parsed;
    for (const auto& r : rows) {
        array_of(r, 4, "row");
        parsed.push_back({integer_from_json(r[0]), integer_from_json(r[1]), integer_from_json(r[2]),
                          integer_from_json(r[3])});
    }
    if (den <= 0) throw ParseError("den must be positive");
    return Lattice::from_rows(alg, den, std::move(parsed));
}

Json to_json(const PrincipalDatum& datum)
{
    Json out = Json::object();
    out["alg"] = to_json(datum.algebra());
    out["order"] = to_json(datum.order().lattice());
    out["ideal"] = to_json(datum.ideal().lattice());
    out["mu"] = to_json(datum.mu());
    return out;
}

PrincipalDatum datum_from_json(const Json& j)
{
    QuaternionAlgebra alg = algebra_from_json(field(j, "alg"));
    Lattice order_lat = lattice_from_json(field(j, "order"));
    Lattice ideal_lat = lattice_from_json(field(j, "ideal"));
    if (order_lat.algebra() != alg || ideal_lat.algebra() != alg)
        throw ParseError("datum: lattices must use the datum's algebra");
    Quaternion mu = quaternion_from_json(alg, field(j, "mu"));
    Order ord = Order::from_lattice(order_lat);
    LeftIdeal ideal = LeftIdeal::make(ideal_lat, ord);
    return PrincipalDatum::make(ord, ideal, mu);
}

Json to_json(const EichlerPair& pair)
{
    Json out = Json::object();
    out["d"] = to_json(pair.quad().d());
    out["f"] = to_json(pair.quad().f());
    out["g"] = to_json(pair.g());
    return out;
}

EichlerPair pair_from_json(const Order& ord, const Json& j)
{
    Integer d = integer_from_json(field(j, "d"));
    Integer f = integer_from_json(field(j, "f"));
    Quaternion g = quaternion_from_json(ord.algebra(), field(j, "g"));
    return EichlerPair::make(ord, QuadOrder(d, f), g);
}

Json to_json(const ALSubgroup& group)
{
    Json out = Json::array();
    for (const auto& m : group.members()) out.push_back(to_json(m));
    return out;
}

Json to_json(const DegreeReport& r)
{
    Json out = Json::object();
    out["D"] = to_json(r.D);
    out["omega_odd"] = r.omega_odd;
    out["twisting"] = r.twisting;
    Json divs = Json::array();
    for (const auto& m : r.twisting_divisors) divs.push_back(to_json(m));
    out["twisting_divisors"] = std::move(divs);
    out["degree_piF"] = to_json(r.degree_piF);
    out["W0"] = to_json(r.W0);
    out["U0"] = to_json(r.U0);
    out["V0"] = to_json(r.V0);
    Json wit = Json::array();
    for (const auto& w : r.witnesses) wit.push_back(to_json(w));
    out["witnesses"] = std::move(wit);
    out["search_bound"] = r.search_bound;
    out["complete"] = r.complete;
    return out;
}

} // namespace qf
