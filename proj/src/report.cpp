#include "quatforget/report.hpp"

#include "quatforget/errors.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace qf {

namespace {

std::string cell(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        if (!v.empty() && v[0].is_structured()) return v.dump();
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + cell(v[k]);
        return s.empty() ? "-" : s;
    }
    return v.dump();
}

std::string tsv_rows(const Json& rows)
{
    std::ostringstream os;
    if (rows.empty()) return "";
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        os << (first ? "" : "\t") << it.key();
        first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            os << (first ? "" : "\t") << cell(*it);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

Order order_of(const QuaternionAlgebra& alg) { return maximal_order(alg); }

std::optional<PrincipalDatum> default_datum(const QuaternionAlgebra& alg, const Config& cfg)
{
    Order ord = order_of(alg);
    return make_principal_datum(ord, LeftIdeal::unit(ord), cfg.search_bound);
}

CommandResult mu_not_found(const QuaternionAlgebra& alg, const Config& cfg)
{
    Json body = Json::object();
    body["D"] = to_json(ramification(alg).discriminant);
    body["not_found"] = "mu";
    body["search_bound"] = cfg.search_bound;
    return {kExitNotFound, body};
}

} // namespace

std::string render(const Json& body, OutputFormat format)
{
    switch (format) {
    case OutputFormat::json:
        return body.dump(2) + "\n";
    case OutputFormat::tsv:
        if (body.is_array()) return tsv_rows(body);
        return tsv_rows(Json::array({body}));
    case OutputFormat::text: {
        if (body.is_array()) return tsv_rows(body);
        std::ostringstream os;
        for (auto it = body.begin(); it != body.end(); ++it)
            os << it.key() << ": " << (it->is_object() ? it->dump() : cell(*it)) << '\n';
        return os.str();
    }
    }
    return "";
}

CommandResult cmd_alg(const QuaternionAlgebra& alg)
{
    RamificationData ram = ramification(alg);
    Json body = Json::object();
    body["a"] = to_json(alg.a());
    body["b"] = to_json(alg.b());
    Json primes = Json::array();
    for (const auto& p : ram.ramified_primes) primes.push_back(to_json(p));
    body["ramified_primes"] = std::move(primes);
    body["infinite_ramified"] = ram.infinite_ramified;
    body["D"] = to_json(ram.discriminant);
    body["totally_indefinite"] = is_totally_indefinite(alg);
    body["division"] = is_division(alg);
    if (is_totally_indefinite(alg) && is_division(alg)) {
        Json divs = Json::array();
        for (const auto& m : twisting_divisors(alg)) divs.push_back(to_json(m));
        body["twisting_divisors"] = std::move(divs);
    } else {
        body["twisting_divisors"] = nullptr;
    }
    return {kExitOk, body};
}

CommandResult cmd_datum(const QuaternionAlgebra& alg, const Config& cfg)
{
    auto datum = default_datum(alg, cfg);
    if (!datum) return mu_not_found(alg, cfg);
    return {kExitOk, to_json(*datum)};
}

CommandResult cmd_degree(const QuaternionAlgebra& alg, const std::optional<Json>& ideal, const Config& cfg)
{
    Order ord = order_of(alg);
    LeftIdeal I = LeftIdeal::unit(ord);
    if (ideal) {
        Lattice lat = lattice_from_json(*ideal);
        if (lat.algebra() != alg) throw ParseError("ideal: lattice uses a different presentation");
        I = LeftIdeal::make(lat, ord);
    }
    auto datum = make_principal_datum(ord, I, cfg.search_bound);
    if (!datum) return mu_not_found(alg, cfg);
    DegreeReport r = degree_forgetful_F(*datum, cfg.search_bound);
    Json body = to_json(r);
    body["W0_order"] = static_cast<std::int64_t>(r.W0.order());
    body["consistent"] = r.consistent;
    body["mu"] = to_json(datum->mu());
    int code = !r.consistent ? kExitInvariant : (!r.complete ? kExitNotFound : kExitOk);
    return {code, body};
}

CommandResult cmd_embed(const QuaternionAlgebra& alg, const Integer& d, const Integer& f, const Config& cfg)
{
    QuadOrder quad(d, f);
    if (d <= 1) throw DomainError("embed: d must be a squarefree integer > 1");
    bool embeddable = embeddable_maximal(alg, d);
    Order ord = order_of(alg);
    auto pair = find_embedding(ord, quad, cfg.search_bound);
    Json body = Json::object();
    body["D"] = to_json(ramification(alg).discriminant);
    body["d"] = to_json(d);
    body["f"] = to_json(f);
    body["embeddable"] = embeddable;
    body["pair"] = pair ? to_json(*pair) : Json(nullptr);
    body["search_bound"] = cfg.search_bound;
    int code = kExitOk;
    if (pair && f == 1 && !embeddable)
        throw InvariantViolation("embed: embedding found although the criterion rules it out");
    if (!pair && (embeddable || f != 1)) code = kExitNotFound;
    return {code, body};
}

CommandResult cmd_hilbert_degree(const QuaternionAlgebra& alg, const HilbertSource& source, const Config& cfg)
{
    auto datum = default_datum(alg, cfg);
    if (!datum) return mu_not_found(alg, cfg);
    const Order& ord = datum->order();
    std::optional<EichlerPair> pair;
    if (source.pair) {
        pair = pair_from_json(ord, *source.pair);
    } else if (source.from_twist) {
        auto twists = twist_witnesses(*datum);
        if (twists.witnesses.empty()) throw DomainError("hilbert-degree: the datum admits no twist");
        pair = pair_from_element(ord, twists.witnesses.front().chi);
    } else if (source.quad) {
        pair = find_embedding(ord, QuadOrder(source.quad->first, source.quad->second), cfg.search_bound);
        if (!pair) {
            Json body = Json::object();
            body["D"] = to_json(datum->D());
            body["not_found"] = "pair";
            body["search_bound"] = cfg.search_bound;
            return {kExitNotFound, body};
        }
    } else {
        throw DomainError("hilbert-degree: give --pair, -d, or --from-twist");
    }
    int degree = degree_forgetful_hilbert(*datum, pair->phi_image());
    bool twist = contains_twist(*pair, *datum);
    if ((degree == 2) != twist) throw InvariantViolation("hilbert-degree: twist test and V0(S) disagree");
    Json body = Json::object();
    body["D"] = to_json(datum->D());
    body["mu"] = to_json(datum->mu());
    body["pair"] = to_json(*pair);
    body["contains_twist"] = twist;
    body["degree"] = degree;
    return {kExitOk, body};
}

namespace {

Json table_row(const Integer& D, const Config& cfg)
{
    Json row = Json::object();
    row["D"] = to_json(D);
    auto alg = presentation_for_discriminant(D);
    if (!alg) {
        for (const char* k : {"twisting", "twisting_divisors", "omega_odd", "degree_piF", "W0_order"}) row[k] = nullptr;
        row["consistent"] = "no_presentation";
        return row;
    }
    Order ord = maximal_order(*alg);
    auto datum = make_principal_datum(ord, LeftIdeal::unit(ord), cfg.search_bound);
    if (!datum) {
        for (const char* k : {"twisting", "twisting_divisors", "omega_odd", "degree_piF", "W0_order"}) row[k] = nullptr;
        row["consistent"] = "not_found";
        return row;
    }
    DegreeReport r = degree_forgetful_F(*datum, cfg.search_bound);
    row["twisting"] = r.twisting;
    Json divs = Json::array();
    for (const auto& m : r.twisting_divisors) divs.push_back(to_json(m));
    row["twisting_divisors"] = std::move(divs);
    row["omega_odd"] = r.omega_odd;
    row["degree_piF"] = to_json(r.degree_piF);
    row["W0_order"] = r.W0.order();
    row["consistent"] = r.consistent;
    return row;
}

} // namespace

CommandResult cmd_table(long dmax, int primes, const Config& cfg, unsigned threads)
{
    if (dmax < 1 || dmax > 10000) throw DomainError("table: dmax must lie in [1, 10000]");
    if (primes < 2 || primes % 2 != 0) throw DomainError("table: prime count must be even and positive");
    std::vector<Integer> ds;
    for (long D = 2; D <= dmax; ++D) {
        Integer z(D);
        if (!is_squarefree(z)) continue;
        if (static_cast<int>(factor(z).factors.size()) == primes) ds.push_back(z);
    }
    std::vector<Json> rows(ds.size());
    std::vector<std::string> errors(ds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k; (k = next.fetch_add(1)) < ds.size();) {
            try {
                rows[k] = table_row(ds[k], cfg);
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kExitOk;
    Json body = Json::array();
    for (std::size_t k = 0; k < ds.size(); ++k) {
        if (!errors[k].empty()) throw InvariantViolation("table: D = " + to_string(ds[k]) + ": " + errors[k]);
        const Json& c = rows[k]["consistent"];
        if (c.is_boolean() && !c.get<bool>()) code = kExitInvariant;
        if (c.is_string() && code == kExitOk) code = kExitNotFound;
        body.push_back(std::move(rows[k]));
    }
    return {code, body};
}

std::string table_tsv(const Json& rows) { return tsv_rows(rows); }

CommandResult cmd_ns(const Json& datum_json, const Integer& scale, const Config& cfg)
{
    if (scale == 0) throw DomainError("ns: scale must be nonzero");
    PrincipalDatum datum = datum_from_json(datum_json);
    Quaternion mu_pol = Rat(scale) * datum.mu_pol();
    Json body = Json::object();
    body["D"] = to_json(datum.D());
    body["ns_lattice"] = to_json(ns_lattice(datum));
    body["mu_pol"] = to_json(mu_pol);
    body["in_ns_lattice"] = ns_lattice(datum).contains(mu_pol);
    PolarizationDegree deg = polarization_degree(datum, mu_pol);
    body["degree"] = to_json(deg.degree);
    body["oracle"] = to_json(deg.oracle);
    ComplexPoint point{cfg.tau};
    Json pos = Json::object();
    try {
        bool plus = positivity_check(mu_pol, point, cfg.tolerance);
        bool minus = positivity_check(-mu_pol, point, cfg.tolerance);
        pos["plus"] = plus;
        pos["minus"] = minus;
        if (plus == minus) throw InvariantViolation("ns: positivity holds for neither or both signs");
        pos["positive_sign"] = plus ? 1 : -1;
    } catch (const Indeterminate& e) {
        pos["indeterminate"] = e.what();
    }
    body["positivity"] = std::move(pos);
    return {kExitOk, body};
}

} // namespace qf
