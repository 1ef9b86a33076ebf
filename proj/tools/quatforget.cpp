#include "quatforget/errors.hpp"
#include "quatforget/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

namespace {

using namespace qf;

struct AlgebraArgs {
    std::string a, b, disc;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& args)
{
    cmd->add_option("-a", args.a, "i^2 = a (rational)");
    cmd->add_option("-b", args.b, "j^2 = b (rational)");
    cmd->add_option("--disc", args.disc, "search a presentation of discriminant D instead of -a/-b");
}

QuaternionAlgebra algebra_from(const AlgebraArgs& args)
{
    if (!args.disc.empty()) {
        if (!args.a.empty() || !args.b.empty()) throw ParseError("give either --disc or -a/-b, not both");
        Integer D = parse_integer(args.disc);
        auto alg = presentation_for_discriminant(D);
        if (!alg) throw DomainError("no presentation with |a|, |b| <= 1000 for D = " + args.disc);
        return *alg;
    }
    if (args.a.empty() || args.b.empty()) throw ParseError("an algebra needs -a and -b (or --disc)");
    return QuaternionAlgebra(parse_rat(args.a), parse_rat(args.b));
}

std::complex<double> parse_tau(const std::string& text)
{
    if (text == "i") return {0.0, 1.0};
    std::smatch m;
    static const std::regex pair(R"(\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*)");
    static const std::regex alg(R"(\s*([-+]?[0-9.eE]+)?\s*([-+])\s*([0-9.eE]*)\s*i\s*)");
    try {
        if (std::regex_match(text, m, pair)) return {std::stod(m[1]), std::stod(m[2])};
        if (std::regex_match(text, m, alg)) {
            double re = m[1].matched ? std::stod(m[1]) : 0.0;
            double im = m[3].length() ? std::stod(m[3]) : 1.0;
            return {re, m[2] == "-" ? -im : im};
        }
    } catch (const std::exception&) {
    }
    throw ParseError("cannot parse tau '" + text + "'; use i, x+yi or x,y");
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

int emit(const CommandResult& r, OutputFormat format)
{
    std::cout << render(r.body, format);
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arithmetic of quaternion Shimura curves and their forgetful maps"};
    app.require_subcommand(1);
    app.fallthrough();

    long bound = kDefaultSearchBound;
    std::string tau_text = "i";
    double tol = kDefaultTolerance;
    std::string output = "json";
    app.add_option("--bound", bound, "coordinate search bound")->envname("QUATFORGET_BOUND")->check(CLI::PositiveNumber);
    app.add_option("--tau", tau_text, "point in the upper half plane: i, x+yi or x,y");
    app.add_option("--tol", tol, "positivity tolerance")->check(CLI::PositiveNumber);
    auto* output_opt = app.add_option("--output", output, "json, tsv or text")
                           ->check(CLI::IsMember({"json", "tsv", "text"}));

    AlgebraArgs alg_args;
    auto* c_alg = app.add_subcommand("alg", "ramification, discriminant and twisting divisors");
    add_algebra_options(c_alg, alg_args);

    auto* c_datum = app.add_subcommand("datum", "principal datum (O, O, mu) as JSON");
    add_algebra_options(c_datum, alg_args);

    std::string ideal_file;
    auto* c_degree = app.add_subcommand("degree", "degree of the forgetful map and the groups U0, V0, W0");
    add_algebra_options(c_degree, alg_args);
    c_degree->add_option("--ideal", ideal_file, "lattice JSON of a left ideal of the maximal order");

    std::string d_text, f_text = "1";
    auto* c_embed = app.add_subcommand("embed", "embedding of a real quadratic order");
    add_algebra_options(c_embed, alg_args);
    c_embed->add_option("-d", d_text, "squarefree d > 1")->required();
    c_embed->add_option("-f", f_text, "conductor");

    std::string pair_file;
    bool from_twist = false;
    auto* c_hilb = app.add_subcommand("hilbert-degree", "degree of the map to the Hilbert surface of a pair");
    add_algebra_options(c_hilb, alg_args);
    c_hilb->add_option("--pair", pair_file, "pair JSON {d, f, g}");
    c_hilb->add_option("-d", d_text, "squarefree d > 1");
    c_hilb->add_option("-f", f_text, "conductor");
    c_hilb->add_flag("--from-twist", from_twist, "use the order generated by a twist");

    long dmax = 0;
    int primes = 2;
    unsigned threads = 0;
    auto* c_table = app.add_subcommand("table", "degree table over discriminants");
    c_table->add_option("--dmax", dmax, "largest D")->required();
    c_table->add_option("--primes", primes, "number of prime factors of D");
    c_table->add_option("--threads", threads, "worker threads (0: hardware)");

    std::string datum_file, scale_text = "1";
    auto* c_ns = app.add_subcommand("ns", "Neron-Severi lattice, polarization degree and positivity");
    c_ns->add_option("datum", datum_file, "datum JSON file")->required();
    c_ns->add_option("--scale", scale_text, "use scale * mu / D as the Chern class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Config cfg;
        cfg.search_bound = bound;
        cfg.tau = parse_tau(tau_text);
        if (!(cfg.tau.imag() > 0)) throw ParseError("tau must have positive imaginary part");
        cfg.tolerance = tol;
        cfg.output = output == "tsv" ? OutputFormat::tsv : output == "text" ? OutputFormat::text : OutputFormat::json;

        if (c_alg->parsed()) return emit(cmd_alg(algebra_from(alg_args)), cfg.output);
        if (c_datum->parsed()) return emit(cmd_datum(algebra_from(alg_args), cfg), cfg.output);
        if (c_degree->parsed()) {
            std::optional<Json> ideal;
            if (!ideal_file.empty()) ideal = read_json_file(ideal_file);
            return emit(cmd_degree(algebra_from(alg_args), ideal, cfg), cfg.output);
        }
        if (c_embed->parsed())
            return emit(cmd_embed(algebra_from(alg_args), parse_integer(d_text), parse_integer(f_text), cfg),
                        cfg.output);
        if (c_hilb->parsed()) {
            HilbertSource src;
            int given = (!pair_file.empty()) + (!d_text.empty()) + from_twist;
            if (given != 1) throw ParseError("hilbert-degree: give exactly one of --pair, -d, --from-twist");
            if (!pair_file.empty()) src.pair = read_json_file(pair_file);
            if (!d_text.empty()) src.quad = std::make_pair(parse_integer(d_text), parse_integer(f_text));
            src.from_twist = from_twist;
            return emit(cmd_hilbert_degree(algebra_from(alg_args), src, cfg), cfg.output);
        }
        if (c_table->parsed()) {
            CommandResult r = cmd_table(dmax, primes, cfg, threads);
            if (output_opt->count() && cfg.output == OutputFormat::json)
                std::cout << render(r.body, OutputFormat::json);
            else
                std::cout << table_tsv(r.body);
            return r.exit_code;
        }
        if (c_ns->parsed()) return emit(cmd_ns(read_json_file(datum_file), parse_integer(scale_text), cfg), cfg.output);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitUsage;
}
