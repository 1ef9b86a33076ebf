#ifndef QUATFORGET_REPORT_HPP
#define QUATFORGET_REPORT_HPP

#include "quatforget/polarization.hpp"
#include "quatforget/serialize.hpp"

#include <optional>
#include <string>

namespace qf {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNotFound = 2,
    kExitInvariant = 3,
};

enum class OutputFormat { json, tsv, text };

struct Config {
    long search_bound = kDefaultSearchBound;
    std::complex<double> tau{0.0, 1.0};
    double tolerance = kDefaultTolerance;
    OutputFormat output = OutputFormat::json;
};

struct CommandResult {
    int exit_code = kExitOk;
    Json body;
};

/// Renders a command body; objects become key/value text or a two-line
/// TSV, arrays of objects a TSV table.
std::string render(const Json& body, OutputFormat format);

CommandResult cmd_alg(const QuaternionAlgebra& alg);
CommandResult cmd_datum(const QuaternionAlgebra& alg, const Config& cfg);
/// ideal: optional lattice JSON of a left ideal of the maximal order.
CommandResult cmd_degree(const QuaternionAlgebra& alg, const std::optional<Json>& ideal, const Config& cfg);
CommandResult cmd_embed(const QuaternionAlgebra& alg, const Integer& d, const Integer& f, const Config& cfg);

struct HilbertSource {
    std::optional<Json> pair;
    std::optional<std::pair<Integer, Integer>> quad;
    bool from_twist = false;
};
CommandResult cmd_hilbert_degree(const QuaternionAlgebra& alg, const HilbertSource& source, const Config& cfg);

/// One row per squarefree D <= dmax with `primes` prime factors, computed
/// on `threads` workers and emitted in increasing D.
CommandResult cmd_table(long dmax, int primes, const Config& cfg, unsigned threads = 0);
/// TSV rendering of a table body, byte-identical across runs.
std::string table_tsv(const Json& rows);

CommandResult cmd_ns(const Json& datum, const Integer& scale, const Config& cfg);

} // namespace qf

#endif
