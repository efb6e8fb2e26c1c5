#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcrit/core.hpp"
#include "mcrit/resolution.hpp"

namespace mcrit::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_input = 2, exit_mismatch = 3 };

/// Runs one command line (without the program name). "-" as a file name
/// means `in` or `out`; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// What `resolve --stats` records.
struct RunStats {
    std::string algorithm;
    std::size_t n = 0;  // input support generators
    std::size_t k = 0;
    int d = -1;
    std::vector<std::size_t> input_cells;
    std::vector<std::size_t> output_basis;
    std::vector<std::size_t> output_nnz;
    std::vector<BlockNnz> blocks;
    StepTimes times;
    double read_s = 0;
    double write_s = 0;
    std::size_t structure_bytes = 0;
    std::size_t peak_rss_bytes = 0;

    std::string json() const;
};

RunStats collect_stats(const MultiCriticalComplex& input, const Resolution& result, const std::string& algorithm);

struct BenchRow {
    std::string family;
    std::size_t size = 0;
    std::string algorithm;
    double time_s = 0;  // median over the repeats
    std::size_t nnz = 0;
    std::size_t basis = 0;
};

struct BenchOptions {
    std::vector<std::string> algorithms{"path", "logpath"};
    std::size_t repeats = 3;
    std::size_t k = 4;      // random and bifunction families
    std::size_t dim = 3;    // random family
    std::uint64_t seed = 1;
};

/// Instance of a named family at a size; throws std::invalid_argument for
/// an unknown family.
MultiCriticalComplex family_instance(const std::string& family, std::size_t size, const BenchOptions& opts);

std::vector<BenchRow> bench(const std::string& family, const std::vector<std::size_t>& sizes,
                            const BenchOptions& opts);

/// Header line `family,size,algorithm,time_s,nnz,basis` and one line per row.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mcrit::cli
