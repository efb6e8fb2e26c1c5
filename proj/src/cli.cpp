#include "mcrit/cli.hpp"

#include <sys/resource.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcrit/firep.hpp"
#include "mcrit/generators.hpp"
#include "mcrit/logpath_algorithm.hpp"
#include "mcrit/path_algorithm.hpp"
#include "mcrit/scc_io.hpp"
#include "mcrit/verify.hpp"

namespace mcrit::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& name, std::istream& in) {
    if (name == "-") return scc::read_all(in);
    std::ifstream f(name, std::ios::binary);
    if (!f) throw InputError("cannot open " + name);
    return scc::read_all(f);
}

void write_target(const std::string& name, std::ostream& out, const std::string& text) {
    if (name == "-") {
        out << text;
        out.flush();
        return;
    }
    std::ofstream f(name, std::ios::binary);
    if (!f) throw InputError("cannot write " + name);
    f << text;
    if (!f) throw InputError("write failed: " + name);
}

Resolution run(const MultiCriticalComplex& c, const std::string& algorithm) {
    return algorithm == "path" ? resolve_path(c) : resolve_logpath(c);
}

std::vector<std::vector<double>> parse_points(const std::string& text) {
    std::vector<std::vector<double>> points;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::vector<double> p;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                p.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw scc::ParseError(scc::ParseErrorKind::bad_number, line_no, "coordinate '" + tok + "'");
            }
        }
        if (!points.empty() && p.size() != points.front().size())
            throw scc::ParseError(scc::ParseErrorKind::bad_number, line_no, "point has a different dimension");
        points.push_back(std::move(p));
    }
    return points;
}

std::size_t peak_rss_bytes() {
    rusage u{};
    if (getrusage(RUSAGE_SELF, &u) != 0) return 0;
    return static_cast<std::size_t>(u.ru_maxrss) * 1024;
}

std::size_t structure_bytes(const Resolution& r) {
    std::size_t bytes = 0;
    for (const auto* v : {&r.maps.lift0, &r.maps.lift1, &r.maps.lift2, &r.maps.homotopy0, &r.maps.homotopy1,
                          &r.maps.homotopy2})
        for (const auto& m : *v) bytes += m.memory_bytes();
    for (const auto& row : r.maps.rows) {
        bytes += row.p1().memory_bytes() + row.p2().memory_bytes();
        bytes += (row.generator_count() + row.relation_count() + row.syzygy_count()) * sizeof(Bigrade);
    }
    for (std::size_t d = 0; d < r.complex.dimension_count(); ++d)
        bytes += r.complex.boundary(d).memory_bytes() + r.complex.basis_size(d) * sizeof(Bigrade);
    return bytes;
}

template <class T>
T median(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw std::invalid_argument("bad size '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("no sizes given");
    return out;
}

const char* kFooter =
    "Outputs are free resolutions, not minimized; run a minimization tool afterwards if a small "
    "presentation is needed.\n"
    "Degree-Rips grades are (distance, (|P|-1) - degree) so that both coordinates grow.\n"
    "Exit codes: 0 ok, 1 usage, 2 unreadable or invalid input, 3 verification mismatch.";

}  // namespace

std::string RunStats::json() const {
    nlohmann::json blocks_json = nlohmann::json::object();
    for (const auto& b : blocks) blocks_json[b.name] = b.per_dimension;
    std::size_t total_nnz = 0, total_basis = 0;
    for (auto v : output_nnz) total_nnz += v;
    for (auto v : output_basis) total_basis += v;
    nlohmann::json j = {
        {"algorithm", algorithm},
        {"input", {{"n", n}, {"k", k}, {"d", d}, {"cells", input_cells}}},
        {"output", {{"basis", output_basis}, {"nnz", output_nnz}, {"total_basis", total_basis}, {"total_nnz", total_nnz}}},
        {"blocks", blocks_json},
        {"times_s",
         {{"rows", times.rows},
          {"lifts", times.lifts},
          {"corrections", times.corrections},
          {"higher_corrections", times.higher_corrections},
          {"assemble", times.assemble},
          {"total", times.total()},
          {"read", read_s},
          {"write", write_s}}},
        {"memory", {{"structure_bytes", structure_bytes}, {"peak_rss_bytes", peak_rss_bytes}}},
    };
    return j.dump(2);
}

RunStats collect_stats(const MultiCriticalComplex& input, const Resolution& result, const std::string& algorithm) {
    RunStats s;
    s.algorithm = algorithm;
    s.n = input.size();
    s.k = input.criticality();
    s.d = input.top_dimension();
    for (std::size_t d = 0; d < input.dimension_count(); ++d) s.input_cells.push_back(input.cells(d).size());
    for (std::size_t d = 0; d < result.complex.dimension_count(); ++d) {
        s.output_basis.push_back(result.complex.basis_size(d));
        s.output_nnz.push_back(result.complex.boundary(d).nnz());
    }
    s.blocks = block_nnz(result.maps);
    s.times = result.times;
    s.structure_bytes = structure_bytes(result);
    s.peak_rss_bytes = peak_rss_bytes();
    return s;
}

MultiCriticalComplex family_instance(const std::string& family, std::size_t size, const BenchOptions& opts) {
    if (family == "wheel") return gen_wheel(size);
    if (family == "modified-wheel") return gen_modified_wheel(size);
    if (family == "star") return gen_star(size);
    if (family == "random") return gen_random(size, opts.k, opts.dim, opts.seed + size);
    if (family == "bifunction") return gen_bifunction(bifunction_grid(size, opts.seed + size), opts.k);
    if (family == "degree-rips") return gen_degree_rips(random_points(size, 2, opts.seed + size), 2);
    throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<BenchRow> bench(const std::string& family, const std::vector<std::size_t>& sizes,
                            const BenchOptions& opts) {
    std::vector<BenchRow> rows;
    for (std::size_t size : sizes) {
        const auto c = family_instance(family, size, opts);
        for (const auto& algorithm : opts.algorithms) {
            std::vector<double> times;
            BenchRow row{family, size, algorithm, 0, 0, 0};
            for (std::size_t r = 0; r < std::max<std::size_t>(opts.repeats, 1); ++r) {
                const auto res = run(c, algorithm);
                times.push_back(res.times.total());
                row.nnz = res.complex.nnz();
                row.basis = res.complex.basis_count();
            }
            row.time_s = median(times);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "family,size,algorithm,time_s,nnz,basis\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.size << ',' << r.algorithm << ',' << r.time_s << ',' << r.nnz << ',' << r.basis
            << '\n';
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free resolutions of multi-critical bifiltered chain complexes", "mcrit"};
    app.footer(kFooter);
    app.require_subcommand(1);

    // resolve
    std::string algorithm = "logpath", stats_path, in_path, out_path;
    auto* resolve = app.add_subcommand("resolve", "Resolve a multi-critical complex into a free one");
    resolve->add_option("--algorithm", algorithm, "path or logpath")->check(CLI::IsMember({"path", "logpath"}));
    resolve->add_option("--stats", stats_path, "Write run statistics as JSON");
    resolve->add_option("input", in_path, "Input scc2020 document")->required();
    resolve->add_option("output", out_path, "Output scc2020 document")->required();

    // firep
    std::size_t firep_dim = 0;
    auto* firep = app.add_subcommand("firep", "Free implicit representation of one homology degree");
    firep->add_option("--dim", firep_dim, "Homology degree")->required();
    firep->add_option("input", in_path)->required();
    firep->add_option("output", out_path)->required();

    // generate
    auto* generate = app.add_subcommand("generate", "Write a generated instance");
    generate->require_subcommand(1);
    std::size_t l = 8, k = 4, d = 2, n = 100, grid = 16, max_dim = 2, point_dim = 2, random_count = 0;
    std::uint64_t seed = 1;
    std::string values_path, points_path;
    for (const char* name : {"wheel", "star", "modified-wheel"}) {
        auto* s = generate->add_subcommand(name, std::string("The ") + name + " family");
        s->add_option("-l,--l,--size", l, "Number of outer vertices")->required();
        s->add_option("output", out_path)->required();
    }
    auto* g_bif = generate->add_subcommand(
        "bifunction", "Staircases from two functions (f0, f1) given as the grades of a free complex");
    g_bif->add_option("--k", k, "Generators per staircase")->required();
    auto* values_opt = g_bif->add_option("--values", values_path, "Free scc2020 document with (f0, f1) grades");
    g_bif->add_option("--grid", n, "Random values on an n x n triangulated grid")->excludes(values_opt);
    g_bif->add_option("--seed", seed);
    g_bif->add_option("output", out_path)->required();
    auto* g_rips = generate->add_subcommand("degree-rips", "Degree-Rips bifiltration of a point cloud");
    auto* points_opt = g_rips->add_option("--points", points_path, "One point per line, coordinates separated by spaces");
    g_rips->add_option("--random", random_count, "Use this many random points instead")->excludes(points_opt);
    g_rips->add_option("--point-dim", point_dim, "Dimension of random points");
    g_rips->add_option("--max-dim", max_dim, "Top simplex dimension (at most 3)");
    g_rips->add_option("--seed", seed);
    g_rips->add_option("output", out_path)->required();
    auto* g_rand = generate->add_subcommand("random", "Random clique complex with random staircases");
    g_rand->add_option("--n", n, "Cell budget");
    g_rand->add_option("--k", k, "Maximum generators per cell");
    g_rand->add_option("--d", d, "Top dimension");
    g_rand->add_option("--grid", grid, "Grades are drawn from {0..grid}^2");
    g_rand->add_option("--seed", seed);
    g_rand->add_option("output", out_path)->required();

    // verify
    std::size_t grid_cap = 4096;
    bool as_json = false;
    auto* verify = app.add_subcommand("verify", "Compare pointwise homology of an input and a resolved output");
    verify->add_option("input", in_path)->required();
    verify->add_option("output", out_path)->required();
    verify->add_option("--grid-cap", grid_cap, "Most grid grades to evaluate");
    verify->add_flag("--json", as_json, "Report as JSON lines");

    // bench
    std::string family, sizes_text, csv_path = "-", algorithms_text = "path,logpath";
    BenchOptions bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "Time both algorithms on a family (median of repeats)");
    bench_cmd->add_option("--family", family, "wheel, modified-wheel, star, random, bifunction or degree-rips")
        ->required();
    bench_cmd->add_option("--sizes", sizes_text, "Comma separated sizes")->required();
    bench_cmd->add_option("--out", csv_path, "CSV destination");
    bench_cmd->add_option("--algorithms", algorithms_text);
    bench_cmd->add_option("--repeats", bench_opts.repeats);
    bench_cmd->add_option("--k", bench_opts.k);
    bench_cmd->add_option("--d", bench_opts.dim);
    bench_cmd->add_option("--seed", bench_opts.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*resolve) {
            auto t0 = Clock::now();
            const auto c = scc::parse(read_source(in_path, in));
            const double read_s = seconds_since(t0);
            const auto res = run(c, algorithm);
            t0 = Clock::now();
            write_target(out_path, out, scc::write(res.complex));
            const double write_s = seconds_since(t0);
            if (!stats_path.empty()) {
                RunStats s = collect_stats(c, res, algorithm);
                s.read_s = read_s;
                s.write_s = write_s;
                write_target(stats_path, out, s.json() + "\n");
            }
            return exit_ok;
        }
        if (*firep) {
            const auto c = scc::parse(read_source(in_path, in));
            if (c.dimension_count() == 0 || firep_dim >= c.dimension_count()) {
                err << "degree " << firep_dim << " out of range (complex has dimensions 0.."
                    << c.top_dimension() << ")\n";
                return exit_usage;
            }
            std::ostringstream os;
            write_firep(os, compute_firep(c, firep_dim));
            write_target(out_path, out, os.str());
            return exit_ok;
        }
        if (*generate) {
            MultiCriticalComplex c;
            const auto* sub = generate->get_subcommands().front();
            const std::string name = sub->get_name();
            try {
                if (name == "wheel") c = gen_wheel(l);
                else if (name == "star") c = gen_star(l);
                else if (name == "modified-wheel") c = gen_modified_wheel(l);
                else if (name == "bifunction") {
                    c = values_path.empty() ? gen_bifunction(bifunction_grid(n, seed), k)
                                            : gen_bifunction(scc::parse(read_source(values_path, in)), k);
                } else if (name == "degree-rips") {
                    const auto points = points_path.empty() ? random_points(random_count, point_dim, seed)
                                                            : parse_points(read_source(points_path, in));
                    c = gen_degree_rips(points, max_dim);
                } else {
                    c = gen_random(n, k, d, seed, grid);
                }
            } catch (const std::invalid_argument& e) {
                // bad parameters are a usage error, bad file contents an input error
                err << name << ": " << e.what() << '\n';
                return values_path.empty() && points_path.empty() ? exit_usage : exit_input;
            }
            write_target(out_path, out, scc::write(c));
            return exit_ok;
        }
        if (*verify) {
            const auto input = scc::parse(read_source(in_path, in));
            const auto output = scc::parse_free(read_source(out_path, in));
            const auto structure = check_free_complex(output);
            const auto homology = check_quasi_iso(input, output, grid_cap);
            if (as_json)
                out << structure.json_line() << '\n' << homology.json_line() << '\n';
            else
                out << structure.text() << '\n' << homology.text() << '\n';
            return structure.ok() && homology.ok() ? exit_ok : exit_mismatch;
        }
        if (*bench_cmd) {
            bench_opts.algorithms.clear();
            std::stringstream ss(algorithms_text);
            std::string a;
            while (std::getline(ss, a, ','))
                if (a == "path" || a == "logpath") bench_opts.algorithms.push_back(a);
                else {
                    err << "unknown algorithm '" << a << "'\n";
                    return exit_usage;
                }
            std::vector<BenchRow> rows;
            try {
                rows = bench(family, parse_sizes(sizes_text), bench_opts);
            } catch (const std::invalid_argument& e) {
                err << "bench: " << e.what() << '\n';
                return exit_usage;
            }
            std::ostringstream os;
            write_csv(os, rows);
            write_target(csv_path, out, os.str());
            return exit_ok;
        }
    } catch (const scc::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const InvalidBifiltrationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_usage;
}

}  // namespace mcrit::cli
