#include "mcrit/logpath_algorithm.hpp"

#include <chrono>

namespace mcrit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

LogPathResolution build_logpath_resolution(const Cell& cell) {
    ResolutionRow row(std::span<const Cell>(&cell, 1), ResolutionShape::log_path);
    auto g = row.generator_grades();
    auto r = row.relation_grades();
    auto s = row.syzygy_grades();
    return {row.graph(0),
            {g.begin(), g.end()},
            {r.begin(), r.end()},
            {s.begin(), s.end()},
            row.p1(),
            row.p2()};
}

FreeChainComplex assemble_logpath_output(const LiftMaps& maps) {
    for (const auto& r : maps.rows)
        if (r.shape() != ResolutionShape::log_path)
            throw std::invalid_argument("assemble_logpath_output needs log-path rows");
    return assemble_output(maps);
}

Resolution resolve_logpath(const MultiCriticalComplex& complex) {
    Resolution out;
    auto t = std::chrono::steady_clock::now();
    out.maps.rows = build_rows(complex, ResolutionShape::log_path);
    out.times.rows = seconds_since(t);

    t = std::chrono::steady_clock::now();
    out.maps.lift0 = compute_generator_lifts(complex, out.maps.rows);
    out.times.lifts = seconds_since(t);

    t = std::chrono::steady_clock::now();
    compute_corrections(out.maps);
    out.times.corrections = seconds_since(t);

    t = std::chrono::steady_clock::now();
    compute_higher_corrections(out.maps);
    out.times.higher_corrections = seconds_since(t);

    t = std::chrono::steady_clock::now();
    out.complex = assemble_logpath_output(out.maps);
    out.times.assemble = seconds_since(t);
    return out;
}

}  // namespace mcrit
