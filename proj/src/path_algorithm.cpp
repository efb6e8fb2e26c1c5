#include "mcrit/path_algorithm.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace mcrit {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<ResolutionRow> build_generators_relations(const MultiCriticalComplex& complex) {
    return build_rows(complex, ResolutionShape::path);
}

std::vector<std::size_t> connect_path(std::size_t j, std::size_t l) {
    std::vector<std::size_t> out(std::max(j, l) - std::min(j, l));
    std::iota(out.begin(), out.end(), std::min(j, l));
    return out;
}

FreeChainComplex assemble_path_output(const LiftMaps& maps) {
    for (const auto& r : maps.rows)
        if (r.shape() != ResolutionShape::path) throw std::invalid_argument("assemble_path_output needs path rows");
    return assemble_output(maps);
}

Resolution resolve_path(const MultiCriticalComplex& complex) {
    Resolution out;
    auto t = std::chrono::steady_clock::now();
    out.maps.rows = build_generators_relations(complex);
    out.times.rows = seconds_since(t);

    t = std::chrono::steady_clock::now();
    out.maps.lift0 = compute_generator_lifts(complex, out.maps.rows);
    out.times.lifts = seconds_since(t);

    t = std::chrono::steady_clock::now();
    compute_corrections(out.maps);
    out.times.corrections = seconds_since(t);

    t = std::chrono::steady_clock::now();
    out.complex = assemble_path_output(out.maps);
    out.times.assemble = seconds_since(t);
    return out;
}

}  // namespace mcrit
