#include "mcrit/scc_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace mcrit::scc {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::missing_magic: return "missing-magic";
        case ParseErrorKind::bad_parameter_count: return "bad-parameter-count";
        case ParseErrorKind::bad_block_sizes: return "bad-block-sizes";
        case ParseErrorKind::bad_number: return "bad-number";
        case ParseErrorKind::odd_coordinates: return "odd-coordinates";
        case ParseErrorKind::missing_grades: return "missing-grades";
        case ParseErrorKind::missing_separator: return "missing-separator";
        case ParseErrorKind::bad_facet_index: return "bad-facet-index";
        case ParseErrorKind::duplicate_facet: return "duplicate-facet";
        case ParseErrorKind::truncated: return "truncated";
        case ParseErrorKind::trailing_content: return "trailing-content";
        case ParseErrorKind::not_free: return "not-free";
        case ParseErrorKind::invalid_complex: return "invalid-complex";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) + to_string(kind) + ": " +
                         detail),
      kind_(kind),
      line_(line) {}

namespace {

struct RawCell {
    std::size_t line = 0;
    std::vector<Bigrade> grades;
    std::vector<std::size_t> facets;
};

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    /// Next line that is neither blank nor a comment.
    bool next(std::string_view& line) {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view l = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            const std::size_t first = l.find_first_not_of(" \t");
            if (first == std::string_view::npos || l[first] == '#') continue;
            line = l;
            return true;
        }
        return false;
    }
    std::size_t line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_count(std::string_view tok, std::size_t& out) {
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

/// Blocks ordered from the top dimension down to 0.
std::vector<std::vector<RawCell>> read_raw(std::string_view text) {
    LineReader reader(text);
    std::string_view line;
    if (!reader.next(line) || tokens(line) != std::vector<std::string_view>{"scc2020"})
        throw ParseError(ParseErrorKind::missing_magic, reader.line_no(), "first line must be 'scc2020'");

    if (!reader.next(line)) throw ParseError(ParseErrorKind::truncated, reader.line_no(), "no parameter count");
    {
        const auto t = tokens(line);
        if (t.size() != 1 || t[0] != "2")
            throw ParseError(ParseErrorKind::bad_parameter_count, reader.line_no(),
                             "expected 2 parameters, got '" + std::string(line) + "'");
    }

    if (!reader.next(line)) throw ParseError(ParseErrorKind::truncated, reader.line_no(), "no block sizes");
    std::vector<std::size_t> sizes;
    for (auto tok : tokens(line)) {
        std::size_t n = 0;
        if (!parse_count(tok, n))
            throw ParseError(ParseErrorKind::bad_block_sizes, reader.line_no(),
                             "block size '" + std::string(tok) + "' is not a count");
        sizes.push_back(n);
    }
    if (sizes.empty()) throw ParseError(ParseErrorKind::bad_block_sizes, reader.line_no(), "no block sizes");

    std::vector<std::vector<RawCell>> blocks(sizes.size());
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        const std::size_t below = b + 1 < sizes.size() ? sizes[b + 1] : 0;
        blocks[b].reserve(sizes[b]);
        for (std::size_t i = 0; i < sizes[b]; ++i) {
            if (!reader.next(line))
                throw ParseError(ParseErrorKind::truncated, reader.line_no(),
                                 "expected " + std::to_string(sizes[b]) + " lines in block " + std::to_string(b));
            const std::size_t ln = reader.line_no();
            const std::size_t semi = line.find(';');
            if (semi == std::string_view::npos)
                throw ParseError(ParseErrorKind::missing_separator, ln, "no ';' between grades and facets");

            RawCell cell;
            cell.line = ln;
            const auto coords = tokens(line.substr(0, semi));
            if (coords.empty()) throw ParseError(ParseErrorKind::missing_grades, ln, "no grade before ';'");
            if (coords.size() % 2 != 0)
                throw ParseError(ParseErrorKind::odd_coordinates, ln,
                                 std::to_string(coords.size()) + " coordinates do not form pairs");
            cell.grades.reserve(coords.size() / 2);
            for (std::size_t c = 0; c < coords.size(); c += 2) {
                try {
                    cell.grades.push_back({Rational::parse(coords[c]), Rational::parse(coords[c + 1])});
                } catch (const std::invalid_argument& e) {
                    throw ParseError(ParseErrorKind::bad_number, ln, e.what());
                }
            }
            for (auto tok : tokens(line.substr(semi + 1))) {
                std::size_t f = 0;
                if (!parse_count(tok, f))
                    throw ParseError(ParseErrorKind::bad_number, ln, "facet '" + std::string(tok) + "' is not an index");
                if (f >= below)
                    throw ParseError(ParseErrorKind::bad_facet_index, ln,
                                     "facet " + std::to_string(f) + " out of range (next block has " +
                                         std::to_string(below) + " cells)");
                cell.facets.push_back(f);
            }
            std::sort(cell.facets.begin(), cell.facets.end());
            if (std::adjacent_find(cell.facets.begin(), cell.facets.end()) != cell.facets.end())
                throw ParseError(ParseErrorKind::duplicate_facet, ln, "a facet index is repeated");
            blocks[b].push_back(std::move(cell));
        }
    }
    if (reader.next(line))
        throw ParseError(ParseErrorKind::trailing_content, reader.line_no(), "content after the last block");
    return blocks;
}

void write_rational(std::ostream& out, const Rational& r) { out << r.to_string(); }

void write_header(std::ostream& out, const std::vector<std::size_t>& sizes_top_down) {
    out << "scc2020\n2\n";
    if (sizes_top_down.empty()) {
        out << "0\n";
        return;
    }
    for (std::size_t i = 0; i < sizes_top_down.size(); ++i) out << (i ? " " : "") << sizes_top_down[i];
    out << '\n';
}

template <class Facets>
void write_facets(std::ostream& out, const Facets& facets) {
    out << " ;";
    for (auto f : facets) out << ' ' << f;
    out << '\n';
}

}  // namespace

MultiCriticalComplex parse(std::string_view text) {
    auto blocks = read_raw(text);
    const std::size_t n_dims = blocks.size();
    std::vector<std::vector<Cell>> cells(n_dims);
    std::vector<std::vector<std::size_t>> line_of(n_dims);
    for (std::size_t b = 0; b < n_dims; ++b) {
        const std::size_t dim = n_dims - 1 - b;
        cells[dim].reserve(blocks[b].size());
        for (auto& raw : blocks[b]) {
            const std::size_t id = cells[dim].size();
            cells[dim].push_back(Cell{id, dim, Support::normalize(std::move(raw.grades)), std::move(raw.facets)});
            line_of[dim].push_back(raw.line);
        }
    }
    // keep the line numbers before empty trailing dimensions are trimmed
    MultiCriticalComplex complex(std::move(cells));
    const auto report = validate(complex);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw ParseError(ParseErrorKind::invalid_complex, line_of[v.dim][v.cell],
                         to_string(v.kind) + ": " + v.reason + " (" + std::to_string(report.violations.size()) +
                             " violation(s) in total)");
    }
    return complex;
}

MultiCriticalComplex parse(std::istream& in) { return parse(read_all(in)); }

FreeChainComplex parse_free(std::string_view text) {
    auto blocks = read_raw(text);
    const std::size_t n_dims = blocks.size();
    std::vector<std::vector<Bigrade>> grades(n_dims);
    std::vector<SparseBitMatrix> boundaries(n_dims);
    for (std::size_t b = 0; b < n_dims; ++b) {
        const std::size_t dim = n_dims - 1 - b;
        const std::size_t n_rows = b + 1 < n_dims ? blocks[b + 1].size() : 0;
        SparseBitMatrix m(n_rows, 0);
        m.reserve_columns(blocks[b].size());
        for (auto& raw : blocks[b]) {
            if (raw.grades.size() != 1)
                throw ParseError(ParseErrorKind::not_free, raw.line,
                                 std::to_string(raw.grades.size()) + " grades on a line of a free complex");
            grades[dim].push_back(std::move(raw.grades[0]));
            m.append_column(Column(raw.facets.begin(), raw.facets.end()));
        }
        boundaries[dim] = std::move(m);
    }
    return FreeChainComplex(std::move(grades), std::move(boundaries));
}

FreeChainComplex parse_free(std::istream& in) { return parse_free(read_all(in)); }

void write(std::ostream& out, const MultiCriticalComplex& complex) {
    std::vector<std::size_t> sizes;
    for (std::size_t d = complex.dimension_count(); d-- > 0;) sizes.push_back(complex.cells(d).size());
    write_header(out, sizes);
    for (std::size_t d = complex.dimension_count(); d-- > 0;) {
        for (const Cell& c : complex.cells(d)) {
            bool first = true;
            for (const Bigrade& g : c.support.generators()) {
                if (!first) out << ' ';
                first = false;
                write_rational(out, g.x);
                out << ' ';
                write_rational(out, g.y);
            }
            write_facets(out, c.facets);
        }
    }
}

void write(std::ostream& out, const FreeChainComplex& complex) {
    std::vector<std::size_t> sizes;
    for (std::size_t d = complex.dimension_count(); d-- > 0;) sizes.push_back(complex.basis_size(d));
    write_header(out, sizes);
    for (std::size_t d = complex.dimension_count(); d-- > 0;) {
        const auto grades = complex.grades(d);
        const auto& boundary = complex.boundary(d);
        for (std::size_t j = 0; j < grades.size(); ++j) {
            write_rational(out, grades[j].x);
            out << ' ';
            write_rational(out, grades[j].y);
            write_facets(out, boundary.column(j));
        }
    }
}

std::string write(const MultiCriticalComplex& complex) {
    std::ostringstream os;
    write(os, complex);
    return os.str();
}

std::string write(const FreeChainComplex& complex) {
    std::ostringstream os;
    write(os, complex);
    return os.str();
}

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace mcrit::scc
