#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcrit/core.hpp"
#include "mcrit/free_complex.hpp"

namespace mcrit::scc {

enum class ParseErrorKind {
    missing_magic,
    bad_parameter_count,
    bad_block_sizes,
    bad_number,
    odd_coordinates,
    missing_grades,
    missing_separator,
    bad_facet_index,
    duplicate_facet,
    truncated,
    trailing_content,
    not_free,
    invalid_complex,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);
    ParseErrorKind kind() const { return kind_; }
    /// 1-based line of the offending input, 0 if not tied to a line.
    std::size_t line() const { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// Reads a (possibly multi-critical) scc2020 document, normalizes every
/// support and validates the result.
///
///   scc2020
///   # comment lines anywhere
///   2
///   n_d ... n_1 n_0
///   x1 y1 [x2 y2 ...] ; facet indices      (n_d lines, then n_{d-1}, ...)
MultiCriticalComplex parse(std::string_view text);
MultiCriticalComplex parse(std::istream& in);

/// Reads a document whose lines carry exactly one grade each, without
/// checking gradedness or boundary-squared.
FreeChainComplex parse_free(std::string_view text);
FreeChainComplex parse_free(std::istream& in);

void write(std::ostream& out, const MultiCriticalComplex& complex);
void write(std::ostream& out, const FreeChainComplex& complex);
std::string write(const MultiCriticalComplex& complex);
std::string write(const FreeChainComplex& complex);

std::string read_all(std::istream& in);

}  // namespace mcrit::scc
