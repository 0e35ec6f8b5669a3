#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kelc/sequence.hpp"

namespace kelc {

/// Malformed sequence text; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Raw parse of the sequence text format: `#` comment lines (a comment of
/// the form `# p=<p> n=<n> q=<q>` supplies parameters), then integer
/// symbols separated by whitespace or commas.
struct SequenceText {
    std::optional<std::uint64_t> p;
    std::optional<std::uint32_t> n;
    std::optional<std::uint64_t> q;
    std::vector<std::uint64_t> symbols;
    std::vector<std::pair<std::size_t, std::size_t>> symbol_pos;  // (line, column)
};

SequenceText read_sequence_text(std::istream& in);

/// Resolves parameters (explicit overrides beat the file header), validates
/// them, and range-checks every symbol. Missing or invalid parameters throw
/// ParamError; symbol problems throw ParseError at the symbol's position.
PeriodicSequence build_sequence(const SequenceText& text,
                                std::optional<std::uint64_t> p_override,
                                std::optional<std::uint32_t> n_override,
                                std::optional<std::uint64_t> q_override);

void write_sequence_text(std::ostream& out, const PeriodicSequence& s, bool with_header = true);

}  // namespace kelc
