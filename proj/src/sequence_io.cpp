#include "kelc/sequence_io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace kelc {

namespace {

bool all_digits(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Pulls `key=value` pairs with keys p, n, q out of a comment line. Unknown
// keys are ignored so ordinary comments pass through.
void scan_header_comment(const std::string& line, std::size_t lineno, SequenceText& out) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key != "p" && key != "n" && key != "q") continue;
        if (!all_digits(val) || val.size() > 18)
            throw ParseError(lineno, 1, "bad header value in '" + tok + "'");
        std::uint64_t v = std::stoull(val);
        if (key == "p") out.p = v;
        if (key == "n") out.n = static_cast<std::uint32_t>(v);
        if (key == "q") out.q = v;
    }
}

}  // namespace

SequenceText read_sequence_text(std::istream& in) {
    SequenceText out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            scan_header_comment(line.substr(first + 1), lineno, out);
            continue;
        }
        std::size_t col = 0;
        while (col < line.size()) {
            char c = line[col];
            if (c == ' ' || c == '\t' || c == ',') {
                ++col;
                continue;
            }
            std::size_t start = col;
            while (col < line.size() && line[col] != ' ' && line[col] != '\t' && line[col] != ',')
                ++col;
            std::string tok = line.substr(start, col - start);
            if (!all_digits(tok))
                throw ParseError(lineno, start + 1, "expected an integer symbol, got '" + tok + "'");
            if (tok.size() > 18)
                throw ParseError(lineno, start + 1, "symbol value is absurdly large");
            out.symbols.push_back(std::stoull(tok));
            out.symbol_pos.emplace_back(lineno, start + 1);
        }
    }
    return out;
}

PeriodicSequence build_sequence(const SequenceText& text,
                                std::optional<std::uint64_t> p_override,
                                std::optional<std::uint32_t> n_override,
                                std::optional<std::uint64_t> q_override) {
    std::optional<std::uint64_t> p = p_override ? p_override : text.p;
    std::optional<std::uint32_t> n = n_override ? n_override : text.n;
    std::optional<std::uint64_t> q = q_override ? q_override : text.q;
    if (!p || !n || !q)
        throw ParamError(ParamIssue::p_not_odd_prime,
                         "missing parameters: supply --p/--n/--q or a '# p=.. n=.. q=..' header");
    SequenceParams params = validate_params(*p, *n, *q);

    if (text.symbols.size() != params.period) {
        auto pos = text.symbol_pos.empty() ? std::make_pair<std::size_t, std::size_t>(1, 1)
                                           : text.symbol_pos.back();
        throw ParseError(pos.first, pos.second,
                         "expected " + std::to_string(params.period) + " symbols, found " +
                             std::to_string(text.symbols.size()));
    }
    std::vector<std::uint32_t> symbols(params.period);
    for (std::size_t i = 0; i < text.symbols.size(); ++i) {
        if (text.symbols[i] >= params.q) {
            auto [ln, cl] = text.symbol_pos[i];
            throw ParseError(ln, cl,
                             "symbol " + std::to_string(text.symbols[i]) + " is outside GF(" +
                                 std::to_string(params.q) + ")");
        }
        symbols[i] = static_cast<std::uint32_t>(text.symbols[i]);
    }
    return {params, std::move(symbols)};
}

void write_sequence_text(std::ostream& out, const PeriodicSequence& s, bool with_header) {
    const auto& p = s.params();
    if (with_header)
        out << "# p=" << p.p << " n=" << p.n << " q=" << p.q << "\n";
    const auto vals = s.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out << vals[i];
        out << ((i + 1 == vals.size() || (i + 1) % 25 == 0) ? '\n' : ' ');
    }
}

}  // namespace kelc
