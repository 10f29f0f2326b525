#include "graybox/dimacs.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace graybox {

namespace {

struct Tokenizer {
    std::istream& in;
    std::istringstream line_stream;
    int lineno = 0;

    // Returns false at end of input. Skips comment lines wherever a token may start.
    bool next(std::string& tok) {
        for (;;) {
            if (line_stream >> tok)
                return true;
            std::string line;
            if (!std::getline(in, line))
                return false;
            ++lineno;
            if (!line.empty() && line[0] == 'c')
                continue;
            line_stream.clear();
            line_stream.str(line);
        }
    }
};

std::int64_t to_int(const std::string& tok, int lineno, const char* what) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (...) {
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

} // namespace

MkLandscape parse_maxsat(std::istream& in, DimacsFormat format) {
    Tokenizer tz{in, {}, 0};
    std::string tok;

    if (!tz.next(tok) || tok != "p")
        throw ParseError(tz.lineno == 0 ? 1 : tz.lineno, "missing 'p' header line");
    const int header_line = tz.lineno;
    if (!tz.next(tok))
        throw ParseError(header_line, "truncated header");
    const bool weighted = tok == "wcnf";
    if (!weighted && tok != "cnf")
        throw ParseError(header_line, "unknown format '" + tok + "'");
    if (weighted != (format == DimacsFormat::Wcnf))
        throw ParseError(header_line, std::string("expected ") +
                                          (format == DimacsFormat::Wcnf ? "wcnf" : "cnf") +
                                          " header, found " + tok);
    if (!tz.next(tok))
        throw ParseError(header_line, "truncated header");
    const std::int64_t n = to_int(tok, tz.lineno, "variable count");
    if (!tz.next(tok))
        throw ParseError(header_line, "truncated header");
    const std::int64_t m = to_int(tok, tz.lineno, "clause count");
    if (n < 1 || m < 0)
        throw ParseError(header_line, "non-positive problem size in header");

    std::int64_t top = -1;
    if (weighted) {
        // optional top weight, must still be on the header line
        std::int64_t t;
        if (tz.line_stream >> t) {
            if (t <= 0)
                throw ParseError(tz.lineno, "top weight must be positive");
            top = t;
        }
    }
    (void)top; // hard clauses are kept as ordinary heavy soft clauses

    MkLandscape landscape(static_cast<int>(n));
    std::int64_t clauses = 0;
    while (clauses < m) {
        std::int64_t weight = 1;
        if (weighted) {
            if (!tz.next(tok))
                throw ParseError(tz.lineno, "missing clause weight");
            weight = to_int(tok, tz.lineno, "clause weight");
            if (weight <= 0)
                throw ParseError(tz.lineno, "clause weight must be positive");
        }
        std::vector<Literal> lits;
        for (;;) {
            if (!tz.next(tok))
                throw ParseError(tz.lineno, "clause not terminated by 0 before end of input");
            const std::int64_t lit = to_int(tok, tz.lineno, "literal");
            if (lit == 0)
                break;
            const std::int64_t var = lit < 0 ? -lit : lit;
            if (var > n)
                throw ParseError(tz.lineno, "literal " + tok + " out of range for " +
                                                std::to_string(n) + " variables");
            lits.push_back(Literal{static_cast<int>(var - 1), lit < 0});
        }
        if (lits.empty())
            throw ParseError(tz.lineno, "empty clause");
        try {
            landscape.add(Subfunction::from_clause(std::move(lits), weight));
        } catch (const ContractViolation& e) {
            throw ParseError(tz.lineno, e.what());
        }
        ++clauses;
    }
    if (tz.next(tok))
        throw ParseError(tz.lineno, "trailing content after declared clause count");
    return landscape;
}

} // namespace graybox
