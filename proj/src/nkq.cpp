#include "graybox/nkq.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "graybox/rng.hpp"

namespace graybox {

MkLandscape generate_nkq(int n, int K, int Q, std::uint64_t seed) {
    if (K < 0 || n < K + 1)
        throw ContractViolation("nkq requires n >= K+1");
    if (Q < 2)
        throw ContractViolation("nkq requires Q >= 2");
    MkLandscape landscape(n);
    Rng rng(seed);
    std::vector<int> others;
    for (int l = 0; l < n; ++l) {
        others.clear();
        while (static_cast<int>(others.size()) < K) {
            const int v = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
            if (v == l || std::find(others.begin(), others.end(), v) != others.end())
                continue;
            others.push_back(v);
        }
        std::sort(others.begin(), others.end());
        std::vector<int> vars;
        vars.reserve(static_cast<std::size_t>(K) + 1);
        vars.push_back(l);
        vars.insert(vars.end(), others.begin(), others.end());
        std::vector<std::int64_t> table(std::size_t{1} << (K + 1));
        for (auto& t : table)
            t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(Q)));
        landscape.add(Subfunction::from_table(std::move(vars), std::move(table)));
    }
    return landscape;
}

void write_nkq(std::ostream& out, const MkLandscape& landscape, int K, int Q,
               std::uint64_t seed) {
    out << "nkq " << landscape.n() << ' ' << K << ' ' << Q << ' ' << seed << '\n';
    for (const Subfunction& f : landscape.subfunctions()) {
        bool first = true;
        for (int v : f.vars()) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
        for (std::int64_t t : f.table())
            out << ' ' << t;
        out << '\n';
    }
}

MkLandscape read_nkq(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line))
        throw ParseError(1, "empty nkq file");
    ++lineno;
    std::istringstream header(line);
    std::string magic;
    int n = 0, K = -1, Q = 0;
    std::uint64_t seed = 0;
     if (!(header >> magic >> n >> K >> Q >> seed) || magic != "nkq")
        throw ParseError(lineno, "expected header 'nkq n K Q seed'");
    if (n < 1 || K < 0 || Q < 2)
        throw ParseError(lineno, "invalid nkq header parameters");
    MkLandscape landscape(n);
    const std::size_t table_size = std::size_t{1} << (K + 1);
    int count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::vector<int> vars(static_cast<std::size_t>(K) + 1);
        for (auto& v : vars)
            if (!(row >> v) || v < 0 || v >= n)
                throw ParseError(lineno, "bad variable list");
        std::vector<std::int64_t> table(table_size);
        for (auto& t : table)
            if (!(row >> t))
                throw ParseError(lineno, "bad table entry");
        std::int64_t extra;
        if (row >> extra)
            throw ParseError(lineno, "trailing values after table");
        try {
            landscape.add(Subfunction::from_table(std::move(vars), std::move(table)));
        } catch (const ContractViolation& e) {
            throw ParseError(lineno, e.what());
        }
        ++count;
    }
    if (count != n)
        throw ParseError(lineno, "expected one subfunction per variable");
    return landscape;
}

std::string nkq_digest(const MkLandscape& landscape, int K, int Q, std::uint64_t seed) {
    std::ostringstream text;
    write_nkq(text, landscape, K, Q, seed);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

} // namespace graybox
