#include "latpoly/io.hpp"

#include <sstream>

namespace latpoly {

namespace {

std::vector<Int> parse_line_ints(const std::string& line, int lineno) {
    std::vector<Int> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": non-integer token '" +
                             tok + "'");
        }
    }
    return out;
}

}  // namespace

LatticePolytope parse_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long nv = -1, rank = -1;
    std::vector<IntVector> rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto vals = parse_line_ints(line, lineno);
        if (vals.empty()) continue;
        if (nv < 0) {
            if (vals.size() != 2)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected '<num_vertices> <ambient_rank>'");
            if (vals[0] < 1 || vals[1] < 1)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": counts must be positive");
            nv = vals[0].convert_to<long long>();
            rank = vals[1].convert_to<long long>();
            continue;
        }
        if (static_cast<long long>(vals.size()) != rank)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(rank) + " coordinates, found " +
                             std::to_string(vals.size()));
        rows.push_back(std::move(vals));
    }
    if (nv < 0) throw ParseError("empty input");
    if (static_cast<long long>(rows.size()) != nv)
        throw ParseError("expected " + std::to_string(nv) + " rows, found " +
                         std::to_string(rows.size()));
    return hull_from_points(rows, static_cast<int>(rank));
}

std::string serialize_polytope(const LatticePolytope& P) {
    std::ostringstream out;
    out << P.vertices.size() << ' ' << P.ambient_rank << '\n';
    for (const auto& v : P.vertices) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ' ';
            out << v[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace latpoly
