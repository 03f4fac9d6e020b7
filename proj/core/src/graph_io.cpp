#include "antiflag/graph_io.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace antiflag {

std::string encode_graph6(const RelGraph& g) {
    const int n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for the short graph6 header");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

RelGraph decode_graph6(const std::string& line) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    if (!line.empty() && line[0] == '~') {
        ++pos;
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    RelGraph g(0, static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    return g;
}

void write_dimacs(const RelGraph& g, std::ostream& os) {
    os << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << (u + 1) << " " << (v + 1) << "\n";
}

void write_jsonl(const RelGraph& g, const AntiFlagSpace& afs, std::ostream& os) {
    const ProjectiveSpace& pg = afs.space();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const AntiFlag& a = afs.flag(v);
        nlohmann::ordered_json rec;
        rec["id"] = v;
        rec["point"] = nlohmann::json::array();
        for (GfElem e : pg.point(a.point).v.coords()) rec["point"].push_back(static_cast<int>(e));
        rec["hyperplane"] = nlohmann::json::array();
        for (GfElem e : pg.hyperplane(a.hyperplane).v.coords())
            rec["hyperplane"].push_back(static_cast<int>(e));
        os << rec.dump() << "\n";
    }
    for (auto [u, v] : g.edges()) {
        nlohmann::ordered_json rec;
        rec["u"] = u;
        rec["v"] = v;
        os << rec.dump() << "\n";
    }
}

}  // namespace antiflag
