#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include <json.hpp>

#include "antiflag/graph_io.hpp"

using namespace antiflag;

namespace {

struct Fixture {
    Field f;
    ProjectiveSpace pg;
    AntiFlagSpace afs;
    Fixture(int n, int q) : f(q), pg(f, n), afs(pg) {}
};

bool same_adjacency(const RelGraph& a, const RelGraph& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!(a.row(v) == b.row(v))) return false;
    return true;
}

}  // namespace

TEST_CASE("graph6 round trip, short and long headers") {
    // 28 vertices uses the one-byte header, 117 the four-byte one.
    for (auto [n, q] : {std::pair{3, 2}, {3, 3}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        for (int rel = 1; rel <= 4; ++rel) {
            RelGraph g = build_graph(rel, fx.afs);
            std::string enc = encode_graph6(g);
            // Printable characters only.
            for (char c : enc) CHECK((c >= 63 && c <= 126));
            RelGraph back = decode_graph6(enc);
            CHECK(same_adjacency(g, back));
            // Byte-determinism: encoding twice is identical.
            CHECK(encode_graph6(g) == enc);
        }
    }
}

TEST_CASE("graph6 rejects malformed input") {
    Fixture fx(3, 2);
    RelGraph g = build_graph(1, fx.afs);
    std::string enc = encode_graph6(g);
    CHECK_THROWS_AS(decode_graph6(enc.substr(0, enc.size() - 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    std::string bad = enc;
    bad[1] = '\t';
    CHECK_THROWS_AS(decode_graph6(bad), std::invalid_argument);
}

TEST_CASE("dimacs header and edge count") {
    Fixture fx(3, 2);
    RelGraph g = build_graph(1, fx.afs);
    std::ostringstream os;
    write_dimacs(g, os);
    std::istringstream is(os.str());
    std::string tag, kind;
    long long v = 0, e = 0;
    is >> tag >> kind >> v >> e;
    CHECK(tag == "p");
    CHECK(kind == "edge");
    CHECK(v == 28);
    CHECK(e == g.num_edges());
    long long edge_lines = 0;
    long long a, b;
    while (is >> tag >> a >> b) {
        CHECK(tag == "e");
        CHECK(a >= 1);
        CHECK(b >= 1);
        CHECK(a <= v);
        CHECK(b <= v);
        ++edge_lines;
    }
    CHECK(edge_lines == e);
}

TEST_CASE("jsonl carries vertex coordinates and the edge list") {
    Fixture fx(3, 2);
    RelGraph g = build_graph(2, fx.afs);
    std::ostringstream os;
    write_jsonl(g, fx.afs, os);
    std::istringstream is(os.str());
    std::string line;
    long long vertices = 0, edges = 0;
    while (std::getline(is, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("id")) {
            const AntiFlag& fl = fx.afs.flag(j["id"].get<AntiFlagId>());
            CHECK(j["point"].size() == 3);
            CHECK(j["hyperplane"].size() == 3);
            Vec p = make_vec(3), h = make_vec(3);
            for (int i = 0; i < 3; ++i) {
                p[i] = j["point"][size_t(i)].get<GfElem>();
                h[i] = j["hyperplane"][size_t(i)].get<GfElem>();
            }
            CHECK(fx.pg.point(fl.point).v == p);
            CHECK(fx.pg.hyperplane(fl.hyperplane).v == h);
            ++vertices;
        } else {
            int a = j["u"].get<int>(), b = j["v"].get<int>();
            CHECK(g.adjacent(a, b));
            ++edges;
        }
    }
    CHECK(vertices == fx.afs.size());
    CHECK(edges == g.num_edges());
}
