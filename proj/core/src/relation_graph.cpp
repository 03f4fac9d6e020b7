#include "antiflag/relation_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace antiflag {

RelGraph::RelGraph(int relation, int num_vertices)
    : relation_(relation), nv_(num_vertices),
      rows_(static_cast<std::size_t>(num_vertices),
            DynBitset(static_cast<std::size_t>(num_vertices))) {}

void RelGraph::add_edge(int a, int b) {
    rows_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    rows_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
}

long long RelGraph::num_edges() const {
    long long twice = 0;
    for (const auto& r : rows_) twice += static_cast<long long>(r.count());
    return twice / 2;
}

std::vector<std::pair<int, int>> RelGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < nv_; ++a) {
        const DynBitset& r = row(a);
        for (std::size_t b = r.find_first(); b < r.size(); b = r.find_next(b)) {
            if (static_cast<int>(b) > a) out.emplace_back(a, static_cast<int>(b));
        }
    }
    return out;
}

bool RelGraph::is_regular(int* deg) const {
    if (nv_ == 0) return true;
    int d = degree(0);
    for (int v = 1; v < nv_; ++v)
        if (degree(v) != d) return false;
    if (deg) *deg = d;
    return true;
}

RelGraph build_graph(int relation, const AntiFlagSpace& afs) {
    if (relation < 1 || relation > 4)
        throw std::invalid_argument("relation index must be 1..4");
    const int n = afs.size();
    RelGraph g(relation, n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (static_cast<int>(afs.classify(a, b)) == relation) g.add_edge(a, b);
    return g;
}

std::array<RelGraph, 4> build_all_graphs(const AntiFlagSpace& afs) {
    const int n = afs.size();
    std::array<RelGraph, 4> gs{RelGraph(1, n), RelGraph(2, n), RelGraph(3, n), RelGraph(4, n)};
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            Relation r = afs.classify(a, b);
            gs[static_cast<std::size_t>(static_cast<int>(r) - 1)].add_edge(a, b);
        }
    }
    return gs;
}

DynBitset common_related(const RelGraph& g, std::span<const AntiFlagId> xs) {
    DynBitset acc(static_cast<std::size_t>(g.num_vertices()));
    acc.set_all();  // empty xs: vacuously related to everything
    for (AntiFlagId x : xs) acc &= g.row(x);
    return acc;
}

DynBitset common_related(const RelGraph& g, AntiFlagId a, AntiFlagId b) {
    DynBitset acc = g.row(a);
    acc &= g.row(b);
    return acc;
}

DynBitset common_related(const RelGraph& g, const DynBitset& xs) {
    DynBitset acc(static_cast<std::size_t>(g.num_vertices()));
    acc.set_all();
    for (std::size_t v = xs.find_first(); v < xs.size(); v = xs.find_next(v))
        acc &= g.row(static_cast<int>(v));
    return acc;
}

namespace {

void require_coclique(const AntiFlagSpace& afs, std::span<const AntiFlagId> c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            Relation r = afs.classify(c[i], c[j]);
            if (r == Relation::eq || r == Relation::r1)
                throw std::invalid_argument("set is not a coclique of the relation-1 graph");
        }
}

// Distinct normalized points all lie on one line iff each further vector
// stays in the span of the first two: rank(v0, v1, vt) == 2 for every t.
bool all_on_common_line(const Field& f, const std::vector<Vec>& vs) {
    if (vs.size() <= 2) return true;
    Mat m;
    m.n = vs[0].n;
    for (std::size_t t = 2; t < vs.size(); ++t) {
        for (int j = 0; j < m.n; ++j) {
            m.at(0, j) = vs[0][j];
            m.at(1, j) = vs[1][j];
            m.at(2, j) = vs[t][j];
        }
        if (rank(f, m) != 2) return false;
    }
    return true;
}

}  // namespace

CocliqueShape classify_coclique_shape(const AntiFlagSpace& afs,
                                      std::span<const AntiFlagId> c) {
    if (c.size() < 2) throw std::invalid_argument("coclique shape needs at least two members");
    require_coclique(afs, c);
    const ProjectiveSpace& pg = afs.space();
    bool same_hyp = true, same_pt = true;
    for (std::size_t i = 1; i < c.size(); ++i) {
        same_hyp &= afs.flag(c[i]).hyperplane == afs.flag(c[0]).hyperplane;
        same_pt &= afs.flag(c[i]).point == afs.flag(c[0]).point;
    }
    if (same_hyp) {
        std::vector<Vec> pts;
        pts.reserve(c.size());
        for (AntiFlagId a : c) pts.push_back(pg.point(afs.flag(a).point).v);
        if (all_on_common_line(pg.field(), pts)) return CocliqueShape::linear;
    }
    if (same_pt) {
        std::vector<Vec> fns;
        fns.reserve(c.size());
        for (AntiFlagId a : c) fns.push_back(pg.hyperplane(afs.flag(a).hyperplane).v);
        if (all_on_common_line(pg.field(), fns)) return CocliqueShape::dually_linear;
    }
    return CocliqueShape::neither;
}

namespace {

// Word-sliced test that no vertex sees exactly two of the four rows.
// Per bit position the neighbor count across r0..r3 is 0..4; count == 2
// means binary 010: the twos plane set, the parity plane clear. Members of
// the coclique see count 0 (mutual non-adjacency, no self-loops), so they
// never trip the test and need no masking.
bool profile_admissible_rows(const DynBitset& r0, const DynBitset& r1,
                             const DynBitset& r2, const DynBitset& r3) {
    for (std::size_t w = 0; w < r0.words(); ++w) {
        std::uint64_t a = r0.word(w), b = r1.word(w), c = r2.word(w), d = r3.word(w);
        std::uint64_t c1 = a & b, s1 = a ^ b;
        std::uint64_t c2 = c & d, s2 = c ^ d;
        std::uint64_t ones = s1 ^ s2;
        std::uint64_t twos = c1 ^ c2 ^ (s1 & s2);
        if (twos & ~ones) return false;
    }
    return true;
}

}  // namespace

bool coclique_profile_admissible(const RelGraph& graph1, std::span<const AntiFlagId> c) {
    if (c.size() != 4) throw std::invalid_argument("profile test is defined for 4-element cocliques");
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j] || graph1.adjacent(c[i], c[j]))
                throw std::invalid_argument("set is not a 4-element coclique of graph1");
    return profile_admissible_rows(graph1.row(c[0]), graph1.row(c[1]),
                                   graph1.row(c[2]), graph1.row(c[3]));
}

std::vector<std::array<AntiFlagId, 4>> admissible_cocliques(const RelGraph& graph1) {
    const int n = graph1.num_vertices();
    const std::size_t nw = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::array<AntiFlagId, 4>> out;

    // Complement rows without self-loops, so "common non-neighbors" is a
    // plain AND. ~row includes the vertex itself; clear it.
    std::vector<DynBitset> non(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {
        DynBitset& r = non[static_cast<std::size_t>(v)];
        r.set_all();
        r ^= graph1.row(v);
        r.reset(static_cast<std::size_t>(v));
    }

    DynBitset nab(static_cast<std::size_t>(n)), nabc(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const DynBitset& na = non[static_cast<std::size_t>(a)];
        for (std::size_t b = na.find_next(static_cast<std::size_t>(a)); b < na.size();
             b = na.find_next(b)) {
            // c, d range over common non-neighbors above b: each 4-set is
            // produced once, in sorted order.
            for (std::size_t w = 0; w < nw; ++w)
                nab.word(w) = na.word(w) & non[b].word(w);
            for (std::size_t c = nab.find_next(b); c < nab.size(); c = nab.find_next(c)) {
                for (std::size_t w = 0; w < nw; ++w)
                    nabc.word(w) = nab.word(w) & non[c].word(w);
                for (std::size_t d = nabc.find_next(c); d < nabc.size(); d = nabc.find_next(d)) {
                    if (profile_admissible_rows(graph1.row(a), graph1.row(static_cast<int>(b)),
                                                graph1.row(static_cast<int>(c)),
                                                graph1.row(static_cast<int>(d)))) {
                        out.push_back({a, static_cast<AntiFlagId>(b), static_cast<AntiFlagId>(c),
                                       static_cast<AntiFlagId>(d)});
                    }
                }
            }
        }
    }
    return out;
}

namespace {

void bron_kerbosch(const RelGraph& g, DynBitset r, DynBitset p, DynBitset x,
                   std::vector<std::vector<int>>& out) {
    if (p.none() && x.none()) {
        std::vector<int> clique;
        for (std::size_t v = r.find_first(); v < r.size(); v = r.find_next(v))
            clique.push_back(static_cast<int>(v));
        out.push_back(std::move(clique));
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    DynBitset px = p | x;
    std::size_t pivot = px.find_first(), best = 0;
    for (std::size_t u = px.find_first(); u < px.size(); u = px.find_next(u)) {
        std::size_t k = (p & g.row(static_cast<int>(u))).count();
        if (k >= best) { best = k; pivot = u; }
    }
    DynBitset cand = p;
    for (std::size_t w = 0; w < cand.words(); ++w)
        cand.word(w) &= ~g.row(static_cast<int>(pivot)).word(w);
    for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v)) {
        DynBitset r2 = r;
        r2.set(v);
        bron_kerbosch(g, std::move(r2), p & g.row(static_cast<int>(v)),
                      x & g.row(static_cast<int>(v)), out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const RelGraph& g) {
    DynBitset r(static_cast<std::size_t>(g.num_vertices()));
    DynBitset p(static_cast<std::size_t>(g.num_vertices()));
    DynBitset x(static_cast<std::size_t>(g.num_vertices()));
    p.set_all();
    std::vector<std::vector<int>> out;
    bron_kerbosch(g, std::move(r), std::move(p), std::move(x), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace antiflag
