#include "antiflag/hyperbolic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace antiflag {

HyperbolicSpace::HyperbolicSpace(int n) : n_(n) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("hyperbolic construction supports 3 <= n <= 12");
    for (std::uint32_t v = 1; v <= num_nonzero(); ++v)
        (q_value(v) == 0 ? singular_ : nonsingular_).push_back(v);
}

int HyperbolicSpace::nonsingular_index(std::uint32_t code) const {
    auto it = std::lower_bound(nonsingular_.begin(), nonsingular_.end(), code);
    if (it == nonsingular_.end() || *it != code)
        throw std::invalid_argument("code is not a non-singular point");
    return static_cast<int>(it - nonsingular_.begin());
}

AntiFlagId HyperbolicSpace::to_antiflag(std::uint32_t ns_code, const AntiFlagSpace& afs) const {
    if (is_singular(ns_code))
        throw std::invalid_argument("singular points have no anti-flag image");
    const ProjectiveSpace& pg = afs.space();
    Vec p = make_vec(n_), h = make_vec(n_);
    for (int i = 0; i < n_; ++i) {
        p[i] = static_cast<GfElem>((vec_part(ns_code) >> i) & 1);
        h[i] = static_cast<GfElem>((fun_part(ns_code) >> i) & 1);
    }
    return afs.id_of(pg.point_id(Point{p}), pg.hyperplane_id(Hyperplane{h}));
}

std::uint32_t HyperbolicSpace::from_antiflag(AntiFlagId a, const AntiFlagSpace& afs) const {
    const ProjectiveSpace& pg = afs.space();
    const Vec& p = pg.point(afs.flag(a).point).v;
    const Vec& h = pg.hyperplane(afs.flag(a).hyperplane).v;
    std::uint32_t code = 0;
    for (int i = 0; i < n_; ++i) {
        code |= static_cast<std::uint32_t>(p[i] & 1) << i;
        code |= static_cast<std::uint32_t>(h[i] & 1) << (n_ + i);
    }
    return code;
}

std::vector<std::array<std::uint32_t, 3>> fully_singular_lines(const HyperbolicSpace& hs) {
    std::vector<std::array<std::uint32_t, 3>> out;
    const auto& sing = hs.singular();
    for (std::size_t i = 0; i < sing.size(); ++i) {
        for (std::size_t j = i + 1; j < sing.size(); ++j) {
            std::uint32_t third = sing[i] ^ sing[j];
            // keep each line once: from its two smallest points
            if (third > sing[j] && hs.is_singular(third))
                out.push_back({sing[i], sing[j], third});
        }
    }
    return out;
}

RelGraph nonsingular_graph1(const HyperbolicSpace& hs, const AntiFlagSpace& afs) {
    const auto& ns = hs.nonsingular();
    const int nv = static_cast<int>(ns.size());
    std::vector<AntiFlagId> image(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        image[static_cast<std::size_t>(v)] = hs.to_antiflag(ns[static_cast<std::size_t>(v)], afs);
    RelGraph g(1, nv);
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (afs.classify(image[static_cast<std::size_t>(a)],
                             image[static_cast<std::size_t>(b)]) == Relation::r1)
                g.add_edge(a, b);
    return g;
}

PolarReconstruction::PolarReconstruction(const RelGraph& graph1) : g_(&graph1) {
    const int nv = graph1.num_vertices();

    // Recovered lines: 3-cliques where no vertex, inside or out, sees an odd
    // number of clique members. Members always see exactly two, so the test
    // collapses to the three adjacency rows XORing to zero.
    DynBitset common(static_cast<std::size_t>(nv));
    for (int a = 0; a < nv; ++a) {
        const DynBitset& ra = graph1.row(a);
        for (std::size_t b = ra.find_next(static_cast<std::size_t>(a)); b < ra.size();
             b = ra.find_next(b)) {
            const DynBitset& rb = graph1.row(static_cast<int>(b));
            for (std::size_t w = 0; w < common.words(); ++w)
                common.word(w) = ra.word(w) & rb.word(w);
            for (std::size_t c = common.find_next(b); c < common.size();
                 c = common.find_next(c)) {
                const DynBitset& rc = graph1.row(static_cast<int>(c));
                bool balanced = true;
                for (std::size_t w = 0; w < common.words(); ++w) {
                    if (ra.word(w) ^ rb.word(w) ^ rc.word(w)) { balanced = false; break; }
                }
                if (balanced)
                    lines_.push_back({a, static_cast<int>(b), static_cast<int>(c)});
            }
        }
    }

    lines_thru_.assign(static_cast<std::size_t>(nv), DynBitset(lines_.size()));
    for (std::size_t li = 0; li < lines_.size(); ++li)
        for (int v : lines_[li]) lines_thru_[static_cast<std::size_t>(v)].set(li);

    coclique_idx_.assign(static_cast<std::size_t>(nv) * nv, -1);
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            if (graph1.adjacent(a, b)) continue;
            int idx = static_cast<int>(cocliques_.size());
            cocliques_.emplace_back(a, b);
            coclique_idx_[static_cast<std::size_t>(a) * nv + b] = idx;
            coclique_idx_[static_cast<std::size_t>(b) * nv + a] = idx;
        }
    }
}

int PolarReconstruction::coclique_index(int a, int b) const {
    return coclique_idx_[static_cast<std::size_t>(a) * g_->num_vertices() + b];
}

namespace {

// Shared vertex of two recovered lines that lies outside the four coclique
// vertices; lines share at most one vertex in the geometries at hand, but
// the scan does not rely on that.
bool lines_meet_outside(const std::array<int, 3>& l1, const std::array<int, 3>& l2,
                        int a, int b, int c, int d) {
    for (int u : l1)
        for (int v : l2)
            if (u == v && u != a && u != b && u != c && u != d) return true;
    return false;
}

}  // namespace

bool PolarReconstruction::parallel_first_type(int ci, int cj) const {
    if (ci == cj) return false;
    auto [a, b] = cocliques_[static_cast<std::size_t>(ci)];
    auto [c, d] = cocliques_[static_cast<std::size_t>(cj)];
    const DynBitset& la = lines_thru_[static_cast<std::size_t>(a)];
    const DynBitset& lb = lines_thru_[static_cast<std::size_t>(b)];
    const DynBitset& lc = lines_thru_[static_cast<std::size_t>(c)];
    const DynBitset& ld = lines_thru_[static_cast<std::size_t>(d)];

    // lines meeting both cocliques
    int cand[16];
    int nc = 0;
    for (std::size_t w = 0; w < la.words() && nc >= 0; ++w) {
        std::uint64_t m = (la.word(w) | lb.word(w)) & (lc.word(w) | ld.word(w));
        while (m) {
            if (nc == 16) { nc = -1; break; }  // overflow to the slow path
            cand[nc++] = static_cast<int>((w << 6) +
                                          static_cast<std::size_t>(std::countr_zero(m)));
            m &= m - 1;
        }
    }
    if (nc < 0) {
        // more candidates than the fixed buffer: collect them all
        DynBitset all = (la | lb) & (lc | ld);
        auto idx = all.to_indices();
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (lines_meet_outside(lines_[idx[i]], lines_[idx[j]], a, b, c, d)) return true;
        return false;
    }
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j)
            if (lines_meet_outside(lines_[static_cast<std::size_t>(cand[i])],
                                   lines_[static_cast<std::size_t>(cand[j])], a, b, c, d))
                return true;
    return false;
}

bool PolarReconstruction::same_parallel_signature(int ci, int cj) const {
    auto [a, b] = cocliques_[static_cast<std::size_t>(ci)];
    auto [c, d] = cocliques_[static_cast<std::size_t>(cj)];
    const DynBitset& ra = g_->row(a);
    const DynBitset& rb = g_->row(b);
    const DynBitset& rc = g_->row(c);
    const DynBitset& rd = g_->row(d);
    for (std::size_t w = 0; w < ra.words(); ++w)
        if (ra.word(w) ^ rb.word(w) ^ rc.word(w) ^ rd.word(w)) return false;
    return true;
}

bool PolarReconstruction::parallel_second_type(int ci, int cj) const {
    if (ci == cj) return false;
    // Parallel cocliques either have all four cross pairs adjacent (first
    // type) or none (second type), so one probe settles which side holds.
    if (g_->adjacent(cocliques_[static_cast<std::size_t>(ci)].first,
                     cocliques_[static_cast<std::size_t>(cj)].first))
        return false;
    return same_parallel_signature(ci, cj);
}

ReconstructedGeometry PolarReconstruction::reconstruct() const {
    const std::size_t nc = cocliques_.size();

    ReconstructedGeometry out;
    out.cocliques = cocliques_;
    out.coclique_class.assign(nc, -1);

    // Group cocliques by row-XOR signature. Equal signatures are exactly
    // the parallel pairs (first or second type, split by cross edges), so
    // the groups already realize the transitive closure of the union of
    // the two parallelism types. Class ids follow first appearance.
    std::map<std::vector<std::uint64_t>, int> class_of;
    std::vector<std::uint64_t> sig;
    for (std::size_t i = 0; i < nc; ++i) {
        auto [a, b] = cocliques_[i];
        const DynBitset& ra = g_->row(a);
        const DynBitset& rb = g_->row(b);
        sig.assign(ra.words(), 0);
        for (std::size_t w = 0; w < ra.words(); ++w) sig[w] = ra.word(w) ^ rb.word(w);
        auto [it, fresh] = class_of.try_emplace(sig, out.num_classes);
        if (fresh) ++out.num_classes;
        out.coclique_class[i] = it->second;
    }

    // Abstract lines: 3-element cocliques whose three sub-pairs fall in
    // three distinct classes.
    const int nv = g_->num_vertices();
    std::vector<DynBitset> non(static_cast<std::size_t>(nv),
                               DynBitset(static_cast<std::size_t>(nv)));
    for (int v = 0; v < nv; ++v) {
        DynBitset& r = non[static_cast<std::size_t>(v)];
        r.set_all();
        r ^= g_->row(v);
        r.reset(static_cast<std::size_t>(v));
    }
    DynBitset common(static_cast<std::size_t>(nv));
    for (const auto& [u, v] : cocliques_) {
        for (std::size_t w = 0; w < common.words(); ++w)
            common.word(w) = non[static_cast<std::size_t>(u)].word(w) &
                             non[static_cast<std::size_t>(v)].word(w);
        for (std::size_t t = common.find_next(static_cast<std::size_t>(v)); t < common.size();
             t = common.find_next(t)) {
            int c1 = out.coclique_class[static_cast<std::size_t>(coclique_index(u, v))];
            int c2 = out.coclique_class[static_cast<std::size_t>(coclique_index(u, static_cast<int>(t)))];
            int c3 = out.coclique_class[static_cast<std::size_t>(coclique_index(v, static_cast<int>(t)))];
            if (c1 == c2 || c1 == c3 || c2 == c3) continue;
            std::array<int, 3> line{c1, c2, c3};
            std::sort(line.begin(), line.end());
            out.lines.push_back(line);
        }
    }
    std::sort(out.lines.begin(), out.lines.end());
    out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
    return out;
}

std::vector<std::array<int, 3>> tns_lines_from_graph(const RelGraph& graph1) {
    return PolarReconstruction(graph1).tns_lines();
}

ReconstructedGeometry reconstruct_polar_space(const RelGraph& graph1) {
    return PolarReconstruction(graph1).reconstruct();
}

}  // namespace antiflag
