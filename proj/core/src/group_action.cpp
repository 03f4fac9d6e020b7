#include "antiflag/group_action.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace antiflag {

SemilinearMap::SemilinearMap(const Field& f, Mat m, int frob_power)
    : mat_(m), frob_(frob_power) {
    Mat inv;
    if (!invert(f, m, inv)) throw std::invalid_argument("semilinear map needs an invertible matrix");
    inv_transpose_ = transpose(inv);
}

Vec SemilinearMap::apply_vector(const Field& f, const Vec& v) const {
    Vec s = make_vec(v.n);
    for (int i = 0; i < v.n; ++i) {
        GfElem e = v[i];
        for (int t = 0; t < frob_; ++t) e = f.frobenius(e);
        s[i] = e;
    }
    return antiflag::apply(f, mat_, s);
}

Vec SemilinearMap::apply_functional(const Field& f, const Vec& h) const {
    // kernel of h maps to the kernel of sigma(h) composed with the inverse
    Vec s = make_vec(h.n);
    for (int i = 0; i < h.n; ++i) {
        GfElem e = h[i];
        for (int t = 0; t < frob_; ++t) e = f.frobenius(e);
        s[i] = e;
    }
    return antiflag::apply(f, inv_transpose_, s);
}

AntiFlagId SemilinearMap::apply(const AntiFlagSpace& afs, AntiFlagId a) const {
    const ProjectiveSpace& pg = afs.space();
    const Field& f = pg.field();
    const AntiFlag& x = afs.flag(a);
    PointId p = pg.point_id_of_vec(apply_vector(f, pg.point(x.point).v));
    HyperplaneId h = pg.hyperplane_id_of_vec(apply_functional(f, pg.hyperplane(x.hyperplane).v));
    return afs.id_of(p, h);
}

GeneratorSet gl_generators(const Field& f, int n, bool with_duality) {
    GeneratorSet gens;
    Mat elem = Mat::identity(n);
    elem.at(0, 1) = 1;
    gens.maps.emplace_back(f, elem, 0);

    Mat cyc;
    cyc.n = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) cyc.at((i + 1) % n, i) = 1;
    gens.maps.emplace_back(f, cyc, 0);

    if (f.q() > 2) {
        Mat diag = Mat::identity(n);
        diag.at(0, 0) = f.primitive_element();
        gens.maps.emplace_back(f, diag, 0);
    }
    if (f.degree() > 1) gens.maps.emplace_back(f, Mat::identity(n), 1);

    gens.include_duality = with_duality;
    return gens;
}

Mat random_invertible(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    for (;;) {
        Mat m;
        m.n = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<GfElem>(dist(rng));
        Mat inv;
        if (invert(f, m, inv)) return m;
    }
}

std::vector<int> antiflag_permutation(const AntiFlagSpace& afs, const SemilinearMap& m) {
    std::vector<int> perm(static_cast<std::size_t>(afs.size()));
    for (int a = 0; a < afs.size(); ++a) perm[static_cast<std::size_t>(a)] = m.apply(afs, a);
    return perm;
}

std::vector<int> duality_permutation(const AntiFlagSpace& afs) {
    std::vector<int> perm(static_cast<std::size_t>(afs.size()));
    for (int a = 0; a < afs.size(); ++a) perm[static_cast<std::size_t>(a)] = afs.dual(a);
    return perm;
}

std::vector<std::vector<int>> generator_permutations(const AntiFlagSpace& afs,
                                                     const GeneratorSet& gens) {
    std::vector<std::vector<int>> perms;
    perms.reserve(gens.maps.size() + (gens.include_duality ? 1 : 0));
    for (const auto& m : gens.maps) perms.push_back(antiflag_permutation(afs, m));
    if (gens.include_duality) perms.push_back(duality_permutation(afs));
    return perms;
}

std::vector<int> orbit_of_antiflag(const AntiFlagSpace& afs, const GeneratorSet& gens,
                                   AntiFlagId start) {
    auto perms = generator_permutations(afs, gens);
    std::vector<bool> seen(static_cast<std::size_t>(afs.size()), false);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    std::vector<int> orbit;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        orbit.push_back(v);
        for (const auto& p : perms) {
            int w = p[static_cast<std::size_t>(v)];
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<long long> edge_orbit_sizes(const RelGraph& g,
                                        const std::vector<std::vector<int>>& vertex_perms) {
    const int nv = g.num_vertices();
    auto edges = g.edges();
    // canonical edge -> index
    std::vector<int> edge_idx(static_cast<std::size_t>(nv) * nv, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_idx[static_cast<std::size_t>(edges[i].first) * nv + edges[i].second] =
            static_cast<int>(i);
    }
    std::vector<bool> seen(edges.size(), false);
    std::vector<long long> sizes;
    for (std::size_t s = 0; s < edges.size(); ++s) {
        if (seen[s]) continue;
        long long size = 0;
        std::deque<int> queue{static_cast<int>(s)};
        seen[s] = true;
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop_front();
            ++size;
            auto [u, v] = edges[static_cast<std::size_t>(e)];
            for (const auto& p : vertex_perms) {
                int u2 = p[static_cast<std::size_t>(u)], v2 = p[static_cast<std::size_t>(v)];
                if (u2 > v2) std::swap(u2, v2);
                int idx = edge_idx[static_cast<std::size_t>(u2) * nv + v2];
                if (idx < 0)
                    throw std::logic_error("vertex permutation does not preserve the graph");
                if (!seen[static_cast<std::size_t>(idx)]) {
                    seen[static_cast<std::size_t>(idx)] = true;
                    queue.push_back(idx);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool preserves_relations(const AntiFlagSpace& afs, const std::vector<int>& perm) {
    for (int a = 0; a < afs.size(); ++a)
        for (int b = a + 1; b < afs.size(); ++b)
            if (afs.classify(a, b) !=
                afs.classify(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

}  // namespace antiflag
