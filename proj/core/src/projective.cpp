#include "antiflag/projective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace antiflag {

namespace {

// All normalized representatives (first nonzero coordinate = 1) of dimension
// n over f, in lexicographic order of coordinate tuples. This ordering is
// the id contract: id k is the k-th normalized tuple lexicographically.
std::vector<Vec> normalized_vectors(const Field& f, int n) {
    std::vector<Vec> out;
    const int q = f.q();
    // Walk all q^n tuples in lex order, keep the normalized ones.
    Vec v = make_vec(n);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (long long code = 1; code < total; ++code) {
        // decode lexicographically: leftmost coordinate most significant
        long long rest = code;
        for (int i = n - 1; i >= 0; --i) {
            v.c[static_cast<std::size_t>(i)] = static_cast<GfElem>(rest % q);
            rest /= q;
        }
        int lead = -1;
        for (int i = 0; i < n; ++i) {
            if (v[i] != 0) { lead = i; break; }
        }
        if (lead >= 0 && v[lead] == 1) out.push_back(v);
    }
    return out;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(const Field& field, int n) : field_(&field), n_(n) {
    if (n < 2 || n > kMaxDim)
        throw std::invalid_argument("projective dimension out of range: n=" + std::to_string(n));
    auto reps = normalized_vectors(field, n);
    points_.reserve(reps.size());
    hyperplanes_.reserve(reps.size());
    for (const auto& v : reps) {
        points_.push_back(Point{v});
        hyperplanes_.push_back(Hyperplane{v});
    }
    const std::size_t np = points_.size();
    incidence_.assign(np * np, false);
    hyperplanes_through_.assign(np, {});
    points_on_.assign(np, {});
    for (std::size_t p = 0; p < np; ++p) {
        for (std::size_t h = 0; h < np; ++h) {
            if (dot(field, points_[p].v, hyperplanes_[h].v) == 0) {
                incidence_[p * np + h] = true;
                hyperplanes_through_[p].push_back(static_cast<HyperplaneId>(h));
                points_on_[h].push_back(static_cast<PointId>(p));
            }
        }
    }
}

PointId ProjectiveSpace::point_id(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p))
        throw std::invalid_argument("point not in space (not normalized?)");
    return static_cast<PointId>(it - points_.begin());
}

HyperplaneId ProjectiveSpace::hyperplane_id(const Hyperplane& h) const {
    auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), h);
    if (it == hyperplanes_.end() || !(*it == h))
        throw std::invalid_argument("hyperplane not in space (not normalized?)");
    return static_cast<HyperplaneId>(it - hyperplanes_.begin());
}

PointId ProjectiveSpace::point_id_of_vec(const Vec& raw) const {
    if (raw.is_zero()) throw std::invalid_argument("zero vector is not a point");
    return point_id(Point{normalize(*field_, raw)});
}

HyperplaneId ProjectiveSpace::hyperplane_id_of_vec(const Vec& raw) const {
    if (raw.is_zero()) throw std::invalid_argument("zero functional is not a hyperplane");
    return hyperplane_id(Hyperplane{normalize(*field_, raw)});
}

std::vector<PointId> ProjectiveSpace::line_through(PointId p1, PointId p2) const {
    if (p1 == p2) throw std::invalid_argument("line_through requires distinct points");
    const Vec& a = point(p1).v;
    const Vec& b = point(p2).v;
    std::vector<PointId> ids;
    ids.reserve(static_cast<std::size_t>(q()) + 1);
    ids.push_back(p2);  // lambda = "infinity": the point b itself
    for (int lam = 0; lam < q(); ++lam) {
        Vec w = add(*field_, a, scale(*field_, static_cast<GfElem>(lam), b));
        ids.push_back(point_id(Point{normalize(*field_, w)}));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

ProjectiveSpace::TripleComplementCount ProjectiveSpace::count_outside_three(
    HyperplaneId h1, HyperplaneId h2, HyperplaneId h3) const {
    if (h1 == h2 || h1 == h3 || h2 == h3)
        throw std::invalid_argument("count_outside_three requires distinct hyperplanes");
    const std::size_t np = points_.size();
    long long outside = 0;
    for (std::size_t p = 0; p < np; ++p) {
        if (!incidence_[p * np + h1] && !incidence_[p * np + h2] && !incidence_[p * np + h3])
            ++outside;
    }
    // H1 ^ H2 lies inside H3 exactly when the three functionals span only a
    // 2-dimensional space (h3 is a combination of h1 and h2).
    Mat m;
    m.n = static_cast<std::uint8_t>(n_);
    for (int j = 0; j < n_; ++j) {
        m.at(0, j) = hyperplane(h1).v[j];
        m.at(1, j) = hyperplane(h2).v[j];
        m.at(2, j) = hyperplane(h3).v[j];
    }
    bool contained = rank(*field_, m) == 2;
    const long long q = this->q();
    long long predicted = contained ? (q - 2) * ipow(q, n_ - 2)
                                    : (q - 1) * (q - 1) * ipow(q, n_ - 3);
    return {outside, predicted, contained};
}

std::optional<HyperplaneId> ProjectiveSpace::find_separating_hyperplane(
    const std::vector<PointId>& set, PointId target) const {
    if (std::find(set.begin(), set.end(), target) == set.end())
        throw std::invalid_argument("separating target must belong to the set");
    const std::size_t np = points_.size();
    for (std::size_t h = 0; h < np; ++h) {
        bool ok = incidence_[static_cast<std::size_t>(target) * np + h];
        if (!ok) continue;
        for (PointId p : set) {
            if (p == target) continue;
            if (incidence_[static_cast<std::size_t>(p) * np + h]) { ok = false; break; }
        }
        if (ok) return static_cast<HyperplaneId>(h);
    }
    return std::nullopt;
}

}  // namespace antiflag
