#ifndef ANTIFLAG_PROJECTIVE_HPP
#define ANTIFLAG_PROJECTIVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "antiflag/field.hpp"
#include "antiflag/linalg.hpp"

namespace antiflag {

/// Point of PG(n-1,q): nonzero coordinate vector normalized so the first
/// nonzero coordinate is 1. Distinct normalized vectors are distinct points.
struct Point {
    Vec v;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point& a, const Point& b) { return a.v <=> b.v; }
};

/// Hyperplane of PG(n-1,q), stored as the normalized coefficient vector of
/// the linear functional x -> sum coeffs[i]*x[i] whose kernel it is.
struct Hyperplane {
    Vec v;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend auto operator<=>(const Hyperplane& a, const Hyperplane& b) { return a.v <=> b.v; }
};

using PointId = std::int32_t;
using HyperplaneId = std::int32_t;

/// Enumerated PG(n-1,q) with stable lexicographic ids and a precomputed
/// incidence table. Immutable after construction, safe to share.
class ProjectiveSpace {
public:
    ProjectiveSpace(const Field& field, int n);

    const Field& field() const { return *field_; }
    int n() const { return n_; }
    int q() const { return field_->q(); }

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    int num_points() const { return static_cast<int>(points_.size()); }
    int num_hyperplanes() const { return static_cast<int>(hyperplanes_.size()); }

    const Point& point(PointId id) const { return points_[static_cast<std::size_t>(id)]; }
    const Hyperplane& hyperplane(HyperplaneId id) const {
        return hyperplanes_[static_cast<std::size_t>(id)];
    }

    /// Id of a normalized point/hyperplane; throws if not normalized or absent.
    PointId point_id(const Point& p) const;
    HyperplaneId hyperplane_id(const Hyperplane& h) const;

    PointId point_id_of_vec(const Vec& raw) const;          // normalizes first
    HyperplaneId hyperplane_id_of_vec(const Vec& raw) const;

    bool incident(PointId p, HyperplaneId h) const {
        return incidence_[static_cast<std::size_t>(p) * hyperplanes_.size() + h];
    }
    bool incident(const Point& p, const Hyperplane& h) const {
        return dot(*field_, p.v, h.v) == 0;
    }

    /// The q+1 point ids of the line through two distinct points, ascending.
    /// Throws std::invalid_argument on equal points.
    std::vector<PointId> line_through(PointId p1, PointId p2) const;

    /// Hyperplane ids through a point / points on a hyperplane (ascending).
    const std::vector<HyperplaneId>& hyperplanes_through(PointId p) const {
        return hyperplanes_through_[static_cast<std::size_t>(p)];
    }
    const std::vector<PointId>& points_on(HyperplaneId h) const {
        return points_on_[static_cast<std::size_t>(h)];
    }

    struct TripleComplementCount {
        long long enumerated;   // points outside H1 U H2 U H3, by enumeration
        long long predicted;    // closed form for the detected sub-case
        bool intersection_contained;  // H1 ^ H2 inside H3
    };

    /// Counts points outside the union of three distinct hyperplanes and the
    /// closed-form prediction: (q-1)^2 q^(n-3) when H1^H2 is not inside H3,
    /// (q-2) q^(n-2) when it is. Throws on non-distinct hyperplanes.
    TripleComplementCount count_outside_three(HyperplaneId h1, HyperplaneId h2,
                                              HyperplaneId h3) const;

    /// Searches all hyperplanes for one meeting the set exactly in `target`.
    /// Throws if target is not a member of the set.
    std::optional<HyperplaneId> find_separating_hyperplane(const std::vector<PointId>& set,
                                                           PointId target) const;

private:
    const Field* field_;
    int n_;
    std::vector<Point> points_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<bool> incidence_;  // points x hyperplanes
    std::vector<std::vector<HyperplaneId>> hyperplanes_through_;
    std::vector<std::vector<PointId>> points_on_;
};

}  // namespace antiflag

#endif
