#ifndef ANTIFLAG_ANTIFLAG_SPACE_HPP
#define ANTIFLAG_ANTIFLAG_SPACE_HPP

#include <cstdint>
#include <vector>

#include "antiflag/projective.hpp"

namespace antiflag {

/// Anti-flag: a non-incident (point, hyperplane) pair of PG(n-1,q).
struct AntiFlag {
    PointId point;
    HyperplaneId hyperplane;
    friend bool operator==(const AntiFlag&, const AntiFlag&) = default;
    friend auto operator<=>(const AntiFlag&, const AntiFlag&) = default;
};

using AntiFlagId = std::int32_t;

/// How two anti-flags (p1,H1), (p2,H2) relate. For distinct pairs exactly
/// one of r1..r4 holds:
///   r1 - exactly one of p1 in H2, p2 in H1;
///   r2 - both;
///   r3 - neither, and p1 == p2 or H1 == H2;
///   r4 - neither, p1 != p2 and H1 != H2.
enum class Relation : std::uint8_t { eq = 0, r1 = 1, r2 = 2, r3 = 3, r4 = 4 };

const char* relation_name(Relation r);

/// The set of all anti-flags of a projective space, with stable ids
/// (lexicographic by point id, then hyperplane id) and O(1) classification.
class AntiFlagSpace {
public:
    explicit AntiFlagSpace(const ProjectiveSpace& space);

    const ProjectiveSpace& space() const { return *space_; }
    int size() const { return static_cast<int>(flags_.size()); }
    const std::vector<AntiFlag>& flags() const { return flags_; }
    const AntiFlag& flag(AntiFlagId id) const { return flags_[static_cast<std::size_t>(id)]; }

    /// Id lookup; throws std::invalid_argument if (p,H) is incident.
    AntiFlagId id_of(PointId p, HyperplaneId h) const;

    Relation classify(AntiFlagId a, AntiFlagId b) const;

    /// The dual anti-flag: coordinates of the hyperplane become the point,
    /// coordinates of the point become the hyperplane. An anti-flag maps to
    /// an anti-flag, and the map is an involution on ids.
    AntiFlagId dual(AntiFlagId a) const;

    /// The involution attached to an anti-flag in odd characteristic:
    /// identity on the hyperplane, negation on the point's span. Throws
    /// std::domain_error in characteristic 2.
    Mat involution_of(AntiFlagId a) const;

private:
    const ProjectiveSpace* space_;
    std::vector<AntiFlag> flags_;
    std::vector<std::int32_t> id_table_;  // point*numHyp + hyp -> id or -1
};

/// M1 and M2 commute.
bool commute(const Field& f, const Mat& m1, const Mat& m2);

/// M is a transvection: unipotent with rank(M - I) == 1, (M - I)^2 == 0.
bool is_transvection(const Field& f, const Mat& m);

}  // namespace antiflag

#endif
