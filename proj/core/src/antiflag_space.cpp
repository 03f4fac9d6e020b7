#include "antiflag/antiflag_space.hpp"

#include <stdexcept>

namespace antiflag {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::eq: return "eq";
        case Relation::r1: return "R1";
        case Relation::r2: return "R2";
        case Relation::r3: return "R3";
        case Relation::r4: return "R4";
    }
    return "?";
}

AntiFlagSpace::AntiFlagSpace(const ProjectiveSpace& space) : space_(&space) {
    const int np = space.num_points();
    const int nh = space.num_hyperplanes();
    id_table_.assign(static_cast<std::size_t>(np) * nh, -1);
    for (PointId p = 0; p < np; ++p) {
        for (HyperplaneId h = 0; h < nh; ++h) {
            if (!space.incident(p, h)) {
                id_table_[static_cast<std::size_t>(p) * nh + h] =
                    static_cast<std::int32_t>(flags_.size());
                flags_.push_back(AntiFlag{p, h});
            }
        }
    }
}

AntiFlagId AntiFlagSpace::id_of(PointId p, HyperplaneId h) const {
    std::int32_t id = id_table_[static_cast<std::size_t>(p) * space_->num_hyperplanes() + h];
    if (id < 0) throw std::invalid_argument("incident pair is not an anti-flag");
    return id;
}

Relation AntiFlagSpace::classify(AntiFlagId a, AntiFlagId b) const {
    if (a == b) return Relation::eq;
    const AntiFlag& x = flag(a);
    const AntiFlag& y = flag(b);
    bool x_in = space_->incident(x.point, y.hyperplane);
    bool y_in = space_->incident(y.point, x.hyperplane);
    if (x_in && y_in) return Relation::r2;
    if (x_in || y_in) return Relation::r1;
    if (x.point == y.point || x.hyperplane == y.hyperplane) return Relation::r3;
    return Relation::r4;
}

AntiFlagId AntiFlagSpace::dual(AntiFlagId a) const {
    const AntiFlag& x = flag(a);
    // Both sides are stored as normalized coordinate vectors over the same
    // index set, so the swap is a direct reinterpretation.
    PointId p = space_->point_id(Point{space_->hyperplane(x.hyperplane).v});
    HyperplaneId h = space_->hyperplane_id(Hyperplane{space_->point(x.point).v});
    return id_of(p, h);
}

Mat AntiFlagSpace::involution_of(AntiFlagId a) const {
    const Field& f = space_->field();
    if (f.characteristic() == 2)
        throw std::domain_error("anti-flag involutions require odd characteristic");
    const int n = space_->n();
    const AntiFlag& x = flag(a);
    const Vec& p = space_->point(x.point).v;
    const Vec& h = space_->hyperplane(x.hyperplane).v;
    // M = I - (2 / h(p)) p h^T: fixes the hyperplane pointwise, negates the
    // point's span. h(p) != 0 because (p, h) is an anti-flag.
    GfElem hp = dot(f, p, h);
    GfElem coef = f.mul(f.add(1, 1), f.inv(hp));
    Mat m = Mat::identity(static_cast<std::uint8_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, f.mul(p[i], h[j])));
    return m;
}

bool commute(const Field& f, const Mat& m1, const Mat& m2) {
    return mul(f, m1, m2) == mul(f, m2, m1);
}

bool is_transvection(const Field& f, const Mat& m) {
    Mat d = sub(f, m, Mat::identity(m.n));
    if (rank(f, d) != 1) return false;
    Mat d2 = mul(f, d, d);
    for (int i = 0; i < d2.n; ++i)
        for (int j = 0; j < d2.n; ++j)
            if (d2.at(i, j) != 0) return false;
    return true;
}

}  // namespace antiflag
