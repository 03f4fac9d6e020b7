#ifndef ANTIFLAG_LINALG_HPP
#define ANTIFLAG_LINALG_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>

#include "antiflag/field.hpp"

namespace antiflag {

inline constexpr int kMaxDim = 8;

/// Fixed-capacity coordinate vector over GF(q). Value type, no allocation.
struct Vec {
    std::array<GfElem, kMaxDim> c{};
    std::uint8_t n = 0;

    GfElem& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    GfElem operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    int size() const { return n; }
    std::span<const GfElem> coords() const { return {c.data(), n}; }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.c[static_cast<std::size_t>(i)] != b.c[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
        if (a.n != b.n) return a.n <=> b.n;
        for (int i = 0; i < a.n; ++i) {
            auto ai = a.c[static_cast<std::size_t>(i)], bi = b.c[static_cast<std::size_t>(i)];
            if (ai != bi) return ai <=> bi;
        }
        return std::strong_ordering::equal;
    }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }
};

inline Vec make_vec(int n) {
    Vec v;
    v.n = static_cast<std::uint8_t>(n);
    return v;
}

inline Vec add(const Field& f, const Vec& a, const Vec& b) {
    Vec r = make_vec(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

inline Vec scale(const Field& f, GfElem s, const Vec& a) {
    Vec r = make_vec(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = f.mul(s, a[i]);
    return r;
}

inline GfElem dot(const Field& f, const Vec& a, const Vec& b) {
    GfElem r = 0;
    for (int i = 0; i < a.n; ++i) r = f.add(r, f.mul(a[i], b[i]));
    return r;
}

/// Scales a nonzero vector so its first nonzero coordinate is 1; the result
/// is the canonical representative of the projective point through it.
inline Vec normalize(const Field& f, const Vec& a) {
    for (int i = 0; i < a.n; ++i) {
        if (a[i] != 0) return scale(f, f.inv(a[i]), a);
    }
    return a;  // zero vector passes through; callers reject it
}

/// Square matrix over GF(q), row-major, dimension n <= kMaxDim.
struct Mat {
    std::array<GfElem, kMaxDim * kMaxDim> a{};
    std::uint8_t n = 0;

    GfElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    GfElem at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.n != y.n) return false;
        for (int i = 0; i < x.n * x.n; ++i)
            if (x.a[static_cast<std::size_t>(i)] != y.a[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    static Mat identity(int n) {
        Mat m;
        m.n = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline Mat mul(const Field& f, const Mat& x, const Mat& y) {
    Mat r;
    r.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            GfElem s = 0;
            for (int k = 0; k < x.n; ++k) s = f.add(s, f.mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

inline Vec apply(const Field& f, const Mat& m, const Vec& v) {
    Vec r = make_vec(m.n);
    for (int i = 0; i < m.n; ++i) {
        GfElem s = 0;
        for (int j = 0; j < m.n; ++j) s = f.add(s, f.mul(m.at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

inline Mat sub(const Field& f, const Mat& x, const Mat& y) {
    Mat r;
    r.n = x.n;
    for (int i = 0; i < x.n * x.n; ++i)
        r.a[static_cast<std::size_t>(i)] =
            f.sub(x.a[static_cast<std::size_t>(i)], y.a[static_cast<std::size_t>(i)]);
    return r;
}

/// Rank by Gaussian elimination over GF(q), on a copy.
int rank(const Field& f, Mat m);

/// Inverse by Gauss-Jordan; returns false if singular.
bool invert(const Field& f, const Mat& m, Mat& out);

inline Mat transpose(const Mat& m) {
    Mat r;
    r.n = m.n;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

}  // namespace antiflag

#endif
