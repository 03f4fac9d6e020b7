#include "antiflag/linalg.hpp"

namespace antiflag {

int rank(const Field& f, Mat m) {
    const int n = m.n;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if (m.at(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        GfElem inv = f.inv(m.at(r, col));
        for (int j = 0; j < n; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            GfElem c = m.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

bool invert(const Field& f, const Mat& m, Mat& out) {
    const int n = m.n;
    Mat a = m;
    out = Mat::identity(m.n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (a.at(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(out.at(pivot, j), out.at(col, j));
            }
        }
        GfElem inv = f.inv(a.at(col, col));
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(inv, a.at(col, j));
            out.at(col, j) = f.mul(inv, out.at(col, j));
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            GfElem c = a.at(i, col);
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
                out.at(i, j) = f.sub(out.at(i, j), f.mul(c, out.at(col, j)));
            }
        }
    }
    return true;
}

}  // namespace antiflag
