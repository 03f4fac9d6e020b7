#include "antiflag/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace antiflag {

namespace {

struct FieldShape {
    int q, p, k, poly;  // poly: reduction polynomial as base-p digits, monic term included
};

// Reduction polynomials encoded with the same base-p digit convention as
// element indices; e.g. GF(9): x^2 + 1 -> 1*3^2 + 0*3 + 1 = 10.
constexpr std::array<FieldShape, 10> kShapes = {{
    {2, 2, 1, 2},
    {3, 3, 1, 3},
    {4, 2, 2, 0b111},     // x^2 + x + 1
    {5, 5, 1, 5},
    {7, 7, 1, 7},
    {8, 2, 3, 0b1011},    // x^3 + x + 1
    {9, 3, 2, 10},        // x^2 + 1
    {11, 11, 1, 11},
    {13, 13, 1, 13},
    {16, 2, 4, 0b10011},  // x^4 + x + 1
}};

const FieldShape* find_shape(int q) {
    for (const auto& s : kShapes)
        if (s.q == q) return &s;
    return nullptr;
}

// Digits of n in base p, least significant first.
std::vector<int> digits(int n, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && n; ++i) {
        d[i] = n % p;
        n /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Polynomial product modulo the reduction polynomial, coefficients mod p.
int poly_mul(int a, int b, const FieldShape& s) {
    auto da = digits(a, s.p, s.k);
    auto db = digits(b, s.p, s.k);
    std::vector<int> prod(2 * s.k - 1, 0);
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;

    auto red = digits(s.poly, s.p, s.k + 1);
    for (int d = 2 * s.k - 2; d >= s.k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        // x^d = x^(d-k) * (-lower part of poly); reduction poly is monic.
        for (int j = 0; j < s.k; ++j) {
            int t = prod[d - s.k + j] - c * red[j] % s.p;
            prod[d - s.k + j] = ((t % s.p) + s.p) % s.p;
        }
        prod[d] = 0;
    }
    prod.resize(s.k);
    return undigits(prod, s.p);
}

}  // namespace

bool is_supported_field_order(int q) { return find_shape(q) != nullptr; }

Field::Field(int q) {
    const FieldShape* s = find_shape(q);
    if (!s)
        throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                    " (need a prime power <= 16)");
    q_ = s->q;
    p_ = s->p;
    k_ = s->k;

    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    frob_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            auto da = digits(a, p_, k_);
            auto db = digits(b, p_, k_);
            std::vector<int> sum(k_);
            for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[idx(static_cast<GfElem>(a), static_cast<GfElem>(b))] =
                static_cast<GfElem>(undigits(sum, p_));
            mul_[idx(static_cast<GfElem>(a), static_cast<GfElem>(b))] =
                static_cast<GfElem>(poly_mul(a, b, *s));
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            if (add_[idx(static_cast<GfElem>(a), static_cast<GfElem>(b))] == 0)
                neg_[a] = static_cast<GfElem>(b);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(static_cast<GfElem>(a), static_cast<GfElem>(b))] == 1)
                inv_[a] = static_cast<GfElem>(b);
    for (int a = 0; a < q_; ++a)
        frob_[a] = pow(static_cast<GfElem>(a), static_cast<unsigned>(p_));

    for (int g = 1; g < q_; ++g) {
        GfElem x = static_cast<GfElem>(g);
        int order = 1;
        while (x != 1) {
            x = mul(x, static_cast<GfElem>(g));
            ++order;
        }
        if (order == q_ - 1) {
            primitive_ = static_cast<GfElem>(g);
            break;
        }
    }
}

GfElem Field::inv(GfElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

GfElem Field::pow(GfElem a, unsigned e) const {
    GfElem r = 1;
    GfElem base = a;
    while (e) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return r;
}

}  // namespace antiflag
