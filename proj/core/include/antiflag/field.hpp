#ifndef ANTIFLAG_FIELD_HPP
#define ANTIFLAG_FIELD_HPP

#include <cstdint>
#include <vector>

namespace antiflag {

/// Element of a small finite field, identified by its table index.
/// Index 0 is the additive identity, index 1 the multiplicative identity.
/// For extension fields GF(p^k) the index is the integer value of the
/// coefficient vector in base p, highest-degree coefficient most significant.
using GfElem = std::uint8_t;

/// Table-driven arithmetic for GF(q), q = p^k <= 16.
///
/// Extension fields use a fixed irreducible polynomial so that element
/// indexing is identical across runs and platforms:
///   GF(4):  x^2 + x + 1
///   GF(8):  x^3 + x + 1
///   GF(9):  x^2 + 1
///   GF(16): x^4 + x + 1
class Field {
public:
    /// Builds GF(q). Throws std::invalid_argument unless q is a prime
    /// power in {2,3,4,5,7,8,9,11,13,16}.
    explicit Field(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }

    GfElem add(GfElem a, GfElem b) const { return add_[idx(a, b)]; }
    GfElem sub(GfElem a, GfElem b) const { return add_[idx(a, neg_[b])]; }
    GfElem mul(GfElem a, GfElem b) const { return mul_[idx(a, b)]; }
    GfElem neg(GfElem a) const { return neg_[a]; }

    /// Multiplicative inverse; throws std::domain_error on 0.
    GfElem inv(GfElem a) const;

    /// x -> x^p, the generating automorphism; identity on prime fields.
    GfElem frobenius(GfElem a) const { return frob_[a]; }

    GfElem pow(GfElem a, unsigned e) const;

    /// Smallest element generating the multiplicative group.
    GfElem primitive_element() const { return primitive_; }

    bool is_valid(GfElem a) const { return a < q_; }

private:
    std::size_t idx(GfElem a, GfElem b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int q_ = 0;
    int p_ = 0;
    int k_ = 0;
    GfElem primitive_ = 0;
    std::vector<GfElem> add_;   // q*q
    std::vector<GfElem> mul_;   // q*q
    std::vector<GfElem> neg_;   // q
    std::vector<GfElem> inv_;   // q, entry 0 unused
    std::vector<GfElem> frob_;  // q
};

/// True iff q is one of the supported field sizes.
bool is_supported_field_order(int q);

}  // namespace antiflag

#endif
