#ifndef ANTIFLAG_BITSET_HPP
#define ANTIFLAG_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace antiflag {

/// Fixed-size dense bitset sized at runtime. Vertex sets, adjacency rows.
class DynBitset {
public:
    DynBitset() : nbits_(0) {}
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t words() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }
    std::uint64_t& word(std::size_t i) { return w_[i]; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t{0};
        trim();
    }
    void reset_all() {
        for (auto& w : w_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    DynBitset& operator^=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    /// a & b has no set bit.
    bool disjoint(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return false;
        return true;
    }
    /// every set bit of *this is set in o.
    bool subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    /// Index of lowest set bit, or size() if empty.
    std::size_t find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return nbits_;
    }
    /// Next set bit strictly after i, or size().
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= nbits_) return nbits_;
        std::size_t wi = i >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w_[wi]));
        return nbits_;
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = find_first(); i < nbits_; i = find_next(i)) out.push_back(i);
        return out;
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
    }
    std::size_t nbits_;
    std::vector<std::uint64_t> w_;
};

}  // namespace antiflag

#endif
