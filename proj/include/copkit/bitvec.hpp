#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace copkit {

// Flat bit vector over indices [0, size). Backed by 64-bit words; index i
// lives in word i/64 at bit i%64. This is the workhorse behind set
// membership and the word-parallel pair counting in rep.hpp.
class bitvec {
public:
    bitvec() = default;

    explicit bitvec(std::uint64_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint64_t size() const { return nbits_; }

    void set(std::uint64_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::uint64_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(std::uint64_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    std::uint64_t word_count() const { return words_.size(); }
    std::uint64_t word(std::uint64_t j) const { return words_[j]; }

    std::uint64_t word_or_zero(std::uint64_t j) const {
        return j < words_.size() ? words_[j] : 0;
    }

    // Word with bits [0, upto] set, for clipping the last word of a range.
    static std::uint64_t low_mask(std::uint64_t upto) {
        return upto >= 63 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << (upto + 1)) - 1;
    }

    // R[i] = (*this)[top - i] for i in [0, top]. Requires top < size().
    bitvec reversed(std::uint64_t top) const {
        assert(top < nbits_);
        bitvec r(top + 1);
        for (std::uint64_t i = 0; i <= top; ++i)
            if (test(top - i)) r.set(i);
        return r;
    }

    // #{ i in [0, hi] : a[i] and r[i + shift] }, machine-word-parallel.
    // Indices past either vector's end read as zero.
    static std::uint64_t and_popcount_shifted(const bitvec& a, const bitvec& r,
                                              std::uint64_t shift, std::uint64_t hi) {
        assert(hi < a.size());
        const std::uint64_t qoff = shift >> 6;
        const unsigned s = static_cast<unsigned>(shift & 63);
        const std::uint64_t last = hi >> 6;
        std::uint64_t total = 0;
        for (std::uint64_t j = 0; j <= last; ++j) {
            std::uint64_t av = a.words_[j];
            if (j == last) av &= low_mask(hi & 63);
            if (!av) continue;
            const std::uint64_t q = j + qoff;
            std::uint64_t rv = r.word_or_zero(q) >> s;
            if (s) rv |= r.word_or_zero(q + 1) << (64 - s);
            total += std::popcount(av & rv);
        }
        return total;
    }

    friend bool operator==(const bitvec&, const bitvec&) = default;

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace copkit
