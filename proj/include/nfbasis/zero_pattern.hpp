#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfbasis/errors.hpp"

namespace nfbasis {

/// Which entries of an image vector A*s are classified zero. Bit j-1 set
/// means entry j (1-based) vanished. Stored as packed 64-bit words so that
/// row counts beyond 64 work unchanged.
class ZeroPattern {
public:
    ZeroPattern() = default;
    explicit ZeroPattern(int size)
        : size_(size), words_((size + 63) / 64, 0) {
        if (size < 1)
            throw InvalidInputError("ZeroPattern: size must be >= 1");
    }

    int size() const { return size_; }

    bool test(int bit) const { return (words_[bit / 64] >> (bit % 64)) & 1u; }
    void set(int bit) { words_[bit / 64] |= std::uint64_t{1} << (bit % 64); }
    void reset(int bit) { words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64)); }

    int count() const;

    /// True iff every bit of other is also set here.
    bool contains(const ZeroPattern& other) const;

    bool operator==(const ZeroPattern& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    /// Sign of (pattern value of a) - (pattern value of b), where the value
    /// is sum over set bits j of 2^j. Both patterns must have equal size.
    static int compare_value(const ZeroPattern& a, const ZeroPattern& b);

    /// Set-bit positions, ascending (0-based).
    std::vector<int> bits() const;

    /// The pattern value as a decimal string (exact, any size).
    std::string value_decimal() const;

    /// Pattern value as uint64 when size <= 64.
    std::uint64_t value_u64() const;

    /// Row-order rendering: character k is '1' when entry k+1 is zero.
    std::string to_string() const;

    std::size_t hash() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ordering key realizing the zero-maximizing preference: more zeros first,
/// ties broken by the pattern value (zeros at higher indices win). The pair
/// ordering is equivalent to comparing the exact integers
/// 2^(m + zero_count) + pattern_value, which are exposed for display only.
struct ThetaKey {
    int zero_count = 0;
    ZeroPattern pattern;

    static ThetaKey from_pattern(const ZeroPattern& p) {
        return ThetaKey{p.count(), p};
    }

    /// <0, 0, >0 like a three-way comparison; keys must share the size m.
    static int compare(const ThetaKey& a, const ThetaKey& b);

    bool operator<(const ThetaKey& b) const { return compare(*this, b) < 0; }
    bool operator>(const ThetaKey& b) const { return compare(*this, b) > 0; }
    bool operator==(const ThetaKey& b) const { return compare(*this, b) == 0; }

    /// Exact theta = 2^(m + zero_count) + pattern_value, as a decimal string.
    std::string exact_theta_decimal() const;
};

} // namespace nfbasis
