#include "nfbasis/zero_pattern.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>

namespace nfbasis {

int ZeroPattern::count() const {
    int c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

bool ZeroPattern::contains(const ZeroPattern& other) const {
    if (size_ != other.size_)
        throw InvalidInputError("ZeroPattern::contains: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((other.words_[i] & ~words_[i]) != 0)
            return false;
    return true;
}

int ZeroPattern::compare_value(const ZeroPattern& a, const ZeroPattern& b) {
    if (a.size_ != b.size_)
        throw InvalidInputError("ZeroPattern::compare_value: size mismatch");
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i])
            return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<int> ZeroPattern::bits() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < size_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::uint64_t ZeroPattern::value_u64() const {
    if (size_ > 64)
        throw InvalidInputError("ZeroPattern::value_u64: pattern wider than 64 bits");
    return words_.empty() ? 0 : words_[0];
}

std::string ZeroPattern::value_decimal() const {
    boost::multiprecision::cpp_int v = 0;
    for (std::size_t i = words_.size(); i-- > 0;) {
        v <<= 64;
        v += words_[i];
    }
    return v.str();
}

std::string ZeroPattern::to_string() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i)
        if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::size_t ZeroPattern::hash() const {
    std::size_t h = static_cast<std::size_t>(size_) * 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words_)
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

int ThetaKey::compare(const ThetaKey& a, const ThetaKey& b) {
    if (a.zero_count != b.zero_count)
        return a.zero_count < b.zero_count ? -1 : 1;
    return ZeroPattern::compare_value(a.pattern, b.pattern);
}

std::string ThetaKey::exact_theta_decimal() const {
    boost::multiprecision::cpp_int v = 0;
    const auto& w = pattern.words();
    for (std::size_t i = w.size(); i-- > 0;) {
        v <<= 64;
        v += w[i];
    }
    v += boost::multiprecision::cpp_int(1) << (pattern.size() + zero_count);
    return v.str();
}

} // namespace nfbasis
