#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rct/errors.hpp"

namespace rct {

enum class Ordering { LT, EQ, GT };

// A finite 0/1 sequence. The empty sequence is the root of the binary tree.
class BitSeq {
public:
    BitSeq() = default;

    explicit BitSeq(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw parse_error("bit sequence must be over {0,1}, got \"" + bits_ + "\"");
    }

    static BitSeq of(std::string_view sv) { return BitSeq(std::string(sv)); }

    // Sequence of length `len` whose set bits are given by `mask` (bit i of
    // the mask is position i of the sequence).
    static BitSeq from_mask(std::uint64_t mask, std::size_t len) {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            if ((mask >> i) & 1) s[i] = '1';
        return BitSeq(std::move(s));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t i) const {
        if (i >= bits_.size())
            throw length_error("bit index " + std::to_string(i) + " out of range for \"" + bits_ +
                               "\"");
        return bits_[i] - '0';
    }

    BitSeq append(int b) const {
        BitSeq r = *this;
        r.bits_.push_back(b ? '1' : '0');
        return r;
    }

    BitSeq prefix(std::size_t len) const {
        if (len > bits_.size())
            throw length_error("prefix length exceeds sequence length");
        return BitSeq(bits_.substr(0, len));
    }

    bool is_prefix_of(const BitSeq& o) const {
        return bits_.size() <= o.bits_.size() &&
               o.bits_.compare(0, bits_.size(), bits_) == 0;
    }

    // One is an initial segment of the other.
    bool comparable_with(const BitSeq& o) const {
        return is_prefix_of(o) || o.is_prefix_of(*this);
    }

    const std::string& str() const { return bits_; }

    friend bool operator==(const BitSeq& a, const BitSeq& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const BitSeq& a, const BitSeq& b) { return !(a == b); }

private:
    std::string bits_;
};

// Dictionary order: a proper initial segment precedes its extensions.
inline Ordering lex_cmp(const BitSeq& s, const BitSeq& t) {
    int c = s.str().compare(t.str());
    return c < 0 ? Ordering::LT : c > 0 ? Ordering::GT : Ordering::EQ;
}

inline bool lex_less(const BitSeq& s, const BitSeq& t) { return lex_cmp(s, t) == Ordering::LT; }

// Length first, then dictionary order within a length. Canonical node order.
inline bool shortlex_less(const BitSeq& s, const BitSeq& t) {
    if (s.size() != t.size()) return s.size() < t.size();
    return s.str() < t.str();
}

// Longest common initial segment.
inline BitSeq meet(const BitSeq& s, const BitSeq& t) {
    std::size_t n = std::min(s.size(), t.size());
    std::size_t i = 0;
    while (i < n && s.str()[i] == t.str()[i]) ++i;
    return s.prefix(i);
}

// The bit of `t` at the length of `s`. Requires |s| < |t|.
inline int passing_number(const BitSeq& t, const BitSeq& s) {
    if (s.size() >= t.size())
        throw length_error("passing number needs |s| < |t| (got |s|=" +
                           std::to_string(s.size()) + ", |t|=" + std::to_string(t.size()) + ")");
    return t.bit(s.size());
}

inline void sort_shortlex(std::vector<BitSeq>& v) {
    std::sort(v.begin(), v.end(), shortlex_less);
}

} // namespace rct

template <>
struct std::hash<rct::BitSeq> {
    std::size_t operator()(const rct::BitSeq& b) const noexcept {
        return std::hash<std::string>{}(b.str());
    }
};
