#pragma once

#include "rct/bitseq.hpp"
#include "rct/errors.hpp"

namespace rct {

// The linear order on binary sequences order-isomorphic to the rationals:
// s precedes t when s is lexicographically smaller (incomparable case), or
// t extends s through bit 1, or s extends t through bit 0.
inline Ordering triangle_order_cmp(const BitSeq& s, const BitSeq& t) {
    if (s == t) throw equal_input("order comparison needs distinct sequences");
    bool before;
    if (s.is_prefix_of(t))
        before = t.bit(s.size()) == 1;
    else if (t.is_prefix_of(s))
        before = s.bit(t.size()) == 0;
    else
        before = lex_less(s, t);
    return before ? Ordering::LT : Ordering::GT;
}

inline bool triangle_less(const BitSeq& s, const BitSeq& t) {
    return triangle_order_cmp(s, t) == Ordering::LT;
}

// Two-coloring of unordered pairs: color 0 when the length order and the
// tree order agree. Input is normalized to (shorter, longer), ties broken
// lexicographically, so the result is independent of argument order.
inline int sierpinski_color(const BitSeq& s, const BitSeq& t) {
    if (s == t) throw equal_input("pair coloring needs distinct sequences");
    const BitSeq* a = &s;
    const BitSeq* b = &t;
    if (b->size() < a->size() || (a->size() == b->size() && lex_less(*b, *a))) std::swap(a, b);
    return triangle_less(*a, *b) ? 0 : 1;
}

} // namespace rct
