#include <doctest.h>

#include <random>

#include "rct/bitseq.hpp"

using namespace rct;

namespace {

BitSeq random_seq(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> coin(0, 1);
    std::string s;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s.push_back(coin(rng) ? '1' : '0');
    return BitSeq(s);
}

} // namespace

TEST_CASE("lex comparison") {
    CHECK(lex_cmp(BitSeq::of("0"), BitSeq::of("10")) == Ordering::LT);
    CHECK(lex_cmp(BitSeq(), BitSeq()) == Ordering::EQ);
    CHECK(lex_cmp(BitSeq::of("011"), BitSeq::of("010")) == Ordering::GT);
    CHECK(lex_cmp(BitSeq::of("0"), BitSeq::of("01")) == Ordering::LT); // prefix first
}

TEST_CASE("passing numbers") {
    CHECK(passing_number(BitSeq::of("10"), BitSeq::of("0")) == 0);
    CHECK(passing_number(BitSeq::of("011"), BitSeq::of("01")) == 1);
    CHECK_THROWS_AS(passing_number(BitSeq::of("1"), BitSeq::of("1")), length_error);
}

TEST_CASE("meets") {
    CHECK(meet(BitSeq::of("001"), BitSeq::of("01")) == BitSeq::of("0"));
    BitSeq s = BitSeq::of("0110");
    CHECK(meet(s, s) == s);
    CHECK(meet(BitSeq::of("1"), BitSeq::of("0")) == BitSeq());
}

TEST_CASE("meet is a semilattice operation") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 300; ++trial) {
        BitSeq a = random_seq(rng, 8), b = random_seq(rng, 8), c = random_seq(rng, 8);
        CHECK(meet(a, b) == meet(b, a));
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(meet(a, a) == a);
        CHECK(meet(a, b).size() <= std::min(a.size(), b.size()));
        CHECK(meet(a, b).is_prefix_of(a));
    }
}

TEST_CASE("sequence validation") {
    CHECK_THROWS_AS(BitSeq::of("0121"), parse_error);
    CHECK(BitSeq::from_mask(0b101, 3) == BitSeq::of("101"));
    CHECK(BitSeq::from_mask(0, 0) == BitSeq());
}
