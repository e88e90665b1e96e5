#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "tarski/clopen.hpp"
#include "tarski/finite_set.hpp"

using namespace tarski;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

Clopen C2(std::initializer_list<std::string> words) {
  std::vector<Word> ws;
  for (const auto& s : words) ws.push_back(W(s));
  return Clopen::canonicalize(2, std::move(ws));
}

// Truth-table oracle: membership of every word of length k, computed directly
// from a raw (not necessarily canonical) word list. Independent of the Clopen
// operations it checks.
std::vector<bool> oracle_table(const std::vector<Word>& raw, int arity, int k) {
  size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<size_t>(arity);
  std::vector<bool> table(total, false);
  for (size_t idx = 0; idx < total; ++idx) {
    std::vector<uint8_t> letters(static_cast<size_t>(k));
    size_t v = idx;
    for (int i = k - 1; i >= 0; --i) {
      letters[static_cast<size_t>(i)] = static_cast<uint8_t>(v % static_cast<size_t>(arity));
      v /= static_cast<size_t>(arity);
    }
    Word w{letters};
    for (const Word& u : raw) {
      if (u.is_prefix_of(w)) {
        table[idx] = true;
        break;
      }
    }
  }
  return table;
}

std::vector<bool> oracle_table(const Clopen& c, int k) { return oracle_table(c.words(), c.arity(), k); }

std::vector<Word> random_words(std::mt19937_64& rng, int arity, int max_len, int count) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, arity - 1);
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) {
    int len = len_dist(rng);
    std::vector<uint8_t> letters;
    for (int j = 0; j < len; ++j) letters.push_back(static_cast<uint8_t>(letter_dist(rng)));
    out.emplace_back(std::move(letters));
  }
  return out;
}

// All 2^(2^k) clopens over arity 2 whose words have length exactly k, indexed
// by leaf subsets. Used for the exhaustive sweeps.
Clopen clopen_from_leafmask(int k, uint32_t mask) {
  std::vector<Word> ws;
  for (uint32_t leaf = 0; leaf < (1u << k); ++leaf) {
    if (!((mask >> leaf) & 1u)) continue;
    std::vector<uint8_t> letters(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) letters[static_cast<size_t>(i)] = static_cast<uint8_t>((leaf >> (k - 1 - i)) & 1u);
    ws.emplace_back(std::move(letters));
  }
  return Clopen::canonicalize(2, std::move(ws));
}

}  // namespace

TEST_CASE("canonicalize: spec examples") {
  CHECK(C2({"0", "1"}) == Clopen::one(2));
  CHECK(C2({"0", "01"}) == C2({"0"}));
  CHECK(C2({"00", "01"}) == C2({"0"}));
  CHECK(C2({}) == Clopen::zero(2));
  // deep merge cascades to fixpoint
  CHECK(C2({"000", "001", "01", "1"}) == Clopen::one(2));
}

TEST_CASE("canonicalize: rejects letters beyond the arity") {
  CHECK_THROWS_AS(Clopen::canonicalize(2, {W("02")}), Error);
  try {
    Clopen::canonicalize(2, {W("02")});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_letter);
  }
}

TEST_CASE("boolean ops: spec examples") {
  CHECK(C2({"0"}).complement() == C2({"1"}));
  CHECK(C2({"0"}).meet(C2({"01"})) == C2({"01"}));
  CHECK(C2({"00"}).leq(C2({"0"})));
  CHECK_FALSE(C2({"0"}).leq(C2({"00"})));
  CHECK(Clopen::one(2).complement() == Clopen::zero(2));
  CHECK_THROWS_AS(C2({"0"}).join(Clopen::one(3)), Error);
}

TEST_CASE("boolean ops agree with the truth-table oracle (randomized, k=8)") {
  std::mt19937_64 rng(0xC10FE5u);
  const int k = 8;
  for (int iter = 0; iter < 2000; ++iter) {
    auto raw_a = random_words(rng, 2, 6, 4);
    auto raw_b = random_words(rng, 2, 6, 4);
    Clopen a = Clopen::canonicalize(2, raw_a);
    Clopen b = Clopen::canonicalize(2, raw_b);
    auto ta = oracle_table(raw_a, 2, k);
    auto tb = oracle_table(raw_b, 2, k);

    CHECK(oracle_table(a, k) == ta);  // canonicalize preserves the set

    auto t_union = oracle_table(a.join(b), k);
    auto t_meet = oracle_table(a.meet(b), k);
    auto t_comp = oracle_table(a.complement(), k);
    bool leq_oracle = true;
    for (size_t i = 0; i < ta.size(); ++i) {
      CHECK(t_union[i] == (ta[i] || tb[i]));
      CHECK(t_meet[i] == (ta[i] && tb[i]));
      CHECK(t_comp[i] == !ta[i]);
      if (ta[i] && !tb[i]) leq_oracle = false;
    }
    CHECK(a.leq(b) == leq_oracle);

    // leq via Boolean-algebra route == direct prefix containment on canonical forms
    bool direct = true;
    for (const Word& u : a.words()) {
      bool covered = false;
      for (const Word& v : b.words())
        if (v.is_prefix_of(u)) covered = true;
      if (!covered) direct = false;
    }
    CHECK(a.leq(b) == direct);
  }
}

TEST_CASE("canonicalize is idempotent and outputs are canonical") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    auto raw = random_words(rng, 3, 5, 5);
    Clopen a = Clopen::canonicalize(3, raw);
    Clopen again = Clopen::canonicalize(3, a.words());
    CHECK(a == again);
    // words sorted and an antichain
    for (size_t i = 0; i + 1 < a.words().size(); ++i) CHECK(a.words()[i] < a.words()[i + 1]);
    for (size_t i = 0; i < a.words().size(); ++i)
      for (size_t j = 0; j < a.words().size(); ++j)
        if (i != j) CHECK_FALSE(a.words()[i].is_prefix_of(a.words()[j]));
  }
}

TEST_CASE("boolean laws hold exactly on random inputs") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    Clopen a = Clopen::canonicalize(2, random_words(rng, 2, 5, 3));
    Clopen b = Clopen::canonicalize(2, random_words(rng, 2, 5, 3));
    Clopen c = Clopen::canonicalize(2, random_words(rng, 2, 5, 3));
    CHECK(a.join(b) == b.join(a));
    CHECK(a.meet(b) == b.meet(a));
    CHECK(a.join(b.join(c)) == a.join(b).join(c));
    CHECK(a.meet(b.meet(c)) == a.meet(b).meet(c));
    CHECK(a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
    CHECK(a.join(b.meet(c)) == a.join(b).meet(a.join(c)));
    CHECK(a.join(b).complement() == a.complement().meet(b.complement()));
    CHECK(a.meet(b).complement() == a.complement().join(b.complement()));
    CHECK(a.complement().complement() == a);
  }
}

TEST_CASE("split: spec examples and atomlessness") {
  auto [t0, t1] = Clopen::one(2).split();
  CHECK(t0 == C2({"0"}));
  CHECK(t1 == C2({"1"}));
  auto [z0, z1] = C2({"0"}).split();
  CHECK(z0 == C2({"00"}));
  CHECK(z1 == C2({"01"}));
  CHECK_THROWS_AS(Clopen::zero(2).split(), Error);

  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 300; ++iter) {
    Clopen e = Clopen::canonicalize(2, random_words(rng, 2, 6, 4));
    if (e.is_zero()) continue;
    auto [e1, e2] = e.split();
    CHECK_FALSE(e1.is_zero());
    CHECK_FALSE(e2.is_zero());
    CHECK(e1.meet(e2).is_zero());
    CHECK(e1.join(e2) == e);
  }
}

TEST_CASE("equalize: examples") {
  // {10,11} canonicalizes to {1}, so the one-word decompositions are final.
  auto [sa, sb] = equalize(C2({"0"}), C2({"10", "11"}));
  CHECK(sa == std::vector<Word>{W("0")});
  CHECK(sb == std::vector<Word>{W("1")});

  // a genuinely two-word right side forces one split on the left
  auto [la, lb] = equalize(C2({"0"}), C2({"01", "10"}));
  CHECK(la == std::vector<Word>{W("00"), W("01")});
  CHECK(lb == std::vector<Word>{W("01"), W("10")});

  CHECK_THROWS_AS(equalize(Clopen::zero(2), C2({"0"})), Error);
}

TEST_CASE("equalize: decompositions re-canonicalize to the inputs") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    Clopen a = Clopen::canonicalize(2, random_words(rng, 2, 5, 3));
    Clopen b = Clopen::canonicalize(2, random_words(rng, 2, 5, 3));
    if (a.is_zero() || b.is_zero()) continue;
    auto [la, lb] = equalize(a, b);
    REQUIRE(la.size() == lb.size());
    CHECK(Clopen::canonicalize(2, la) == a);
    CHECK(Clopen::canonicalize(2, lb) == b);
    // both lists are disjoint decompositions
    for (size_t i = 0; i < la.size(); ++i)
      for (size_t j = i + 1; j < la.size(); ++j) {
        CHECK_FALSE(la[i].comparable(la[j]));
        CHECK_FALSE(lb[i].comparable(lb[j]));
      }
  }
}

TEST_CASE("equalize: count obstruction for arity 3") {
  // one cylinder vs two: difference 1 is not a multiple of arity-1 = 2
  Clopen a = Clopen::canonicalize(3, {W("0")});
  Clopen b = Clopen::canonicalize(3, {W("1"), W("2")});
  // b = {1,2}; splitting changes counts by 2, so 1 vs 2 can never meet
  try {
    equalize(a, b);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::incompatible_counts);
  }
}

TEST_CASE("exhaustive depth-4 sweep: unary ops against the oracle") {
  const int k = 4;
  for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
    Clopen a = clopen_from_leafmask(k, mask);
    auto ta = oracle_table(a, k);
    uint32_t got = 0;
    for (int leaf = 0; leaf < 16; ++leaf)
      if (ta[static_cast<size_t>(leaf)]) got |= 1u << leaf;
    REQUIRE(got == mask);
    // complement is exact bitwise complement
    auto tc = oracle_table(a.complement(), k);
    for (int leaf = 0; leaf < 16; ++leaf)
      REQUIRE(tc[static_cast<size_t>(leaf)] == !ta[static_cast<size_t>(leaf)]);
    REQUIRE(a.is_zero() == (mask == 0));
    REQUIRE(a.is_one() == (mask == 0xFFFFu));
    // canonicalize is idempotent across the whole depth-4 universe
    REQUIRE(Clopen::canonicalize(2, a.words()) == a);
  }
}

TEST_CASE("exhaustive depth-3 sweep: binary ops against the oracle") {
  const int k = 3;
  std::vector<Clopen> all;
  std::vector<uint32_t> masks;
  for (uint32_t mask = 0; mask < (1u << 8); ++mask) {
    all.push_back(clopen_from_leafmask(k, mask));
    masks.push_back(mask);
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      auto tu = oracle_table(all[i].join(all[j]), k);
      auto tm = oracle_table(all[i].meet(all[j]), k);
      uint32_t got_u = 0, got_m = 0;
      for (int leaf = 0; leaf < 8; ++leaf) {
        if (tu[static_cast<size_t>(leaf)]) got_u |= 1u << leaf;
        if (tm[static_cast<size_t>(leaf)]) got_m |= 1u << leaf;
      }
      REQUIRE(got_u == (masks[i] | masks[j]));
      REQUIRE(got_m == (masks[i] & masks[j]));
      REQUIRE(all[i].leq(all[j]) == ((masks[i] & ~masks[j]) == 0));
    }
  }
}

TEST_CASE("finite sets: boolean algebra on bitsets") {
  FiniteSet a(4, 0b0011);
  FiniteSet b(4, 0b0110);
  CHECK(a.join(b) == FiniteSet(4, 0b0111));
  CHECK(a.meet(b) == FiniteSet(4, 0b0010));
  CHECK(a.complement() == FiniteSet(4, 0b1100));
  CHECK(a.minus(b) == FiniteSet(4, 0b0001));
  CHECK(FiniteSet::empty(4).is_zero());
  CHECK(FiniteSet::full(4).is_one());
  CHECK(a.leq(FiniteSet::full(4)));
  CHECK_FALSE(FiniteSet::full(4).leq(a));
  CHECK(a.atoms() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(a.join(FiniteSet::full(5)), Error);
}
