#ifndef TARSKI_SAMPLING_HPP
#define TARSKI_SAMPLING_HPP

#include <random>
#include <vector>

#include "tarski/cuntz.hpp"

namespace tarski {

// Seed-controlled generator of C_n values. Elements are joins of up to four
// orthogonal word pairs of depth <= 5; units are products of up to six
// special involutions and 3-cycles.
class CuntzSampler {
 public:
  CuntzSampler(int arity, uint64_t seed) : n_(arity), model_(arity), rng_(seed) {}

  const CuntzModel& model() const { return model_; }
  std::mt19937_64& rng() { return rng_; }

  Word word(int min_len, int max_len) {
    int len = pick(min_len, max_len);
    std::vector<uint8_t> letters;
    for (int i = 0; i < len; ++i) letters.push_back(static_cast<uint8_t>(pick(0, n_ - 1)));
    return Word(std::move(letters));
  }

  Clopen clopen(int max_words = 4, int max_len = 5) {
    std::vector<Word> ws;
    int k = pick(0, max_words);
    for (int i = 0; i < k; ++i) ws.push_back(word(0, max_len));
    return Clopen::canonicalize(n_, std::move(ws));
  }

  Clopen nonzero_clopen(int max_words = 4, int max_len = 5) {
    for (;;) {
      Clopen e = clopen(max_words, max_len);
      if (!e.is_zero()) return e;
    }
  }

  // a proper nonzero clopen (neither 0 nor the whole space)
  Clopen proper_clopen(int max_words = 3, int max_len = 4) {
    for (;;) {
      Clopen e = clopen(max_words, max_len);
      if (!e.is_zero() && !e.is_one()) return e;
    }
  }

  PrefixBijection element(int max_pairs = 4, int max_len = 5) {
    int k = pick(1, max_pairs);
    std::vector<PrefixBijection::Pair> pairs;
    for (int attempts = 0; attempts < 64 && static_cast<int>(pairs.size()) < k; ++attempts) {
      Word u = word(0, max_len);
      Word v = word(0, max_len);
      bool ok = true;
      for (const auto& [p, q] : pairs)
        if (u.comparable(p) || v.comparable(q)) ok = false;
      if (ok) pairs.push_back({u, v});
    }
    return PrefixBijection::make(n_, std::move(pairs));
  }

  PrefixBijection nonzero_element(int max_pairs = 4, int max_len = 5) {
    for (;;) {
      PrefixBijection s = element(max_pairs, max_len);
      if (!s.is_zero()) return s;
    }
  }

  // two prefix-incomparable words
  std::pair<Word, Word> incomparable_words(int max_len = 3) {
    for (;;) {
      Word u = word(1, max_len);
      Word v = word(1, max_len);
      if (!u.comparable(v)) return {u, v};
    }
  }

  PrefixBijection unit(int max_factors = 6) {
    PrefixBijection g = model_.one();
    int k = pick(1, max_factors);
    for (int i = 0; i < k; ++i) {
      if (pick(0, 2) < 2) {
        auto [u, v] = incomparable_words();
        g = compose(g, swap_involution(n_, u, v));
      } else {
        // a 3-cycle across three disjoint cylinders
        Clopen e = nonzero_clopen(2, 2);
        auto [e1, rest] = e.split();
        auto [e2, e3] = rest.is_zero() ? e1.split() : std::pair<Clopen, Clopen>{rest, rest};
        if (rest.is_zero()) {
          // e was a single max-depth cylinder; split twice instead
          auto [a1, a2] = e.split();
          auto [b1, b2] = a1.split();
          e1 = b1; e2 = b2; e3 = a2;
        } else {
          auto [c1, c2] = rest.split();
          e2 = c1; e3 = c2;
        }
        PrefixBijection a = model_.elementary_transporter(
            Clopen::cylinder(n_, e1.words()[0]), Clopen::cylinder(n_, e2.words()[0]));
        PrefixBijection b = model_.elementary_transporter(
            Clopen::cylinder(n_, e2.words()[0]), Clopen::cylinder(n_, e3.words()[0]));
        g = compose(g, special_three_cycle(model_, b, a).g);
      }
    }
    return g;
  }

  Point point(int max_pre = 4, int max_period = 3) {
    return Point::make(n_, word(0, max_pre), word(1, max_period));
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  int n_;
  CuntzModel model_;
  std::mt19937_64 rng_;
};

}  // namespace tarski

#endif  // TARSKI_SAMPLING_HPP
