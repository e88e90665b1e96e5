#ifndef TARSKI_CLOPEN_HPP
#define TARSKI_CLOPEN_HPP

#include <utility>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

// A clopen subset of n-ary Cantor space, held in canonical form: a
// lexicographically sorted antichain of cylinder words with no complete
// sibling family. Canonical form makes structural equality coincide with
// semantic equality, which everything downstream relies on.
//
// {} is the empty set, { epsilon } is the whole space.
class Clopen {
 public:
  // Canonicalizes an arbitrary union of cylinders: absorbs covered words and
  // merges complete sibling families to fixpoint.
  static Clopen canonicalize(int arity, std::vector<Word> words);

  static Clopen zero(int arity) { return Clopen(arity, {}); }
  static Clopen one(int arity) { return Clopen(arity, {Word{}}); }
  static Clopen cylinder(int arity, const Word& w);

  int arity() const { return arity_; }
  const std::vector<Word>& words() const { return words_; }

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0].empty(); }

  Clopen join(const Clopen& other) const;
  Clopen meet(const Clopen& other) const;
  Clopen complement() const;
  Clopen minus(const Clopen& other) const { return meet(other.complement()); }

  // e <= f iff e & ~f = 0; cross-checked in tests against direct prefix
  // containment, which is equivalent on canonical forms.
  bool leq(const Clopen& other) const { return minus(other).is_zero(); }

  bool contains_word(const Word& w) const;

  // Splits a nonzero clopen into two nonzero disjoint parts that rejoin to it:
  // the lexicographically first word goes to child 0 versus children 1..n-1.
  std::pair<Clopen, Clopen> split() const;

  bool operator==(const Clopen&) const = default;

 private:
  Clopen(int arity, std::vector<Word> canonical_words)
      : arity_(arity), words_(std::move(canonical_words)) {}

  int arity_ = 2;
  std::vector<Word> words_;
};

// Equal-length disjoint cylinder decompositions of a and b, produced by
// repeatedly splitting the shorter list's lexicographically last word into
// its children. Throws IncompatibleCounts when the list sizes cannot be
// equalized mod (arity - 1); always satisfiable for arity 2.
std::pair<std::vector<Word>, std::vector<Word>> equalize(const Clopen& a, const Clopen& b);

}  // namespace tarski

#endif  // TARSKI_CLOPEN_HPP
