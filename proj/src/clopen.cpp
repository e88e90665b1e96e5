#include "tarski/clopen.hpp"

#include <algorithm>

namespace tarski {

namespace {

// Recursive canonicalization over the word trie. `suffixes` holds the parts
// of the input words below the current node. Returns the canonical word list
// relative to the current node; {epsilon} means the node is fully covered.
std::vector<Word> canon_rec(int arity, std::vector<Word>& suffixes) {
  for (const Word& w : suffixes) {
    if (w.empty()) return {Word{}};  // covers everything below this node
  }
  if (suffixes.empty()) return {};

  std::vector<std::vector<Word>> buckets(static_cast<size_t>(arity));
  for (const Word& w : suffixes) {
    buckets[w[0]].push_back(Word(std::vector<uint8_t>(w.letters().begin() + 1, w.letters().end())));
  }

  std::vector<std::vector<Word>> children(static_cast<size_t>(arity));
  bool all_full = true;
  for (int a = 0; a < arity; ++a) {
    children[static_cast<size_t>(a)] = canon_rec(arity, buckets[static_cast<size_t>(a)]);
    const auto& c = children[static_cast<size_t>(a)];
    if (!(c.size() == 1 && c[0].empty())) all_full = false;
  }
  if (all_full) return {Word{}};  // complete sibling family merges

  std::vector<Word> out;
  for (int a = 0; a < arity; ++a) {
    for (const Word& w : children[static_cast<size_t>(a)]) {
      std::vector<uint8_t> letters;
      letters.reserve(w.size() + 1);
      letters.push_back(static_cast<uint8_t>(a));
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
      out.emplace_back(std::move(letters));
    }
  }
  return out;  // children emitted in letter order: stays sorted
}

}  // namespace

Clopen Clopen::canonicalize(int arity, std::vector<Word> words) {
  if (arity < 2) fail(Errc::invalid_letter, "arity must be >= 2");
  for (const Word& w : words) {
    if (!w.max_letter_below(arity))
      fail(Errc::invalid_letter, "word '" + w.str() + "' has a letter >= arity " + std::to_string(arity));
  }
  std::vector<Word> canon = canon_rec(arity, words);
  return Clopen(arity, std::move(canon));
}

Clopen Clopen::cylinder(int arity, const Word& w) {
  return canonicalize(arity, {w});
}

namespace {

void require_same_arity(const Clopen& a, const Clopen& b) {
  if (a.arity() != b.arity())
    fail(Errc::arity_mismatch,
         "clopen arities " + std::to_string(a.arity()) + " and " + std::to_string(b.arity()));
}

}  // namespace

Clopen Clopen::join(const Clopen& other) const {
  require_same_arity(*this, other);
  std::vector<Word> all = words_;
  all.insert(all.end(), other.words_.begin(), other.words_.end());
  return canonicalize(arity_, std::move(all));
}

Clopen Clopen::meet(const Clopen& other) const {
  require_same_arity(*this, other);
  // Cylinders intersect iff comparable; the intersection is the longer word.
  std::vector<Word> out;
  for (const Word& u : words_) {
    for (const Word& v : other.words_) {
      if (u.is_prefix_of(v)) out.push_back(v);
      else if (v.is_prefix_of(u)) out.push_back(u);
    }
  }
  return canonicalize(arity_, std::move(out));
}

namespace {

// Complement relative to the full space, over canonical (antichain) input.
void complement_rec(int arity, const std::vector<Word>& words, const Word& prefix,
                    std::vector<Word>& out) {
  if (words.empty()) {
    out.push_back(prefix);
    return;
  }
  if (words.size() == 1 && words[0].empty()) return;  // fully covered
  for (int a = 0; a < arity; ++a) {
    std::vector<Word> bucket;
    for (const Word& w : words) {
      if (!w.empty() && w[0] == a)
        bucket.push_back(Word(std::vector<uint8_t>(w.letters().begin() + 1, w.letters().end())));
    }
    complement_rec(arity, bucket, prefix.child(static_cast<uint8_t>(a)), out);
  }
}

}  // namespace

Clopen Clopen::complement() const {
  std::vector<Word> out;
  complement_rec(arity_, words_, Word{}, out);
  return canonicalize(arity_, std::move(out));
}

bool Clopen::contains_word(const Word& w) const {
  for (const Word& u : words_)
    if (u.is_prefix_of(w)) return true;
  return false;
}

std::pair<Clopen, Clopen> Clopen::split() const {
  if (is_zero()) fail(Errc::zero_clopen, "cannot split the empty clopen");
  const Word& first = words_[0];
  std::vector<Word> left{first.child(0)};
  std::vector<Word> right;
  for (int a = 1; a < arity_; ++a) right.push_back(first.child(static_cast<uint8_t>(a)));
  right.insert(right.end(), words_.begin() + 1, words_.end());
  return {canonicalize(arity_, std::move(left)), canonicalize(arity_, std::move(right))};
}

std::pair<std::vector<Word>, std::vector<Word>> equalize(const Clopen& a, const Clopen& b) {
  if (a.arity() != b.arity())
    fail(Errc::arity_mismatch, "equalize across arities");
  if (a.is_zero() || b.is_zero()) fail(Errc::zero_clopen, "equalize needs nonzero clopens");
  const int n = a.arity();
  auto la = a.words();
  auto lb = b.words();
  long diff = static_cast<long>(la.size()) - static_cast<long>(lb.size());
  if (diff % (n - 1) != 0)
    fail(Errc::incompatible_counts,
         "cylinder counts " + std::to_string(la.size()) + " and " + std::to_string(lb.size()) +
             " differ by a non-multiple of " + std::to_string(n - 1));
  auto grow = [n](std::vector<Word>& list) {
    // Splitting the lexicographically last word keeps the list sorted.
    Word last = list.back();
    list.pop_back();
    for (int c = 0; c < n; ++c) list.push_back(last.child(static_cast<uint8_t>(c)));
  };
  while (la.size() < lb.size()) grow(la);
  while (lb.size() < la.size()) grow(lb);
  return {std::move(la), std::move(lb)};
}

}  // namespace tarski
