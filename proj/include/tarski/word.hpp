#ifndef TARSKI_WORD_HPP
#define TARSKI_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tarski/error.hpp"

namespace tarski {

// A finite word over the alphabet {0..n-1}. The empty word denotes the whole
// space when read as a cylinder. Arity is carried by the containing value
// (Clopen / PrefixBijection), not by the word itself.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<uint8_t> letters) : letters_(std::move(letters)) {}

  static Word parse(const std::string& text) {
    std::vector<uint8_t> out;
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') fail(Errc::parse_error, "bad letter '" + std::string(1, c) + "' in word");
      out.push_back(static_cast<uint8_t>(c - '0'));
    }
    return Word(std::move(out));
  }

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  uint8_t operator[](size_t i) const { return letters_[i]; }
  const std::vector<uint8_t>& letters() const { return letters_; }

  bool is_prefix_of(const Word& other) const {
    if (size() > other.size()) return false;
    for (size_t i = 0; i < size(); ++i)
      if (letters_[i] != other.letters_[i]) return false;
    return true;
  }

  // Two cylinders intersect iff their words are comparable in the prefix order.
  bool comparable(const Word& other) const {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  Word concat(const Word& suffix) const {
    std::vector<uint8_t> out = letters_;
    out.insert(out.end(), suffix.letters_.begin(), suffix.letters_.end());
    return Word(std::move(out));
  }

  Word child(uint8_t letter) const {
    std::vector<uint8_t> out = letters_;
    out.push_back(letter);
    return Word(std::move(out));
  }

  // pre: this is a prefix of w
  Word suffix_after(const Word& w) const {
    return Word(std::vector<uint8_t>(w.letters_.begin() + static_cast<long>(size()),
                                     w.letters_.end()));
  }

  Word prefix(size_t len) const {
    return Word(std::vector<uint8_t>(letters_.begin(), letters_.begin() + static_cast<long>(len)));
  }

  bool max_letter_below(int arity) const {
    for (uint8_t a : letters_)
      if (a >= arity) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    out.reserve(letters_.size());
    for (uint8_t a : letters_) out.push_back(static_cast<char>('0' + a));
    return out;
  }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<uint8_t> letters_;
};

}  // namespace tarski

#endif  // TARSKI_WORD_HPP
