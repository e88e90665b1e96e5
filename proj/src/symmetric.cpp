#include "tarski/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace tarski {

PartialPerm::PartialPerm(int n, std::vector<int8_t> img) : n_(n), img_(std::move(img)) {
  if (static_cast<int>(img_.size()) != n_)
    fail(Errc::invalid_letter, "image vector size does not match degree");
  uint32_t seen = 0;
  for (int x = 0; x < n_; ++x) {
    int y = img_[static_cast<size_t>(x)];
    if (y < -1 || y >= n_) fail(Errc::invalid_letter, "image value out of range");
    if (y >= 0) {
      if (seen & (1u << y)) fail(Errc::invalid_letter, "partial map is not injective");
      seen |= 1u << y;
    }
  }
}

PartialPerm PartialPerm::identity(int n) {
  std::vector<int8_t> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return PartialPerm(n, std::move(img));
}

PartialPerm PartialPerm::zero(int n) {
  return PartialPerm(n, std::vector<int8_t>(static_cast<size_t>(n), -1));
}

PartialPerm PartialPerm::atom_map(int n, int x, int y) {
  std::vector<int8_t> img(static_cast<size_t>(n), -1);
  img[static_cast<size_t>(x)] = static_cast<int8_t>(y);
  return PartialPerm(n, std::move(img));
}

PartialPerm PartialPerm::identity_on(const FiniteSet& e) {
  std::vector<int8_t> img(static_cast<size_t>(e.universe()), -1);
  for (int x : e.atoms()) img[static_cast<size_t>(x)] = static_cast<int8_t>(x);
  return PartialPerm(e.universe(), std::move(img));
}

PartialPerm PartialPerm::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int8_t> img(static_cast<size_t>(n), -1);
  for (auto [x, y] : pairs) {
    if (img[static_cast<size_t>(x)] >= 0) fail(Errc::invalid_letter, "domain point repeated");
    img[static_cast<size_t>(x)] = static_cast<int8_t>(y);
  }
  return PartialPerm(n, std::move(img));
}

PartialPerm PartialPerm::compose_after(const PartialPerm& first) const {
  if (n_ != first.n_) fail(Errc::arity_mismatch, "composing partial perms of different degrees");
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  for (int x = 0; x < n_; ++x) {
    int y = first.img_[static_cast<size_t>(x)];
    if (y >= 0) img[static_cast<size_t>(x)] = img_[static_cast<size_t>(y)];
  }
  return PartialPerm(n_, std::move(img));
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  for (int x = 0; x < n_; ++x) {
    int y = img_[static_cast<size_t>(x)];
    if (y >= 0) img[static_cast<size_t>(y)] = static_cast<int8_t>(x);
  }
  return PartialPerm(n_, std::move(img));
}

FiniteSet PartialPerm::domain_set() const {
  uint32_t bits = 0;
  for (int x = 0; x < n_; ++x)
    if (defined_at(x)) bits |= 1u << x;
  return FiniteSet(n_, bits);
}

FiniteSet PartialPerm::image_set() const {
  uint32_t bits = 0;
  for (int x = 0; x < n_; ++x)
    if (defined_at(x)) bits |= 1u << img_[static_cast<size_t>(x)];
  return FiniteSet(n_, bits);
}

FiniteSet PartialPerm::fixed_set() const {
  uint32_t bits = 0;
  for (int x = 0; x < n_; ++x)
    if (img_[static_cast<size_t>(x)] == x) bits |= 1u << x;
  return FiniteSet(n_, bits);
}

bool PartialPerm::is_idempotent() const {
  for (int x = 0; x < n_; ++x) {
    int y = img_[static_cast<size_t>(x)];
    if (y >= 0 && y != x) return false;
  }
  return true;
}

int PartialPerm::defined_count() const {
  int c = 0;
  for (int x = 0; x < n_; ++x)
    if (defined_at(x)) ++c;
  return c;
}

uint64_t PartialPerm::key() const {
  // 4 bits per point (value+1), degree in the top bits; fits degrees up to 12
  uint64_t k = static_cast<uint64_t>(n_) << 48;
  for (int x = 0; x < n_; ++x)
    k |= static_cast<uint64_t>(img_[static_cast<size_t>(x)] + 1) << (4 * x);
  return k;
}

std::string PartialPerm::str() const {
  std::string out = "[";
  bool first = true;
  for (int x = 0; x < n_; ++x) {
    if (!defined_at(x)) continue;
    if (!first) out += ", ";
    out += std::to_string(x) + ":" + std::to_string(apply(x));
    first = false;
  }
  return out + "]";
}

FiniteSet SymmetricModel::extract(const Element& s) const {
  if (!s.is_idempotent()) fail(Errc::precondition_violated, "extract needs an idempotent");
  return s.domain_set();
}

PartialPerm SymmetricModel::join2(const Element& s, const Element& t) const {
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  for (int x = 0; x < n_; ++x) {
    if (s.defined_at(x)) img[static_cast<size_t>(x)] = static_cast<int8_t>(s.apply(x));
    else if (t.defined_at(x)) img[static_cast<size_t>(x)] = static_cast<int8_t>(t.apply(x));
  }
  return PartialPerm(n_, std::move(img));
}

PartialPerm SymmetricModel::native_meet(const Element& s, const Element& t) const {
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  for (int x = 0; x < n_; ++x)
    if (s.defined_at(x) && s.apply(x) == t.apply(x))
      img[static_cast<size_t>(x)] = static_cast<int8_t>(s.apply(x));
  return PartialPerm(n_, std::move(img));
}

std::vector<PartialPerm> SymmetricModel::enumerate_all() const {
  // for every domain subset, every injective assignment into {0..n-1}
  std::vector<PartialPerm> out;
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  auto rec = [&](auto&& self, int x, uint32_t used) -> void {
    if (x == n_) {
      out.emplace_back(n_, img);
      return;
    }
    img[static_cast<size_t>(x)] = -1;
    self(self, x + 1, used);
    for (int y = 0; y < n_; ++y) {
      if (used & (1u << y)) continue;
      img[static_cast<size_t>(x)] = static_cast<int8_t>(y);
      self(self, x + 1, used | (1u << y));
    }
    img[static_cast<size_t>(x)] = -1;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<PartialPerm> SymmetricModel::enumerate_units() const {
  std::vector<int8_t> img(static_cast<size_t>(n_));
  std::iota(img.begin(), img.end(), 0);
  std::vector<PartialPerm> out;
  do {
    out.emplace_back(n_, img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<PartialPerm> SymmetricModel::enumerate_involutions() const {
  std::vector<PartialPerm> out;
  for (const auto& g : enumerate_units())
    if (g != one() && g.compose_after(g) == one()) out.push_back(g);
  return out;
}

std::vector<FiniteSet> SymmetricModel::enumerate_idempotents() const {
  std::vector<FiniteSet> out;
  for (uint32_t bits = 0; bits < (1u << n_); ++bits) out.emplace_back(n_, bits);
  return out;
}

std::vector<FiniteSet> SymmetricModel::idem_parts(const Idem& e) const {
  std::vector<FiniteSet> out;
  for (int x : e.atoms()) out.push_back(FiniteSet::singleton(n_, x));
  return out;
}

std::pair<FiniteSet, FiniteSet> SymmetricModel::split_idem(const Idem& e) const {
  if (e.is_zero()) fail(Errc::zero_idempotent, "cannot split the zero idempotent");
  if (e.count() < 2) fail(Errc::atom_obstruction, "atom " + e.str() + " cannot be split");
  auto atoms = e.atoms();
  FiniteSet first = FiniteSet::singleton(n_, atoms[0]);
  return {first, e.minus(first)};
}

std::vector<FiniteSet> SymmetricModel::children(const Idem& elementary) const {
  (void)elementary;
  fail(Errc::atom_obstruction, "atoms of a finite model have no children");
}

PartialPerm SymmetricModel::elementary_transporter(const Idem& p, const Idem& q) const {
  if (p.count() != 1 || q.count() != 1)
    fail(Errc::precondition_violated, "transporter endpoints must be atoms");
  return PartialPerm::atom_map(n_, p.atoms()[0], q.atoms()[0]);
}

std::optional<PartialPerm> SymmetricModel::try_transporter(const Idem& p, const Idem& q) const {
  if (p.count() != 1 || q.count() != 1) return std::nullopt;
  return elementary_transporter(p, q);
}

std::vector<PartialPerm> SymmetricModel::elementary_pieces(const Element& s) const {
  // a finite symmetric inverse monoid is factorizable: one piece suffices
  if (s == zero()) return {};
  return {s};
}

PartialPerm SymmetricModel::unit_above(const Element& s) const {
  std::vector<int8_t> img(static_cast<size_t>(n_), -1);
  uint32_t used = 0;
  for (int x = 0; x < n_; ++x) {
    if (s.defined_at(x)) {
      img[static_cast<size_t>(x)] = static_cast<int8_t>(s.apply(x));
      used |= 1u << s.apply(x);
    }
  }
  int y = 0;
  for (int x = 0; x < n_; ++x) {
    if (img[static_cast<size_t>(x)] >= 0) continue;
    while (used & (1u << y)) ++y;
    img[static_cast<size_t>(x)] = static_cast<int8_t>(y);
    used |= 1u << y;
  }
  return PartialPerm(n_, std::move(img));
}

std::vector<int> structure_space(const SymmetricModel& m) {
  std::vector<int> out(static_cast<size_t>(m.degree()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Arrow> germ_groupoid(const SymmetricModel& m) {
  std::vector<Arrow> out;
  for (int s = 0; s < m.degree(); ++s)
    for (int t = 0; t < m.degree(); ++t) out.push_back({s, t});
  return out;
}

std::optional<Arrow> compose_arrows(const Arrow& a, const Arrow& b) {
  if (a.source != b.target) return std::nullopt;
  return Arrow{b.source, a.target};
}

}  // namespace tarski
