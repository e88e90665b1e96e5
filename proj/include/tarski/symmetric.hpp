#ifndef TARSKI_SYMMETRIC_HPP
#define TARSKI_SYMMETRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tarski/finite_set.hpp"
#include "tarski/inverse_core.hpp"

namespace tarski {

// Partial injective map on {0..n-1}: an element of the finite symmetric
// inverse monoid I_n. img_[x] == -1 means undefined at x.
class PartialPerm {
 public:
  PartialPerm() = default;
  PartialPerm(int n, std::vector<int8_t> img);

  static PartialPerm identity(int n);
  static PartialPerm zero(int n);
  // single-pair map x -> y
  static PartialPerm atom_map(int n, int x, int y);
  static PartialPerm identity_on(const FiniteSet& e);
  static PartialPerm from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int degree() const { return n_; }
  int apply(int x) const { return img_[static_cast<size_t>(x)]; }
  bool defined_at(int x) const { return img_[static_cast<size_t>(x)] >= 0; }

  PartialPerm compose_after(const PartialPerm& first) const;  // this ∘ first
  PartialPerm inverse() const;

  FiniteSet domain_set() const;
  FiniteSet image_set() const;
  FiniteSet fixed_set() const;

  bool is_idempotent() const;
  bool is_permutation() const { return domain_set().is_one() && image_set().is_one(); }
  int defined_count() const;

  uint64_t key() const;  // packed form, usable as a hash/map key
  std::string str() const;

  bool operator==(const PartialPerm&) const = default;
  bool operator<(const PartialPerm& o) const { return key() < o.key(); }

 private:
  int n_ = 0;
  std::vector<int8_t> img_;
};

// The monoid I_n presented through the generic model interface, plus the
// brute-force machinery only a finite model can offer (full enumeration,
// pencils, simplicity checkers, finite Stone duality).
class SymmetricModel {
 public:
  using Element = PartialPerm;
  using Idem = FiniteSet;
  using Ultrafilter = int;  // principal ultrafilter at an atom

  explicit SymmetricModel(int n) : n_(n) {}
  int degree() const { return n_; }

  Element mul(const Element& s, const Element& t) const { return s.compose_after(t); }
  Element inv(const Element& s) const { return s.inverse(); }
  Element zero() const { return PartialPerm::zero(n_); }
  Element one() const { return PartialPerm::identity(n_); }
  bool is_idempotent(const Element& s) const { return s.is_idempotent(); }
  Idem phi_raw(const Element& s) const { return s.fixed_set(); }
  Idem extract(const Element& s) const;
  Element embed(const Idem& e) const { return PartialPerm::identity_on(e); }
  Element join2(const Element& s, const Element& t) const;

  // native meet: graph intersection; used only to cross-check the generic one
  Element native_meet(const Element& s, const Element& t) const;

  std::vector<Element> enumerate_all() const;
  std::vector<Element> enumerate_units() const;
  std::vector<Element> enumerate_involutions() const;  // units t with t²=1, t≠1
  std::vector<Idem> enumerate_idempotents() const;     // all 2^n algebra values

  // --- witness-construction capabilities ---
  std::vector<Idem> idem_parts(const Idem& e) const;  // atoms
  std::pair<Idem, Idem> split_idem(const Idem& e) const;
  std::vector<Idem> children(const Idem& elementary) const;  // atoms split no further
  Element elementary_transporter(const Idem& p, const Idem& q) const;
  std::optional<Element> try_transporter(const Idem& p, const Idem& q) const;
  std::vector<Element> elementary_pieces(const Element& s) const;
  Element unit_above(const Element& s) const;  // greedy completion to a permutation

  bool ultrafilter_contains(const Ultrafilter& atom, const Idem& e) const { return e.contains(atom); }

 private:
  int n_;
};

// Finite Stone duality for I_n: the structure space is n principal
// ultrafilters; the groupoid of ultrafilters on the monoid is the pair
// groupoid on n objects.
struct Arrow {
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

std::vector<int> structure_space(const SymmetricModel& m);
std::vector<Arrow> germ_groupoid(const SymmetricModel& m);
// defined iff d(a) = r(b), i.e. a.source == b.target
std::optional<Arrow> compose_arrows(const Arrow& a, const Arrow& b);

// --- pencils and simplicity checkers (model-generic) ---

// A pencil from e to f: elements x_i with e = ⋁ d(x_i) and r(x_i) <= f.
// Greedy construction: chunk the elementary parts of e into groups of at
// most |parts(f)|, each group mapped injectively into f's parts; returns
// nullopt when some part of e admits no transporter into f.
template <typename M>
std::optional<std::vector<typename M::Element>> pencil_exists(const M& m,
                                                              const typename M::Idem& e,
                                                              const typename M::Idem& f) {
  if (e.is_zero() || f.is_zero()) fail(Errc::zero_idempotent, "pencil endpoints must be nonzero");
  auto eparts = m.idem_parts(e);
  auto fparts = m.idem_parts(f);
  std::vector<typename M::Element> pencil;
  size_t i = 0;
  while (i < eparts.size()) {
    std::vector<typename M::Element> legs;
    std::vector<bool> used(fparts.size(), false);
    while (i < eparts.size() && legs.size() < fparts.size()) {
      bool placed = false;
      for (size_t j = 0; j < fparts.size(); ++j) {
        if (used[j]) continue;
        if (auto leg = m.try_transporter(eparts[i], fparts[j])) {
          legs.push_back(*leg);
          used[j] = true;
          placed = true;
          break;
        }
      }
      if (!placed) {
        if (legs.empty()) return std::nullopt;  // this part of e cannot move into f at all
        break;
      }
      ++i;
    }
    if (legs.empty()) return std::nullopt;
    pencil.push_back(join_all(m, legs));
  }
  return pencil;
}

template <typename M>
bool is_zero_simplifying(const M& m, const std::vector<typename M::Idem>& nonzero_idempotents) {
  for (const auto& e : nonzero_idempotents)
    for (const auto& f : nonzero_idempotents)
      if (!pencil_exists(m, e, f) || !pencil_exists(m, f, e)) return false;
  return true;
}

// Fundamental: only idempotents centralize the idempotents. Cross-checked
// against faithfulness of the conjugation action of the units.
template <typename M>
bool is_fundamental(const M& m, const std::vector<typename M::Element>& all,
                    const std::vector<typename M::Idem>& idempotents,
                    const std::vector<typename M::Element>& units) {
  bool direct = true;
  for (const auto& s : all) {
    bool centralizes = true;
    for (const auto& e : idempotents) {
      auto ee = m.embed(e);
      if (m.mul(s, ee) != m.mul(ee, s)) { centralizes = false; break; }
    }
    if (centralizes && !m.is_idempotent(s)) { direct = false; break; }
  }
  bool faithful = true;
  for (const auto& g : units) {
    if (g == m.one()) continue;
    bool moves_something = false;
    for (const auto& e : idempotents) {
      auto conj = m.mul(m.mul(g, m.embed(e)), m.inv(g));
      if (conj != m.embed(e)) { moves_something = true; break; }
    }
    if (!moves_something) { faithful = false; break; }
  }
  if (direct != faithful)
    fail(Errc::internal_inconsistency, "centralizer check disagrees with action faithfulness");
  return direct;
}

// Direct product of two models: the stock non-0-simplifying specimen.
template <typename IA, typename IB>
struct ProductIdem {
  IA a;
  IB b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_one() const { return a.is_one() && b.is_one(); }
  ProductIdem join(const ProductIdem& o) const { return {a.join(o.a), b.join(o.b)}; }
  ProductIdem meet(const ProductIdem& o) const { return {a.meet(o.a), b.meet(o.b)}; }
  ProductIdem complement() const { return {a.complement(), b.complement()}; }
  ProductIdem minus(const ProductIdem& o) const { return {a.minus(o.a), b.minus(o.b)}; }
  bool leq(const ProductIdem& o) const { return a.leq(o.a) && b.leq(o.b); }
  bool operator==(const ProductIdem&) const = default;
};

template <typename MA, typename MB>
class ProductModel {
 public:
  using Element = std::pair<typename MA::Element, typename MB::Element>;
  using Idem = ProductIdem<typename MA::Idem, typename MB::Idem>;

  ProductModel(MA first, MB second) : ma_(std::move(first)), mb_(std::move(second)) {}
  const MA& first() const { return ma_; }
  const MB& second() const { return mb_; }

  Element mul(const Element& s, const Element& t) const {
    return {ma_.mul(s.first, t.first), mb_.mul(s.second, t.second)};
  }
  Element inv(const Element& s) const { return {ma_.inv(s.first), mb_.inv(s.second)}; }
  Element zero() const { return {ma_.zero(), mb_.zero()}; }
  Element one() const { return {ma_.one(), mb_.one()}; }
  bool is_idempotent(const Element& s) const {
    return ma_.is_idempotent(s.first) && mb_.is_idempotent(s.second);
  }
  Idem phi_raw(const Element& s) const { return {ma_.phi_raw(s.first), mb_.phi_raw(s.second)}; }
  Idem extract(const Element& s) const { return {ma_.extract(s.first), mb_.extract(s.second)}; }
  Element embed(const Idem& e) const { return {ma_.embed(e.a), mb_.embed(e.b)}; }
  Element join2(const Element& s, const Element& t) const {
    return {ma_.join2(s.first, t.first), mb_.join2(s.second, t.second)};
  }

  std::vector<Idem> idem_parts(const Idem& e) const {
    std::vector<Idem> out;
    for (const auto& p : ma_.idem_parts(e.a)) out.push_back({p, mb_.extract(mb_.zero())});
    for (const auto& q : mb_.idem_parts(e.b)) out.push_back({ma_.extract(ma_.zero()), q});
    return out;
  }
  std::optional<Element> try_transporter(const Idem& p, const Idem& q) const {
    // elementary parts live in one component; nothing crosses the factors
    if (!p.a.is_zero() && !q.a.is_zero() && p.b.is_zero() && q.b.is_zero()) {
      if (auto leg = ma_.try_transporter(p.a, q.a)) return Element{*leg, mb_.zero()};
      return std::nullopt;
    }
    if (!p.b.is_zero() && !q.b.is_zero() && p.a.is_zero() && q.a.is_zero()) {
      if (auto leg = mb_.try_transporter(p.b, q.b)) return Element{ma_.zero(), *leg};
      return std::nullopt;
    }
    return std::nullopt;
  }

  std::vector<Element> enumerate_all() const {
    std::vector<Element> out;
    for (const auto& x : ma_.enumerate_all())
      for (const auto& y : mb_.enumerate_all()) out.push_back({x, y});
    return out;
  }
  std::vector<Element> enumerate_units() const {
    std::vector<Element> out;
    for (const auto& x : ma_.enumerate_units())
      for (const auto& y : mb_.enumerate_units()) out.push_back({x, y});
    return out;
  }
  std::vector<Idem> enumerate_idempotents() const {
    std::vector<Idem> out;
    for (const auto& x : ma_.enumerate_idempotents())
      for (const auto& y : mb_.enumerate_idempotents()) out.push_back({x, y});
    return out;
  }

 private:
  MA ma_;
  MB mb_;
};

using ProductSym = ProductModel<SymmetricModel, SymmetricModel>;

}  // namespace tarski

#endif  // TARSKI_SYMMETRIC_HPP
