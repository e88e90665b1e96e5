#ifndef TARSKI_CUNTZ_HPP
#define TARSKI_CUNTZ_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tarski/clopen.hpp"
#include "tarski/inverse_core.hpp"

namespace tarski {

// An element of the Cuntz inverse monoid C_n: a partial bijection of n-ary
// Cantor space given by finitely many prefix substitutions u -> v. Canonical
// form: pairs sorted by domain word, domain words an antichain, codomain
// words an antichain, no complete sibling family {(u·a, v·a) : a < n}.
// The empty set is 0; {(ε,ε)} is the identity. Units are exactly the
// elements whose domain and codomain words both cover the whole space.
class PrefixBijection {
 public:
  using Pair = std::pair<Word, Word>;

  static PrefixBijection make(int arity, std::vector<Pair> pairs);
  static PrefixBijection zero(int arity) { return PrefixBijection(arity, {}); }
  static PrefixBijection one(int arity) { return PrefixBijection(arity, {{Word{}, Word{}}}); }

  int arity() const { return arity_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool is_zero() const { return pairs_.empty(); }

  Clopen domain_clopen() const;
  Clopen codomain_clopen() const;

  bool operator==(const PrefixBijection&) const = default;

 private:
  PrefixBijection(int arity, std::vector<Pair> canonical) : arity_(arity), pairs_(std::move(canonical)) {}

  int arity_ = 2;
  std::vector<Pair> pairs_;
};

// An eventually periodic point of Cantor space, preperiod·period^ω, in
// canonical form: the period is primitive and the preperiod minimal. These
// represent the ultrafilters on the clopen algebra that the toolkit works
// with; prefix substitution maps them to one another.
class Point {
 public:
  static Point make(int arity, Word preperiod, Word period);

  int arity() const { return arity_; }
  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }

  uint8_t letter(size_t i) const;
  Word prefix(size_t len) const;
  bool in_cylinder(const Word& u) const;
  bool in_clopen(const Clopen& e) const;
  // the point with the first `len` letters removed
  Point drop(size_t len) const;
  Point prepend(const Word& u) const;

  std::string str() const;

  bool operator==(const Point&) const = default;

 private:
  Point(int arity, Word preperiod, Word period)
      : arity_(arity), preperiod_(std::move(preperiod)), period_(std::move(period)) {}

  int arity_ = 2;
  Word preperiod_;
  Word period_;
};

// --- Cuntz monoid operations ---

PrefixBijection compose(const PrefixBijection& s, const PrefixBijection& t);  // s ∘ t
PrefixBijection inverse(const PrefixBijection& s);
// Largest clopen on which s acts as the identity: the u = v pairs. A pair
// with u != v fixes no clopen (disjoint cylinders move everything;
// comparable cylinders fix a single point only), so the syntactic reading
// is exact; the depth-k oracle in the tests guards this.
Clopen phi_raw(const PrefixBijection& s);
bool is_unit(const PrefixBijection& s);

// {(u,v),(v,u)} plus the identity elsewhere; the involution above the
// infinitesimal {(u,v)}. Requires u, v prefix-incomparable.
PrefixBijection swap_involution(int arity, const Word& u, const Word& v);

// A unit extending {(u,v)}: maps cyl(u) -> cyl(v) by the pair and bijects
// the complements along equalized cylinder decompositions. Comparable u, v
// allowed; u = v gives the identity.
PrefixBijection unit_extension(int arity, const Word& u, const Word& v);

Point act(const PrefixBijection& s, const Point& x);

// If e ∧ σ(g) != 0, an eventually periodic point of e moved by g; none iff
// e <= φ(g).
std::optional<Point> moved_point_in(const PrefixBijection& g, const Clopen& e);

// An ultrafilter on the monoid itself, presented as a germ: an element
// together with a base point in its domain. Two germs are equal iff the
// elements agree on some cylinder containing the base.
struct Germ {
  PrefixBijection element;
  Point base;

  static Germ make(PrefixBijection element, Point base);
};

bool germ_eq(const Germ& a, const Germ& b);
Point germ_source(const Germ& a);
Point germ_target(const Germ& a);
// defined iff d(a) = r(b), i.e. a.base = act(b.element, b.base)
Germ germ_compose(const Germ& a, const Germ& b);

// C_n through the generic model interface, with the witness-construction
// capabilities the axiom layer needs.
class CuntzModel {
 public:
  using Element = PrefixBijection;
  using Idem = Clopen;
  using Ultrafilter = Point;

  explicit CuntzModel(int n) : n_(n) {}
  int arity() const { return n_; }

  Element mul(const Element& s, const Element& t) const { return compose(s, t); }
  Element inv(const Element& s) const { return inverse(s); }
  Element zero() const { return PrefixBijection::zero(n_); }
  Element one() const { return PrefixBijection::one(n_); }
  bool is_idempotent(const Element& s) const;
  Idem phi_raw(const Element& s) const { return tarski::phi_raw(s); }
  Idem extract(const Element& s) const;
  Element embed(const Idem& e) const;
  Element join2(const Element& s, const Element& t) const;

  Element native_meet(const Element& s, const Element& t) const;

  // --- witness-construction capabilities ---
  std::vector<Idem> idem_parts(const Idem& e) const;  // canonical cylinders
  std::pair<Idem, Idem> split_idem(const Idem& e) const { return e.split(); }
  std::vector<Idem> children(const Idem& elementary) const;
  Element elementary_transporter(const Idem& p, const Idem& q) const;
  std::optional<Element> try_transporter(const Idem& p, const Idem& q) const;
  std::vector<Element> elementary_pieces(const Element& s) const;
  Element unit_above(const Element& piece) const;

  bool ultrafilter_contains(const Ultrafilter& x, const Idem& e) const { return x.in_clopen(e); }

 private:
  int n_;
};

}  // namespace tarski

#endif  // TARSKI_CUNTZ_HPP
