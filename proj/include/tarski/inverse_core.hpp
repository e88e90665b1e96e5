#ifndef TARSKI_INVERSE_CORE_HPP
#define TARSKI_INVERSE_CORE_HPP

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tarski/error.hpp"

namespace tarski {

// A model of a Boolean inverse ∧-monoid. `Element` is the monoid element
// type, `Idem` the Boolean-algebra value the idempotents live in (Clopen for
// the Cuntz model, FiniteSet for the symmetric one). Elements compare with
// == because every model keeps canonical forms.
//
// phi_raw is the model's fixed-point operator: the largest idempotent
// beneath an element, as an algebra value. join2 is the unchecked compatible
// join; callers go through join_all which checks compatibility first.
template <typename M>
concept InverseModel = requires(const M& m, const typename M::Element& s,
                                const typename M::Idem& e) {
  typename M::Element;
  typename M::Idem;
  { m.mul(s, s) } -> std::convertible_to<typename M::Element>;
  { m.inv(s) } -> std::convertible_to<typename M::Element>;
  { m.zero() } -> std::convertible_to<typename M::Element>;
  { m.one() } -> std::convertible_to<typename M::Element>;
  { m.is_idempotent(s) } -> std::convertible_to<bool>;
  { m.phi_raw(s) } -> std::convertible_to<typename M::Idem>;
  { m.extract(s) } -> std::convertible_to<typename M::Idem>;
  { m.embed(e) } -> std::convertible_to<typename M::Element>;
  { m.join2(s, s) } -> std::convertible_to<typename M::Element>;
};

template <InverseModel M>
typename M::Element dom_elem(const M& m, const typename M::Element& s) {
  return m.mul(m.inv(s), s);
}

template <InverseModel M>
typename M::Element ran_elem(const M& m, const typename M::Element& s) {
  return m.mul(s, m.inv(s));
}

template <InverseModel M>
typename M::Idem dom(const M& m, const typename M::Element& s) {
  return m.extract(dom_elem(m, s));
}

template <InverseModel M>
typename M::Idem ran(const M& m, const typename M::Element& s) {
  return m.extract(ran_elem(m, s));
}

// a <= b iff a = b·a⁻¹a
template <InverseModel M>
bool natural_leq(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return a == m.mul(b, dom_elem(m, a));
}

template <InverseModel M>
bool compatible(const M& m, const typename M::Element& s, const typename M::Element& t) {
  return m.is_idempotent(m.mul(m.inv(s), t)) && m.is_idempotent(m.mul(s, m.inv(t)));
}

template <InverseModel M>
bool orthogonal(const M& m, const typename M::Element& s, const typename M::Element& t) {
  return m.mul(m.inv(s), t) == m.zero() && m.mul(s, m.inv(t)) == m.zero();
}

template <InverseModel M>
typename M::Idem phi(const M& m, const typename M::Element& s) {
  return m.phi_raw(s);
}

// σ(s) = ¬φ(s) ∧ d(s); for a unit this is the complement of the fixed clopen.
template <InverseModel M>
typename M::Idem sigma(const M& m, const typename M::Element& s) {
  return m.phi_raw(s).complement().meet(dom(m, s));
}

template <InverseModel M>
typename M::Idem extent(const M& m, const typename M::Element& a) {
  return dom(m, a).join(ran(m, a));
}

// a ∧ b = φ(ab⁻¹)b
template <InverseModel M>
typename M::Element meet(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.mul(m.embed(m.phi_raw(m.mul(a, m.inv(b)))), b);
}

template <InverseModel M>
typename M::Element join_all(const M& m, std::span<const typename M::Element> parts) {
  if (parts.empty()) return m.zero();
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (!compatible(m, parts[i], parts[j]))
        fail(Errc::incompatible_parts,
             "parts " + std::to_string(i) + " and " + std::to_string(j) + " are incompatible");
  typename M::Element acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = m.join2(acc, parts[i]);
  return acc;
}

template <InverseModel M>
typename M::Element join_all(const M& m, const std::vector<typename M::Element>& parts) {
  return join_all(m, std::span<const typename M::Element>(parts));
}

// Tests a·a = 0 and cross-checks d(a) ⊥ r(a); the two routes must agree or
// the model itself is broken.
template <InverseModel M>
bool is_infinitesimal(const M& m, const typename M::Element& a) {
  bool squares_to_zero = m.mul(a, a) == m.zero();
  bool disjoint = dom(m, a).meet(ran(m, a)).is_zero();
  if (squares_to_zero != disjoint)
    fail(Errc::internal_inconsistency, "a²=0 disagrees with d(a) ⊥ r(a)");
  return squares_to_zero;
}

template <InverseModel M>
bool is_unit(const M& m, const typename M::Element& s) {
  return dom(m, s).is_one() && ran(m, s).is_one();
}

// g = a⁻¹ ∨ a ∨ ¬e(a), the involution above an infinitesimal a.
template <InverseModel M>
typename M::Element special_involution(const M& m, const typename M::Element& a) {
  if (a == m.zero() || !is_infinitesimal(m, a))
    fail(Errc::not_infinitesimal, "special involution needs a nonzero infinitesimal");
  std::vector<typename M::Element> parts{m.inv(a), a, m.embed(extent(m, a).complement())};
  typename M::Element g = join_all(m, parts);
  if (m.mul(g, g) != m.one() || g == m.one())
    fail(Errc::internal_inconsistency, "constructed involution fails g²=1, g≠1");
  return g;
}

template <InverseModel M>
typename M::Element commutator(const M& m, const typename M::Element& g,
                               const typename M::Element& h) {
  if (!is_unit(m, g) || !is_unit(m, h)) fail(Errc::not_a_unit, "commutator needs units");
  return m.mul(m.mul(g, h), m.mul(m.inv(g), m.inv(h)));
}

template <InverseModel M>
struct ThreeCycle {
  typename M::Element g;  // the 3-cycle
  typename M::Element h;  // special involutions with g = [h,k] = (hk)²
  typename M::Element k;
};

// g = a ∨ b ∨ (ba)⁻¹ ∨ ¬e(b,a) for a 2-infinitesimal (b,a), together with
// the two special involutions witnessing g = [h,k] = (hk)².
template <InverseModel M>
ThreeCycle<M> special_three_cycle(const M& m, const typename M::Element& b,
                                  const typename M::Element& a) {
  if (a == m.zero() || b == m.zero() || !is_infinitesimal(m, a) || !is_infinitesimal(m, b) ||
      dom(m, b) != ran(m, a) || m.mul(m.mul(b, a), m.mul(b, a)) != m.zero())
    fail(Errc::not_two_infinitesimal, "(b,a) is not a 2-infinitesimal");
  typename M::Element c = m.inv(m.mul(b, a));
  typename M::Idem e = ran(m, b).join(dom(m, b)).join(dom(m, a));
  std::vector<typename M::Element> parts{a, b, c, m.embed(e.complement())};
  typename M::Element g = join_all(m, parts);

  typename M::Element h = special_involution(m, a);
  typename M::Element k = special_involution(m, c);

  typename M::Element g3 = m.mul(m.mul(g, g), g);
  if (g3 != m.one() || g == m.one())
    fail(Errc::internal_inconsistency, "constructed 3-cycle fails g³=1, g≠1");
  typename M::Element hk = m.mul(h, k);
  if (g != commutator(m, h, k) || g != m.mul(hk, hk))
    fail(Errc::internal_inconsistency, "3-cycle is not [h,k] = (hk)²");
  return {g, h, k};
}

template <InverseModel M>
struct CliffordReport {
  bool is_clifford_on_sample = true;
  std::optional<typename M::Element> infinitesimal_witness;
};

// Scans a finite sample for d(s) ≠ r(s); when found, manufactures an
// infinitesimal from the offending element, so the two findings always agree.
template <InverseModel M>
CliffordReport<M> clifford_report(const M& m, std::span<const typename M::Element> sample) {
  CliffordReport<M> report;
  for (const auto& s : sample) {
    if (dom(m, s) == ran(m, s)) continue;
    report.is_clifford_on_sample = false;
    if (s != m.zero() && is_infinitesimal(m, s)) {
      report.infinitesimal_witness = s;
      return report;
    }
    // dom and ran overlap but differ: one of s·f, s⁻¹·f' squares to zero
    for (const auto& cand : {s, m.inv(s)}) {
      typename M::Idem f = dom(m, cand).minus(ran(m, cand));
      if (f.is_zero()) continue;
      typename M::Element witness = m.mul(cand, m.embed(f));
      if (witness != m.zero() && is_infinitesimal(m, witness)) {
        report.infinitesimal_witness = witness;
        return report;
      }
    }
    fail(Errc::internal_inconsistency, "d(s) ≠ r(s) without a constructible infinitesimal");
  }
  return report;
}

}  // namespace tarski

#endif  // TARSKI_INVERSE_CORE_HPP
