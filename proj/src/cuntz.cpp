#include "tarski/cuntz.hpp"

#include <algorithm>
#include <map>

namespace tarski {

namespace {

void check_arity(const PrefixBijection& s, const PrefixBijection& t) {
  if (s.arity() != t.arity())
    fail(Errc::arity_mismatch,
         "arities " + std::to_string(s.arity()) + " and " + std::to_string(t.arity()));
}

void check_antichain(std::vector<Word> words, const char* side) {
  std::sort(words.begin(), words.end());
  for (size_t i = 0; i + 1 < words.size(); ++i)
    if (words[i].is_prefix_of(words[i + 1]))
      fail(Errc::precondition_violated,
           std::string(side) + " words are not an antichain near '" + words[i].str() + "'");
}

}  // namespace

PrefixBijection PrefixBijection::make(int arity, std::vector<Pair> pairs) {
  if (arity < 2) fail(Errc::invalid_letter, "arity must be >= 2");
  for (const auto& [u, v] : pairs)
    if (!u.max_letter_below(arity) || !v.max_letter_below(arity))
      fail(Errc::invalid_letter, "pair (" + u.str() + "," + v.str() + ") has a letter >= arity");

  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  {
    std::vector<Word> dom_words, cod_words;
    for (const auto& [u, v] : pairs) {
      dom_words.push_back(u);
      cod_words.push_back(v);
    }
    check_antichain(std::move(dom_words), "domain");
    check_antichain(std::move(cod_words), "codomain");
  }

  // merge complete sibling families {(u·a, v·a) : a < n} to fixpoint
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<Pair, uint32_t> families;  // parent pair -> set of child letters seen
    for (const auto& [u, v] : pairs) {
      if (u.empty() || v.empty()) continue;
      uint8_t cu = u[u.size() - 1], cv = v[v.size() - 1];
      if (cu != cv) continue;
      families[{u.prefix(u.size() - 1), v.prefix(v.size() - 1)}] |= 1u << cu;
    }
    const uint32_t full = (arity >= 32) ? ~0u : (1u << arity) - 1u;
    for (const auto& [parent, seen] : families) {
      if (seen != full) continue;
      std::vector<Pair> next;
      for (const auto& p : pairs) {
        bool is_child = !p.first.empty() && !p.second.empty() &&
                        p.first.prefix(p.first.size() - 1) == parent.first &&
                        p.second.prefix(p.second.size() - 1) == parent.second &&
                        p.first[p.first.size() - 1] == p.second[p.second.size() - 1];
        if (!is_child) next.push_back(p);
      }
      next.push_back(parent);
      std::sort(next.begin(), next.end());
      pairs = std::move(next);
      merged = true;
      break;
    }
  }

  return PrefixBijection(arity, std::move(pairs));
}

Clopen PrefixBijection::domain_clopen() const {
  std::vector<Word> ws;
  for (const auto& [u, v] : pairs_) ws.push_back(u);
  return Clopen::canonicalize(arity_, std::move(ws));
}

Clopen PrefixBijection::codomain_clopen() const {
  std::vector<Word> ws;
  for (const auto& [u, v] : pairs_) ws.push_back(v);
  return Clopen::canonicalize(arity_, std::move(ws));
}

PrefixBijection compose(const PrefixBijection& s, const PrefixBijection& t) {
  check_arity(s, t);
  std::vector<PrefixBijection::Pair> out;
  for (const auto& [u, v] : t.pairs()) {
    for (const auto& [p, q] : s.pairs()) {
      if (v.is_prefix_of(p)) {
        // p = v·w: t maps cyl(u·w) onto cyl(p), then s sends it to cyl(q)
        Word w = v.suffix_after(p);
        out.push_back({u.concat(w), q});
      } else if (p.is_prefix_of(v)) {
        // v = p·w: the image cylinder sits inside cyl(p)
        Word w = p.suffix_after(v);
        out.push_back({u, q.concat(w)});
      }
    }
  }
  return PrefixBijection::make(s.arity(), std::move(out));
}

PrefixBijection inverse(const PrefixBijection& s) {
  std::vector<PrefixBijection::Pair> out;
  for (const auto& [u, v] : s.pairs()) out.push_back({v, u});
  return PrefixBijection::make(s.arity(), std::move(out));
}

Clopen phi_raw(const PrefixBijection& s) {
  std::vector<Word> fixed;
  for (const auto& [u, v] : s.pairs())
    if (u == v) fixed.push_back(u);
  return Clopen::canonicalize(s.arity(), std::move(fixed));
}

bool is_unit(const PrefixBijection& s) {
  return s.domain_clopen().is_one() && s.codomain_clopen().is_one();
}

PrefixBijection swap_involution(int arity, const Word& u, const Word& v) {
  if (u.comparable(v))
    fail(Errc::comparable_words, "cannot swap comparable words '" + u.str() + "' and '" + v.str() + "'");
  std::vector<PrefixBijection::Pair> pairs{{u, v}, {v, u}};
  Clopen moved = Clopen::cylinder(arity, u).join(Clopen::cylinder(arity, v));
  for (const Word& w : moved.complement().words()) pairs.push_back({w, w});
  return PrefixBijection::make(arity, std::move(pairs));
}

PrefixBijection unit_extension(int arity, const Word& u, const Word& v) {
  if (!u.max_letter_below(arity) || !v.max_letter_below(arity))
    fail(Errc::invalid_letter, "word letter >= arity");
  if (u == v) return PrefixBijection::one(arity);
  std::vector<PrefixBijection::Pair> pairs{{u, v}};
  Clopen cu = Clopen::cylinder(arity, u);
  Clopen cv = Clopen::cylinder(arity, v);
  auto [rest_u, rest_v] = equalize(cu.complement(), cv.complement());
  for (size_t i = 0; i < rest_u.size(); ++i) pairs.push_back({rest_u[i], rest_v[i]});
  return PrefixBijection::make(arity, std::move(pairs));
}

// --- points ---

Point Point::make(int arity, Word preperiod, Word period) {
  if (period.empty()) fail(Errc::parse_error, "point period must be nonempty");
  if (!preperiod.max_letter_below(arity) || !period.max_letter_below(arity))
    fail(Errc::invalid_letter, "point letter >= arity");

  // reduce the period to its primitive root
  for (size_t d = 1; d <= period.size() / 2; ++d) {
    if (period.size() % d != 0) continue;
    bool pow = true;
    for (size_t i = d; i < period.size() && pow; ++i)
      if (period[i] != period[i % d]) pow = false;
    if (pow) {
      period = period.prefix(d);
      break;
    }
  }
  // absorb a preperiod tail that matches the period's last letter
  std::vector<uint8_t> pre = preperiod.letters();
  std::vector<uint8_t> per = period.letters();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.begin(), per.end() - 1, per.end());
  }
  return Point(arity, Word(std::move(pre)), Word(std::move(per)));
}

uint8_t Point::letter(size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word Point::prefix(size_t len) const {
  std::vector<uint8_t> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) out.push_back(letter(i));
  return Word(std::move(out));
}

bool Point::in_cylinder(const Word& u) const {
  for (size_t i = 0; i < u.size(); ++i)
    if (letter(i) != u[i]) return false;
  return true;
}

bool Point::in_clopen(const Clopen& e) const {
  for (const Word& u : e.words())
    if (in_cylinder(u)) return true;
  return false;
}

Point Point::drop(size_t len) const {
  if (len <= preperiod_.size()) {
    std::vector<uint8_t> pre(preperiod_.letters().begin() + static_cast<long>(len),
                             preperiod_.letters().end());
    return make(arity_, Word(std::move(pre)), period_);
  }
  size_t k = (len - preperiod_.size()) % period_.size();
  std::vector<uint8_t> per = period_.letters();
  std::rotate(per.begin(), per.begin() + static_cast<long>(k), per.end());
  return make(arity_, Word{}, Word(std::move(per)));
}

Point Point::prepend(const Word& u) const {
  return make(arity_, u.concat(preperiod_), period_);
}

std::string Point::str() const {
  return preperiod_.str() + "(" + period_.str() + ")*";
}

// --- germs ---

Germ Germ::make(PrefixBijection element, Point base) {
  if (!base.in_clopen(element.domain_clopen()))
    fail(Errc::point_outside_domain, "germ base " + base.str() + " outside the domain");
  return Germ{std::move(element), std::move(base)};
}

Point act(const PrefixBijection& s, const Point& x) {
  for (const auto& [u, v] : s.pairs()) {
    if (!x.in_cylinder(u)) continue;
    return x.drop(u.size()).prepend(v);
  }
  fail(Errc::point_outside_domain, "point " + x.str() + " outside the domain");
}

bool germ_eq(const Germ& a, const Germ& b) {
  if (a.base != b.base) return false;
  // the applicable pairs, extended along the base to a common depth
  auto applicable = [](const Germ& g) -> PrefixBijection::Pair {
    for (const auto& p : g.element.pairs())
      if (g.base.in_cylinder(p.first)) return p;
    fail(Errc::point_outside_domain, "germ base fell outside its element");
  };
  auto [u1, v1] = applicable(a);
  auto [u2, v2] = applicable(b);
  if (u1.size() > u2.size()) {
    std::swap(u1, u2);
    std::swap(v1, v2);
  }
  Word ext = u1.suffix_after(u2);  // u2 = u1·ext, both prefixes of the base
  return v2 == v1.concat(ext);
}

Point germ_source(const Germ& a) { return a.base; }

Point germ_target(const Germ& a) { return act(a.element, a.base); }

Germ germ_compose(const Germ& a, const Germ& b) {
  if (germ_target(b) != germ_source(a))
    fail(Errc::germs_not_composable, "d(a) != r(b) at the base points");
  return Germ::make(compose(a.element, b.element), b.base);
}

std::optional<Point> moved_point_in(const PrefixBijection& g, const Clopen& e) {
  CuntzModel m(g.arity());
  Clopen s = sigma(m, g);
  Clopen inside = e.meet(s);
  if (inside.is_zero()) return std::nullopt;
  // every pair of g restricted to `inside` moves its cylinder
  PrefixBijection h = compose(g, m.embed(inside));
  const auto& [u, v] = h.pairs().front();
  // for incomparable u, v any tail works; for comparable ones avoid the
  // single fixed tail z^ω by switching to 1·0^ω
  Point x = Point::make(g.arity(), u, Word({0}));
  if (act(g, x) == x)
    x = Point::make(g.arity(), u.child(1), Word({0}));
  if (act(g, x) == x) fail(Errc::internal_inconsistency, "moved point search failed");
  return x;
}

// --- model interface ---

bool CuntzModel::is_idempotent(const Element& s) const {
  for (const auto& [u, v] : s.pairs())
    if (u != v) return false;
  return true;
}

Clopen CuntzModel::extract(const Element& s) const {
  if (!is_idempotent(s)) fail(Errc::precondition_violated, "extract needs an idempotent");
  return s.domain_clopen();
}

PrefixBijection CuntzModel::embed(const Idem& e) const {
  std::vector<PrefixBijection::Pair> pairs;
  for (const Word& w : e.words()) pairs.push_back({w, w});
  return PrefixBijection::make(n_, std::move(pairs));
}

PrefixBijection CuntzModel::join2(const Element& s, const Element& t) const {
  std::vector<PrefixBijection::Pair> pairs = s.pairs();
  pairs.insert(pairs.end(), t.pairs().begin(), t.pairs().end());
  return PrefixBijection::make(n_, std::move(pairs));
}

PrefixBijection CuntzModel::native_meet(const Element& s, const Element& t) const {
  std::vector<PrefixBijection::Pair> out;
  for (const auto& [u1, v1] : s.pairs()) {
    for (const auto& [u2, v2] : t.pairs()) {
      if (u1.is_prefix_of(u2)) {
        // agree on cyl(u2) iff v2 = v1·(u2 \ u1)
        if (v2 == v1.concat(u1.suffix_after(u2))) out.push_back({u2, v2});
      } else if (u2.is_prefix_of(u1)) {
        if (v1 == v2.concat(u2.suffix_after(u1))) out.push_back({u1, v1});
      }
    }
  }
  return PrefixBijection::make(n_, std::move(out));
}

std::vector<Clopen> CuntzModel::idem_parts(const Idem& e) const {
  std::vector<Clopen> out;
  for (const Word& w : e.words()) out.push_back(Clopen::cylinder(n_, w));
  return out;
}

std::vector<Clopen> CuntzModel::children(const Idem& elementary) const {
  if (elementary.words().size() != 1)
    fail(Errc::precondition_violated, "children of a non-elementary clopen");
  std::vector<Clopen> out;
  for (int a = 0; a < n_; ++a)
    out.push_back(Clopen::cylinder(n_, elementary.words()[0].child(static_cast<uint8_t>(a))));
  return out;
}

PrefixBijection CuntzModel::elementary_transporter(const Idem& p, const Idem& q) const {
  if (p.words().size() != 1 || q.words().size() != 1)
    fail(Errc::precondition_violated, "transporter endpoints must be single cylinders");
  return PrefixBijection::make(n_, {{p.words()[0], q.words()[0]}});
}

std::optional<PrefixBijection> CuntzModel::try_transporter(const Idem& p, const Idem& q) const {
  if (p.words().size() != 1 || q.words().size() != 1) return std::nullopt;
  return elementary_transporter(p, q);
}

std::vector<PrefixBijection> CuntzModel::elementary_pieces(const Element& s) const {
  std::vector<PrefixBijection> out;
  for (const auto& [u, v] : s.pairs()) {
    if (u.empty() != v.empty()) {
      // a pair moving the root has no unit above it; its children do
      for (int a = 0; a < n_; ++a)
        out.push_back(PrefixBijection::make(
            n_, {{u.child(static_cast<uint8_t>(a)), v.child(static_cast<uint8_t>(a))}}));
    } else {
      out.push_back(PrefixBijection::make(n_, {{u, v}}));
    }
  }
  return out;
}

PrefixBijection CuntzModel::unit_above(const Element& piece) const {
  if (piece.is_zero()) fail(Errc::zero_element, "no unit above zero");
  const auto& [u, v] = piece.pairs().front();
  return unit_extension(n_, u, v);
}

}  // namespace tarski
