#include "fanoline/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "fanoline/errors.hpp"

namespace fanoline {

namespace {

using TermVec = std::vector<Term>;

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

TermVec ordered_terms(const Polynomial& f, const MonomialOrder& ord) {
  TermVec t = f.terms();
  if (!(ord == MonomialOrder::grevlex()))
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return t;
}

void make_monic(TermVec& t) {
  if (t.empty() || t.front().coefficient == 1) return;
  Rational inv = 1 / t.front().coefficient;
  for (auto& term : t) term.coefficient *= inv;
}

// h[hs..] - c * q * g[gs..], both inputs sorted descending under ord.
TermVec sub_scaled(const TermVec& h, std::size_t hs, const Rational& c, const Monomial& q, const TermVec& g,
                   std::size_t gs, const MonomialOrder& ord) {
  TermVec out;
  out.reserve(h.size() - hs + g.size() - gs);
  std::size_t i = hs, j = gs;
  // Multiplying by q preserves the order, so shifted g terms compare lazily.
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial shifted = g[j].monomial * q;
    int cmp = i == h.size() ? -1 : ord.compare(h[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{shifted, -(c * g[j].coefficient)});
      ++j;
    } else {
      Rational s = h[i].coefficient - c * g[j].coefficient;
      if (s != 0) out.push_back(Term{shifted, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  const TermVec* poly;
  Monomial lm;
  std::uint64_t mask;
};

// Full normal form; reducers must be monic.
TermVec normal_form(TermVec h, const std::vector<Reducer>& reducers, const MonomialOrder& ord) {
  TermVec rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    std::uint64_t mask = support_mask(lt.monomial);
    const Reducer* found = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~mask) == 0 && r.lm.divides(lt.monomial)) {
        found = &r;
        break;
      }
    }
    if (found == nullptr) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    Monomial q = found->lm.quotient_of(lt.monomial);
    Rational c = lt.coefficient;
    h = sub_scaled(h, start + 1, c, q, *found->poly, 1, ord);
    start = 0;
  }
  return rem;
}

Polynomial to_polynomial(const RingPtr& ring, TermVec t) { return Polynomial::from_terms(ring, std::move(t)); }

class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(ord) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    std::vector<TermVec> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (g.is_constant()) return {Polynomial::constant(ring_, 1)};
      input.push_back(ordered_terms(g, ord_));
    }
    std::sort(input.begin(), input.end(),
              [&](const TermVec& a, const TermVec& b) { return ord_.compare(a.front().monomial, b.front().monomial) < 0; });
    for (auto& t : input) {
      int sugar = 0;
      for (const auto& term : t) sugar = std::max(sugar, static_cast<int>(term.monomial.degree()));
      TermVec r = normal_form(std::move(t), reducers(), ord_);
      if (r.empty()) continue;
      if (r.front().monomial.is_one()) return {Polynomial::constant(ring_, 1)};
      make_monic(r);
      insert(std::move(r), sugar);
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ord_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      TermVec s = spoly(p);
      TermVec r = normal_form(std::move(s), reducers(), ord_);
      if (r.empty()) continue;
      if (r.front().monomial.is_one()) return {Polynomial::constant(ring_, 1)};
      make_monic(r);
      insert(std::move(r), p.sugar);
    }
    return finish();
  }

 private:
  struct Elem {
    TermVec poly;
    Monomial lm;
    std::uint64_t mask;
    int sugar;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  std::vector<Reducer> reducers() const {
    std::vector<Reducer> r;
    for (const auto& e : elems_)
      if (e.active) r.push_back(Reducer{&e.poly, e.lm, e.mask});
    return r;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    int a = elems_[i].sugar + static_cast<int>(l.degree() - elems_[i].lm.degree());
    int b = elems_[j].sugar + static_cast<int>(l.degree() - elems_[j].lm.degree());
    return std::max(a, b);
  }

  TermVec spoly(const Pair& p) const {
    const Elem& f = elems_[p.i];
    const Elem& g = elems_[p.j];
    TermVec a;
    a.reserve(f.poly.size());
    Monomial qf = f.lm.quotient_of(p.lcm);
    for (std::size_t k = 1; k < f.poly.size(); ++k) a.push_back(Term{f.poly[k].monomial * qf, f.poly[k].coefficient});
    return sub_scaled(a, 0, Rational(1), g.lm.quotient_of(p.lcm), g.poly, 1, ord_);
  }

  // Gebauer-Moeller update.
  void insert(TermVec poly, int sugar) {
    Elem h{std::move(poly), {}, 0, sugar, true};
    h.lm = h.poly.front().monomial;
    h.mask = support_mask(h.lm);
    const std::size_t hi = elems_.size();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < elems_.size(); ++g) {
      if (!elems_[g].active) continue;
      Monomial l = lcm(elems_[g].lm, h.lm);
      candidates.push_back(Pair{g, hi, l, 0});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = elems_[p.i].lm.coprime(h.lm);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = candidates[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = h.lm.divides(p.lcm) && !(lcm(elems_[p.i].lm, h.lm) == p.lcm) && !(lcm(elems_[p.j].lm, h.lm) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);

    for (auto& e : elems_)
      if (e.active && h.lm.divides(e.lm)) e.active = false;
    elems_.push_back(std::move(h));

    for (auto& p : kept) {
      if (elems_[p.i].lm.coprime(elems_[hi].lm)) continue;
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      pairs_.push_back(p);
    }
  }

  std::vector<Polynomial> finish() {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ord_.compare(elems_[a].lm, elems_[b].lm) < 0; });
    // Leading terms are minimal, so one tail pass against the others is enough.
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t o = 0; o < idx.size(); ++o) {
        if (o == k) continue;
        const Elem& e = elems_[idx[o]];
        others.push_back(Reducer{&e.poly, e.lm, e.mask});
      }
      const TermVec& p = elems_[idx[k]].poly;
      TermVec tail(p.begin() + 1, p.end());
      TermVec r = normal_form(std::move(tail), others, ord_);
      r.insert(r.begin(), p.front());
      out.push_back(to_polynomial(ring_, std::move(r)));
    }
    return out;
  }

  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord) {
  if (G.empty()) throw DomainError("reduce needs a nonempty divisor list");
  std::vector<TermVec> monic;
  monic.reserve(G.size());
  for (const auto& g : G) {
    if (!same_ring(g.ring(), f.ring())) throw RingMismatch();
    if (g.is_zero()) continue;
    TermVec t = ordered_terms(g, ord);
    make_monic(t);
    monic.push_back(std::move(t));
  }
  std::vector<Reducer> reducers;
  for (const auto& t : monic) reducers.push_back(Reducer{&t, t.front().monomial, support_mask(t.front().monomial)});
  return to_polynomial(f.ring(), normal_form(ordered_terms(f, ord), reducers, ord));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term& a = f.leading_term(ord);
  const Term& b = g.leading_term(ord);
  Monomial l = lcm(a.monomial, b.monomial);
  return f.times(a.monomial.quotient_of(l), 1 / a.coefficient) - g.times(b.monomial.quotient_of(l), 1 / b.coefficient);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord) {
  if (generators.empty()) return {};
  BuchbergerEngine engine(generators.front().ring(), ord);
  return engine.run(generators);
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  if (basis.size() < 2) return true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
  return true;
}

Ideal::Ideal() : Ideal(Ring::make({})) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(ord);
  if (it == cache_->bases.end())
    it = cache_->bases.emplace(ord, std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, ord))).first;
  return *it->second;
}

bool Ideal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_constant()) return true;
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  if (f.is_zero()) return true;
  const auto& gb = groebner_basis();
  if (gb.empty()) return false;
  return reduce(f, gb, MonomialOrder::grevlex()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  if (!same_ring(other.ring_, ring_)) throw RingMismatch();
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_ideal(const Ideal& other) const {
  if (!same_ring(other.ring_, ring_)) throw RingMismatch();
  return groebner_basis() == other.groebner_basis();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(other.ring_, ring_)) throw RingMismatch();
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const Polynomial& f) const {
  std::vector<Polynomial> g = gens_;
  g.push_back(f);
  return Ideal(ring_, std::move(g));
}

std::vector<std::string> to_strings(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

const std::vector<Polynomial>& groebner_basis(const Ideal& ideal, const MonomialOrder& ord) {
  return ideal.groebner_basis(ord);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

}  // namespace fanoline
