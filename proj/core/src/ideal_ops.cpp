#include <algorithm>
#include <numeric>

#include "fanoline/errors.hpp"
#include "fanoline/groebner.hpp"

namespace fanoline {

namespace {

std::string fresh_name(const Ring& ring, std::string_view base) {
  std::string name(base);
  for (int k = 0; ring.index_of(name); ++k) name = std::string(base) + std::to_string(k);
  return name;
}

// Ring with one new variable in front; returns it and the image of the old variables.
RingPtr with_leading_variable(const RingPtr& ring, std::string_view base, std::vector<std::size_t>& shift) {
  std::vector<std::string> names{fresh_name(*ring, base)};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  shift.resize(ring->size());
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  return Ring::make(std::move(names));
}

std::vector<Polynomial> map_all(std::span<const Polynomial> polys, const RingPtr& target,
                                std::span<const std::size_t> map) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(remap(p, target, map));
  return out;
}

Polynomial divide_out_variable(const Polynomial& f, std::size_t var) {
  unsigned e = 255;
  for (const auto& t : f.terms()) e = std::min(e, t.monomial[var]);
  if (e == 0) return f;
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.monomial.set(var, t.monomial[var] - e);
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

// Basis of I : x_var^infinity for homogeneous I, expressed in I's ring.
std::vector<Polynomial> bayer_saturation(const Ideal& ideal, std::size_t var) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  // Move var to the last position, keeping the others in order.
  std::vector<std::size_t> fwd(n), back(n);
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (i == var) continue;
    fwd[i] = k++;
  }
  fwd[var] = n - 1;
  for (std::size_t i = 0; i < n; ++i) back[fwd[i]] = i;
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[fwd[i]] = ring->name(i);
  RingPtr permuted = Ring::make(std::move(names));
  std::vector<Polynomial> gb = buchberger(map_all(ideal.generators(), permuted, fwd), MonomialOrder::grevlex());
  std::vector<Polynomial> out;
  for (const auto& g : gb) out.push_back(remap(divide_out_variable(g, n - 1), ring, back));
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  std::vector<bool> dropped(n, false);
  for (auto d : drop) {
    if (d >= n) throw DomainError("elimination variable out of range");
    dropped[d] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) order.push_back(i);
  const std::size_t k = order.size();
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      order.push_back(i);
      kept_names.push_back(ring->name(i));
    }
  std::vector<std::size_t> fwd(n);
  std::vector<std::string> names(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    fwd[order[pos]] = pos;
    names[pos] = ring->name(order[pos]);
  }
  RingPtr work = Ring::make(std::move(names));
  RingPtr target = Ring::make(kept_names);
  std::vector<Polynomial> gb =
      buchberger(map_all(ideal.generators(), work, fwd), MonomialOrder::block_elimination(static_cast<unsigned>(k)));
  std::vector<std::size_t> down(n, 0);
  for (std::size_t pos = k; pos < n; ++pos) down[pos] = pos - k;
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(remap(g, target, down));
  }
  return Ideal(target, std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  std::vector<std::size_t> shift;
  RingPtr big = with_leading_variable(a.ring(), "t_", shift);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * remap(f, big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap(g, big, shift));
  const std::size_t drop[] = {0};
  Ideal e = eliminate(Ideal(big, std::move(gens)), drop);
  std::vector<std::size_t> same(a.ring()->size());
  std::iota(same.begin(), same.end(), std::size_t{0});
  return Ideal(a.ring(), map_all(e.generators(), a.ring(), same));
}

Ideal ideal_intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw RingMismatch();
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<std::size_t> shift;
  RingPtr big = with_leading_variable(ideal.ring(), "s_", shift);
  std::vector<Polynomial> base = map_all(ideal.generators(), big, shift);
  std::vector<std::size_t> same(ideal.ring()->size());
  std::iota(same.begin(), same.end(), std::size_t{0});
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) {
    std::vector<Polynomial> gens = base;
    gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, 0) * remap(g, big, shift));
    const std::size_t drop[] = {0};
    Ideal e = eliminate(Ideal(big, std::move(gens)), drop);
    parts.push_back(Ideal(ideal.ring(), map_all(e.generators(), ideal.ring(), same)));
  }
  return ideal_intersect(parts);
}

Ideal saturate_by_variable(const Ideal& ideal, std::size_t var) {
  if (var >= ideal.ring()->size()) throw DomainError("saturation variable out of range");
  if (!ideal.is_homogeneous())
    return saturate(ideal, Ideal(ideal.ring(), {Polynomial::variable(ideal.ring(), var)}));
  if (ideal.is_zero()) return ideal;
  return Ideal(ideal.ring(), bayer_saturation(ideal, var));
}

Ideal saturate_irrelevant(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("saturation by the irrelevant ideal needs a homogeneous ideal");
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  if (ideal.is_zero() || n == 0) return ideal;
  if (ideal.is_unit()) return Ideal::unit(ring);

  std::vector<Ideal> by_var;
  auto per_variable = [&]() -> const std::vector<Ideal>& {
    if (by_var.empty())
      for (std::size_t i = 0; i < n; ++i) by_var.push_back(saturate_by_variable(ideal, i));
    return by_var;
  };

  for (int attempt = 0; attempt < 3; ++attempt) {
    // l = x_{n-1} + sum a_i x_i becomes the last coordinate.
    RationalMatrix fwd = RationalMatrix::identity(n);
    RationalMatrix back = RationalMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Rational a = Rational(static_cast<long>(i + 1 + attempt * n), attempt + 1);
      fwd(n - 1, i) = -a;
      back(n - 1, i) = a;
    }
    std::vector<Polynomial> moved;
    for (const auto& g : ideal.generators()) moved.push_back(apply_linear_change(g, fwd));
    std::vector<Polynomial> sat = bayer_saturation(Ideal(ring, std::move(moved)), n - 1);
    std::vector<Polynomial> gens;
    for (const auto& g : sat) gens.push_back(apply_linear_change(g, back));
    Ideal candidate(ring, std::move(gens));
    if (ideal.contains(candidate)) return ideal;
    bool certified = true;
    for (const auto& part : per_variable()) {
      if (!part.contains(candidate)) {
        certified = false;
        break;
      }
    }
    if (certified) return candidate;
  }
  return ideal_intersect(per_variable());
}

Ideal initial_forms_ideal(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.order() == 0) throw DomainError("generator does not vanish at the origin");
  if (ideal.is_homogeneous()) return ideal;

  const RingPtr& ring = ideal.ring();
  std::vector<std::size_t> shift;
  RingPtr big = with_leading_variable(ring, "h_", shift);
  std::vector<Polynomial> homog;
  for (const auto& g : ideal.generators()) {
    const unsigned d = static_cast<unsigned>(g.total_degree());
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < ring->size(); ++i) m.set(i + 1, t.monomial[i]);
      m.set(0, d - t.monomial.degree());
      terms.push_back(Term{m, t.coefficient});
    }
    homog.push_back(Polynomial::from_terms(big, std::move(terms)));
  }
  Ideal sat = saturate_by_variable(Ideal(big, std::move(homog)), 0);
  const auto& basis = sat.groebner_basis(MonomialOrder::homogenized_local());
  std::vector<Polynomial> forms;
  for (const auto& g : basis) {
    std::vector<Term> terms;
    unsigned top = 0;
    for (const auto& t : g.terms()) top = std::max(top, t.monomial[0]);
    for (const auto& t : g.terms()) {
      if (t.monomial[0] != top) continue;
      Monomial m;
      for (std::size_t i = 0; i < ring->size(); ++i) m.set(i, t.monomial[i + 1]);
      terms.push_back(Term{m, t.coefficient});
    }
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(forms));
}

bool scheme_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.same_ideal(b)) return true;
  return saturate_irrelevant(a).same_ideal(saturate_irrelevant(b));
}

bool is_projectively_empty(const Ideal& ideal) { return hilbert_data(ideal).empty(); }

}  // namespace fanoline
