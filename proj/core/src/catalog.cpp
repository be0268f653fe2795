#include "fanoline/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fanoline/errors.hpp"
#include "fanoline/linescheme.hpp"

namespace fanoline {

namespace {

Polynomial var(const RingPtr& r, std::size_t i) { return Polynomial::variable(r, i); }

Polynomial binomial_minor(const RingPtr& r, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return var(r, a) * var(r, b) - var(r, c) * var(r, d);
}

std::vector<Polynomial> distinct_nonzero(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    Polynomial q = p.normalized();
    if (seen.insert(to_string(q)).second) out.push_back(std::move(p));
  }
  return out;
}

RingPtr tangent_ring(int n) { return Ring::indexed("y", static_cast<std::size_t>(n), 1); }

// Product ideal of two coordinate subspaces: y_i * y_j, i in first, j in second.
Ideal disjoint_linear_pair(int a, int n) {
  RingPtr r = tangent_ring(n);
  std::vector<Polynomial> gens;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < n; ++j) gens.push_back(var(r, static_cast<std::size_t>(i)) * var(r, static_cast<std::size_t>(j)));
  return Ideal(r, std::move(gens));
}

// 2x2 minors of a generic 2 x k matrix in y1..y_{2k}.
Ideal generic_rank_one(int k) {
  RingPtr r = tangent_ring(2 * k);
  std::vector<Polynomial> gens;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      gens.push_back(binomial_minor(r, static_cast<std::size_t>(i), static_cast<std::size_t>(k + j),
                                    static_cast<std::size_t>(j), static_cast<std::size_t>(k + i)));
  return Ideal(r, std::move(gens));
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void monomials_of_degree(std::size_t nvars, unsigned d, std::size_t from, Monomial cur, std::vector<Monomial>& out) {
  if (from + 1 == nvars) {
    cur.set(from, d);
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur.set(from, e);
    monomials_of_degree(nvars, d - e, from + 1, cur, out);
  }
}

// Small-height integer tuples with max |x_i| = h, canonical and primitive.
void tuples_of_height(std::size_t len, int h, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(len, -h);
  while (true) {
    int height = 0, g = 0;
    for (int v : cur) {
      height = std::max(height, std::abs(v));
      g = std::gcd(g, std::abs(v));
    }
    auto first = std::find_if(cur.begin(), cur.end(), [](int v) { return v != 0; });
    if (height == h && g == 1 && first != cur.end() && *first > 0) out.push_back(cur);
    std::size_t k = len;
    while (k > 0 && cur[k - 1] == h) cur[--k] = -h;
    if (k == 0) break;
    ++cur[k - 1];
  }
}

}  // namespace

std::vector<ProjectivePoint> points_by_height(std::size_t ambient_dim, int max_height) {
  std::vector<ProjectivePoint> out;
  for (int h = 1; h <= max_height; ++h) {
    std::vector<std::vector<int>> tuples;
    tuples_of_height(ambient_dim + 1, h, tuples);
    for (const auto& t : tuples) {
      RationalVector v;
      for (int x : t) v.push_back(Rational(x));
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

CatalogEntry segre(int a, int b) {
  if (a < 1 || b < a || a * b + a + b > 15) throw InputError("segre(a,b) needs 1 <= a <= b and ab + a + b <= 15");
  const int N = a * b + a + b;
  RingPtr x = Ring::indexed("x", static_cast<std::size_t>(N + 1));
  auto idx = [b](int i, int j) { return static_cast<std::size_t>(i * (b + 1) + j); };
  std::vector<Polynomial> gens;
  for (int i = 0; i <= a; ++i)
    for (int k = i + 1; k <= a; ++k)
      for (int j = 0; j <= b; ++j)
        for (int l = j + 1; l <= b; ++l) gens.push_back(binomial_minor(x, idx(i, j), idx(k, l), idx(i, l), idx(k, j)));

  std::vector<std::string> pnames;
  for (int i = 0; i <= a; ++i) pnames.push_back("s" + std::to_string(i));
  for (int j = 0; j <= b; ++j) pnames.push_back("t" + std::to_string(j));
  RingPtr p = Ring::make(pnames);
  std::vector<Polynomial> param;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) param.push_back(var(p, static_cast<std::size_t>(i)) * var(p, static_cast<std::size_t>(a + 1 + j)));

  CatalogEntry e{"segre_" + std::to_string(a) + "_" + std::to_string(b),
                 "Segre embedding of P^" + std::to_string(a) + " x P^" + std::to_string(b),
                 PresentedScheme(static_cast<std::size_t>(N), std::move(gens), a + b),
                 std::move(param),
                 {},
                 {},
                 {},
                 {}};
  e.expected.dim = b - 1;
  e.expected.degree = a == b ? 2 : 1;
  e.expected.empty = false;
  e.expected.quadratic = true;
  e.expected.model = disjoint_linear_pair(a, a + b);
  e.expected.component_dims = {a - 1, b - 1};
  e.component_spans = [a, b, idx](const ProjectivePoint& pt) {
    int i0 = 0, j0 = 0;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j)
        if (pt[idx(i, j)] != 0 && pt[idx(i0, j0)] == 0) {
          i0 = i;
          j0 = j;
        }
    const std::size_t size = static_cast<std::size_t>((a + 1) * (b + 1));
    std::vector<RationalVector> first, second;
    for (int i = 0; i <= a; ++i) {  // e_i tensor t, t = row i0
      RationalVector v(size);
      for (int j = 0; j <= b; ++j) v[idx(i, j)] = pt[idx(i0, j)];
      first.push_back(std::move(v));
    }
    for (int j = 0; j <= b; ++j) {  // s tensor e_j, s = column j0
      RationalVector v(size);
      for (int i = 0; i <= a; ++i) v[idx(i, j)] = pt[idx(i, j0)];
      second.push_back(std::move(v));
    }
    return std::vector<std::vector<RationalVector>>{first, second};
  };
  return e;
}

CatalogEntry veronese2(int n) {
  if (n < 2 || n > 4) throw InputError("veronese2(n) needs 2 <= n <= 4");
  const int N = n * (n + 3) / 2;
  RingPtr x = Ring::indexed("x", static_cast<std::size_t>(N + 1));
  std::map<std::pair<int, int>, std::size_t> index;
  for (int i = 0, k = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) index[{i, j}] = static_cast<std::size_t>(k++);
  auto s = [&](int i, int j) { return index.at({std::min(i, j), std::max(i, j)}); };
  std::vector<Polynomial> minors;
  for (int i = 0; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 0; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l) minors.push_back(binomial_minor(x, s(i, j), s(k, l), s(i, l), s(k, j)));

  std::vector<std::string> pnames;
  for (int i = 0; i <= n; ++i) pnames.push_back("u" + std::to_string(i));
  RingPtr p = Ring::make(pnames);
  std::vector<Polynomial> param(static_cast<std::size_t>(N + 1), Polynomial(p));
  for (const auto& [ij, k] : index) param[k] = var(p, static_cast<std::size_t>(ij.first)) * var(p, static_cast<std::size_t>(ij.second));

  CatalogEntry e{"veronese2_" + std::to_string(n),
                 "quadratic Veronese embedding of P^" + std::to_string(n),
                 PresentedScheme(static_cast<std::size_t>(N), distinct_nonzero(std::move(minors)), n),
                 std::move(param),
                 {},
                 {},
                 {},
                 {}};
  e.expected.empty = true;
  e.expected.quadratic = true;
  return e;
}

CatalogEntry plucker(int m) {
  if (m < 3 || m > 4) throw InputError("plucker(m) needs 3 <= m <= 4");
  const int N = (m + 1) * m / 2 - 1;
  RingPtr x = Ring::indexed("x", static_cast<std::size_t>(N + 1));
  std::map<std::pair<int, int>, std::size_t> index;
  for (int i = 0, k = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) index[{i, j}] = static_cast<std::size_t>(k++);
  auto q = [&](int i, int j) { return var(x, index.at({i, j})); };
  std::vector<Polynomial> gens;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) gens.push_back(q(i, j) * q(k, l) - q(i, k) * q(j, l) + q(i, l) * q(j, k));

  std::vector<std::string> pnames;
  for (int i = 0; i <= m; ++i) pnames.push_back("a" + std::to_string(i));
  for (int i = 0; i <= m; ++i) pnames.push_back("b" + std::to_string(i));
  RingPtr p = Ring::make(pnames);
  std::vector<Polynomial> param(static_cast<std::size_t>(N + 1), Polynomial(p));
  for (const auto& [ij, k] : index) {
    auto [i, j] = ij;
    param[k] = var(p, static_cast<std::size_t>(i)) * var(p, static_cast<std::size_t>(m + 1 + j)) -
               var(p, static_cast<std::size_t>(j)) * var(p, static_cast<std::size_t>(m + 1 + i));
  }
  CatalogEntry e{"plucker_" + std::to_string(m),
                 "Grassmannian G(1," + std::to_string(m) + ") in its Pluecker embedding",
                 PresentedScheme(static_cast<std::size_t>(N), std::move(gens), 2 * (m - 1)),
                 std::move(param),
                 {},
                 {},
                 {},
                 {}};
  e.expected.dim = m - 1;
  e.expected.degree = m - 1;
  e.expected.empty = false;
  e.expected.quadratic = true;
  e.expected.model = generic_rank_one(m - 1);
  return e;
}

CatalogEntry scroll(int a1, int a2) {
  if (a1 < 1 || a2 < a1 || a1 + a2 < 3 || a1 + a2 > 5)
    throw InputError("scroll(a1,a2) needs 1 <= a1 <= a2 and 3 <= a1 + a2 <= 5");
  const int N = a1 + a2 + 1;
  RingPtr x = Ring::indexed("x", static_cast<std::size_t>(N + 1));
  std::vector<std::pair<std::size_t, std::size_t>> columns;
  for (int i = 0; i < a1; ++i) columns.emplace_back(i, i + 1);
  for (int j = 0; j < a2; ++j) columns.emplace_back(a1 + 1 + j, a1 + 2 + j);
  std::vector<Polynomial> gens;
  for (std::size_t u = 0; u < columns.size(); ++u)
    for (std::size_t v = u + 1; v < columns.size(); ++v)
      gens.push_back(binomial_minor(x, columns[u].first, columns[v].second, columns[v].first, columns[u].second));

  RingPtr p = Ring::make({"l", "m", "s", "t"});
  std::vector<Polynomial> param;
  for (int i = 0; i <= a1; ++i)
    param.push_back(var(p, 0) * var(p, 2).pow(static_cast<unsigned>(a1 - i)) * var(p, 3).pow(static_cast<unsigned>(i)));
  for (int j = 0; j <= a2; ++j)
    param.push_back(var(p, 1) * var(p, 2).pow(static_cast<unsigned>(a2 - j)) * var(p, 3).pow(static_cast<unsigned>(j)));

  CatalogEntry e{"scroll_" + std::to_string(a1) + "_" + std::to_string(a2),
                 "rational normal surface scroll S(" + std::to_string(a1) + "," + std::to_string(a2) + ")",
                 PresentedScheme(static_cast<std::size_t>(N), distinct_nonzero(std::move(gens)), 2),
                 std::move(param),
                 {0, 1, 2, 3},
                 {},
                 {},
                 {}};
  e.expected.dim = 0;
  e.expected.degree = 1;
  e.expected.empty = false;
  e.expected.degenerate = true;
  e.expected.quadratic = true;
  e.expected.saturation_gap = true;
  return e;
}

CatalogEntry quadric(int n) {
  if (n < 2 || n > 5) throw InputError("quadric(n) needs 2 <= n <= 5");
  const int N = n + 1;
  RingPtr x = Ring::indexed("x", static_cast<std::size_t>(N + 1));
  RingPtr p = Ring::indexed("u", static_cast<std::size_t>(n + 1));  // u0 = s, u1..un
  // q' on x1..xn: x_k * x_{n+1-k}, plus a square when n is odd.
  auto middle = [n](const RingPtr& r, std::size_t shift) {
    Polynomial q(r);
    for (int k = 1; k <= n / 2; ++k)
      q = q + var(r, static_cast<std::size_t>(k) - 1 + shift) * var(r, static_cast<std::size_t>(n + 1 - k) - 1 + shift);
    if (n % 2 == 1) q = q + var(r, static_cast<std::size_t>((n + 1) / 2) - 1 + shift).pow(2);
    return q;
  };
  Polynomial f = var(x, 0) * var(x, static_cast<std::size_t>(N)) + middle(x, 1);
  std::vector<Polynomial> param{var(p, 0).pow(2)};
  for (int k = 1; k <= n; ++k) param.push_back(var(p, 0) * var(p, static_cast<std::size_t>(k)));
  param.push_back(-middle(p, 1));

  CatalogEntry e{"quadric_" + std::to_string(n),
                 "smooth quadric of dimension " + std::to_string(n) + " in P^" + std::to_string(N),
                 PresentedScheme(static_cast<std::size_t>(N), {f}, n),
                 std::move(param),
                 {0},
                 {},
                 {},
                 {}};
  e.expected.dim = n - 2;
  e.expected.degree = 2;
  e.expected.empty = false;
  e.expected.quadratic = true;
  RingPtr y = tangent_ring(n);
  e.expected.model = Ideal(y, {var(y, 0).pow(2)});
  return e;
}

CatalogEntry complete_intersection(int N, const std::vector<int>& degrees, std::uint64_t seed) {
  const int c = static_cast<int>(degrees.size());
  if (N < 2 || N > 6 || c < 1 || c >= N) throw InputError("complete intersection needs 2 <= N <= 6 and 1 <= c < N");
  for (int d : degrees)
    if (d < 2 || d > 4) throw InputError("complete intersection degrees must lie in 2..4");
  std::vector<int> degs = degrees;
  std::sort(degs.rbegin(), degs.rend());
  const std::size_t nv = static_cast<std::size_t>(N + 1);
  RingPtr x = Ring::indexed("x", nv);

  std::vector<ProjectivePoint> planted;
  for (std::size_t i = 0; i < nv; ++i) {
    RationalVector v(nv);
    v[i] = 1;
    planted.emplace_back(std::move(v));
  }
  planted.emplace_back(RationalVector(nv, Rational(1)));

  std::string name = "ci_" + std::to_string(N);
  for (int d : degs) name += "_" + std::to_string(d);
  if (seed != 0) name += "_s" + std::to_string(seed);

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 12345);
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<Polynomial> gens;
    for (int d : degs) {
      std::vector<Monomial> monos;
      monomials_of_degree(nv, static_cast<unsigned>(d), 0, Monomial{}, monos);
      std::vector<Term> terms;
      long sum = 0;
      std::size_t fix = monos.size();
      for (std::size_t k = 0; k < monos.size(); ++k) {
        const Monomial& m = monos[k];
        if (m[0] == static_cast<unsigned>(d - 1) && m[1] == 1) fix = k;
        bool pure = false;
        for (std::size_t v = 0; v < nv; ++v) pure = pure || m[v] == static_cast<unsigned>(d);
        if (pure) continue;  // vanish at the coordinate points
        long coeff = static_cast<long>(rng() % 11) - 5;
        if (k == fix) continue;
        sum += coeff;
        if (coeff != 0) terms.push_back(Term{m, Rational(coeff)});
      }
      if (sum != 0) terms.push_back(Term{monos[fix], Rational(-sum)});  // vanish at (1:...:1)
      gens.push_back(Polynomial::from_terms(x, std::move(terms)));
    }
    bool independent = true;
    for (const auto& g : gens) independent = independent && !g.is_zero();
    if (!independent) continue;
    PresentedScheme X(static_cast<std::size_t>(N), gens, N - c);
    if (hilbert_data(X.ideal()).proj_dimension != N - c) continue;
    if (!is_projectively_empty(singular_locus_ideal(X))) continue;
    CatalogEntry e{name, "smooth complete intersection of random forms", X, {}, {}, planted, {}, {}};
    const int n = N - c;
    int d = 0;
    Integer degree = 1;
    std::vector<unsigned> model_degrees;
    for (int di : degs) {
      d += di - 1;
      degree *= factorial(di);
      for (int j = 2; j <= di; ++j) model_degrees.push_back(static_cast<unsigned>(j));
    }
    e.expected.dim = n - 1 - d;
    e.expected.empty = e.expected.dim < 0;
    e.expected.degree = e.expected.empty ? Integer(0) : degree;
    e.expected.quadratic = std::all_of(degs.begin(), degs.end(), [](int v) { return v == 2; });
    if (!e.expected.empty) {
      RingPtr y = tangent_ring(n);
      std::vector<Polynomial> model;
      for (std::size_t k = 0; k < model_degrees.size(); ++k) model.push_back(var(y, k).pow(model_degrees[k]));
      e.expected.model = Ideal(y, std::move(model));
    }
    return e;
  }
  throw DomainError("no smooth complete intersection found after 10 samples");
}

CatalogEntry fermat_cubic() {
  RingPtr x = Ring::indexed("x", 4);
  Polynomial f = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", x);
  PresentedScheme X(3, {f}, 2);
  CatalogEntry e{"fermat_cubic", "Fermat cubic surface", X, {}, {}, {}, {}, {}};
  // Witnesses: smooth points with no line through them and two distinct
  // asymptotic directions, taken in increasing height.
  for (const auto& pt : points_by_height(3, 6)) {
    if (!lies_on(X, pt) || !is_smooth_point(X, pt)) continue;
    NormalizedChart chart = normalize_chart(X, pt);
    LineSchemeReport lines = line_scheme(chart);
    if (!lines.is_empty) continue;
    SecondFundamentalForm sff = second_fundamental_form(chart);
    HilbertData b = hilbert_data(sff.base_locus);
    if (b.proj_dimension != 0 || b.degree != 2 || !scheme_smoothness(saturate_irrelevant(sff.base_locus)).is_smooth())
      continue;
    e.known_points.push_back(pt);
    if (e.known_points.size() == 5) break;
  }
  e.expected.empty = true;
  return e;
}

std::vector<std::string> catalog_names() {
  return {"segre_1_1",  "segre_1_2",  "segre_2_2", "segre_1_3", "veronese2_2", "veronese2_3",
          "plucker_3",  "plucker_4",  "scroll_1_2", "scroll_2_2", "scroll_1_3", "quadric_2",
          "quadric_3",  "quadric_4",  "ci_5_2_2",   "ci_4_3",     "fermat_cubic"};
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "fermat_cubic") return fermat_cubic();
  std::vector<std::string> parts;
  std::stringstream in(name);
  std::string item;
  while (std::getline(in, item, '_')) parts.push_back(item);
  auto num = [&](std::size_t i) {
    if (i >= parts.size() || parts[i].empty() || !std::all_of(parts[i].begin(), parts[i].end(), ::isdigit))
      throw InputError("unknown catalog entry '" + name + "'");
    return std::stoi(parts[i]);
  };
  if (parts.empty()) throw InputError("empty catalog entry name");
  const std::string& family = parts[0];
  if (family == "segre" && parts.size() == 3) return segre(num(1), num(2));
  if (family == "veronese2" && parts.size() == 2) return veronese2(num(1));
  if (family == "plucker" && parts.size() == 2) return plucker(num(1));
  if (family == "scroll" && parts.size() == 3) return scroll(num(1), num(2));
  if (family == "quadric" && parts.size() == 2) return quadric(num(1));
  if (family == "ci" && parts.size() >= 3) {
    std::uint64_t seed = 0;
    std::size_t end = parts.size();
    if (parts.back().size() > 1 && parts.back()[0] == 's') {
      std::string digits = parts.back().substr(1);
      if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) throw InputError("unknown catalog entry '" + name + "'");
      seed = std::stoull(digits);
      --end;
    }
    std::vector<int> degrees;
    for (std::size_t i = 2; i < end; ++i) degrees.push_back(num(i));
    if (degrees.empty()) throw InputError("unknown catalog entry '" + name + "'");
    return complete_intersection(num(1), degrees, seed);
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

ProjectivePoint rational_point(const CatalogEntry& entry, std::uint64_t seed) {
  const PresentedScheme& X = entry.scheme;
  if (entry.parametrization.empty()) {
    std::vector<ProjectivePoint> smooth;
    for (const auto& p : entry.known_points)
      if (lies_on(X, p) && is_smooth_point(X, p)) smooth.push_back(p);
    if (smooth.empty()) throw DomainError("point search exhausted for " + entry.name);
    return smooth[seed % smooth.size()].canonical();
  }
  const std::size_t k = entry.parametrization.front().nvars();
  for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
    std::mt19937_64 rng(seed * 1000003ull + attempt * 7919ull + 17);
    RationalVector values(k);
    for (auto& v : values) {
      long r = static_cast<long>(rng() % 6);  // -3..-1, 1..3
      v = r < 3 ? Rational(r - 3) : Rational(r - 2);
    }
    RationalVector coords;
    for (const auto& g : entry.parametrization) coords.push_back(g.evaluate(values));
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; })) continue;
    ProjectivePoint pt = ProjectivePoint(std::move(coords)).canonical();
    if (lies_on(X, pt) && is_smooth_point(X, pt)) return pt;
  }
  throw DomainError("no smooth sample found for " + entry.name);
}

bool parametrization_is_valid(const CatalogEntry& entry) {
  if (entry.parametrization.empty()) return true;
  for (const auto& f : entry.scheme.generators())
    if (!compose(f, entry.parametrization).is_zero()) return false;
  return true;
}

}  // namespace fanoline
