#include "fanoline/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fanoline/errors.hpp"

namespace fanoline {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

RingPtr ambient_ring(std::size_t N) { return Ring::indexed("x", N + 1); }

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols, const RingPtr& ring) {
  const std::size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  Polynomial acc(ring);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Polynomial& entry = m[rows[0]][cols[j]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Polynomial term = entry * determinant(m, sub_rows, sub_cols, ring);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double choose(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

PresentedScheme::PresentedScheme(std::size_t ambient_dim, std::vector<Polynomial> generators,
                                 std::optional<int> dim_hint)
    : ambient_dim_(ambient_dim),
      ring_(generators.empty() ? ambient_ring(ambient_dim) : generators.front().ring()),
      ideal_(ring_) {
  if (ring_->size() != ambient_dim + 1) throw DomainError("generator ring does not match the ambient dimension");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (g.is_zero()) throw DomainError("zero generator");
    if (!g.is_homogeneous()) throw DomainError("generator " + to_string(g) + " is not homogeneous");
    gens_.push_back(std::move(g));
  }
  std::stable_sort(gens_.begin(), gens_.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.total_degree() > b.total_degree(); });
  ideal_ = Ideal(ring_, gens_);
  if (dim_hint) {
    if (*dim_hint < 0 || *dim_hint > static_cast<int>(ambient_dim)) throw DomainError("dimension hint out of range");
    dim_ = *dim_hint;
    from_hint_ = true;
  } else {
    dim_ = hilbert_data(ideal_).proj_dimension;
  }
}

PresentedScheme PresentedScheme::from_strings(std::size_t ambient_dim, const std::vector<std::string>& generators,
                                              std::optional<int> dim_hint) {
  RingPtr ring = ambient_ring(ambient_dim);
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, ring));
  if (gens.empty()) return PresentedScheme(ambient_dim, {}, dim_hint);
  return PresentedScheme(ambient_dim, std::move(gens), dim_hint);
}

std::vector<int> PresentedScheme::degrees() const {
  std::vector<int> d;
  for (const auto& g : gens_) d.push_back(g.total_degree());
  return d;
}

int PresentedScheme::d_invariant() const {
  int d = 0;
  const int c = codimension();
  for (int i = 0; i < c && i < static_cast<int>(gens_.size()); ++i) d += gens_[static_cast<std::size_t>(i)].total_degree() - 1;
  return d;
}

ProjectivePoint::ProjectivePoint(RationalVector coordinates) : coords_(std::move(coordinates)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; }))
    throw DomainError("projective point with all coordinates zero");
}

ProjectivePoint ProjectivePoint::canonical() const {
  auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& q) { return q != 0; });
  Rational inv = 1 / *it;
  RationalVector out = coords_;
  for (auto& q : out) q *= inv;
  return ProjectivePoint(std::move(out));
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
  return size() == other.size() && canonical().coords_ == other.canonical().coords_;
}

std::string to_string(const ProjectivePoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += to_string(p[i]);
  }
  return s;
}

ProjectivePoint parse_point(std::string_view text, std::size_t ambient_dim) {
  RationalVector coords;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) coords.push_back(parse_rational(trim(item)));
  if (coords.size() == ambient_dim) coords.insert(coords.begin(), Rational(1));
  if (coords.size() != ambient_dim + 1)
    throw InputError("point needs " + std::to_string(ambient_dim + 1) + " coordinates (or " +
                     std::to_string(ambient_dim) + " affine ones)");
  try {
    return ProjectivePoint(std::move(coords)).canonical();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

bool lies_on(const PresentedScheme& X, const ProjectivePoint& p) {
  if (p.size() != X.ambient_dim() + 1) throw DomainError("point has the wrong number of coordinates");
  for (const auto& f : X.generators())
    if (f.evaluate(p.coordinates()) != 0) return false;
  return true;
}

RationalMatrix jacobian_at(const PresentedScheme& X, const ProjectivePoint& p) {
  if (!lies_on(X, p)) throw PointNotOnScheme();
  const std::size_t cols = X.ambient_dim() + 1;
  RationalMatrix jac(X.generators().size(), cols);
  for (std::size_t i = 0; i < X.generators().size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) jac(i, j) = X.generators()[i].derivative(j).evaluate(p.coordinates());
  return jac;
}

bool is_smooth_point(const PresentedScheme& X, const ProjectivePoint& p) {
  if (X.dimension() < 0) throw PointNotOnScheme();
  return static_cast<int>(rank(jacobian_at(X, p))) == X.codimension();
}

Polynomial NormalizedChart::graded_piece(std::size_t i, unsigned j) const {
  return graded_part(affine_generators.at(i), j);
}

Polynomial NormalizedChart::tangent_piece(std::size_t i, unsigned j) const {
  std::vector<std::size_t> keep(n);
  for (std::size_t k = 0; k < n; ++k) keep[k] = k;
  return restrict_to_subspace(graded_piece(i, j), keep, tangent_ring);
}

std::optional<RationalVector> NormalizedChart::tangent_coordinates(const RationalVector& v) const {
  RationalVector z = inverse(change_matrix).apply(v);
  for (std::size_t k = n + 1; k < z.size(); ++k)
    if (z[k] != 0) return std::nullopt;
  return RationalVector(z.begin() + 1, z.begin() + static_cast<std::ptrdiff_t>(n + 1));
}

NormalizedChart normalize_chart(const PresentedScheme& X, const ProjectivePoint& x,
                                const std::vector<RationalVector>& preferred) {
  if (X.dimension() < 0) throw PointNotOnScheme();
  const std::size_t N = X.ambient_dim();
  RationalMatrix jac = jacobian_at(X, x);
  const std::size_t r = X.generators().empty() ? 0 : rank(jac);
  const std::size_t c = static_cast<std::size_t>(X.codimension());
  if (r < c) throw SingularPoint();
  if (r > c) throw DomainError("Jacobian rank exceeds the codimension; the dimension is inconsistent");
  const std::size_t n = N - c;

  std::vector<RationalVector> cols{x.coordinates()};
  auto try_add = [&](const RationalVector& v) {
    cols.push_back(v);
    if (rank(RationalMatrix::from_columns(cols)) < cols.size()) cols.pop_back();
  };
  for (const auto& v : preferred) {
    if (cols.size() == n + 1) break;
    if (v.size() != N + 1) throw DomainError("preferred direction has the wrong size");
    if (!X.generators().empty()) {
      RationalVector image = jac.apply(v);
      if (std::any_of(image.begin(), image.end(), [](const Rational& q) { return q != 0; }))
        throw DomainError("preferred direction is not tangent");
    }
    try_add(v);
  }
  if (cols.size() < n + 1) {
    std::vector<RationalVector> ker;
    if (X.generators().empty()) {
      for (std::size_t j = 0; j <= N; ++j) {
        RationalVector e(N + 1);
        e[j] = 1;
        ker.push_back(std::move(e));
      }
    } else {
      ker = kernel(jac);
    }
    for (const auto& v : ker) {
      if (cols.size() == n + 1) break;
      try_add(v);
    }
  }
  if (cols.size() != n + 1) throw DomainError("tangent space has the wrong dimension");
  for (std::size_t j = 0; j <= N && cols.size() < N + 1; ++j) {
    RationalVector e(N + 1);
    e[j] = 1;
    try_add(e);
  }
  RationalMatrix M = RationalMatrix::from_columns(cols);

  std::vector<Polynomial> transformed;
  for (const auto& f : X.generators()) transformed.push_back(apply_linear_change(f, M));
  PresentedScheme moved(N, transformed, X.dimension());

  RingPtr affine = Ring::indexed("y", N, 1);
  std::vector<Polynomial> affine_gens;
  for (const auto& g : moved.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t k = 1; k <= N; ++k) m.set(k - 1, t.monomial[k]);
      terms.push_back(Term{m, t.coefficient});
    }
    affine_gens.push_back(Polynomial::from_terms(affine, std::move(terms)));
  }

  // Invariant: no constant terms; linear parts span exactly y_{n+1}..y_N.
  RationalMatrix linear(affine_gens.size(), c);
  for (std::size_t i = 0; i < affine_gens.size(); ++i) {
    for (const auto& t : affine_gens[i].terms()) {
      if (t.monomial.degree() == 0) throw DomainError("normalized generator has a constant term");
      if (t.monomial.degree() != 1) continue;
      std::size_t v = 0;
      while (t.monomial[v] == 0) ++v;
      if (v < n) throw DomainError("normalized linear part involves a tangent coordinate");
      linear(i, v - n) = t.coefficient;
    }
  }
  if (c > 0 && rank(linear) != c) throw DomainError("normalized linear parts do not span the normal coordinates");

  NormalizedChart chart{X, moved, M, x, n, c, affine, Ring::indexed("y", n, 1), std::move(affine_gens)};
  return chart;
}

std::vector<std::vector<Polynomial>> formal_jacobian(std::span<const Polynomial> polys) {
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : polys) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < f.nvars(); ++j) row.push_back(f.derivative(j));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& matrix, std::size_t k, std::size_t limit) {
  std::vector<Polynomial> out;
  if (matrix.empty() || k == 0) return out;
  const std::size_t m = matrix.size();
  const std::size_t cols = matrix.front().size();
  if (k > m || k > cols) return out;
  if (choose(m, k) * choose(cols, k) > static_cast<double>(limit))
    throw DomainError("too many minors to expand (" + std::to_string(m) + "x" + std::to_string(cols) + ", size " +
                      std::to_string(k) + ")");
  const RingPtr& ring = matrix.front().front().ring();
  std::set<std::string> seen;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    std::vector<std::size_t> cs(k);
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      Polynomial d = determinant(matrix, rows, cs, ring);
      if (d.is_zero()) continue;
      d = d.normalized();
      if (seen.insert(to_string(d)).second) out.push_back(std::move(d));
    } while (next_combination(cs, cols));
  } while (next_combination(rows, m));
  return out;
}

Ideal singular_locus_ideal(const PresentedScheme& X) {
  if (X.generators().empty()) return Ideal::unit(X.ring());
  std::vector<Polynomial> gens = X.generators();
  auto ms = minors(formal_jacobian(X.generators()), static_cast<std::size_t>(X.codimension()));
  gens.insert(gens.end(), ms.begin(), ms.end());
  return Ideal(X.ring(), std::move(gens));
}

PresentedScheme parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> ambient;
  std::optional<int> dim;
  std::vector<std::string> gens;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!ambient) {
      std::istringstream header(t);
      std::string word;
      long N = -1;
      header >> word;
      if (word != "ambient" || !(header >> N) || N < 0)
        throw InputError("line " + std::to_string(line_no) + ": expected header 'ambient N [dim n]'");
      ambient = static_cast<std::size_t>(N);
      if (header >> word) {
        long n = -1;
        if (word != "dim" || !(header >> n) || n < 0 || n > N)
          throw InputError("line " + std::to_string(line_no) + ": malformed dimension in header");
        dim = static_cast<int>(n);
      }
      if (header >> word) throw InputError("line " + std::to_string(line_no) + ": trailing text in header");
      if (*ambient + 1 > kMaxVars) throw InputError("ambient dimension too large");
      continue;
    }
    gens.push_back(t);
  }
  if (!ambient) throw InputError("missing 'ambient N' header");
  RingPtr ring = ambient_ring(*ambient);
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    Polynomial p = parse_polynomial(g, ring);
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw InputError("generator '" + g + "' is not homogeneous");
    polys.push_back(std::move(p));
  }
  return PresentedScheme(*ambient, std::move(polys), dim);
}

PresentedScheme read_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scheme file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scheme(buf.str());
}

std::string format_scheme(const PresentedScheme& X) {
  std::string s = "ambient " + std::to_string(X.ambient_dim());
  if (X.dimension() >= 0) s += " dim " + std::to_string(X.dimension());
  s += '\n';
  for (const auto& g : X.generators()) s += to_string(g) + '\n';
  return s;
}

}  // namespace fanoline
