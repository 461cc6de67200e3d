#include "projindex/projmap.hpp"

#include "projindex/error.hpp"

namespace projindex {

HomogeneousMap HomogeneousMap::validate(std::vector<MultiPoly> components) {
  if (components.size() < 2) throw DomainError("a self-map of P^n needs n+1 >= 2 components");
  const std::size_t nv = components.size();
  int degree = MultiPoly::kZeroDegree;
  for (std::size_t j = 0; j < nv; ++j) {
    const MultiPoly& c = components[j];
    if (c.nvars() != nv)
      throw DomainError("component F" + std::to_string(j) + " is not a polynomial in z0..z" +
                        std::to_string(nv - 1));
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw DomainError("component F" + std::to_string(j) + " is not homogeneous");
    if (degree == MultiPoly::kZeroDegree) {
      degree = c.total_degree();
    } else if (c.total_degree() != degree) {
      throw DomainError("components have unequal degrees (" + std::to_string(degree) + " and " +
                        std::to_string(c.total_degree()) + ")");
    }
  }
  if (degree == MultiPoly::kZeroDegree) throw DomainError("all components are identically zero");
  if (degree < 2) throw DomainError("map degree must be at least 2, got " + std::to_string(degree));
  MultiPoly common(nv);
  for (const auto& c : components) common = gcd(common, c);
  if (!common.is_constant())
    throw DomainError("components share the common factor " + common.to_string('z', 0));
  return HomogeneousMap(std::move(components), static_cast<unsigned>(degree));
}

std::vector<Scalar> HomogeneousMap::evaluate(std::span<const Scalar> v) const {
  std::vector<Scalar> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(v));
  return out;
}

std::vector<std::string> HomogeneousMap::component_strings() const {
  std::vector<std::string> out;
  for (const auto& c : components_) out.push_back(c.to_string('z', 0));
  return out;
}

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)), pivot_(0) {
  if (coords_.size() < 2) throw DomainError("a point of P^n needs at least 2 coordinates");
  while (pivot_ < coords_.size() && is_zero(coords_[pivot_])) ++pivot_;
  if (pivot_ == coords_.size()) throw DomainError("all homogeneous coordinates are zero");
  Scalar scale = 1 / coords_[pivot_];
  for (auto& c : coords_) c *= scale;
}

std::size_t ProjPoint::nonzero_count() const {
  std::size_t k = 0;
  for (const auto& c : coords_) k += is_zero(c) ? 0 : 1;
  return k;
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += projindex::to_string(coords_[i]);
  }
  return s + "]";
}

std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::IndeterminacyPoint: return "IndeterminacyPoint";
    case PointKind::FixedPoint: return "FixedPoint";
    case PointKind::RegularNonFixed: return "RegularNonFixed";
  }
  return "?";
}

std::vector<std::size_t> chart_coordinates(std::size_t n, std::size_t chart) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i)
    if (i != chart) out.push_back(i);
  return out;
}

namespace {

struct ChartParts {
  std::vector<std::size_t> coords;
  MultiPoly f0;
  std::vector<MultiPoly> f_hat;
  std::vector<MultiPoly> g;
};

ChartParts chart_parts(const HomogeneousMap& f, std::size_t chart) {
  const std::size_t n = f.n();
  if (chart > n) throw DomainError("chart index out of range");
  ChartParts parts;
  parts.coords = chart_coordinates(n, chart);
  std::vector<MultiPoly> images(n + 1, MultiPoly(n));
  images[chart] = MultiPoly(n, Scalar(1));
  for (std::size_t k = 0; k < n; ++k) images[parts.coords[k]] = MultiPoly::variable(n, k);
  parts.f0 = f.component(chart).compose(images);
  for (std::size_t k = 0; k < n; ++k) {
    parts.f_hat.push_back(f.component(parts.coords[k]).compose(images));
    parts.g.push_back(parts.f_hat.back() - MultiPoly::variable(n, k) * parts.f0);
  }
  return parts;
}

}  // namespace

std::vector<MultiPoly> canonical_section_coeffs(const HomogeneousMap& f, std::size_t chart) {
  return chart_parts(f, chart).g;
}

LocalModel dehomogenize(const HomogeneousMap& f, const ProjPoint& p, std::optional<std::size_t> chart) {
  const std::size_t n = f.n();
  if (p.n() != n) throw DomainError("point dimension does not match the map");
  std::size_t c = chart.value_or(p.pivot());
  if (c > n || is_zero(p[c])) throw DomainError("point " + p.to_string() + " is not in chart " + std::to_string(c));
  ChartParts parts = chart_parts(f, c);

  LocalModel m{c, parts.coords, {}, std::move(parts.f0), std::move(parts.f_hat), std::move(parts.g),
               PolyMatrix(n, n, n), Scalar(0), {}};
  for (std::size_t k = 0; k < n; ++k) m.w0.push_back(p[m.chart_coords[k]] / p[c]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m.jac_g(j, k) = m.g[j].partial(k);
  m.f0_at_p = m.f0.evaluate(m.w0);
  m.sigma_dg = char_poly_values(m.jac_g.evaluate(m.w0));
  return m;
}

PointKind classify_point(const HomogeneousMap& f, const ProjPoint& p) {
  if (p.n() != f.n()) throw DomainError("point dimension does not match the map");
  std::vector<Scalar> image = f.evaluate(p.coords());
  bool all_zero = true;
  for (const auto& x : image) all_zero = all_zero && is_zero(x);
  if (all_zero) return PointKind::IndeterminacyPoint;
  // p[pivot] == 1, so a proportionality factor must equal image[pivot].
  const Scalar& lambda = image[p.pivot()];
  if (is_zero(lambda)) return PointKind::RegularNonFixed;
  for (std::size_t j = 0; j < image.size(); ++j)
    if (image[j] != lambda * p[j]) return PointKind::RegularNonFixed;
  return PointKind::FixedPoint;
}

FixedPointSpectrum fixed_point_spectrum(const HomogeneousMap& f, const ProjPoint& p,
                                        std::optional<std::size_t> chart) {
  if (classify_point(f, p) != PointKind::FixedPoint)
    throw DomainError("point " + p.to_string() + " is not a fixed point");
  LocalModel m = dehomogenize(f, p, chart);
  const std::size_t n = m.n();
  PolyMatrix jac_f(n, n, 0);
  Scalar inv_f0 = 1 / m.f0_at_p;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar dfj = m.f_hat[j].partial(k).evaluate(m.w0);
      Scalar df0 = m.f0.partial(k).evaluate(m.w0);
      jac_f(j, k) = MultiPoly(0, Scalar(inv_f0 * (dfj - m.w0[j] * df0)));
    }
  PolyMatrix jac_g = m.jac_g_at_point();
  if (jac_g != m.f0_at_p * (jac_f - PolyMatrix::identity(n)))
    throw std::logic_error("Jac(g) != F0 (Jac(f~) - I) at fixed point " + p.to_string());
  FixedPointSpectrum s{m.f0_at_p, jac_f, jac_g, char_poly_values(jac_f), m.sigma_dg, false};
  s.simple = !is_zero(s.sigma_dg.back());
  return s;
}

}  // namespace projindex
