#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "projindex/multipoly.hpp"
#include "projindex/poly_matrix.hpp"

namespace projindex {

/// An (n+1)-tuple of homogeneous polynomials of common degree nu+1 >= 2 in
/// z0..zn, without a common non-unit factor: the map inducing a meromorphic
/// self-map f of P^n.
class HomogeneousMap {
 public:
  /// Validates the components; throws DomainError naming the violated
  /// condition.
  static HomogeneousMap validate(std::vector<MultiPoly> components);

  std::size_t n() const { return components_.size() - 1; }
  unsigned degree() const { return degree_; }
  unsigned nu() const { return degree_ - 1; }
  const std::vector<MultiPoly>& components() const { return components_; }
  const MultiPoly& component(std::size_t j) const { return components_[j]; }

  /// F(v) at a point of C^{n+1}.
  std::vector<Scalar> evaluate(std::span<const Scalar> v) const;

  std::vector<std::string> component_strings() const;

 private:
  HomogeneousMap(std::vector<MultiPoly> components, unsigned degree)
      : components_(std::move(components)), degree_(degree) {}

  std::vector<MultiPoly> components_;
  unsigned degree_;
};

/// A rational point of P^n, normalized so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Scalar> coords);

  std::size_t n() const { return coords_.size() - 1; }
  std::size_t pivot() const { return pivot_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t nonzero_count() const;

  /// "[1:0:1/2]"
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Scalar> coords_;
  std::size_t pivot_;
};

enum class PointKind { IndeterminacyPoint, FixedPoint, RegularNonFixed };

std::string to_string(PointKind kind);

/// The map read in the affine chart {z_chart != 0}: chart variables w1..wn
/// are the remaining homogeneous coordinates in increasing index order.
struct LocalModel {
  std::size_t chart;
  std::vector<std::size_t> chart_coords;  // homogeneous index of each w_k
  std::vector<Scalar> w0;                  // chart coordinates of the point
  MultiPoly f0;                            // F_chart dehomogenized
  std::vector<MultiPoly> f_hat;            // F_{chart_coords[k]} dehomogenized
  std::vector<MultiPoly> g;                // g_k = f_hat_k - w_k f0
  PolyMatrix jac_g;                        // symbolic Jacobian of g
  Scalar f0_at_p;
  std::vector<Scalar> sigma_dg;            // sigma_k of Jac(g)(w0)

  std::size_t n() const { return g.size(); }
  PolyMatrix jac_g_at_point() const { return jac_g.evaluate(w0); }
};

/// Homogeneous coordinate indices other than `chart`, ascending.
std::vector<std::size_t> chart_coordinates(std::size_t n, std::size_t chart);

/// Local model at p in chart `chart` (default: p's pivot). Requires
/// p[chart] != 0.
LocalModel dehomogenize(const HomogeneousMap& f, const ProjPoint& p,
                        std::optional<std::size_t> chart = std::nullopt);

/// The coefficients g_1..g_n of the canonical section in the given chart.
std::vector<MultiPoly> canonical_section_coeffs(const HomogeneousMap& f, std::size_t chart);

PointKind classify_point(const HomogeneousMap& f, const ProjPoint& p);

/// Eigenvalue data at a fixed point, all through elementary symmetric values.
struct FixedPointSpectrum {
  Scalar f0_at_p;
  PolyMatrix jac_f;               // Jac(f~)(w0), f~ the map read in the chart
  PolyMatrix jac_g;               // Jac(g)(w0)
  std::vector<Scalar> sigma_df;   // sigma_k(df_p)
  std::vector<Scalar> sigma_dg;   // sigma_k(dg_{w0})
  bool simple;                    // 1 is not an eigenvalue of df_p
};

/// Throws DomainError when p is not a fixed point.
FixedPointSpectrum fixed_point_spectrum(const HomogeneousMap& f, const ProjPoint& p,
                                        std::optional<std::size_t> chart = std::nullopt);

}  // namespace projindex
