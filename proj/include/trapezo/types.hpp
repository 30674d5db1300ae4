#ifndef TRAPEZO_TYPES_HPP
#define TRAPEZO_TYPES_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types for the trapezohedron realizability engine.
//
// Index convention: the four distinguished edges are numbered i = 1..4
// cyclically (mod 4). Arrays are 0-based; entry k corresponds to index k+1.
// Classification and CLI output report 1-based indices.

namespace trapezo {

inline constexpr double kPi = 3.14159265358979323846;

// Half-width of the band around Phi_i = 0 that classifies as Boundary.
inline constexpr double kDefaultBand = 1e-9;

// Default residual target |g(t) - 1| for solve_shape.
inline constexpr double kDefaultSolveTol = 1e-13;

// Tolerance on prod q_i = 1 accepted by ShapeParams.
inline constexpr double kShapeProductTol = 1e-12;

// cos of the sharp per-angle bound of the universal cube: 1 - sqrt(2).
inline double universal_cube_cos() { return 1.0 - std::sqrt(2.0); }

// The sharp per-angle bound itself, arccos(1 - sqrt(2)).
inline double universal_cube_angle() { return std::acos(1.0 - std::sqrt(2.0)); }

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidStart : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateCircle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeHeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HoledInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Four dihedral angles alpha_i in [0, pi) at the distinguished edges.
/// The cone angle around the i-th singular locus is theta_i = 2 alpha_i.
struct AngleQuad {
  std::array<double, 4> alpha{0.0, 0.0, 0.0, 0.0};

  AngleQuad() = default;
  explicit AngleQuad(const std::array<double, 4>& a) : alpha(a) {
    for (double x : alpha) {
      if (!(x >= 0.0 && x < kPi))
        throw std::invalid_argument("AngleQuad: angle outside [0, pi)");
    }
  }
  AngleQuad(double a1, double a2, double a3, double a4)
      : AngleQuad(std::array<double, 4>{a1, a2, a3, a4}) {}

  double operator[](int k) const { return alpha[static_cast<size_t>(k)]; }
};

/// Cosines c_i = cos(alpha_i), each in (-1, 1]. The realizable region and
/// its boundary strata are polynomial in these coordinates.
struct CosQuad {
  std::array<double, 4> c{1.0, 1.0, 1.0, 1.0};

  CosQuad() = default;
  explicit CosQuad(const std::array<double, 4>& v) : c(v) {
    for (double x : c) {
      if (!(x > -1.0 && x <= 1.0))
        throw std::invalid_argument("CosQuad: value outside (-1, 1]");
    }
  }
  CosQuad(double c1, double c2, double c3, double c4)
      : CosQuad(std::array<double, 4>{c1, c2, c3, c4}) {}

  double operator[](int k) const { return c[static_cast<size_t>(k)]; }
};

/// Cyclic shift: entry j of the result is c[(j + k) mod 4].
inline CosQuad rotate(const CosQuad& c, int k) {
  k = ((k % 4) + 4) % 4;
  return CosQuad(c[k], c[(k + 1) % 4], c[(k + 2) % 4], c[(k + 3) % 4]);
}

/// Similarity-invariant shape coordinates: the side ratios q_i = p_{i+1}/p_i
/// of the projected rectangle and the slope t of the line O R_1.
///
/// Valid values satisfy prod q_i = 1, t >= 0 and t >= (q_i - 1/q_i)/2 for
/// every i (the last up to a small slack absorbing round-off).
struct ShapeParams {
  std::array<double, 4> q{1.0, 1.0, 1.0, 1.0};
  double t = 0.0;

  ShapeParams() = default;
  ShapeParams(const std::array<double, 4>& q_in, double t_in) : q(q_in), t(t_in) {
    double prod = 1.0;
    for (double x : q) {
      if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("ShapeParams: ratios must be positive");
      prod *= x;
    }
    if (!(std::fabs(prod - 1.0) <= kShapeProductTol))
      throw std::invalid_argument("ShapeParams: prod q_i != 1");
    if (!(t >= 0.0) || !std::isfinite(t))
      throw std::invalid_argument("ShapeParams: t must be >= 0");
    const double slack = 1e-9 * std::max(1.0, t);
    for (double x : q) {
      if (t < 0.5 * (x - 1.0 / x) - slack)
        throw std::invalid_argument("ShapeParams: t below the admissible floor");
    }
  }
};

enum class RegionKind { Interior, Boundary, Exterior };

inline const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Interior: return "interior";
    case RegionKind::Boundary: return "boundary";
    case RegionKind::Exterior: return "exterior";
  }
  return "?";
}

/// Result of testing a cosine quadruple against the realizable region.
/// edge[k] marks the edge between loci k+1 and k+2 (1-based, mod 4):
/// the boundary stratum it sits on for Boundary, the violated constraints
/// for Exterior. Interior has no marked edges.
struct Classification {
  RegionKind kind = RegionKind::Interior;
  std::array<bool, 4> edge{false, false, false, false};

  bool is_interior() const { return kind == RegionKind::Interior; }

  /// Marked edges as sorted 1-based indices.
  std::vector<int> edges() const {
    std::vector<int> out;
    for (int k = 0; k < 4; ++k)
      if (edge[static_cast<size_t>(k)]) out.push_back(k + 1);
    return out;
  }
};

}  // namespace trapezo

#endif  // TRAPEZO_TYPES_HPP
