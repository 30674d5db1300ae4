#ifndef TRAPEZO_GEOMETRY_HPP
#define TRAPEZO_GEOMETRY_HPP

#include <algorithm>

#include "trapezo/types.hpp"

// Explicit upper half-space coordinates for the trapezohedron attached to a
// set of shape parameters.
//
// The boundary plane carries the planar companion figure: a rectangle
// [-p3, p1] x [-p4, p2] with corners P_i, one circle C_i per face through
// the origin O with center R_i on the side line through P_i and P_{i+1},
// the second circle-circle intersections S_i, and the contact points Q_i
// where line(O, S_i) meets side i. Faces of the solid are geodesic planes:
// hemispheres over the C_i and vertical planes over the sides.

namespace trapezo {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

/// Point of the upper half-space model: (x, y) in the boundary plane,
/// h >= 0 the height.
struct Vec3 {
  double x = 0.0, y = 0.0, h = 0.0;
};

inline double dist(const Vec3& a, const Vec3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.h - b.h) * (a.h - b.h));
}

/// Planar companion figure of a shape. Everything is determined by the
/// scale normalization p_1 = 1; rescaling is a hyperbolic isometry.
struct Projection {
  std::array<double, 4> p{};       ///< p_1 = 1, p_{i+1} = q_i p_i
  std::array<Vec2, 4> P{};         ///< rectangle corners
  std::array<Vec2, 4> R{};         ///< circle centers; side i's line carries R_{i+1}
  std::array<double, 4> radius{};  ///< r_i = p_i sqrt(1 + t^2), circles pass O
  std::array<Vec2, 4> S{};         ///< second intersection of C_i and C_{i+1}
  std::array<Vec2, 4> Q{};         ///< line(O, S_i) meets side i
  double t = 0.0;

  /// r_i^2 in the exact product form; preferred for height extraction.
  double radius_sq(int k) const {
    return p[static_cast<size_t>(k)] * p[static_cast<size_t>(k)] * (1.0 + t * t);
  }
  /// Largest radius; reference length for coincidence thresholds.
  double scale() const { return *std::max_element(radius.begin(), radius.end()); }
};

/// Second intersection point of two distinct circles through the origin
/// with centers a and b, i.e. the reflection of O across line(a, b).
/// Throws DegenerateCircle when the centers (nearly) coincide or the line
/// passes through O.
Vec2 second_intersection_through_origin(Vec2 a, Vec2 b);

/// Intersection of line(a0, a1) with line(b0, b1); throws DegenerateCircle
/// when the lines are (nearly) parallel.
Vec2 line_line_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

/// Parameter of x along the segment a -> b (0 at a, 1 at b).
double segment_parameter(Vec2 x, Vec2 a, Vec2 b);

Projection build_projection(const ShapeParams& sp);

/// Uniform rescale by s > 0 (t is scale-invariant).
Projection scaled(const Projection& pr, double s);

enum class FaceCarrier { Hemisphere, VerticalPlane };
enum class EdgeKind { ConeLocus, ApexO, ApexInf, Lateral };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::ConeLocus: return "cone";
    case EdgeKind::ApexO: return "apex_o";
    case EdgeKind::ApexInf: return "apex_inf";
    case EdgeKind::Lateral: return "lateral";
  }
  return "?";
}

struct TrapVertex {
  std::string name;
  Vec3 pos{};               ///< undefined when at_infinity
  bool ideal = false;       ///< on the boundary plane (height 0)
  bool at_infinity = false;  ///< the point at infinity of the model
};

struct TrapFace {
  std::string name;
  std::array<int, 4> cycle{};  ///< vertex ids, cyclic
  FaceCarrier carrier = FaceCarrier::Hemisphere;
  int carrier_index = 0;  ///< 0-based: hemisphere i, or side through P_i, P_{i+1}
  int color = 0;          ///< checkerboard; 1 on odd-index faces F_1, F_3, G_1, G_3
  bool holed = false;
};

struct TrapEdge {
  std::string name;
  int v0 = 0, v1 = 0;
  int face_a = 0, face_b = 0;  ///< indices into Trapezohedron::faces
  EdgeKind kind = EdgeKind::ConeLocus;
  int index = 0;      ///< 0-based family index i
  double expected = 0.0;  ///< alpha_{i+1} on cone edges, pi/2 elsewhere
  double measured = 0.0;  ///< filled by measure_dihedrals
  bool holed = false;
};

/// The solid itself: 10 vertices, 8 faces, 16 edges.
///
/// Vertices: 0 = O, 1 = infinity, 2+i = P~_i, 6+i = Q~_i (0-based i).
/// Faces: 0..3 = F_{i+1} on hemisphere i, 4..7 = G_{i+1} on the vertical
/// plane over side i. Edges: 0..3 cone edges P~Q~, 4..7 O Q~, 8..11
/// infinity P~, 12..15 lateral Q~_i P~_{i+1}.
struct Trapezohedron {
  Projection proj;
  CosQuad c;
  std::array<TrapVertex, 10> vertices{};
  std::array<TrapFace, 8> faces{};
  std::array<TrapEdge, 16> edges{};

  static constexpr int kApexO = 0;
  static constexpr int kApexInf = 1;
  static int pv(int i) { return 2 + i; }
  static int qv(int i) { return 6 + i; }

  bool any_holed() const {
    for (const auto& e : edges)
      if (e.holed) return true;
    return false;
  }
};

/// Lift the companion figure to the upper half-space: heights from the
/// hemisphere equations, ideal flags on collapsed P~ = Q~ vertices, holed
/// flags on lateral edges whose contact point Q_i sits at or beyond
/// P_{i+1}, and measured dihedral angles on every edge. Throws
/// NegativeHeight if a requested height is imaginary beyond round-off.
Trapezohedron lift(const Projection& pr, const CosQuad& c);

/// Recompute all 16 dihedral angles from the carrier data and store them
/// back on the edge records. Entry k is edges[k].measured.
std::array<double, 16> measure_dihedrals(Trapezohedron& trap);

/// Projection + lift in one step; works for holed shapes as well, where
/// the lateral contact fails and the affected faces are marked holed.
Trapezohedron build_solid(const ShapeParams& sp);

/// Alias of build_solid emphasizing that realizability is not required:
/// contact points are intersected with full lines, failed contacts become
/// holed edges and faces. On a realizable shape the output is identical to
/// build_solid with zero holed flags.
Trapezohedron build_holed(const ShapeParams& sp);

}  // namespace trapezo

#endif  // TRAPEZO_GEOMETRY_HPP
