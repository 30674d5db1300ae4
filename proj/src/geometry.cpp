#include "trapezo/geometry.hpp"

#include <cmath>

#include "trapezo/region.hpp"

namespace trapezo {

namespace {

double clamp_pm1(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

// Height of the point of the hemisphere over circle k lying above x.
double height_on(const Projection& pr, int k, Vec2 x) {
  const Vec2 d = x - pr.R[static_cast<size_t>(k)];
  const double h2 = pr.radius_sq(k) - dot(d, d);
  if (h2 < -1e-9 * pr.radius_sq(k))
    throw NegativeHeight("lift: point outside circle " + std::to_string(k + 1));
  return h2 > 0.0 ? std::sqrt(h2) : 0.0;
}

// Interior dihedral between the vertical plane over side s and the
// hemisphere over circle j, measured along their intersection; equals
// arccos of the signed center distance over the radius, the sign positive
// on the side of the line containing O.
double plane_hemi_angle(const Projection& pr, int side, int hemi) {
  const Vec2 a = pr.P[static_cast<size_t>(side)];
  const Vec2 b = pr.P[static_cast<size_t>((side + 1) % 4)];
  const Vec2 d = b - a;
  Vec2 n{d.y, -d.x};
  if (dot(n, a) > 0.0) n = {-n.x, -n.y};
  const double sd = dot(n, pr.R[static_cast<size_t>(hemi)] - a) / norm(n);
  return std::acos(clamp_pm1(sd / pr.radius[static_cast<size_t>(hemi)]));
}

// Interior dihedral between two intersecting hemispheres.
double hemi_hemi_angle(const Projection& pr, int i, int j) {
  const Vec2 d = pr.R[static_cast<size_t>(i)] - pr.R[static_cast<size_t>(j)];
  const double ri = pr.radius[static_cast<size_t>(i)];
  const double rj = pr.radius[static_cast<size_t>(j)];
  return std::acos(clamp_pm1((ri * ri + rj * rj - dot(d, d)) / (2.0 * ri * rj)));
}

// Dihedral along the vertical edge over P_i: the rectangle's corner angle.
double corner_angle(const Projection& pr, int i) {
  const Vec2 u = pr.P[static_cast<size_t>((i + 3) % 4)] - pr.P[static_cast<size_t>(i)];
  const Vec2 v = pr.P[static_cast<size_t>((i + 1) % 4)] - pr.P[static_cast<size_t>(i)];
  return std::acos(clamp_pm1(dot(u, v) / (norm(u) * norm(v))));
}

}  // namespace

Vec2 second_intersection_through_origin(Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double dd = dot(d, d);
  const double ref = dot(a, a) + dot(b, b);
  if (!(dd > 1e-28 * ref))
    throw DegenerateCircle("second_intersection: coincident centers");
  // Reflection of O across line(a, b).
  const double lambda = -dot(a, d) / dd;
  const Vec2 foot = a + lambda * d;
  const Vec2 s = 2.0 * foot;
  if (!(dot(s, s) > 1e-28 * ref))
    throw DegenerateCircle("second_intersection: circles tangent at O");
  return s;
}

Vec2 line_line_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  const Vec2 da = a1 - a0;
  const Vec2 db = b1 - b0;
  const double den = cross(da, db);
  if (!(std::fabs(den) > 1e-14 * norm(da) * norm(db)))
    throw DegenerateCircle("line_line_intersection: parallel lines");
  const double s = cross(b0 - a0, db) / den;
  return a0 + s * da;
}

double segment_parameter(Vec2 x, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  return dot(x - a, d) / dot(d, d);
}

Projection build_projection(const ShapeParams& sp) {
  Projection pr;
  pr.t = sp.t;
  pr.p[0] = 1.0;
  for (int k = 1; k < 4; ++k)
    pr.p[static_cast<size_t>(k)] = pr.p[static_cast<size_t>(k - 1)] * sp.q[static_cast<size_t>(k - 1)];

  const double t = sp.t;
  const double s = std::hypot(1.0, t);
  const auto& p = pr.p;
  pr.P = {Vec2{p[0], p[1]}, Vec2{-p[2], p[1]}, Vec2{-p[2], -p[3]}, Vec2{p[0], -p[3]}};
  pr.R = {Vec2{p[0], t * p[0]}, Vec2{-t * p[1], p[1]}, Vec2{-p[2], -t * p[2]},
          Vec2{t * p[3], -p[3]}};
  for (int k = 0; k < 4; ++k) {
    pr.radius[static_cast<size_t>(k)] = p[static_cast<size_t>(k)] * s;
    if (!(pr.radius[static_cast<size_t>(k)] > 1e-300))
      throw DegenerateCircle("build_projection: radius underflow");
  }
  for (int k = 0; k < 4; ++k) {
    pr.S[static_cast<size_t>(k)] =
        second_intersection_through_origin(pr.R[static_cast<size_t>(k)], pr.R[static_cast<size_t>((k + 1) % 4)]);
    pr.Q[static_cast<size_t>(k)] = line_line_intersection(
        Vec2{0.0, 0.0}, pr.S[static_cast<size_t>(k)], pr.P[static_cast<size_t>(k)], pr.P[static_cast<size_t>((k + 1) % 4)]);
  }
  return pr;
}

Projection scaled(const Projection& pr, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  Projection out = pr;
  for (int k = 0; k < 4; ++k) {
    out.p[static_cast<size_t>(k)] *= s;
    out.P[static_cast<size_t>(k)] = s * out.P[static_cast<size_t>(k)];
    out.R[static_cast<size_t>(k)] = s * out.R[static_cast<size_t>(k)];
    out.radius[static_cast<size_t>(k)] *= s;
    out.S[static_cast<size_t>(k)] = s * out.S[static_cast<size_t>(k)];
    out.Q[static_cast<size_t>(k)] = s * out.Q[static_cast<size_t>(k)];
  }
  return out;
}

Trapezohedron lift(const Projection& pr, const CosQuad& c) {
  Trapezohedron T;
  T.proj = pr;
  T.c = c;
  const double sc = pr.scale();

  T.vertices[Trapezohedron::kApexO] = {"O", Vec3{0.0, 0.0, 0.0}, true, false};
  T.vertices[Trapezohedron::kApexInf] = {"Inf", Vec3{0.0, 0.0, 0.0}, true, true};

  for (int i = 0; i < 4; ++i) {
    const size_t ui = static_cast<size_t>(i);
    const Vec2 P = pr.P[ui];
    // P~_i sits on hemisphere i at height r_i sin(alpha_i); this form is
    // exact, in particular 0 when c_i = 1.
    const double hP = pr.radius[ui] * std::sqrt((1.0 - c[i]) * (1.0 + c[i]));
    const bool idealP = hP < 1e-10 * pr.radius[ui];
    T.vertices[static_cast<size_t>(Trapezohedron::pv(i))] = {
        "P" + std::to_string(i + 1), Vec3{P.x, P.y, idealP ? 0.0 : hP}, idealP, false};
  }
  for (int i = 0; i < 4; ++i) {
    const size_t ui = static_cast<size_t>(i);
    const std::string name = "Q" + std::to_string(i + 1);
    if (T.vertices[static_cast<size_t>(Trapezohedron::pv(i))].ideal) {
      // c_i = 1: the contact point coincides with the ideal corner.
      T.vertices[static_cast<size_t>(Trapezohedron::qv(i))] = {
          name, T.vertices[static_cast<size_t>(Trapezohedron::pv(i))].pos, true, false};
      continue;
    }
    const Vec2 Q = pr.Q[ui];
    const double ha = height_on(pr, i, Q);
    const double hb = height_on(pr, (i + 1) % 4, Q);
    if (std::fabs(ha - hb) > 1e-7 * sc)
      throw NegativeHeight("lift: contact point off the second hemisphere");
    T.vertices[static_cast<size_t>(Trapezohedron::qv(i))] = {
        name, Vec3{Q.x, Q.y, 0.5 * (ha + hb)}, false, false};
  }

  for (int i = 0; i < 4; ++i) {
    const size_t ui = static_cast<size_t>(i);
    const int ip1 = (i + 1) % 4;
    const int im1 = (i + 3) % 4;
    T.faces[ui] = {"F" + std::to_string(i + 1),
                   {Trapezohedron::kApexO, Trapezohedron::qv(im1), Trapezohedron::pv(i),
                    Trapezohedron::qv(i)},
                   FaceCarrier::Hemisphere,
                   i,
                   (i + 1) % 2,
                   false};
    T.faces[ui + 4] = {"G" + std::to_string(i + 1),
                       {Trapezohedron::kApexInf, Trapezohedron::pv(i), Trapezohedron::qv(i),
                        Trapezohedron::pv(ip1)},
                       FaceCarrier::VerticalPlane,
                       i,
                       (i + 1) % 2,
                       false};
  }

  const double right = 0.5 * kPi;
  for (int i = 0; i < 4; ++i) {
    const int ip1 = (i + 1) % 4;
    const int im1 = (i + 3) % 4;
    const std::string n = std::to_string(i + 1);
    T.edges[static_cast<size_t>(i)] = {"L" + n,
                                       Trapezohedron::pv(i),
                                       Trapezohedron::qv(i),
                                       4 + i,
                                       i,
                                       EdgeKind::ConeLocus,
                                       i,
                                       std::acos(c[i]),
                                       0.0,
                                       false};
    T.edges[static_cast<size_t>(4 + i)] = {"OQ" + n,
                                           Trapezohedron::kApexO,
                                           Trapezohedron::qv(i),
                                           i,
                                           ip1,
                                           EdgeKind::ApexO,
                                           i,
                                           right,
                                           0.0,
                                           false};
    T.edges[static_cast<size_t>(8 + i)] = {"InfP" + n,
                                           Trapezohedron::kApexInf,
                                           Trapezohedron::pv(i),
                                           4 + im1,
                                           4 + i,
                                           EdgeKind::ApexInf,
                                           i,
                                           right,
                                           0.0,
                                           false};
    T.edges[static_cast<size_t>(12 + i)] = {"Q" + n + "P" + std::to_string(ip1 + 1),
                                            Trapezohedron::qv(i),
                                            Trapezohedron::pv(ip1),
                                            4 + i,
                                            ip1,
                                            EdgeKind::Lateral,
                                            i,
                                            right,
                                            0.0,
                                            false};
  }

  // A lateral contact at or beyond the far corner punches a hole through
  // the adjacent pair of faces.
  for (int i = 0; i < 4; ++i) {
    const size_t ui = static_cast<size_t>(i);
    const double u = segment_parameter(pr.Q[ui], pr.P[ui], pr.P[static_cast<size_t>((i + 1) % 4)]);
    if (u >= 1.0 - 1e-9) {
      T.edges[static_cast<size_t>(12 + i)].holed = true;
      T.faces[ui + 4].holed = true;
      T.faces[static_cast<size_t>((i + 1) % 4)].holed = true;
    }
  }

  measure_dihedrals(T);
  return T;
}

std::array<double, 16> measure_dihedrals(Trapezohedron& trap) {
  std::array<double, 16> out{};
  for (size_t k = 0; k < trap.edges.size(); ++k) {
    TrapEdge& e = trap.edges[k];
    double m = 0.0;
    switch (e.kind) {
      case EdgeKind::ConeLocus:
        m = plane_hemi_angle(trap.proj, e.index, e.index);
        break;
      case EdgeKind::ApexO:
        m = hemi_hemi_angle(trap.proj, e.index, (e.index + 1) % 4);
        break;
      case EdgeKind::ApexInf:
        m = corner_angle(trap.proj, e.index);
        break;
      case EdgeKind::Lateral:
        m = plane_hemi_angle(trap.proj, e.index, (e.index + 1) % 4);
        break;
    }
    e.measured = m;
    out[k] = m;
  }
  return out;
}

Trapezohedron build_solid(const ShapeParams& sp) {
  return lift(build_projection(sp), angles_of_shape(sp));
}

Trapezohedron build_holed(const ShapeParams& sp) { return build_solid(sp); }

}  // namespace trapezo
