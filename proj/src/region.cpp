#include "trapezo/region.hpp"

#include <algorithm>
#include <cmath>

namespace trapezo {

namespace {

double phi1(double c1, double c2, double c3, double c4) {
  const double u = c1 * c2;
  const double v = c1 + c2;
  return u * (u + 1.0) * c3 * c4 - u * v * (c3 + c4) + v * v - u - 1.0;
}

// Derivative of g_i with respect to t.
double shape_factor_deriv(double ci, double t) { return 1.0 + ci * t / std::hypot(1.0, t); }

}  // namespace

CosQuad cos_quad(const AngleQuad& a) {
  return CosQuad(std::cos(a[0]), std::cos(a[1]), std::cos(a[2]), std::cos(a[3]));
}

AngleQuad angles_of(const CosQuad& c) {
  return AngleQuad(std::acos(c[0]), std::acos(c[1]), std::acos(c[2]), std::acos(c[3]));
}

double phi(int i, const CosQuad& c) { return phi_raw(i, c.c); }

double phi_raw(int i, const std::array<double, 4>& c) {
  if (i < 1 || i > 4) throw std::invalid_argument("phi: index must be 1..4");
  const int k = i - 1;
  return phi1(c[static_cast<size_t>(k)], c[static_cast<size_t>((k + 1) % 4)],
              c[static_cast<size_t>((k + 2) % 4)], c[static_cast<size_t>((k + 3) % 4)]);
}

std::array<double, 4> phi_all(const CosQuad& c) {
  std::array<double, 4> out{};
  for (int i = 1; i <= 4; ++i) out[static_cast<size_t>(i - 1)] = phi_raw(i, c.c);
  return out;
}

Classification classify(const CosQuad& c, double eps_b) {
  if (!(eps_b > 0.0)) throw std::invalid_argument("classify: band must be positive");
  const std::array<double, 4> ph = phi_all(c);
  std::array<bool, 4> ext{}, bnd{};
  for (int k = 0; k < 4; ++k) {
    if (c[k] + c[(k + 1) % 4] > 0.0) continue;
    const double f = ph[static_cast<size_t>(k)];
    if (f < -eps_b) continue;
    if (f > eps_b) {
      ext[static_cast<size_t>(k)] = true;
      continue;
    }
    const bool ordered = c[k] <= c[(k + 2) % 4] && c[(k + 1) % 4] <= c[(k + 3) % 4];
    if (ordered) {
      bnd[static_cast<size_t>(k)] = true;
    } else if (!(f < 0.0)) {
      ext[static_cast<size_t>(k)] = true;
    }
  }

  Classification out;
  if (std::any_of(ext.begin(), ext.end(), [](bool b) { return b; })) {
    out.kind = RegionKind::Exterior;
    out.edge = ext;
  } else if (std::any_of(bnd.begin(), bnd.end(), [](bool b) { return b; })) {
    out.kind = RegionKind::Boundary;
    out.edge = bnd;
  }
  return out;
}

double shape_factor(double ci, double t) {
  const double s = std::hypot(1.0, t);
  if (ci >= 0.0) return t + ci * s;
  // For ci < 0 the direct form cancels near the factor's zero; use
  // (t + ci s)(t - ci s) = (1 - ci^2) t^2 - ci^2 over the stable conjugate.
  return ((1.0 - ci) * (1.0 + ci) * t * t - ci * ci) / (t - ci * s);
}

double shape_product(const CosQuad& c, double t) {
  double p = 1.0;
  for (int k = 0; k < 4; ++k) p *= shape_factor(c[k], t);
  return p;
}

double shape_floor(const CosQuad& c) {
  double lo = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (c[k] < 0.0) lo = std::max(lo, -c[k] / std::sqrt((1.0 - c[k]) * (1.0 + c[k])));
  }
  return lo;
}

ShapeParams solve_shape(const CosQuad& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_shape: tol must be positive");
  const double floor_t = shape_floor(c);

  auto make = [&](double t) {
    std::array<double, 4> q{};
    double prod = 1.0;
    for (int k = 0; k < 4; ++k) {
      q[static_cast<size_t>(k)] = shape_factor(c[k], t);
      prod *= q[static_cast<size_t>(k)];
    }
    // Absorb the solver residual into the smallest ratio so the product is
    // exactly 1; there the relative change perturbs the recovered cosine
    // the least.
    const size_t jmin = static_cast<size_t>(
        std::min_element(q.begin(), q.end()) - q.begin());
    q[jmin] /= prod;
    return ShapeParams(q, t);
  };

  // g is 0 at floor_t > 0 and prod c_i <= 1 at floor_t = 0, with equality
  // only at c = (1,1,1,1); that corner's root is t = 0.
  if (std::fabs(shape_product(c, floor_t) - 1.0) <= std::min(tol, 1e-6))
    return make(floor_t);

  double lo = floor_t;
  double hi = std::max(floor_t, 1.0);
  int budget = 200;
  while (shape_product(c, hi) < 1.0) {
    hi *= 2.0;
    if (--budget == 0 || !std::isfinite(hi))
      throw NoConvergence("solve_shape: failed to bracket the root");
  }

  while (hi - lo > 1e-16 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (shape_product(c, mid) < 1.0 ? lo : hi) = mid;
  }

  // Newton polish from the bracket, keeping the best residual seen.
  double t = 0.5 * (lo + hi);
  double best_t = t;
  double best_r = std::fabs(shape_product(c, t) - 1.0);
  for (int it = 0; it < 60 && best_r > tol; ++it) {
    const double s = std::hypot(1.0, t);
    double prod = 1.0, dsum = 0.0;
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      const double f = shape_factor(c[k], t);
      if (f <= 0.0) {
        ok = false;
        break;
      }
      prod *= f;
      dsum += (1.0 + c[k] * t / s) / f;
    }
    if (!ok) break;
    const double r = prod - 1.0;
    if (std::fabs(r) < best_r) {
      best_r = std::fabs(r);
      best_t = t;
    }
    const double dg = prod * dsum;
    if (!(dg > 0.0)) break;
    double tn = t - r / dg;
    if (!(tn > floor_t)) tn = 0.5 * (t + floor_t);
    if (tn == t) break;
    t = tn;
  }
  if (!std::isfinite(best_r))
    throw NoConvergence("solve_shape: non-finite residual near t = " + std::to_string(t));
  // If tol is below what one ulp of t can resolve (the residual moves by
  // g'(t)*ulp(t) per representable step), best_t is already the optimum;
  // return it rather than failing on an unreachable target.
  return make(best_t);
}

CosQuad angles_of_shape(const ShapeParams& p) {
  const double s = std::hypot(1.0, p.t);
  std::array<double, 4> c{};
  for (int k = 0; k < 4; ++k) {
    double v = (p.q[static_cast<size_t>(k)] - p.t) / s;
    if (v > 1.0) {
      if (v > 1.0 + 1e-12) throw std::invalid_argument("angles_of_shape: cosine above 1");
      v = 1.0;
    }
    c[static_cast<size_t>(k)] = v;
  }
  return CosQuad(c);
}

std::array<bool, 4> realizable_edges(const ShapeParams& p) {
  std::array<bool, 4> out{};
  for (int k = 0; k < 4; ++k) {
    const double qa = p.q[static_cast<size_t>(k)];
    const double qb = p.q[static_cast<size_t>((k + 1) % 4)];
    out[static_cast<size_t>(k)] = (1.0 - qa * qb) * p.t < qa + qb;
  }
  return out;
}

bool in_universal_cube(const AngleQuad& a) {
  const double bound = universal_cube_angle();
  for (int k = 0; k < 4; ++k)
    if (!(a[k] < bound)) return false;
  return true;
}

std::optional<PathCrossing> trace_path(const AngleQuad& start, const AngleQuad& end,
                                       double tol, double eps_b) {
  if (!(tol > 0.0)) throw std::invalid_argument("trace_path: tol must be positive");

  auto at = [&](double s) {
    std::array<double, 4> a{};
    for (int k = 0; k < 4; ++k) a[static_cast<size_t>(k)] = (1.0 - s) * start[k] + s * end[k];
    return AngleQuad(a);
  };
  auto cls = [&](double s) { return classify(cos_quad(at(s)), eps_b); };

  if (cls(0.0).kind != RegionKind::Interior)
    throw InvalidStart("trace_path: start point is not Interior");

  const double step = std::max(tol, 1e-6);
  const size_t n = std::min<size_t>(2'000'000, static_cast<size_t>(std::ceil(1.0 / step)));
  const double h = 1.0 / static_cast<double>(n);

  size_t hit = 0;
  for (size_t k = 1; k <= n; ++k) {
    const double s = (k == n) ? 1.0 : static_cast<double>(k) * h;
    if (cls(s).kind != RegionKind::Interior) {
      hit = k;
      break;
    }
  }
  if (hit == 0) return std::nullopt;

  double lo = static_cast<double>(hit - 1) * h;
  double hi = (hit == n) ? 1.0 : static_cast<double>(hit) * h;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (cls(mid).kind == RegionKind::Interior ? lo : hi) = mid;
  }

  PathCrossing out;
  out.s_star = hi;
  out.edge = cls(hi).edge;
  const Classification post = cls(std::min(1.0, hi + std::max(h, 10.0 * tol)));
  if (post.kind != RegionKind::Interior) out.post_exterior = post.edge;
  return out;
}

CosQuad connectivity_path(const CosQuad& c, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("connectivity_path: s outside [0, 1]");
  int k = 0;
  if (c[0] <= c[2] && c[1] <= c[3])
    k = 0;
  else if (c[2] <= c[0] && c[3] <= c[1])
    k = 2;
  else if (c[3] <= c[1] && c[0] <= c[2])
    k = 3;
  else
    k = 1;
  const CosQuad r = rotate(c, k);

  // Lerp in the (1-u)*a + u*b form so u = 0 and u = 1 hit the endpoints
  // exactly.
  auto lerp = [](double u, double a, double b) { return (1.0 - u) * a + u * b; };
  std::array<double, 4> v{};
  if (s <= 0.5) {
    const double u = 2.0 * s;
    v = {r[0], r[1], lerp(u, r[2], r[0]), lerp(u, r[3], r[1])};
  } else {
    const double u = 2.0 * s - 1.0;
    v = {lerp(u, r[0], 1.0), lerp(u, r[1], 1.0), lerp(u, r[0], 1.0), lerp(u, r[1], 1.0)};
  }
  return rotate(CosQuad(v), 4 - k);
}

}  // namespace trapezo
