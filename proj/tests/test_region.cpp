#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "trapezo/region.hpp"

using namespace trapezo;

namespace {

constexpr double kGolden = -0.6180339887498949;  // (1 - sqrt 5)/2
constexpr double kCubeCos = -0.41421356237309515;  // 1 - sqrt 2
constexpr double kCubeAngle = 1.9978749131873728;  // arccos(1 - sqrt 2)

std::vector<int> edge_list(const Classification& cls) { return cls.edges(); }

}  // namespace

TEST_SUITE("region") {
  TEST_CASE("cos_quad and angles_of invert each other") {
    const AngleQuad a(0.3, 1.1, 2.9, 0.0);
    const CosQuad c = cos_quad(a);
    const AngleQuad b = angles_of(c);
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(a[k] - b[k]) <= 1e-12);
    CHECK(cos_quad(AngleQuad(0, 0, 0, 0))[2] == 1.0);
  }

  TEST_CASE("domain guards") {
    CHECK_THROWS_AS(AngleQuad(0, 0, 0, kPi), std::invalid_argument);
    CHECK_THROWS_AS(AngleQuad(-0.1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CosQuad(-1.0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CosQuad(0, 1.5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify(CosQuad(0, 0, 0, 0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_shape(CosQuad(0, 0, 0, 0), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ShapeParams({1, 1, 1, 2}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ShapeParams({1, 1, 1, 1}, -0.5), std::invalid_argument);
    // t below the admissible floor: q_1 = 3 requires t >= (3 - 1/3)/2.
    CHECK_THROWS_AS(ShapeParams({3, 1, 1, 1.0 / 3.0}, 0.1), std::invalid_argument);
  }

  TEST_CASE("phi closed-form factorizations") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-0.99, 0.99);
    for (int it = 0; it < 500; ++it) {
      const double c1 = dist(rng), c2 = dist(rng);

      // Phi_1(c,c,1,1) = (c-1)^2 (c^2 - 2c - 1)
      const double f1 = phi_raw(1, {c1, c1, 1.0, 1.0});
      const double e1 = (c1 - 1.0) * (c1 - 1.0) * (c1 * c1 - 2.0 * c1 - 1.0);
      CHECK(std::fabs(f1 - e1) <= 1e-12);

      // Phi_1(c1,c2,c1,c2) = -(1 - c1 c2)(1 - c1^2)(1 - c2^2)
      const double f2 = phi_raw(1, {c1, c2, c1, c2});
      const double e2 = -(1.0 - c1 * c2) * (1.0 - c1 * c1) * (1.0 - c2 * c2);
      CHECK(std::fabs(f2 - e2) <= 1e-12);

      // Phi_1(c,c,c,1) = (c-1)^2 (c+1)(c^2 - c - 1)
      const double f3 = phi_raw(1, {c1, c1, c1, 1.0});
      const double e3 = (c1 - 1.0) * (c1 - 1.0) * (c1 + 1.0) * (c1 * c1 - c1 - 1.0);
      CHECK(std::fabs(f3 - e3) <= 1e-12);

      // Phi_1(c1,c2,-1,1) = -(1 - c1^2)(1 - c2^2), and symmetric in the pair
      const double f4 = phi_raw(1, {c1, c2, -1.0, 1.0});
      const double e4 = -(1.0 - c1 * c1) * (1.0 - c2 * c2);
      CHECK(std::fabs(f4 - e4) <= 1e-12);
      CHECK(std::fabs(phi_raw(1, {c1, c2, 1.0, -1.0}) - f4) <= 1e-12);
    }
    CHECK(phi_raw(1, {1, 1, 1, 1}) == 0.0);
    CHECK(phi(1, CosQuad(0, 0, 0, 0)) == -1.0);
    CHECK_THROWS_AS(phi(5, CosQuad(0, 0, 0, 0)), std::invalid_argument);
  }

  TEST_CASE("phi is cyclic") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      for (int i = 1; i <= 4; ++i)
        CHECK(std::fabs(phi(i, c) - phi(1, rotate(c, i - 1))) <= 1e-14);
    }
  }

  TEST_CASE("classify pinned points") {
    CHECK(classify(CosQuad(1, 1, 1, 1)).kind == RegionKind::Interior);
    CHECK(classify(CosQuad(0, 0, 0, 0)).kind == RegionKind::Interior);
    CHECK(classify(cos_quad(AngleQuad(0, 0, 0, 0))).kind == RegionKind::Interior);

    const Classification dbl = classify(CosQuad(kGolden, kGolden, kGolden, 1.0));
    CHECK(dbl.kind == RegionKind::Boundary);
    CHECK(edge_list(dbl) == std::vector<int>{1, 2});

    const Classification ext = classify(CosQuad(-0.5, -0.5, 1, 1));
    CHECK(ext.kind == RegionKind::Exterior);
    CHECK(edge_list(ext) == std::vector<int>{1});
    CHECK(std::fabs(phi(1, CosQuad(-0.5, -0.5, 1, 1)) - 0.5625) <= 1e-15);

    const Classification cube = classify(CosQuad(kCubeCos, kCubeCos, 1, 1));
    CHECK(cube.kind == RegionKind::Boundary);
    CHECK(edge_list(cube) == std::vector<int>{1});
  }

  TEST_CASE("classify band semantics near the double point") {
    // Nudging c3 below the double point breaks the ordering c1 <= c3; the
    // strict sign of Phi_1 (negative here) must then rule edge 1 fine while
    // edge 2 stays on its stratum.
    const double d = 1e-3;
    const Classification m =
        classify(CosQuad(kGolden, kGolden, kGolden - d, 1.0), 0.01);
    CHECK(m.kind == RegionKind::Boundary);
    CHECK(edge_list(m) == std::vector<int>{2});

    // From outside, with the ordering also broken, the positive sign turns
    // edge 1 Exterior even though Phi_1 is within the band.
    const double e = 1e-3;
    const Classification x =
        classify(CosQuad(kGolden - e, kGolden - e, kGolden - 2.0 * e, 1.0), 0.01);
    CHECK(x.kind == RegionKind::Exterior);
    CHECK(x.edge[0]);
  }

  TEST_CASE("solve_shape pinned roots") {
    const ShapeParams zero = solve_shape(CosQuad(0, 0, 0, 0));
    CHECK(std::fabs(zero.t - 1.0) <= 1e-12);
    for (double q : zero.q) CHECK(std::fabs(q - 1.0) <= 1e-12);

    const ShapeParams one = solve_shape(CosQuad(1, 1, 1, 1));
    CHECK(one.t == 0.0);
    for (double q : one.q) CHECK(std::fabs(q - 1.0) <= 1e-15);

    const ShapeParams gen = solve_shape(CosQuad(0.3, -0.2, 0.1, 0.4));
    CHECK(std::fabs(gen.t - 0.8532110103712189) <= 1e-10);
    CHECK(std::fabs(gen.q[0] - 1.247567717604253) <= 1e-10);
    CHECK(std::fabs(gen.q[1] - 0.5903065388825296) <= 1e-10);
    CHECK(std::fabs(gen.q[2] - 0.9846632461155636) <= 1e-10);
    CHECK(std::fabs(gen.q[3] - 1.3790199533485976) <= 1e-10);

    const ShapeParams ext = solve_shape(CosQuad(-0.5, -0.5, 1, 1));
    CHECK(std::fabs(ext.t - 1.1338934190276815) <= 1e-10);
    CHECK(std::fabs(ext.q[0] - 0.3779644730092271) <= 1e-10);
    CHECK(std::fabs(ext.q[2] - std::sqrt(7.0)) <= 1e-10);

    const ShapeParams dbl = solve_shape(CosQuad(kGolden, kGolden, kGolden, 1.0));
    CHECK(std::fabs(dbl.t - 2.0) <= 1e-10);
    CHECK(std::fabs(dbl.q[0] - 0.6180339887498949) <= 1e-10);
    CHECK(std::fabs(dbl.q[3] - (std::sqrt(5.0) + 2.0)) <= 1e-9);
  }

  TEST_CASE("solve_shape against the scan oracle") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 300; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      const ShapeParams sp = solve_shape(c);
      const double t_ref = oracle::solve_t_scan(c);
      CHECK(std::fabs(sp.t - t_ref) <= 1e-9 * (1.0 + t_ref));

      double prod = 1.0;
      for (double q : sp.q) prod *= q;
      CHECK(std::fabs(prod - 1.0) <= 1e-12);

      const CosQuad back = angles_of_shape(sp);
      for (int k = 0; k < 4; ++k) CHECK(std::fabs(back[k] - c[k]) <= 1e-10);
    }
  }

  TEST_CASE("g is monotone past the floor") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> step(0.01, 0.8);
    for (int it = 0; it < 200; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      double t = shape_floor(c);
      double prev = shape_product(c, t);
      for (int j = 0; j < 12; ++j) {
        t += step(rng);
        const double cur = shape_product(c, t);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }

  TEST_CASE("stable factor matches the plain form") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> tv(0.0, 50.0);
    for (int it = 0; it < 500; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      const double t = std::max(shape_floor(c), tv(rng));
      const double a = shape_product(c, t);
      const double b = oracle::g_plain(c, t);
      CHECK(std::fabs(a - b) <= 1e-9 * (1.0 + std::fabs(b)));
    }
  }

  TEST_CASE("tolerances below machine resolution return the best root") {
    // For a generic point the root is shallow and the best representable
    // residual is a few ulps even though 1e-30 itself is unreachable.
    const CosQuad c(0.3, -0.2, 0.1, 0.4);
    const ShapeParams sp = solve_shape(c, 1e-30);
    CHECK(std::fabs(shape_product(c, sp.t) - 1.0) <= 1e-13);

    // A steep root: c3 near -1 pushes the floor to t ~ 21.7 where one ulp
    // of t moves the residual by ~2e-13, so the default target cannot be
    // met literally; the solver must still return the optimal root.
    const CosQuad steep(0.088198557554727386, 0.78401540215514676,
                        -0.99893655644920432, 0.46477228197260667);
    const ShapeParams sps = solve_shape(steep);
    CHECK(std::fabs(shape_product(steep, sps.t) - 1.0) <= 1e-11);
    double prod = 1.0;
    for (double q : sps.q) prod *= q;
    CHECK(std::fabs(prod - 1.0) <= 1e-15);
    const CosQuad back = angles_of_shape(sps);
    for (int k = 0; k < 4; ++k) CHECK(std::fabs(back[k] - steep[k]) <= 1e-10);
  }

  TEST_CASE("realizable_edges pinned") {
    const std::array<bool, 4> all = realizable_edges(ShapeParams({1, 1, 1, 1}, 1.0));
    for (bool b : all) CHECK(b);

    const ShapeParams ext = solve_shape(CosQuad(-0.5, -0.5, 1, 1));
    const std::array<bool, 4> f = realizable_edges(ext);
    CHECK_FALSE(f[0]);
    CHECK(f[1]);
    CHECK(f[2]);
    CHECK(f[3]);

    const ShapeParams dbl = solve_shape(CosQuad(kGolden, kGolden, kGolden, 1.0));
    for (int k : {0, 1}) {
      const double qa = dbl.q[static_cast<size_t>(k)], qb = dbl.q[static_cast<size_t>(k + 1)];
      CHECK(std::fabs((1.0 - qa * qb) * dbl.t - (qa + qb)) <= 1e-9);
    }
    CHECK(realizable_edges(dbl)[2]);
    CHECK(realizable_edges(dbl)[3]);
  }

  TEST_CASE("dual-method agreement away from the zero loci") {
    std::mt19937_64 rng(16);
    int interior = 0, exterior = 0;
    for (int it = 0; it < 2000; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      const std::array<double, 4> ph = phi_all(c);
      bool near = false;
      for (double f : ph) near = near || std::fabs(f) <= 1e-6;
      if (near) continue;

      const Classification cls = classify(c);
      const std::array<bool, 4> flags = realizable_edges(solve_shape(c));
      const bool all_ok = flags[0] && flags[1] && flags[2] && flags[3];
      if (cls.kind == RegionKind::Interior) {
        ++interior;
        CHECK(all_ok);
      } else {
        ++exterior;
        REQUIRE(cls.kind == RegionKind::Exterior);
        for (int k = 0; k < 4; ++k) CHECK(cls.edge[static_cast<size_t>(k)] == !flags[static_cast<size_t>(k)]);
      }
    }
    CHECK(interior > 100);
    CHECK(exterior > 100);
  }

  TEST_CASE("cyclic symmetry of classify and solve_shape") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
      const CosQuad c = oracle::random_cos(rng);
      const Classification base = classify(c);
      const ShapeParams sp = solve_shape(c);
      for (int k = 1; k < 4; ++k) {
        const CosQuad r = rotate(c, k);
        const Classification rc = classify(r);
        CHECK(rc.kind == base.kind);
        for (int j = 0; j < 4; ++j)
          CHECK(rc.edge[static_cast<size_t>(j)] == base.edge[static_cast<size_t>((j + k) % 4)]);
        const ShapeParams rs = solve_shape(r);
        CHECK(std::fabs(rs.t - sp.t) <= 1e-11 * (1.0 + sp.t));
        for (int j = 0; j < 4; ++j)
          CHECK(std::fabs(rs.q[static_cast<size_t>(j)] - sp.q[static_cast<size_t>((j + k) % 4)]) <= 1e-9);
      }
    }
  }

  TEST_CASE("abab diagonals are interior") {
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> dist(-0.999, 0.999);
    for (int it = 0; it < 500; ++it) {
      const double a = dist(rng), b = dist(rng);
      CHECK(classify(CosQuad(a, b, a, b)).kind == RegionKind::Interior);
    }
  }

  TEST_CASE("in_universal_cube") {
    CHECK(in_universal_cube(AngleQuad(0, 0, 0, 0)));
    CHECK(in_universal_cube(AngleQuad(kPi / 2, kPi / 2, kPi / 2, kPi / 2)));
    CHECK(classify(cos_quad(AngleQuad(kPi / 2, kPi / 2, kPi / 2, kPi / 2))).kind ==
          RegionKind::Interior);

    const double b = universal_cube_angle();
    CHECK(std::fabs(b - kCubeAngle) <= 1e-12);
    const AngleQuad edge(b, b, 0, 0);
    CHECK_FALSE(in_universal_cube(edge));
    const Classification cls = classify(cos_quad(edge));
    CHECK(cls.kind == RegionKind::Boundary);
    CHECK(edge_list(cls) == std::vector<int>{1});

    // Sharpness: anything strictly inside the cube is Interior.
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> dist(0.0, b - 1e-9);
    for (int it = 0; it < 500; ++it) {
      const AngleQuad a(dist(rng), dist(rng), dist(rng), dist(rng));
      REQUIRE(in_universal_cube(a));
      CHECK(classify(cos_quad(a)).kind == RegionKind::Interior);
    }
  }

  TEST_CASE("trace_path") {
    CHECK_FALSE(trace_path(AngleQuad(0, 0, 0, 0), AngleQuad(0, 0, 0, 0), 1e-7).has_value());

    const auto hit = trace_path(AngleQuad(0, 0, 0, 0), AngleQuad(2.1, 2.1, 0, 0), 1e-7);
    REQUIRE(hit.has_value());
    CHECK(std::fabs(2.1 * hit->s_star - kCubeAngle) <= 1e-6);
    CHECK(hit->edges() == std::vector<int>{1});
    CHECK(hit->post_edges() == std::vector<int>{1});

    // Fully interior segment into the abab diagonal.
    CHECK_FALSE(
        trace_path(AngleQuad(0.2, 0.4, 0.2, 0.4), AngleQuad(1.0, 2.2, 1.0, 2.2), 1e-6).has_value());

    // (2.8, 2.8, 0.1, 0.1) is Exterior (equal-quadruple starts never are:
    // Phi_1(c,c,c,c) = (c^2 - 1)^3 <= 0).
    CHECK_THROWS_AS(
        trace_path(AngleQuad(2.8, 2.8, 0.1, 0.1), AngleQuad(0, 0, 0, 0), 1e-7), InvalidStart);
    CHECK_THROWS_AS(
        trace_path(AngleQuad(0, 0, 0, 0), AngleQuad(1, 1, 1, 1), 0.0), std::invalid_argument);
  }

  TEST_CASE("trace_path from a uniform start above the max") {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> dist(0.5, 1.8);
    for (int it = 0; it < 20; ++it) {
      const AngleQuad end(dist(rng) + 1.2, dist(rng), dist(rng), dist(rng));
      double mx = 0.0;
      for (int k = 0; k < 4; ++k) mx = std::max(mx, end[k]);
      const double a = std::min(mx + 0.01, 3.1);
      const AngleQuad start(a, a, a, a);
      if (classify(cos_quad(start)).kind != RegionKind::Interior) continue;
      const auto pc = trace_path(start, end, 1e-6);
      if (!pc.has_value()) continue;  // end may still be realizable
      const size_t n = pc->edges().size();
      CHECK(n >= 1);
      CHECK(n <= 2);
    }
  }

  TEST_CASE("connectivity_path endpoints and membership") {
    std::mt19937_64 rng(21);
    auto is_interior = [](const CosQuad& c) {
      return classify(c).kind == RegionKind::Interior;
    };
    for (int it = 0; it < 30; ++it) {
      const CosQuad c = oracle::random_interior(rng, is_interior);
      const CosQuad at0 = connectivity_path(c, 0.0);
      const CosQuad at1 = connectivity_path(c, 1.0);
      for (int k = 0; k < 4; ++k) {
        CHECK(at0[k] == c[k]);
        CHECK(at1[k] == 1.0);
      }
      const CosQuad lo = connectivity_path(c, 0.5 - 1e-12);
      const CosQuad hi = connectivity_path(c, 0.5 + 1e-12);
      for (int k = 0; k < 4; ++k) CHECK(std::fabs(lo[k] - hi[k]) <= 1e-9);

      for (int j = 0; j <= 200; ++j)
        CHECK(classify(connectivity_path(c, j / 200.0)).kind == RegionKind::Interior);
    }
    CHECK_THROWS_AS(connectivity_path(CosQuad(0, 0, 0, 0), 1.5), std::invalid_argument);
  }
}
