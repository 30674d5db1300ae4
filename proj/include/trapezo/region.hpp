#ifndef TRAPEZO_REGION_HPP
#define TRAPEZO_REGION_HPP

#include <optional>

#include "trapezo/types.hpp"

// Region membership, the angle -> shape solve, and path tracing.
//
// A quadruple of cosines c is realizable (with all sixteen prescribed
// dihedral angles) exactly when for every i either Phi_i(c) < 0 or
// c_i + c_{i+1} > 0, where Phi_i is the quartic obtained from
//
//   Phi_1(c) = c1 c2 (c1 c2 + 1) c3 c4 - c1 c2 (c1 + c2)(c3 + c4)
//              + (c1 + c2)^2 - c1 c2 - 1
//
// by cyclic index shift. The i-th boundary stratum is cut out by
// Phi_i = 0, c_i + c_{i+1} <= 0, c_i <= c_{i+2} and c_{i+1} <= c_{i+3}.

namespace trapezo {

/// Componentwise cosine of the four angles.
CosQuad cos_quad(const AngleQuad& a);

/// Componentwise arccos; inverse of cos_quad.
AngleQuad angles_of(const CosQuad& c);

/// The region polynomial Phi_i, i in 1..4.
double phi(int i, const CosQuad& c);

/// Phi_i as a bare polynomial on R^4, without the CosQuad domain guard.
double phi_raw(int i, const std::array<double, 4>& c);

/// All four values Phi_1..Phi_4. Entry k holds Phi_{k+1}.
std::array<double, 4> phi_all(const CosQuad& c);

/// Classify c against the region, treating |Phi_i| <= eps_b as "on the
/// zero set". Per edge i with c_i + c_{i+1} <= 0:
///   Phi_i < -eps_b           inside;
///   Phi_i > +eps_b           Exterior, edge i marked;
///   |Phi_i| <= eps_b         Boundary with edge i marked when the stratum
///                            orderings c_i <= c_{i+2}, c_{i+1} <= c_{i+3}
///                            hold, otherwise the strict sign of Phi_i
///                            decides.
/// Exterior wins over Boundary; marked edges accumulate per kind.
Classification classify(const CosQuad& c, double eps_b = kDefaultBand);

/// g_i(t) = t + c_i sqrt(1 + t^2), evaluated in a cancellation-free form
/// for c_i < 0. Strictly increasing in t on [floor, inf).
double shape_factor(double ci, double t);

/// g(t) = prod_i g_i(t).
double shape_product(const CosQuad& c, double t);

/// Smallest admissible t: max over {-c_i / sqrt(1 - c_i^2) : c_i < 0},
/// or 0 when every c_i >= 0. All factors are nonnegative from here on.
double shape_floor(const CosQuad& c);

/// Solve g(t) = 1 for the unique root t0 >= shape_floor(c) and return
/// q_i = g_i(t0) together with t0. Iteration stops once |g(t0) - 1| <= tol;
/// when tol is finer than one ulp of t can resolve (near a steep root the
/// residual moves by g'(t0)*ulp(t0) per representable step), the best
/// floating-point root is returned instead. NoConvergence signals a failure
/// to bracket the root, i.e. a numerical breakdown, never a missing
/// solution. The returned q are normalized to prod q_i = 1 exactly.
ShapeParams solve_shape(const CosQuad& c, double tol = kDefaultSolveTol);

/// Recover the cosines from shape coordinates: c_i = (q_i - t)/sqrt(1+t^2).
/// Round-trip inverse of solve_shape up to solver tolerance.
CosQuad angles_of_shape(const ShapeParams& p);

/// Edge-by-edge realizability of the lateral contacts: entry k is true iff
/// (1 - q_k q_{k+1}) t < q_k + q_{k+1}. All true exactly on the region's
/// interior-or-boundary minus the holed strata.
std::array<bool, 4> realizable_edges(const ShapeParams& p);

/// True iff every angle is strictly below arccos(1 - sqrt(2)). Inside this
/// cube every quadruple is realizable, and the bound is sharp.
bool in_universal_cube(const AngleQuad& a);

/// First exit of a straight angle-space segment from the region interior.
struct PathCrossing {
  double s_star = 0.0;                            ///< parameter of the exit, in (0, 1]
  std::array<bool, 4> edge{};                     ///< strata met at the crossing
  std::array<bool, 4> post_exterior{};            ///< edges violated just past it

  std::vector<int> edges() const {
    std::vector<int> out;
    for (int k = 0; k < 4; ++k)
      if (edge[static_cast<size_t>(k)]) out.push_back(k + 1);
    return out;
  }
  std::vector<int> post_edges() const {
    std::vector<int> out;
    for (int k = 0; k < 4; ++k)
      if (post_exterior[static_cast<size_t>(k)]) out.push_back(k + 1);
    return out;
  }
};

/// Walk the segment s -> (1-s) start + s end, s in [0, 1], and locate the
/// smallest s* (within tol, by bisection) where classify leaves Interior.
/// Returns nullopt when the whole segment stays Interior. The initial scan
/// uses steps of max(tol, 1e-6) capped at 2e6 samples, so non-Interior
/// excursions narrower than the scan step can be missed. Throws
/// InvalidStart if the start point itself is not Interior.
std::optional<PathCrossing> trace_path(const AngleQuad& start, const AngleQuad& end,
                                       double tol, double eps_b = kDefaultBand);

/// Point at parameter s in [0, 1] of a two-leg polygonal path from c to
/// (1,1,1,1) that stays in the region whenever c is Interior: after a
/// cyclic rotation arranging c_1 <= c_3 and c_2 <= c_4, the first leg
/// raises (c_3, c_4) linearly onto the diagonal (c_1, c_2, c_1, c_2), the
/// second raises everything linearly to 1. The rotation is undone before
/// returning.
CosQuad connectivity_path(const CosQuad& c, double s);

}  // namespace trapezo

#endif  // TRAPEZO_REGION_HPP
