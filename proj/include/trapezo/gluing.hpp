#ifndef TRAPEZO_GLUING_HPP
#define TRAPEZO_GLUING_HPP

#include "trapezo/geometry.hpp"

// Double-of-double assembly: four copies T_jk (j, k in {0, 1}) of one
// trapezohedron, mirror-glued pairwise across the checkerboard classes of
// faces. Copies with equal j are identified along every black face
// (color 1), copies with equal k along every white face (color 0), always
// by the identity correspondence on the shared combinatorial labels. The
// result is a cone structure on the thickened torus whose singular locus
// collects the cone edges.

namespace trapezo {

struct FacePairing {
  int copy_a = 0, face_a = 0;
  int copy_b = 0, face_b = 0;
};

enum class EdgeClassType { ConeLocus, CuspIncident, Regular };

inline const char* to_string(EdgeClassType t) {
  switch (t) {
    case EdgeClassType::ConeLocus: return "cone_locus";
    case EdgeClassType::CuspIncident: return "cusp_incident";
    case EdgeClassType::Regular: return "regular";
  }
  return "?";
}

struct CopyEdge {
  int copy = 0;
  int edge = 0;
};

/// One edge of the glued complex: an orbit of copy-edges under the face
/// pairings. The dihedral angles of the members add up to the total angle
/// around the edge, 2 alpha_i on the singular locus and 2 pi elsewhere.
struct EdgeClass {
  EdgeClassType type = EdgeClassType::Regular;
  int locus = -1;  ///< 0-based cone family index; -1 off the singular locus
  std::vector<CopyEdge> members;
  double total_angle = 0.0;
  bool degenerate = false;  ///< cone edge collapsed to a point
};

struct GluingComplex {
  Trapezohedron cell;  ///< shared geometry of all four copies
  std::array<std::string, 4> copy_names{};
  std::vector<FacePairing> pairings;  ///< 16 pairings, 2 per face
  std::vector<EdgeClass> classes;     ///< 20 classes covering 64 copy-edges
};

/// Assemble the complex. Copy index is 2j + k for T_jk. Edge classes are
/// computed by orbit closure (union-find) over the pairings. Throws
/// HoledInput when the cell has holed faces.
GluingComplex build_complex(const Trapezohedron& cell);

/// Per-class comparison of the accumulated angle against the cone-structure
/// target: 2 alpha_i around the i-th singular locus, 2 pi around every
/// other class.
struct ConeStructureReport {
  struct Row {
    EdgeClassType type = EdgeClassType::Regular;
    int locus = -1;
    int size = 0;
    double total = 0.0;
    double expected = 0.0;
    double error = 0.0;
    bool pass = false;
    bool degenerate = false;
  };
  std::vector<Row> rows;
  double tol = 0.0;
  bool all_pass = false;
};

ConeStructureReport verify_cone_structure(const GluingComplex& gc, const AngleQuad& a,
                                          double tol = 1e-8);

}  // namespace trapezo

#endif  // TRAPEZO_GLUING_HPP
