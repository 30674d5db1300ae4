#include "trapezo/gluing.hpp"

#include <algorithm>
#include <cmath>

namespace trapezo {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

EdgeClassType class_type(EdgeKind k) {
  switch (k) {
    case EdgeKind::ConeLocus: return EdgeClassType::ConeLocus;
    case EdgeKind::ApexO:
    case EdgeKind::ApexInf: return EdgeClassType::CuspIncident;
    case EdgeKind::Lateral: return EdgeClassType::Regular;
  }
  return EdgeClassType::Regular;
}

}  // namespace

GluingComplex build_complex(const Trapezohedron& cell) {
  if (cell.any_holed())
    throw HoledInput("build_complex: holed cells do not close up to a cone structure");

  GluingComplex gc;
  gc.cell = cell;
  gc.copy_names = {"T00", "T01", "T10", "T11"};

  // Black faces (color 1) are shared within a row (equal j), white faces
  // (color 0) within a column (equal k).
  for (int f = 0; f < 8; ++f) {
    if (cell.faces[static_cast<size_t>(f)].color == 1) {
      for (int j = 0; j < 2; ++j) gc.pairings.push_back({2 * j + 0, f, 2 * j + 1, f});
    } else {
      for (int k = 0; k < 2; ++k) gc.pairings.push_back({0 + k, f, 2 + k, f});
    }
  }

  UnionFind uf(64);
  auto id = [](int copy, int edge) { return copy * 16 + edge; };
  for (const FacePairing& fp : gc.pairings) {
    for (int e = 0; e < 16; ++e) {
      const TrapEdge& ed = cell.edges[static_cast<size_t>(e)];
      if (ed.face_a == fp.face_a || ed.face_b == fp.face_a)
        uf.unite(id(fp.copy_a, e), id(fp.copy_b, e));
    }
  }

  // Collect orbits, ordered by their smallest member id, i.e. cone classes
  // first, then the cusp-incident and lateral families.
  std::vector<int> root_class(64, -1);
  for (int e = 0; e < 16; ++e) {
    for (int copy = 0; copy < 4; ++copy) {
      const int r = uf.find(id(copy, e));
      if (root_class[static_cast<size_t>(r)] == -1) {
        root_class[static_cast<size_t>(r)] = static_cast<int>(gc.classes.size());
        gc.classes.emplace_back();
      }
      EdgeClass& cls = gc.classes[static_cast<size_t>(root_class[static_cast<size_t>(r)])];
      cls.members.push_back({copy, e});
    }
  }

  const double sc = cell.proj.scale();
  for (EdgeClass& cls : gc.classes) {
    std::sort(cls.members.begin(), cls.members.end(), [](CopyEdge a, CopyEdge b) {
      return a.edge != b.edge ? a.edge < b.edge : a.copy < b.copy;
    });
    const TrapEdge& rep = cell.edges[static_cast<size_t>(cls.members.front().edge)];
    cls.type = class_type(rep.kind);
    cls.locus = cls.type == EdgeClassType::ConeLocus ? rep.index : -1;
    cls.total_angle = 0.0;
    for (const CopyEdge& m : cls.members)
      cls.total_angle += cell.edges[static_cast<size_t>(m.edge)].measured;
    if (cls.type == EdgeClassType::ConeLocus) {
      const Vec3& a = cell.vertices[static_cast<size_t>(rep.v0)].pos;
      const Vec3& b = cell.vertices[static_cast<size_t>(rep.v1)].pos;
      cls.degenerate = dist(a, b) < 1e-9 * sc;
    }
  }
  return gc;
}

ConeStructureReport verify_cone_structure(const GluingComplex& gc, const AngleQuad& a,
                                          double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_cone_structure: tol must be positive");
  ConeStructureReport rep;
  rep.tol = tol;
  rep.all_pass = true;
  for (const EdgeClass& cls : gc.classes) {
    ConeStructureReport::Row row;
    row.type = cls.type;
    row.locus = cls.locus;
    row.size = static_cast<int>(cls.members.size());
    row.total = cls.total_angle;
    row.expected = cls.type == EdgeClassType::ConeLocus ? 2.0 * a[cls.locus] : 2.0 * kPi;
    row.error = std::fabs(row.total - row.expected);
    row.pass = row.error <= tol;
    row.degenerate = cls.degenerate;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace trapezo
