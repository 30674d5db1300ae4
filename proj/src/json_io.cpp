#include "trapezo/json_io.hpp"

namespace trapezo {

using nlohmann::json;

namespace {

json vec2_json(Vec2 v) { return json::array({v.x, v.y}); }

}  // namespace

json to_json(const Classification& cls) {
  return json{{"kind", to_string(cls.kind)}, {"edges", cls.edges()}};
}

json to_json(const ShapeParams& sp) {
  return json{{"q", sp.q}, {"t", sp.t}};
}

json to_json(const PathCrossing& pc) {
  return json{{"s_star", pc.s_star},
              {"edges", pc.edges()},
              {"post_exterior", pc.post_edges()}};
}

json to_json(const Projection& pr) {
  json P = json::array(), R = json::array(), S = json::array(), Q = json::array();
  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    P.push_back(vec2_json(pr.P[uk]));
    R.push_back(vec2_json(pr.R[uk]));
    S.push_back(vec2_json(pr.S[uk]));
    Q.push_back(vec2_json(pr.Q[uk]));
  }
  return json{{"p", pr.p}, {"t", pr.t},     {"P", P}, {"R", R},
              {"radius", pr.radius}, {"S", S}, {"Q", Q}};
}

json to_json(const Trapezohedron& trap) {
  json vertices = json::array();
  for (const TrapVertex& v : trap.vertices) {
    json jv{{"name", v.name}, {"ideal", v.ideal}, {"at_infinity", v.at_infinity}};
    if (!v.at_infinity) jv["pos"] = json::array({v.pos.x, v.pos.y, v.pos.h});
    vertices.push_back(jv);
  }
  json faces = json::array();
  for (const TrapFace& f : trap.faces) {
    json cycle = json::array();
    for (int v : f.cycle) cycle.push_back(trap.vertices[static_cast<size_t>(v)].name);
    faces.push_back(json{{"name", f.name},
                         {"cycle", cycle},
                         {"carrier", f.carrier == FaceCarrier::Hemisphere ? "hemisphere" : "vertical_plane"},
                         {"carrier_index", f.carrier_index + 1},
                         {"color", f.color},
                         {"holed", f.holed}});
  }
  json edges = json::array();
  for (const TrapEdge& e : trap.edges) {
    edges.push_back(json{{"name", e.name},
                         {"vertices", json::array({trap.vertices[static_cast<size_t>(e.v0)].name,
                                                   trap.vertices[static_cast<size_t>(e.v1)].name})},
                         {"faces", json::array({trap.faces[static_cast<size_t>(e.face_a)].name,
                                                trap.faces[static_cast<size_t>(e.face_b)].name})},
                         {"kind", to_string(e.kind)},
                         {"index", e.index + 1},
                         {"expected", e.expected},
                         {"measured", e.measured},
                         {"holed", e.holed}});
  }
  return json{{"c", trap.c.c},
              {"projection", to_json(trap.proj)},
              {"vertices", vertices},
              {"faces", faces},
              {"edges", edges}};
}

json to_json(const GluingComplex& gc) {
  json pairings = json::array();
  for (const FacePairing& fp : gc.pairings) {
    pairings.push_back(json{
        {"a", json::array({gc.copy_names[static_cast<size_t>(fp.copy_a)],
                           gc.cell.faces[static_cast<size_t>(fp.face_a)].name})},
        {"b", json::array({gc.copy_names[static_cast<size_t>(fp.copy_b)],
                           gc.cell.faces[static_cast<size_t>(fp.face_b)].name})}});
  }
  json classes = json::array();
  for (const EdgeClass& cls : gc.classes) {
    json members = json::array();
    for (const CopyEdge& m : cls.members)
      members.push_back(json::array({gc.copy_names[static_cast<size_t>(m.copy)],
                                     gc.cell.edges[static_cast<size_t>(m.edge)].name}));
    json jc{{"type", to_string(cls.type)},
            {"members", members},
            {"total_angle", cls.total_angle},
            {"degenerate", cls.degenerate}};
    if (cls.locus >= 0) jc["locus"] = cls.locus + 1;
    classes.push_back(jc);
  }
  return json{{"copies", gc.copy_names}, {"pairings", pairings}, {"classes", classes}};
}

json to_json(const ConeStructureReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json jr{{"type", to_string(r.type)},
            {"size", r.size},
            {"total", r.total},
            {"expected", r.expected},
            {"error", r.error},
            {"pass", r.pass},
            {"degenerate", r.degenerate}};
    if (r.locus >= 0) jr["locus"] = r.locus + 1;
    rows.push_back(jr);
  }
  return json{{"tol", rep.tol}, {"all_pass", rep.all_pass}, {"rows", rows}};
}

}  // namespace trapezo
