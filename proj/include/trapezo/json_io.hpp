#ifndef TRAPEZO_JSON_IO_HPP
#define TRAPEZO_JSON_IO_HPP

#include "json.hpp"
#include "trapezo/geometry.hpp"
#include "trapezo/gluing.hpp"
#include "trapezo/region.hpp"

// JSON views of the engine's value types. Indices are 1-based in all
// exported fields.

namespace trapezo {

nlohmann::json to_json(const Classification& cls);
nlohmann::json to_json(const ShapeParams& sp);
nlohmann::json to_json(const PathCrossing& pc);
nlohmann::json to_json(const Projection& pr);
nlohmann::json to_json(const Trapezohedron& trap);
nlohmann::json to_json(const GluingComplex& gc);
nlohmann::json to_json(const ConeStructureReport& rep);

}  // namespace trapezo

#endif  // TRAPEZO_JSON_IO_HPP
