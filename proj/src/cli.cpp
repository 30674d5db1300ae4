#include "trapezo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "trapezo/json_io.hpp"
#include "trapezo/svg.hpp"

namespace trapezo::cli {

namespace {

const char* kUsage = R"(usage: trapezo <subcommand> [flags]

subcommands
  classify   region membership of one angle quadruple
  solve      angle -> shape parameters (q1..q4, t)
  geom       planar projection + upper half-space coordinates
  trace      first region exit along a straight angle path
  sample     classification map over a 2D cosine slice
  glue       double-of-double assembly and cone angle sums

input (exactly one)
  --angles a1 a2 a3 a4    dihedral angles in radians (see --deg)
  --cos c1 c2 c3 c4       cosines, each in (-1, 1]
  --params q1 q2 q3 q4 t  shape parameters

flags
  --to x1 x2 x3 x4   trace endpoint, same units as the input mode
  --tol X            solver residual target (trace: bisection tolerance)
  --band X           boundary band half-width (default 1e-9)
  --holed            geom: allow failed contacts, emit holed flags
  --deg              angle inputs/outputs in degrees
  --format F         json | csv | svg (default json; sample default csv)
  --out PATH         write the payload to a file instead of stdout
  --grid N           sample resolution per axis (default 101)
  --fix i=v          sample: pin cosine i to v (give twice)

exit codes: 0 Interior/success, 1 usage error, 2 Boundary, 3 Exterior
)";

struct RunConfig {
  std::string subcommand;
  enum class Mode { None, Angles, Cos, Params } mode = Mode::None;
  std::array<double, 4> vals{};
  double t = 0.0;
  bool has_to = false;
  std::array<double, 4> to_vals{};
  bool tol_set = false;
  double tol = 0.0;
  double band = kDefaultBand;
  bool holed = false;
  bool deg = false;
  std::string format;
  std::string out_path;
  int grid = 101;
  std::vector<std::pair<int, double>> fixes;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s) {
  const char* b = s.c_str();
  char* e = nullptr;
  const double v = std::strtod(b, &e);
  if (e == b || *e != '\0' || !std::isfinite(v))
    throw UsageError("not a finite number: '" + s + "'");
  return v;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.subcommand = args.front();

  size_t i = 1;
  auto take = [&](const std::string& flag) {
    if (i >= args.size()) throw UsageError(flag + " expects a value");
    return args[i++];
  };
  auto take_reals = [&](const std::string& flag, std::array<double, 4>& out) {
    for (int k = 0; k < 4; ++k) out[static_cast<size_t>(k)] = parse_real(take(flag));
  };

  while (i < args.size()) {
    const std::string a = args[i++];
    if (a == "--angles") {
      if (cfg.mode != RunConfig::Mode::None) throw UsageError("multiple input modes given");
      cfg.mode = RunConfig::Mode::Angles;
      take_reals(a, cfg.vals);
    } else if (a == "--cos") {
      if (cfg.mode != RunConfig::Mode::None) throw UsageError("multiple input modes given");
      cfg.mode = RunConfig::Mode::Cos;
      take_reals(a, cfg.vals);
    } else if (a == "--params") {
      if (cfg.mode != RunConfig::Mode::None) throw UsageError("multiple input modes given");
      cfg.mode = RunConfig::Mode::Params;
      take_reals(a, cfg.vals);
      cfg.t = parse_real(take(a));
    } else if (a == "--to") {
      cfg.has_to = true;
      take_reals(a, cfg.to_vals);
    } else if (a == "--tol") {
      cfg.tol = parse_real(take(a));
      if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
      cfg.tol_set = true;
    } else if (a == "--band") {
      cfg.band = parse_real(take(a));
      if (!(cfg.band > 0.0)) throw UsageError("--band must be positive");
    } else if (a == "--holed") {
      cfg.holed = true;
    } else if (a == "--deg") {
      cfg.deg = true;
    } else if (a == "--format") {
      cfg.format = take(a);
      if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "svg")
        throw UsageError("--format must be json, csv or svg");
    } else if (a == "--out") {
      cfg.out_path = take(a);
    } else if (a == "--grid") {
      const double g = parse_real(take(a));
      cfg.grid = static_cast<int>(g);
      if (cfg.grid < 1 || g != cfg.grid) throw UsageError("--grid must be a positive integer");
    } else if (a == "--fix") {
      const std::string kv = take(a);
      const size_t eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--fix expects i=v");
      const double idx = parse_real(kv.substr(0, eq));
      const int ii = static_cast<int>(idx);
      if (ii < 1 || ii > 4 || idx != ii) throw UsageError("--fix index must be 1..4");
      cfg.fixes.emplace_back(ii, parse_real(kv.substr(eq + 1)));
    } else {
      throw UsageError("unknown flag '" + a + "'");
    }
  }
  return cfg;
}

double solver_tol(const RunConfig& cfg) {
  if (cfg.tol_set) return cfg.tol;
  if (const char* env = std::getenv("TRAPEZO_TOL")) {
    try {
      const double v = parse_real(env);
      if (v > 0.0) return v;
    } catch (const UsageError&) {
    }
    throw UsageError("TRAPEZO_TOL is not a positive number");
  }
  return kDefaultSolveTol;
}

AngleQuad to_angles(const RunConfig& cfg, const std::array<double, 4>& raw) {
  std::array<double, 4> a = raw;
  if (cfg.deg)
    for (double& x : a) x *= kPi / 180.0;
  try {
    return AngleQuad(a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// The cosine quadruple named by the input flags.
CosQuad input_cos(const RunConfig& cfg) {
  switch (cfg.mode) {
    case RunConfig::Mode::Angles:
      return cos_quad(to_angles(cfg, cfg.vals));
    case RunConfig::Mode::Cos:
      try {
        return CosQuad(cfg.vals);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    case RunConfig::Mode::Params:
      try {
        return angles_of_shape(ShapeParams(cfg.vals, cfg.t));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    case RunConfig::Mode::None:
      break;
  }
  throw UsageError("give one of --angles, --cos, --params");
}

/// Shape parameters: direct in params mode, solved otherwise.
ShapeParams input_shape(const RunConfig& cfg) {
  if (cfg.mode == RunConfig::Mode::Params) {
    try {
      return ShapeParams(cfg.vals, cfg.t);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return solve_shape(input_cos(cfg), solver_tol(cfg));
}

int emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw UsageError("cannot open output file '" + cfg.out_path + "'");
  f << payload;
  return 0;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw UsageError("--format " + cfg.format + " is not supported by " + cfg.subcommand);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const CosQuad c = input_cos(cfg);
  const Classification cls = classify(c, cfg.band);

  nlohmann::json j = to_json(cls);
  j["c"] = c.c;
  j["phi"] = phi_all(c);
  emit(cfg, j.dump(2) + "\n", out);

  switch (cls.kind) {
    case RegionKind::Interior: return 0;
    case RegionKind::Boundary: return 2;
    case RegionKind::Exterior: return 3;
  }
  return 0;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const CosQuad c = input_cos(cfg);
  const ShapeParams sp = solve_shape(c, solver_tol(cfg));

  nlohmann::json j = to_json(sp);
  j["residual"] = std::fabs(shape_product(c, sp.t) - 1.0);
  return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_geom(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "svg"});
  const ShapeParams sp = input_shape(cfg);
  const Trapezohedron trap = cfg.holed ? build_holed(sp) : build_solid(sp);
  if (trap.any_holed() && !cfg.holed)
    throw UsageError("shape is not realizable; rerun with --holed for the holed variant");

  if (cfg.format == "svg") return emit(cfg, projection_svg(trap), out);
  nlohmann::json j = to_json(trap);
  j["shape"] = to_json(sp);
  return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (!cfg.has_to) throw UsageError("trace needs --to for the path endpoint");
  if (cfg.mode == RunConfig::Mode::Params)
    throw UsageError("trace takes --angles or --cos input");

  AngleQuad start(0.0, 0.0, 0.0, 0.0), end(0.0, 0.0, 0.0, 0.0);
  if (cfg.mode == RunConfig::Mode::Angles) {
    start = to_angles(cfg, cfg.vals);
    end = to_angles(cfg, cfg.to_vals);
  } else {
    try {
      start = angles_of(CosQuad(cfg.vals));
      end = angles_of(CosQuad(cfg.to_vals));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  const double tol = cfg.tol_set ? cfg.tol : 1e-7;
  const std::optional<PathCrossing> pc = trace_path(start, end, tol, cfg.band);

  nlohmann::json j;
  if (pc) {
    j = to_json(*pc);
    j["crossing"] = true;
  } else {
    j = {{"crossing", false}};
  }
  return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"csv", "svg", "json"});
  if (cfg.mode != RunConfig::Mode::None)
    throw UsageError("sample takes --fix and --grid, not a point input");
  if (cfg.fixes.size() != 2) throw UsageError("sample needs exactly two --fix i=v");
  const int f0 = cfg.fixes[0].first, f1 = cfg.fixes[1].first;
  if (f0 == f1) throw UsageError("--fix indices must differ");
  for (const auto& [idx, v] : cfg.fixes)
    if (!(v > -1.0 && v <= 1.0))
      throw UsageError("--fix " + std::to_string(idx) + ": value outside (-1, 1]");

  std::array<int, 2> free_axes{};
  int nfree = 0;
  for (int k = 1; k <= 4; ++k)
    if (k != f0 && k != f1) free_axes[static_cast<size_t>(nfree++)] = k;

  const int n = cfg.grid;
  auto coord = [&](int k) { return -1.0 + 2.0 * (k + 0.5) / n; };
  auto point = [&](double x, double y) {
    std::array<double, 4> c{};
    c[static_cast<size_t>(cfg.fixes[0].first - 1)] = cfg.fixes[0].second;
    c[static_cast<size_t>(cfg.fixes[1].first - 1)] = cfg.fixes[1].second;
    c[static_cast<size_t>(free_axes[0] - 1)] = x;
    c[static_cast<size_t>(free_axes[1] - 1)] = y;
    return CosQuad(c);
  };

  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  std::vector<RegionKind> cells;
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  if (fmt == "svg") cells.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  if (fmt == "csv") csv << std::setprecision(10) << "c1,c2,kind,edges\n";

  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double x = coord(i1), y = coord(i2);
      const Classification cls = classify(point(x, y), cfg.band);
      if (fmt == "svg") {
        cells[static_cast<size_t>(i2) * static_cast<size_t>(n) + static_cast<size_t>(i1)] =
            cls.kind;
      } else if (fmt == "csv") {
        csv << x << "," << y << "," << to_string(cls.kind) << ",";
        const std::vector<int> e = cls.edges();
        for (size_t k = 0; k < e.size(); ++k) csv << (k ? ";" : "") << e[static_cast<size_t>(k)];
        csv << "\n";
      } else {
        nlohmann::json r = to_json(cls);
        r["c1"] = x;
        r["c2"] = y;
        rows.push_back(r);
      }
    }
  }

  if (fmt == "svg") {
    std::ostringstream title;
    title << "slice c" << f0 << "=" << cfg.fixes[0].second << ", c" << f1 << "="
          << cfg.fixes[1].second;
    return emit(cfg,
                slice_svg(n, cells, "c" + std::to_string(free_axes[0]),
                          "c" + std::to_string(free_axes[1]), title.str()),
                out);
  }
  if (fmt == "csv") return emit(cfg, csv.str(), out);
  return emit(cfg, nlohmann::json{{"rows", rows}}.dump(2) + "\n", out);
}

int cmd_glue(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  const ShapeParams sp = input_shape(cfg);
  const AngleQuad a = cfg.mode == RunConfig::Mode::Angles ? to_angles(cfg, cfg.vals)
                                                          : angles_of(input_cos(cfg));
  const GluingComplex gc = build_complex(build_solid(sp));
  const ConeStructureReport rep = verify_cone_structure(gc, a);

  nlohmann::json j = to_json(gc);
  j["report"] = to_json(rep);
  j["all_pass"] = rep.all_pass;
  return emit(cfg, j.dump(2) + "\n", out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 1;
  }
  if (args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    out << kUsage;
    return 0;
  }

  try {
    const RunConfig cfg = parse_args(args);
    if (cfg.subcommand == "classify") return cmd_classify(cfg, out);
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out);
    if (cfg.subcommand == "geom") return cmd_geom(cfg, out);
    if (cfg.subcommand == "trace") return cmd_trace(cfg, out);
    if (cfg.subcommand == "sample") return cmd_sample(cfg, out);
    if (cfg.subcommand == "glue") return cmd_glue(cfg, out);
    err << "unknown subcommand '" << cfg.subcommand << "'\n" << kUsage;
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace trapezo::cli
