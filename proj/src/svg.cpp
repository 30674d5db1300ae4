#include "trapezo/svg.hpp"

#include <cstdio>
#include <sstream>

namespace trapezo {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

// World y-up to SVG y-down.
std::string pt(Vec2 v) { return num(v.x) + "," + num(-v.y); }

void line(std::ostringstream& os, Vec2 a, Vec2 b, const char* style) {
  os << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\"" << num(b.x)
     << "\" y2=\"" << num(-b.y) << "\" " << style << "/>\n";
}

void marker(std::ostringstream& os, Vec2 v, const std::string& label, const char* color,
            double r, double off) {
  os << "  <circle cx=\"" << num(v.x) << "\" cy=\"" << num(-v.y) << "\" r=\"" << num(r)
     << "\" fill=\"" << color << "\"/>\n";
  os << "  <text x=\"" << num(v.x + off) << "\" y=\"" << num(-v.y - off) << "\" font-size=\""
     << num(5.0 * off) << "\" fill=\"" << color << "\">" << label << "</text>\n";
}

}  // namespace

std::string projection_svg(const Trapezohedron& trap) {
  const Projection& pr = trap.proj;

  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  auto grow = [&](Vec2 v) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  };
  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    grow(pr.P[uk]);
    grow(pr.S[uk]);
    grow(pr.Q[uk]);
    grow(pr.R[uk] + Vec2{pr.radius[uk], pr.radius[uk]});
    grow(pr.R[uk] - Vec2{pr.radius[uk], pr.radius[uk]});
  }
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double m = 0.12 * span;
  lo_x -= m;
  hi_x += m;
  lo_y -= m;
  hi_y += m;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x) << " " << num(-hi_y)
     << " " << num(hi_x - lo_x) << " " << num(hi_y - lo_y) << "\" width=\"720\" height=\""
     << num(720.0 * (hi_y - lo_y) / (hi_x - lo_x)) << "\">\n";
  os << "  <rect x=\"" << num(lo_x) << "\" y=\"" << num(-hi_y) << "\" width=\"" << num(hi_x - lo_x)
     << "\" height=\"" << num(hi_y - lo_y) << "\" fill=\"white\"/>\n";

  const double w = 0.006 * span;
  const std::string thin = "stroke-width=\"" + num(w) + "\"";
  const std::string thick = "stroke-width=\"" + num(2.0 * w) + "\"";

  os << "  <polygon points=\"";
  for (int k = 0; k < 4; ++k) os << pt(pr.P[static_cast<size_t>(k)]) << " ";
  os << "\" fill=\"none\" stroke=\"#444444\" " << thin << "/>\n";

  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    os << "  <circle cx=\"" << num(pr.R[uk].x) << "\" cy=\"" << num(-pr.R[uk].y) << "\" r=\""
       << num(pr.radius[uk]) << "\" fill=\"none\" stroke=\"#4477aa\" " << thin
       << " stroke-opacity=\"0.75\"/>\n";
  }

  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    line(os, Vec2{0.0, 0.0}, pr.S[uk],
         ("stroke=\"#bbbbbb\" stroke-dasharray=\"" + num(2.0 * w) + "\" " + thin).c_str());
  }

  // Cone edges P_i Q_i and lateral contacts Q_i P_{i+1}.
  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    line(os, pr.P[uk], pr.Q[uk], ("stroke=\"#882255\" " + thick).c_str());
    const bool holed = trap.edges[static_cast<size_t>(12 + k)].holed;
    const std::string st = holed
                               ? "stroke=\"#cc3311\" stroke-dasharray=\"" + num(3.0 * w) + "\" " + thick
                               : "stroke=\"#117733\" " + thick;
    line(os, pr.Q[uk], pr.P[static_cast<size_t>((k + 1) % 4)], st.c_str());
  }

  const double mr = 1.6 * w;
  marker(os, Vec2{0.0, 0.0}, "O", "#000000", mr, 2.5 * w);
  for (int k = 0; k < 4; ++k) {
    const size_t uk = static_cast<size_t>(k);
    const std::string n = std::to_string(k + 1);
    marker(os, pr.P[uk], "P" + n, "#882255", mr, 2.5 * w);
    marker(os, pr.Q[uk], "Q" + n, "#117733", mr, 2.5 * w);
    marker(os, pr.R[uk], "R" + n, "#4477aa", mr, 2.5 * w);
    marker(os, pr.S[uk], "S" + n, "#ee7733", mr, 2.5 * w);
  }

  os << "</svg>\n";
  return os.str();
}

std::string slice_svg(int n, const std::vector<RegionKind>& cells, const std::string& xlabel,
                      const std::string& ylabel, const std::string& title) {
  if (n < 1 || cells.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw std::invalid_argument("slice_svg: cell count does not match grid");

  const double N = static_cast<double>(n);
  const double mg = 0.08 * N + 1.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-mg) << " " << num(-mg)
     << " " << num(N + 2.0 * mg) << " " << num(N + 2.0 * mg) << "\" width=\"640\" height=\"640\">\n";
  os << "  <rect x=\"" << num(-mg) << "\" y=\"" << num(-mg) << "\" width=\"" << num(N + 2.0 * mg)
     << "\" height=\"" << num(N + 2.0 * mg) << "\" fill=\"white\"/>\n";

  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const RegionKind k = cells[static_cast<size_t>(iy) * static_cast<size_t>(n) +
                                 static_cast<size_t>(ix)];
      const char* color = k == RegionKind::Interior   ? "#2e7d32"
                          : k == RegionKind::Boundary ? "#f9a825"
                                                      : "#eceff1";
      os << "  <rect x=\"" << ix << "\" y=\"" << (n - 1 - iy) << "\" width=\"1.02\" height=\"1.02\" fill=\""
         << color << "\"/>\n";
    }
  }
  os << "  <rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n
     << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" << num(0.01 * N) << "\"/>\n";

  const double fs = 0.05 * N + 0.5;
  os << "  <text x=\"" << num(0.5 * N) << "\" y=\"" << num(-0.35 * mg) << "\" font-size=\""
     << num(fs) << "\" text-anchor=\"middle\" fill=\"#333333\">" << title << "</text>\n";
  os << "  <text x=\"" << num(0.5 * N) << "\" y=\"" << num(N + 0.7 * mg) << "\" font-size=\""
     << num(fs) << "\" text-anchor=\"middle\" fill=\"#333333\">" << xlabel << "</text>\n";
  os << "  <text x=\"" << num(-0.5 * mg) << "\" y=\"" << num(0.5 * N) << "\" font-size=\""
     << num(fs) << "\" text-anchor=\"middle\" fill=\"#333333\" transform=\"rotate(-90 "
     << num(-0.5 * mg) << " " << num(0.5 * N) << ")\">" << ylabel << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace trapezo
