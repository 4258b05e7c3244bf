#ifndef NASHFAN_SVG_HPP
#define NASHFAN_SVG_HPP

// Lattice diagrams as standalone SVG: 1 lattice unit = 40 px, y axis up.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "nashfan/nash.hpp"

namespace nashfan::svg {

inline constexpr int kUnit = 40;

namespace detail {

struct Canvas {
  long x_min, x_max, y_min, y_max;  // lattice window, inclusive

  long width() const { return (x_max - x_min) * kUnit; }
  long height() const { return (y_max - y_min) * kUnit; }
  double px(double x) const { return (x - static_cast<double>(x_min)) * kUnit; }
  double py(double y) const { return static_cast<double>(height()) - (y - static_cast<double>(y_min)) * kUnit; }
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

inline void header(std::ostringstream& os, const Canvas& c) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
     << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << c.width() << "\" height=\"" << c.height() << "\" fill=\"white\"/>\n";
  os << "<g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
  for (long x = c.x_min; x <= c.x_max; ++x)
    os << "<line x1=\"" << fmt(c.px(x)) << "\" y1=\"0.0\" x2=\"" << fmt(c.px(x)) << "\" y2=\"" << c.height() << ".0\"/>\n";
  for (long y = c.y_min; y <= c.y_max; ++y)
    os << "<line x1=\"0.0\" y1=\"" << fmt(c.py(y)) << "\" x2=\"" << c.width() << ".0\" y2=\"" << fmt(c.py(y)) << "\"/>\n";
  os << "</g>\n";
}

// Point where the ray from `from` in direction d leaves the canvas.
inline std::pair<double, double> exit_point(const Canvas& c, double fx, double fy, double dx, double dy) {
  double t = 1e18;
  if (dx > 0) t = std::min(t, (c.x_max - fx) / dx);
  if (dx < 0) t = std::min(t, (c.x_min - fx) / dx);
  if (dy > 0) t = std::min(t, (c.y_max - fy) / dy);
  if (dy < 0) t = std::min(t, (c.y_min - fy) / dy);
  return {fx + t * dx, fy + t * dy};
}

}  // namespace detail

/// P_n (circles), D_n (squares), the rays of σ^∨ and the polygonal line
/// through P_n that separates P_n + σ_Z from D_n.
inline std::string figure_svg(unsigned n) {
  const PnFamily fam = pn_family(n);
  const auto pn = fam.points();
  const auto dn = dn_set(n);
  long xmax = 0, ymax = 0;
  for (const auto* set : {&pn, &dn})
    for (const auto& p : *set) {
      xmax = std::max(xmax, p.x.get_si());
      ymax = std::max(ymax, p.y.get_si());
    }
  detail::Canvas c{-1, xmax + 2, -1, ymax + 2};
  std::ostringstream os;
  detail::header(os, c);

  os << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& ray : {LatticeVector(1, 0), LatticeVector(3, 4)}) {
    auto [ex, ey] = detail::exit_point(c, 0, 0, ray.x.get_d(), ray.y.get_d());
    os << "<line class=\"sigma-dual-ray\" x1=\"" << detail::fmt(c.px(0)) << "\" y1=\"" << detail::fmt(c.py(0))
       << "\" x2=\"" << detail::fmt(c.px(ex)) << "\" y2=\"" << detail::fmt(c.py(ey)) << "\"/>\n";
  }
  os << "</g>\n";

  const auto path = fam.path();
  auto [sx, sy] = detail::exit_point(c, fam.s.x.get_d(), fam.s.y.get_d(), 3, 4);
  os << "<polyline class=\"dividing-line\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"3\" points=\""
     << detail::fmt(c.px(static_cast<double>(c.x_max))) << ',' << detail::fmt(c.py(0));
  for (const auto& p : path) os << ' ' << detail::fmt(c.px(p.x.get_d())) << ',' << detail::fmt(c.py(p.y.get_d()));
  os << ' ' << detail::fmt(c.px(sx)) << ',' << detail::fmt(c.py(sy)) << "\"/>\n";

  for (const auto& d : dn)
    os << "<rect class=\"D-marker\" x=\"" << detail::fmt(c.px(d.x.get_d()) - 6) << "\" y=\""
       << detail::fmt(c.py(d.y.get_d()) - 6) << "\" width=\"12\" height=\"12\" fill=\"#999999\"/>\n";
  for (const auto& p : pn)
    os << "<circle class=\"P-marker\" cx=\"" << detail::fmt(c.px(p.x.get_d())) << "\" cy=\""
       << detail::fmt(c.py(p.y.get_d())) << "\" r=\"7\" fill=\"#c0392b\"/>\n";
  os << "</svg>\n";
  return os.str();
}

inline void render_figures(unsigned n, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << figure_svg(n);
  if (!out) throw std::runtime_error("failed writing " + path);
}

/// The rays of every cone of a fan inside σ, drawn to a common length.
inline std::string fan_svg(const Fan2& fan) {
  constexpr double kLength = 5.0;
  detail::Canvas c{-6, 6, -6, 6};
  std::ostringstream os;
  detail::header(os, c);
  auto ray_line = [&](const LatticeVector& r, const char* cls, const char* color) {
    double x = r.x.get_d(), y = r.y.get_d();
    double len = std::hypot(x, y);
    os << "<line class=\"" << cls << "\" x1=\"" << detail::fmt(c.px(0)) << "\" y1=\"" << detail::fmt(c.py(0))
       << "\" x2=\"" << detail::fmt(c.px(kLength * x / len)) << "\" y2=\"" << detail::fmt(c.py(kLength * y / len))
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  for (const auto& cone : fan.cones) {
    ray_line(cone.ray1(), "fan-ray", "#1f5fbf");
    ray_line(cone.ray2(), "fan-ray", "#1f5fbf");
  }
  ray_line(fan.support.ray1(), "support-ray", "black");
  ray_line(fan.support.ray2(), "support-ray", "black");
  os << "</svg>\n";
  return os.str();
}

}  // namespace nashfan::svg

#endif  // NASHFAN_SVG_HPP
