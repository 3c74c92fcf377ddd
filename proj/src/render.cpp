#include "ancsieve/render.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ancsieve {

namespace {

struct Point {
    double x;
    double y;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    std::string s = os.str();
    return s == "-0.00" ? "0.00" : s;
}

class Layout {
public:
    Layout(const RenderSpec& spec)
        : n_(spec.n), m_(spec.m), cx_(spec.size / 2.0), cy_(spec.size / 2.0), outer_(spec.size * 0.40),
          inner_(spec.size * 0.18)
    {
    }

    double outer() const { return outer_; }
    double inner() const { return inner_; }
    Point center() const { return {cx_, cy_}; }

    /// Angle in degrees, counter-clockwise from the positive x axis.
    double angle(int label) const
    {
        if (label <= n_)
            return 90.0 - 360.0 * (label - 1) / n_;
        return 90.0 + 360.0 * (label - n_ - 1) / m_;
    }

    double radius(int label) const { return label <= n_ ? outer_ : inner_; }

    Point polar(double r, double deg) const
    {
        const double t = deg * std::numbers::pi / 180.0;
        return {cx_ + r * std::cos(t), cy_ - r * std::sin(t)};
    }

    Point node(int label) const { return polar(radius(label), angle(label)); }

    Point label_pos(int label) const
    {
        const double off = label <= n_ ? 16.0 : -14.0;
        return polar(radius(label) + off, angle(label));
    }

    // Exterior arcs bend into the annulus, interior arcs bend outward, and
    // connecting arcs pass through the middle of the annulus. The two arcs of
    // a 2-cycle are pushed apart so both arrows stay visible.
    Point control(int from, int to, bool pair) const
    {
        const bool ext_from = from <= n_, ext_to = to <= n_;
        const double a1 = angle(from) * std::numbers::pi / 180.0, a2 = angle(to) * std::numbers::pi / 180.0;
        double sx = std::cos(a1) + std::cos(a2), sy = std::sin(a1) + std::sin(a2);
        double mean = std::atan2(sy, sx) * 180.0 / std::numbers::pi;
        if (std::hypot(sx, sy) < 1e-9)
            mean = angle(from) - 90.0;
        if (pair)
            mean += from < to ? 7.0 : -7.0;
        const double mid = (outer_ + inner_) / 2.0;
        if (ext_from && ext_to)
            return polar(outer_ - (outer_ - inner_) * 0.45, mean);
        if (!ext_from && !ext_to)
            return polar(inner_ + (outer_ - inner_) * 0.55, mean);
        return polar(mid, mean);
    }

private:
    int n_, m_;
    double cx_, cy_, outer_, inner_;
};

}  // namespace

RenderResult render_svg(const RenderSpec& spec)
{
    if (spec.n < 1 || spec.m < 1)
        throw std::invalid_argument("render needs n, m >= 1");
    if (spec.size < 1 || spec.font_size < 1 || !(spec.stroke_width > 0))
        throw std::invalid_argument("size, font size and stroke width must be positive");
    if (spec.perm.size() != spec.n + spec.m)
        throw std::invalid_argument("permutation size " + std::to_string(spec.perm.size()) + " does not match n + m = " +
                                    std::to_string(spec.n + spec.m));
    RenderResult result;
    const AnnularPermutation ap(spec.n, spec.m, spec.perm);
    if (!is_connected_anc(ap) && !spec.force)
        result.warnings.push_back(ap.to_string() + " is not a connected annular noncrossing permutation");

    const Layout L(spec);
    const Point c = L.center();
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.size << "\" height=\""
       << spec.size << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size << "\">\n";
    os << "  <defs>\n"
       << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
          "orient=\"auto\">\n"
       << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
       << "    </marker>\n"
       << "  </defs>\n";
    os << "  <circle class=\"exterior\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(L.outer())
       << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"" << fmt(spec.stroke_width) << "\"/>\n";
    os << "  <circle class=\"interior\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(L.inner())
       << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"" << fmt(spec.stroke_width) << "\"/>\n";

    for (const auto& cyc : ap.cycles()) {
        os << "  <g class=\"cycle\" data-cycle=\"" << format_cycles({cyc}) << "\">\n";
        if (cyc.size() == 1) {
            const int x = cyc.front();
            const Point p = L.polar(L.radius(x) + (x <= spec.n ? -8.0 : 8.0), L.angle(x));
            os << "    <circle class=\"loop\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
               << "\" r=\"8.00\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(spec.stroke_width) << "\"/>\n";
        } else {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                const Point a = L.node(from), b = L.node(to), k = L.control(from, to, cyc.size() == 2);
                os << "    <path d=\"M " << fmt(a.x) << ' ' << fmt(a.y) << " Q " << fmt(k.x) << ' ' << fmt(k.y) << ' '
                   << fmt(b.x) << ' ' << fmt(b.y) << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
                   << fmt(spec.stroke_width) << "\" marker-end=\"url(#arrow)\"/>\n";
            }
        }
        os << "  </g>\n";
    }

    for (int x = 1; x <= spec.n + spec.m; ++x) {
        const Point p = L.node(x), t = L.label_pos(x);
        os << "  <circle class=\"node\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"3.00\" fill=\"black\"/>\n";
        os << "  <text x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y) << "\" font-size=\"" << spec.font_size
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << x << "</text>\n";
    }
    os << "</svg>\n";
    result.svg = os.str();
    return result;
}

}  // namespace ancsieve
