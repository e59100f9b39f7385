#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hardlink/diagram.hpp"

namespace hardlink {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // Avoid the "-0.00" artifact so output stays byte-stable.
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

double dist(PtD a, PtD b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Drop `cut` of arclength from the front of a polyline.
std::vector<PtD> trim_front(std::vector<PtD> pts, double cut) {
    while (pts.size() >= 2) {
        double seg = dist(pts[0], pts[1]);
        if (seg > cut) {
            double f = cut / seg;
            pts[0] = {pts[0].x + (pts[1].x - pts[0].x) * f, pts[0].y + (pts[1].y - pts[0].y) * f};
            return pts;
        }
        cut -= seg;
        pts.erase(pts.begin());
    }
    return pts;
}

double length_of(const std::vector<PtD>& pts) {
    double len = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
    return len;
}

std::string path_data(const std::vector<PtD>& pts, bool close) {
    std::ostringstream os;
    for (size_t i = 0; i < pts.size(); ++i)
        os << (i == 0 ? "M" : " L") << fmt(pts[i].x) << " " << fmt(-pts[i].y);
    if (close) os << " Z";
    return os.str();
}

}  // namespace

std::string render_svg(const LinkDiagram& d, const DiagramLayout& layout,
                       const SvgOptions& opts) {
    if (int(layout.arc_path.size()) != d.num_arcs)
        throw std::invalid_argument("layout is missing arc paths");
    for (int a = 0; a < d.num_arcs; ++a)
        if (layout.arc_path[a].size() < 2)
            throw std::invalid_argument("layout arc path too short");

    // Trim under-strand ends: an arc-end sitting in slot 0 or 2 dips under.
    std::vector<std::vector<PtD>> paths = layout.arc_path;
    for (const Crossing& x : d.crossings) {
        for (int s : {0, 2}) {
            const ArcEnd& e = x.slot[s];
            auto& p = paths[e.arc];
            double cut = std::min(layout.under_gap, length_of(p) / 3.0);
            if (e.end == 0) {
                p = trim_front(std::move(p), cut);
            } else {
                std::reverse(p.begin(), p.end());
                p = trim_front(std::move(p), cut);
                std::reverse(p.begin(), p.end());
            }
        }
    }

    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    auto grow = [&](const std::vector<PtD>& pts) {
        for (PtD p : pts) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, -p.y);
            yhi = std::max(yhi, -p.y);
        }
    };
    for (const auto& p : layout.arc_path) grow(p);
    for (const auto& [comp, p] : layout.loop_path) grow(p);
    if (xlo > xhi) xlo = xhi = ylo = yhi = 0;
    double pad = 8 * layout.stroke;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xlo - pad) << " "
       << fmt(ylo - pad) << " " << fmt(xhi - xlo + 2 * pad) << " " << fmt(yhi - ylo + 2 * pad)
       << "\">\n";
    if (!opts.title.empty()) os << "  <title>" << opts.title << "</title>\n";
    os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(layout.stroke)
       << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";

    auto stroke_attr = [&](int comp) {
        if (opts.bold_components.count(comp))
            return std::string(" stroke-width=\"") + fmt(layout.stroke * 3) + "\"";
        return std::string();
    };

    for (int a = 0; a < d.num_arcs; ++a) {
        if (paths[a].size() < 2) continue;
        os << "    <path class=\"arc c" << d.component_of[a] << "\" d=\""
           << path_data(paths[a], false) << "\"" << stroke_attr(d.component_of[a]) << "/>\n";
    }
    for (const auto& [comp, p] : layout.loop_path) {
        os << "    <path class=\"loop c" << comp << "\" d=\"" << path_data(p, true) << "\""
           << stroke_attr(comp) << "/>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

}  // namespace hardlink
