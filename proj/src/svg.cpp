#include "reinhardt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace reinhardt {

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* kPalette[6] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
}  // namespace

std::string svg_curves(const std::vector<std::vector<std::array<double, 2>>>& branches,
                       const SvgOptions& opt) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& br : branches)
        for (const auto& p : br) {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    if (opt.hexagram_overlay) {
        xmin = std::min(xmin, -1.5);
        xmax = std::max(xmax, 1.5);
        ymin = std::min(ymin, -1.7320508075688772);
        ymax = std::max(ymax, 1.7320508075688772);
    }
    if (!(xmax > xmin)) { xmin = -1.0; xmax = 1.0; }
    if (!(ymax > ymin)) { ymin = -1.0; ymax = 1.0; }
    double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= margin; xmax += margin; ymin -= margin; ymax += margin;
    double sx = opt.width / (xmax - xmin);
    double sy = opt.height / (ymax - ymin);
    double s = std::min(sx, sy);
    auto px = [&](double x) { return (x - xmin) * s; };
    auto py = [&](double y) { return opt.height - (y - ymin) * s; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(opt.width) + "\" height=\"" +
           num(opt.height) + "\" viewBox=\"0 0 " + num(opt.width) + " " + num(opt.height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opt.hexagram_overlay) {
        const double r3 = 1.7320508075688772;
        double t1[3][2] = {{0.0, -r3}, {1.5, r3 / 2.0}, {-1.5, r3 / 2.0}};
        double t2[3][2] = {{0.0, r3}, {-1.5, -r3 / 2.0}, {1.5, -r3 / 2.0}};
        for (auto& tri : {t1, t2}) {
            out += "  <polygon fill=\"none\" stroke=\"#b0c4de\" stroke-width=\"1\" points=\"";
            for (int i = 0; i < 3; ++i)
                out += num(px(tri[i][0])) + "," + num(py(tri[i][1])) + (i < 2 ? " " : "");
            out += "\"/>\n";
        }
    }

    for (std::size_t j = 0; j < branches.size(); ++j) {
        if (branches[j].empty()) continue;
        out += "  <polyline fill=\"none\" stroke=\"";
        out += kPalette[j % 6];
        out += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < branches[j].size(); ++i) {
            if (i) out += " ";
            out += num(px(branches[j][i][0])) + "," + num(py(branches[j][i][1]));
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace reinhardt
