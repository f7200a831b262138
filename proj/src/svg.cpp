#include "fsw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fsw {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

std::string render_svg(const std::vector<Polyline>& curves,
                       const std::optional<Window>& window) {
    Window w{0, 1, 0, 1};
    if (window) {
        w = *window;
    } else {
        bool first = true;
        for (const auto& c : curves)
            for (Complex p : c.points) {
                if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
                if (first) {
                    w = {p.real(), p.real(), p.imag(), p.imag()};
                    first = false;
                } else {
                    w.xmin = std::min(w.xmin, p.real());
                    w.xmax = std::max(w.xmax, p.real());
                    w.ymin = std::min(w.ymin, p.imag());
                    w.ymax = std::max(w.ymax, p.imag());
                }
            }
    }
    if (!(w.xmax > w.xmin)) { w.xmin -= 0.5; w.xmax += 0.5; }
    if (!(w.ymax > w.ymin)) { w.ymin -= 0.5; w.ymax += 0.5; }
    double mx = 0.05 * (w.xmax - w.xmin), my = 0.05 * (w.ymax - w.ymin);
    w = {w.xmin - mx, w.xmax + mx, w.ymin - my, w.ymax + my};

    const double width = 800.0;
    const double height = width * (w.ymax - w.ymin) / (w.xmax - w.xmin);
    auto sx = [&](double x) {
        double v = (x - w.xmin) / (w.xmax - w.xmin) * width;
        return std::clamp(v, -1e7, 1e7);
    };
    auto sy = [&](double y) {
        double v = (w.ymax - y) / (w.ymax - w.ymin) * height;
        return std::clamp(v, -1e7, 1e7);
    };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width)
                    + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width)
                    + " " + num(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (w.ymin < 0.0 && w.ymax > 0.0)
        svg += "<line x1=\"0\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(width) + "\" y2=\""
             + num(sy(0)) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (w.xmin < 0.0 && w.xmax > 0.0)
        svg += "<line x1=\"" + num(sx(0)) + "\" y1=\"0\" x2=\"" + num(sx(0)) + "\" y2=\""
             + num(height) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        if (c.points.size() < 2) continue;
        std::string pts;
        for (Complex p : c.points) {
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
            pts += num(sx(p.real())) + "," + num(sy(p.imag())) + " ";
        }
        if (c.closed && std::isfinite(c.points.front().real()))
            pts += num(sx(c.points.front().real())) + "," + num(sy(c.points.front().imag()));
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kPalette[i % kPaletteSize];
        svg += "\" stroke-width=\"1.3\" points=\"" + pts + "\">";
        svg += "<title>" + c.label + "</title></polyline>\n";
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        double y = 18.0 + 16.0 * (double)i;
        svg += "<rect x=\"10\" y=\"" + num(y - 9) + "\" width=\"12\" height=\"12\" fill=\"";
        svg += kPalette[i % kPaletteSize];
        svg += "\"/>\n<text x=\"27\" y=\"" + num(y + 2)
             + "\" font-family=\"sans-serif\" font-size=\"12\">" + curves[i].label
             + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace fsw
