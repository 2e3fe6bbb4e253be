#include "revmap/cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "revmap/dynamics.hpp"
#include "revmap/errors.hpp"

namespace revmap::cli {

namespace {

constexpr double kHalfWidth = 5.0;
constexpr double kPixels = 480.0;

std::string fmt(double v) {
    if (std::abs(v) < 5e-4) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double px(double x) {
    return (x + kHalfWidth) * kPixels / (2 * kHalfWidth);
}

double py(double y) {
    return (kHalfWidth - y) * kPixels / (2 * kHalfWidth);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Endpoint of the line through 0 on the viewport boundary.
std::pair<double, double> clip(const Vector& d) {
    const double x = d[0].to_double();
    const double y = d[1].to_double();
    const double s = kHalfWidth / std::max(std::abs(x), std::abs(y));
    return {x * s, y * s};
}

std::string line_element(const Vector& d, const std::string& cls, const std::string& extra) {
    const auto [x, y] = clip(d);
    return "  <line class=\"" + cls + "\" x1=\"" + fmt(px(-x)) + "\" y1=\"" + fmt(py(-y)) + "\" x2=\"" + fmt(px(x)) +
           "\" y2=\"" + fmt(py(y)) + "\"" + extra + "/>\n";
}

std::string text_element(const Vector& d, double shrink, const std::string& cls, const std::string& text) {
    const auto [x, y] = clip(d);
    return "  <text class=\"" + cls + "\" x=\"" + fmt(px(x * shrink)) + "\" y=\"" + fmt(py(y * shrink)) + "\">" +
           escape(text) + "</text>\n";
}

std::vector<PlottedLine> invariant_lines(const Matrix& f_bar) {
    const Matrix id = Matrix::identity(2);
    std::vector<PlottedLine> out;
    if (f_bar == id || f_bar == -id) return out;
    const Scalar t = f_bar.trace();
    const Scalar two(2);
    std::vector<Scalar> eigenvalues;
    if (t.abs() == two) {
        eigenvalues.push_back(t / two);
    } else if (t.abs() > two && t.is_rational()) {
        const Rational tq = t.rational_part();
        const Scalar root = sqrt_rational(tq * tq - 4);
        eigenvalues.push_back((t + root) / two);
        eigenvalues.push_back((t - root) / two);
    }
    for (const Scalar& lambda : eigenvalues) {
        const Subspace line = kernel(f_bar - id * lambda);
        const std::string name = lambda == Scalar(1) ? "Fix(F)" : "F-invariant, eigenvalue " + lambda.to_string();
        out.push_back(PlottedLine{line.basis().front(), {name}});
    }
    return out;
}

}  // namespace

Plot render_plot(const InvolutionPair& pair, const PlotOptions& options) {
    if (options.k_max < 1) throw precondition_error("plot: k_max must be >= 1");
    const QuotientPlane qp = quotient_plane(pair);
    const Matrix f_bar = qp.induced(compose_f(pair));
    const SectorArrangement arrangement = sector_arrangement(pair, options.k_max);

    Plot plot;
    for (const SectorLine& line : arrangement.lines) {
        PlottedLine pl{line.direction, {}};
        for (const ReversorLabel& l : line.labels) pl.labels.push_back(l.to_string());
        plot.fixed_lines.push_back(std::move(pl));
    }
    plot.dashed_lines = invariant_lines(f_bar);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kPixels) + "\" height=\"" +
           fmt(kPixels) + "\" viewBox=\"0 0 " + fmt(kPixels) + " " + fmt(kPixels) + "\">\n";
    svg += "  <style>.fix{stroke:#1f3b73;stroke-width:1.2}.invariant{stroke:#c0262d;stroke-width:1.5;"
           "stroke-dasharray:8 5}.axis{stroke:#bbbbbb;stroke-width:0.6}text{font:11px sans-serif}"
           ".orbit{fill:none;stroke:#2a8a3a;stroke-width:1}</style>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(kPixels) + "\" height=\"" + fmt(kPixels) +
           "\" fill=\"white\" stroke=\"black\"/>\n";
    svg += "  <g id=\"fixed-lines\">\n";
    for (const PlottedLine& line : plot.fixed_lines) {
        std::string text;
        for (const std::string& l : line.labels) text += (text.empty() ? "" : ", ") + l;
        svg += "  " + line_element(line.direction, "fix", "");
        svg += "  " + text_element(line.direction, 0.88, "fix-label", text);
    }
    svg += "  </g>\n";
    svg += "  <g id=\"invariant-lines\">\n";
    for (const PlottedLine& line : plot.dashed_lines) {
        svg += "  " + line_element(line.direction, "invariant", " stroke-dasharray=\"8 5\"");
        svg += "  " + text_element(line.direction, 0.6, "invariant-label", line.labels.front());
    }
    svg += "  </g>\n";

    if (options.orbit_start) {
        const Vector start = *options.orbit_start;
        if (start.size() != pair.dim()) throw dimension_error("plot: orbit point does not match the pair dimension");
        std::string points;
        std::string dots;
        for (const Vector& x : orbit(compose_f(pair), start, options.orbit_steps)) {
            const Vector c = qp.frame_inverse * x;
            const std::string sx = fmt(px(c[0].to_double()));
            const std::string sy = fmt(py(c[1].to_double()));
            points += (points.empty() ? "" : " ") + sx + "," + sy;
            dots += "    <circle cx=\"" + sx + "\" cy=\"" + sy + "\" r=\"2.5\" fill=\"#2a8a3a\"/>\n";
            ++plot.orbit_points;
        }
        svg += "  <g id=\"orbit\">\n    <polyline class=\"orbit\" points=\"" + points + "\"/>\n" + dots + "  </g>\n";
    }
    svg += "</svg>\n";
    plot.svg = std::move(svg);
    return plot;
}

}  // namespace revmap::cli
