#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revmap/matrix.hpp"
#include "revmap/revcore.hpp"

namespace revmap::cli {

struct PlotOptions {
    int k_max = 8;
    std::optional<Vector> orbit_start;  // ambient coordinates
    long orbit_steps = 0;
};

struct PlottedLine {
    Vector direction;  // exact, in plot coordinates
    std::vector<std::string> labels;
};

struct Plot {
    std::string svg;
    std::vector<PlottedLine> fixed_lines;
    /// Eigenlines or invariant lines of F, drawn dashed.
    std::vector<PlottedLine> dashed_lines;
    std::size_t orbit_points = 0;
};

/// Fixed lines of all reversors up to k_max in the plane (planar pairs) or the
/// quotient by the common fixed space (hyperplane pairs, shown in the two
/// complementary coordinates). Floats appear only in the SVG coordinates.
Plot render_plot(const InvolutionPair& pair, const PlotOptions& options);

}  // namespace revmap::cli
