#include <algorithm>

#include "revmap/dynamics.hpp"
#include "revmap/errors.hpp"

namespace revmap {

namespace {

Scalar cross(const Vector& a, const Vector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

Scalar dot(const Vector& a, const Vector& b) {
    return a[0] * b[0] + a[1] * b[1];
}

bool same_ray(const Vector& a, const Vector& b) {
    return cross(a, b).is_zero() && dot(a, b).sign() > 0;
}

// Representative of the line in the upper half-plane (y > 0, or y = 0 and x > 0).
Vector upper_half(Vector d) {
    if (d[1].sign() < 0 || (d[1].is_zero() && d[0].sign() < 0)) d = Scalar(-1) * d;
    return d;
}

std::vector<ReversorLabel> truncated_labels(int k_max) {
    std::vector<ReversorLabel> labels;
    for (int k = 1; k <= k_max; ++k) labels.push_back({Family::unprimed, k});
    for (int k = 2; k <= k_max; ++k) labels.push_back({Family::primed, k});
    return labels;
}

Vector project(const QuotientPlane& qp, const Vector& x) {
    if (x.size() != qp.frame.rows()) throw dimension_error("sector: point does not match the pair dimension");
    const Vector coords = qp.frame_inverse * x;
    return Vector{coords[0], coords[1]};
}

SectorArrangement build(const QuotientPlane& qp, const InvolutionPair& pair, const std::vector<ReversorLabel>& labels) {
    if (labels.empty()) throw precondition_error("sector_arrangement: no reversor labels");
    int top = 1;
    for (const ReversorLabel& l : labels) {
        if (l.k < 1) throw precondition_error("sector_arrangement: reversor index must be >= 1");
        top = std::max(top, l.k);
    }
    const auto unprimed = reversor_sequence(pair, top, Family::unprimed);
    const auto primed = reversor_sequence(pair, top, Family::primed);

    SectorArrangement out;
    for (const ReversorLabel& label : labels) {
        const auto& seq = label.family == Family::primed ? primed : unprimed;
        const Vector d = upper_half(qp.trace_of(fixed_subspace(seq[static_cast<std::size_t>(label.k - 1)])));
        const auto hit = out.find_line(d);
        if (hit) {
            auto& existing = out.lines[*hit].labels;
            if (std::find(existing.begin(), existing.end(), label) == existing.end()) existing.push_back(label);
        } else {
            out.lines.push_back(SectorLine{d, {label}});
        }
    }
    std::sort(out.lines.begin(), out.lines.end(),
              [](const SectorLine& a, const SectorLine& b) { return cross(a.direction, b.direction).sign() > 0; });

    const std::size_t m = out.lines.size();
    auto ray = [&](std::size_t j) {
        return j < m ? out.lines[j].direction : Scalar(-1) * out.lines[j - m].direction;
    };
    for (std::size_t j = 0; j < 2 * m; ++j) {
        const std::size_t next = (j + 1) % (2 * m);
        out.sectors.push_back(Sector{j, ray(j), ray(next), j % m, next % m});
    }
    return out;
}

Vector interior_point(const Sector& s) {
    if (cross(s.from, s.to).is_zero()) return Vector{-s.from[1], s.from[0]};
    return s.from + s.to;
}

std::string labels_text(const std::vector<ReversorLabel>& labels) {
    std::string out;
    for (const ReversorLabel& l : labels) out += (out.empty() ? "" : ", ") + l.to_string();
    return out;
}

}  // namespace

std::optional<std::size_t> SectorArrangement::find_line(const Vector& direction) const {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (cross(lines[i].direction, direction).is_zero()) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> SectorArrangement::line_through(const Vector& p) const {
    if (is_zero_vector(p)) throw precondition_error("sector: the origin lies on every line");
    return find_line(p);
}

std::optional<std::size_t> SectorArrangement::locate(const Vector& p) const {
    if (line_through(p)) return std::nullopt;
    for (const Sector& s : sectors) {
        const bool opposite = cross(s.from, s.to).is_zero();
        if (cross(s.from, p).sign() > 0 && (opposite || cross(p, s.to).sign() > 0)) return s.id;
    }
    return std::nullopt;
}

SectorArrangement sector_arrangement(const InvolutionPair& pair, int k_max) {
    return sector_arrangement(pair, truncated_labels(k_max));
}

SectorArrangement sector_arrangement(const InvolutionPair& pair, const std::vector<ReversorLabel>& labels) {
    return build(quotient_plane(pair), pair, labels);
}

SectorMapResult sector_map(const InvolutionPair& pair, int k_max, const Vector& probe) {
    if (k_max < 1) throw precondition_error("sector_map: k_max must be >= 1");
    const QuotientPlane qp = quotient_plane(pair);
    const Matrix f_bar = qp.induced(compose_f(pair));
    SectorMapResult out;
    out.arrangement = build(qp, pair, truncated_labels(k_max));
    const SectorArrangement& arr = out.arrangement;

    const Vector p = project(qp, probe);
    if (auto line = arr.line_through(p)) {
        throw precondition_error("sector_map: probe lies on Fix(" + labels_text(arr.lines[*line].labels) + ")");
    }
    out.source = *arr.locate(p);
    const Vector q = f_bar * p;
    if (auto line = arr.line_through(q)) {
        throw precondition_error("sector_map: image of the probe lies on Fix(" +
                                 labels_text(arr.lines[*line].labels) + ")");
    }
    out.image = *arr.locate(q);

    const Sector& src = arr.sectors[out.source];
    const Sector& img = arr.sectors[out.image];
    for (const ReversorLabel& l : arr.lines[src.from_line].labels) out.mapped_from.push_back(l.chain_successor());
    for (const ReversorLabel& l : arr.lines[src.to_line].labels) out.mapped_to.push_back(l.chain_successor());
    const Vector from_image = f_bar * src.from;
    const Vector to_image = f_bar * src.to;
    out.boundaries_match = same_ray(from_image, img.from) && same_ray(to_image, img.to);
    out.truncation_bounded = !arr.find_line(from_image) || !arr.find_line(to_image);
    return out;
}

SectorPermutation sector_permutation(const InvolutionPair& pair, int k_max) {
    if (k_max < 1) throw precondition_error("sector_permutation: k_max must be >= 1");
    const QuotientPlane qp = quotient_plane(pair);
    const Matrix f_bar = qp.induced(compose_f(pair));
    const std::vector<ReversorLabel> labels = truncated_labels(k_max);
    std::vector<ReversorLabel> successors;
    for (const ReversorLabel& l : labels) successors.push_back(l.chain_successor());
    const SectorArrangement source = build(qp, pair, labels);
    const SectorArrangement target = build(qp, pair, successors);

    SectorPermutation out;
    out.bijective = source.sectors.size() == target.sectors.size();
    out.consistent_with_links = true;
    std::vector<bool> seen(target.sectors.size(), false);
    for (const Sector& s : source.sectors) {
        const auto hit = target.locate(f_bar * interior_point(s));
        if (!hit) {
            out.bijective = false;
            out.consistent_with_links = false;
            out.image.push_back(target.sectors.size());
            continue;
        }
        out.image.push_back(*hit);
        if (seen[*hit]) out.bijective = false;
        seen[*hit] = true;
        const Sector& t = target.sectors[*hit];
        if (!same_ray(f_bar * s.from, t.from) || !same_ray(f_bar * s.to, t.to)) out.consistent_with_links = false;
        // The labels on each image boundary must include the chain successors.
        for (const auto& [line, boundary] : {std::pair{s.from_line, t.from_line}, std::pair{s.to_line, t.to_line}}) {
            const auto& have = target.lines[boundary].labels;
            for (const ReversorLabel& l : source.lines[line].labels) {
                if (std::find(have.begin(), have.end(), l.chain_successor()) == have.end()) {
                    out.consistent_with_links = false;
                }
            }
        }
    }
    out.same_arrangement = source.lines.size() == target.lines.size();
    for (std::size_t i = 0; out.same_arrangement && i < source.lines.size(); ++i) {
        out.same_arrangement = source.lines[i].direction == target.lines[i].direction;
    }
    return out;
}

}  // namespace revmap
