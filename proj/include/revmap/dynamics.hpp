#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revmap/matrix.hpp"
#include "revmap/revcore.hpp"
#include "revmap/subspace.hpp"

namespace revmap {

/// [x, F x, ..., F^steps x]; negative steps walk backwards with F^-1.
std::vector<Vector> orbit(const Matrix& f, const Vector& x, long steps);

/// phi(F^j x) = F^-j(phi x) for 0 <= j <= steps. phi must reverse f.
bool reversed_orbit_check(const Matrix& f, const Matrix& phi, const Vector& x, long steps);

enum class CertificateFlavor {
    A,  // Fix(phi_k) cap Fix(phi_l), period divides l - k
    B,  // Fix(phi'_k) cap Fix(phi'_l), period divides l - k
    C,  // Fix(phi'_k) cap Fix(phi_l), period divides k + l - 2
};

std::string to_string(CertificateFlavor flavor);

struct PeriodCertificate {
    Vector point;
    int k = 0;
    int l = 0;
    CertificateFlavor flavor = CertificateFlavor::A;
    int period_divisor = 0;
};

struct PeriodicityReport {
    /// Ordered by (flavor, k, l, basis position).
    std::vector<PeriodCertificate> certificates;
    /// Index pairs whose fixed subspaces meet only in 0.
    std::size_t trivial_intersections = 0;
    /// Index pairs on which the converse containment was checked (all held).
    std::size_t converse_checks = 0;
};

/// Certificates for every index pair with k, l <= k_max. Each one is checked by
/// exact iteration; a failed check throws std::logic_error.
PeriodicityReport periodic_certificates(const InvolutionPair& pair, int k_max);

/// The planar generic normal form F for trace t.
Matrix generic_normal_map(const Scalar& t);

/// Least q <= q_max with F^q = I for the normal form with |t| < 2.
std::optional<int> rotation_order(const Scalar& t, int q_max);

/// Direction data in the plane R^n / (Fix phi1 cap Fix phi2).
struct QuotientPlane {
    /// Standard basis vectors spanning the chosen complement of the common fixed space.
    std::vector<Vector> plane_basis;
    Subspace common_fix;
    /// Change of basis: columns = plane_basis then common_fix basis.
    Matrix frame;
    Matrix frame_inverse;

    /// 2-vector generating (S + common_fix) / common_fix, for a hyperplane S containing common_fix.
    Vector trace_of(const Subspace& s) const;
    /// The 2x2 map induced by m on the quotient plane.
    Matrix induced(const Matrix& m) const;
    /// Lifts a 2-vector direction back to the subspace it spans together with common_fix.
    Subspace lift(const Vector& direction) const;
};

/// Requires Fix(phi1) and Fix(phi2) to be distinct hyperplanes.
QuotientPlane quotient_plane(const InvolutionPair& pair);

struct FamilyLimit {
    Family family = Family::unprimed;
    /// Limit subspace in the ambient space.
    Subspace limit;
    /// Limit and complementary directions in quotient-plane coordinates.
    Vector limit_direction;
    Vector complement_direction;
    /// deviations[k-1] = beta/alpha for the trace alpha*limit + beta*complement of
    /// Fix(family_k); empty when alpha = 0.
    std::vector<std::optional<Scalar>> deviations;
    /// |deviation| strictly decreases along each parity class of indices that
    /// is not stationary on the limit.
    bool monotone = false;
};

struct LimitReport {
    std::string kind;  // "parabolic" or "hyperbolic"
    std::vector<FamilyLimit> families;
};

/// Accumulation of fixed subspaces as k grows. Throws precondition_error for
/// elliptic (|t| < 2) or abelian pairs, where nothing accumulates.
LimitReport limit_directions(const InvolutionPair& pair, int k_max);

struct SectorLine {
    Vector direction;  // canonical direction, upper half-plane
    std::vector<ReversorLabel> labels;
};

struct Sector {
    std::size_t id = 0;
    Vector from;  // bounding rays in counter-clockwise order
    Vector to;
    std::size_t from_line = 0;
    std::size_t to_line = 0;
};

struct SectorArrangement {
    std::vector<SectorLine> lines;  // sorted by angle in [0, pi)
    std::vector<Sector> sectors;    // sector j lies between rays j and j+1

    /// Index of the open sector containing p; empty when p lies on a line.
    std::optional<std::size_t> locate(const Vector& p) const;
    /// Index of the line through p, if any.
    std::optional<std::size_t> line_through(const Vector& p) const;
    std::optional<std::size_t> find_line(const Vector& direction) const;
};

/// Planar arrangement of Fix(phi_k), Fix(phi'_k), k <= k_max.
SectorArrangement sector_arrangement(const InvolutionPair& pair, int k_max);
/// Arrangement of the given reversor labels.
SectorArrangement sector_arrangement(const InvolutionPair& pair, const std::vector<ReversorLabel>& labels);

struct SectorMapResult {
    SectorArrangement arrangement;
    std::size_t source = 0;
    std::size_t image = 0;
    /// F-images of the source's boundary lines, as labels (chain successors).
    std::vector<ReversorLabel> mapped_from;
    std::vector<ReversorLabel> mapped_to;
    /// The image sector is bounded exactly by the F-images of the source's boundaries.
    bool boundaries_match = false;
    /// Some boundary image falls outside the truncated arrangement.
    bool truncation_bounded = false;
};

/// Locates probe (ambient coordinates), applies F and checks the boundary correspondence. Throws
/// precondition_error when the probe lies on a fixed line.
SectorMapResult sector_map(const InvolutionPair& pair, int k_max, const Vector& probe);

struct SectorPermutation {
    /// image[j]: sector of the image arrangement that F maps sector j onto.
    std::vector<std::size_t> image;
    bool bijective = false;
    bool consistent_with_links = false;
    /// Both arrangements have the same lines, so image is a permutation of one sector list.
    bool same_arrangement = false;
};

/// Induced map from the sectors of the k_max arrangement onto the sectors of
/// the arrangement of chain successors of its labels.
SectorPermutation sector_permutation(const InvolutionPair& pair, int k_max);

}  // namespace revmap
