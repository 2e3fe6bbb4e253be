#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "revmap/matrix.hpp"
#include "revmap/revcore.hpp"

namespace revmap {

enum class CaseTag {
    planar_abelian,
    planar_nonabelian_contained,
    planar_nonabelian_generic,
    gen_a,
    gen_b,
    gen_c,
    gen_d,
    gen_e,
};

std::string to_string(CaseTag tag);

/// Eigen-data of the planar generic normal form F = [[-1,-1],[2+t,1+t]].
///
/// |t| > 2: beta = {(1,-1-lambda+), (1,-1-lambda-)}, the eigenvectors, over Q(sqrt(t^2-4)).
/// |t| < 2: beta = {R, I} with R = (1,-t/2-1), I = (0,-sqrt(4-t^2)/2); lambdas are
///          complex and left empty.
/// |t| = 2: lambda+ = lambda- = t/2 and no eigenbasis.
struct EigenFrame {
    Scalar theta_cos;
    std::optional<std::array<Vector, 2>> beta_basis;
    std::optional<Scalar> lambda_plus;
    std::optional<Scalar> lambda_minus;

    /// Columns are the beta vectors; coordinates in beta are beta_matrix()^-1 x.
    Matrix beta_matrix() const;
};

EigenFrame eigen_frame(const Scalar& t);

struct SuspensionDims {
    std::size_t core_dim = 0;
    std::size_t trivial_dim = 0;
};

/// Classification of an input pair (psi1, psi2). The witness satisfies
/// conjugacy * psi_i * conjugacy^-1 = normal_form.phi_i.
struct ClassificationResult {
    CaseTag case_tag;
    Scalar trace_t;
    InvolutionPair normal_form;
    Matrix conjugacy;
    std::optional<SuspensionDims> suspension_split;
    std::optional<EigenFrame> eigen;
};

/// Representative planar pairs.
InvolutionPair planar_abelian_form();
InvolutionPair planar_contained_form();
InvolutionPair planar_generic_form(const Scalar& t);
/// phi1 = (-x1, 4x1 + x2, x3, ...), phi2 = (x1 + x2, -x2, x2 + x3, x4, ...); n >= 3.
InvolutionPair triple_block_form(std::size_t n);

/// Planar trichotomy. Requires dim 2, transversal, neither matrix +-I.
ClassificationResult classify_planar(const InvolutionPair& pair);
/// Five-way split for n >= 3 with hyperplane fixed spaces.
ClassificationResult classify_general(const InvolutionPair& pair);
/// Dispatches on dimension.
ClassificationResult classify(const InvolutionPair& pair);

struct ConjugacySearch {
    long initial_range = 2;
    long max_range = 1024;
    int tries_per_range = 48;
};

struct ConjugacySolution {
    std::optional<Matrix> h;
    /// Dimension of {h : h s_i = t_i h}; left 0 when a similarity invariant
    /// (traces of phi1, phi2, F or the dimensions of Fix(F), Fix(-F)) differs.
    std::size_t solution_space_dim = 0;
    /// The solution space is nonzero but no invertible element turned up
    /// within the configured search; absence is then not a proof.
    bool search_exhausted = false;
};

/// Invertible h with h * source.phi_i * h^-1 = target.phi_i for i = 1, 2.
ConjugacySolution solve_conjugacy(const InvolutionPair& source, const InvolutionPair& target,
                                  const ConjugacySearch& search = {});
std::optional<Matrix> find_conjugacy(const InvolutionPair& source, const InvolutionPair& target);

struct SuspensionSplit {
    InvolutionPair core;
    std::size_t trivial_dim = 0;
    /// Columns: basis of the core block followed by the trivial block;
    /// basis^-1 * psi_i * basis = diag(core_i, I).
    Matrix basis;
};

/// Splits off the largest common fixed block that has an invariant
/// complement. Requires dim >= 3; empty when nothing splits off.
std::optional<SuspensionSplit> suspension_split(const InvolutionPair& pair);

}  // namespace revmap
