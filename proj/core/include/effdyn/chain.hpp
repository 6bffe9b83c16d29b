// chain.hpp — collective-state ladder construction by Gram-Schmidt orthogonalization
//
// The ensemble states visited by an inhomogeneously coupled system organize into a
// (row, column) grid: the column counts collective excitations, the row counts
// orthogonalization depth. Column m holds at most `max_row` orthonormal states; the
// first is reached directly from the seed by the collective raising/lowering
// operator, each deeper one is the normalized Gram-Schmidt residual of an image of
// an already-kept state. Truncating at max_row yields the small effective space in
// which dynamics is propagated; every discarded residual norm is recorded so the
// truncation quality is auditable.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "effdyn/profile.hpp"
#include "effdyn/sparse_ket.hpp"

namespace effdyn {

enum class ChainModel { ITC, CentralSpin };

// row >= 1 (orthogonalization depth), col >= 0 (ensemble excitations).
struct ChainLabel {
    int row = 1;
    int col = 0;
    bool operator==(const ChainLabel&) const = default;
};

// Sum_i g_i sigma_i^+ |ket>, unnormalized; the image lives one sector higher.
SparseKet collective_raise(const CouplingProfile& profile, const SparseKet& ket);
// Exact adjoint of collective_raise: Sum_i g_i sigma_i^- |ket>.
SparseKet collective_lower(const CouplingProfile& profile, const SparseKet& ket);

struct OrthogonalizeResult {
    SparseKet residual;               // normalized; meaningless when dependent
    Eigen::VectorXcd overlaps;        // <basis_k|candidate>
    double residual_norm = 0.0;
    bool dependent = false;           // residual_norm < dep_tol * ||candidate||
};

// Twice-through classical Gram-Schmidt of candidate against an orthonormal basis;
// candidate = sum_k overlaps_k basis_k + residual_norm * residual.
OrthogonalizeResult orthogonalize(const SparseKet& candidate,
                                  const std::vector<SparseKet>& basis,
                                  double dep_tol = 1e-10);

struct ChainOptions {
    int max_row = 2;
    int col_min = 0;
    int col_max = 0;
    double dep_tol = 1e-10;     // relative linear-dependence threshold
    bool keep_vectors = true;   // retain the kets (disable for very large sectors)
};

struct EffectiveBasis {
    ChainModel model = ChainModel::ITC;
    int n_particles = 0;
    int col_min = 0;
    int col_max = 0;

    // Column-major: all rows of col_min first, rows ascending within a column.
    std::vector<ChainLabel> labels;
    std::vector<SparseKet> vectors;        // parallel to labels; empty if !keep_vectors
    std::vector<int> col_counts;           // rows kept per column, indexed col - col_min

    // raise_couplings[m - col_min](r'-1, r-1) = <(r', m+1)| J~+ |(r, m)>
    std::vector<Eigen::MatrixXd> raise_couplings;

    struct ResidualEntry {
        ChainLabel source;
        bool raising = true;  // direction of the leaking application
        double norm = 0.0;    // weight lost to the truncated complement
    };
    std::vector<ResidualEntry> residual_log;

    int rows(int col) const { return col_counts[static_cast<std::size_t>(col - col_min)]; }
    int total_states() const;
    // Position of (row, col) in the column-major ordering.
    int state_index(ChainLabel label) const;
    const Eigen::MatrixXd& raise_block(int col) const {
        return raise_couplings[static_cast<std::size_t>(col - col_min)];
    }
};

// Grow the ladder from an explicit seed state (CentralSpin defect states, or any
// custom start). Columns are confined to [col_min, col_max].
EffectiveBasis build_effective_basis(const CouplingProfile& profile, ChainModel model,
                                     const SparseKet& seed, const ChainOptions& options);

// ITC convenience: seed is the collective ground state (column 0).
EffectiveBasis build_effective_basis(const CouplingProfile& profile, ChainModel model,
                                     int max_col, int max_row);

// Test oracle: row-1 column-n state from the combinatorial closed form
// sum over n-subsets of g_{i1}...g_{in} |i1..in>, normalized.
SparseKet row_one_closed_form(const CouplingProfile& profile, int n_excited);

} // namespace effdyn
