// effective_model.hpp — dense Hamiltonians on (boson or electron) x chain products

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "effdyn/chain.hpp"

namespace effdyn {

// One conserved-excitation block: contiguous [offset, offset+size) in the labels.
struct BlockRange {
    int excitation = 0;
    int offset = 0;
    int size = 0;
};

// H_ITC = J~- a^dag + J~+ a on product states |n> (x) |row, col>, restricted to
// total excitation n + col <= field_dim - 1; block-diagonal over that total.
struct ItcEffectiveModel {
    struct Label {
        int n = 0; // Fock index
        ChainLabel chain;
    };
    int field_dim = 0;
    std::vector<Label> labels; // block-major, columns ascending inside a block
    std::vector<BlockRange> blocks;
    Eigen::MatrixXd hamiltonian;

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of(int n, ChainLabel chain) const; // -1 if absent
};

ItcEffectiveModel assemble_itc_effective(const EffectiveBasis& basis, int field_dim);

// Central-spin model on |electron> (x) |row, col>:
//   (1/2)(A_- S_+ + A_+ S_-) + alpha_bar S_z (J_z - <J_z>_0)
// with <J_z>_0 the fully polarized value, so the zz term is diagonal with entries
// alpha_bar * s_z * col.
struct CentralSpinEffectiveModel {
    struct Label {
        bool spin_up = false;
        ChainLabel chain;
    };
    double alpha_bar = 0.0;
    std::vector<Label> labels; // block-major by conserved (col + spin_up)
    std::vector<BlockRange> blocks;
    Eigen::MatrixXd hamiltonian;

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of(bool spin_up, ChainLabel chain) const; // -1 if absent
    const BlockRange& block_of(int index) const;
};

CentralSpinEffectiveModel assemble_central_spin_effective(const EffectiveBasis& basis,
                                                          double alpha_bar);

} // namespace effdyn
