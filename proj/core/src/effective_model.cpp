#include "effdyn/effective_model.hpp"

#include <cmath>
#include <stdexcept>

namespace effdyn {

int ItcEffectiveModel::index_of(int n, ChainLabel chain) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[static_cast<std::size_t>(i)].n == n &&
            labels[static_cast<std::size_t>(i)].chain == chain)
            return i;
    return -1;
}

ItcEffectiveModel assemble_itc_effective(const EffectiveBasis& basis, int field_dim) {
    if (field_dim < 1) throw std::invalid_argument("assemble_itc_effective: field_dim < 1");
    if (basis.model != ChainModel::ITC)
        throw std::invalid_argument("assemble_itc_effective: basis built for a different model");
    if (basis.col_min != 0)
        throw std::invalid_argument("assemble_itc_effective: ITC chains start at column 0");

    ItcEffectiveModel model;
    model.field_dim = field_dim;
    const int n_max = field_dim - 1;

    for (int E = 0; E <= n_max; ++E) {
        BlockRange block{E, static_cast<int>(model.labels.size()), 0};
        for (int m = 0; m <= std::min(E, basis.col_max); ++m)
            for (int r = 1; r <= basis.rows(m); ++r)
                model.labels.push_back({E - m, {r, m}});
        block.size = static_cast<int>(model.labels.size()) - block.offset;
        model.blocks.push_back(block);
    }

    const int dim = model.dim();
    model.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& from = model.labels[static_cast<std::size_t>(i)];
        const int n = from.n;
        const int m = from.chain.col;
        if (n == 0 || m >= basis.col_max) continue;
        // J~+ a: |n, (r, m)> -> sqrt(n) sum_r' T(r', r) |n-1, (r', m+1)>
        const Eigen::MatrixXd& T = basis.raise_block(m);
        for (int rp = 1; rp <= basis.rows(m + 1); ++rp) {
            const int j = model.index_of(n - 1, {rp, m + 1});
            if (j < 0) continue;
            const double value = std::sqrt(static_cast<double>(n)) * T(rp - 1, from.chain.row - 1);
            model.hamiltonian(j, i) = value;
            model.hamiltonian(i, j) = value;
        }
    }
    return model;
}

int CentralSpinEffectiveModel::index_of(bool spin_up, ChainLabel chain) const {
    for (int i = 0; i < dim(); ++i)
        if (labels[static_cast<std::size_t>(i)].spin_up == spin_up &&
            labels[static_cast<std::size_t>(i)].chain == chain)
            return i;
    return -1;
}

const BlockRange& CentralSpinEffectiveModel::block_of(int index) const {
    for (const auto& b : blocks)
        if (index >= b.offset && index < b.offset + b.size) return b;
    throw std::out_of_range("CentralSpinEffectiveModel::block_of: index outside any block");
}

CentralSpinEffectiveModel assemble_central_spin_effective(const EffectiveBasis& basis,
                                                          double alpha_bar) {
    if (basis.model != ChainModel::CentralSpin)
        throw std::invalid_argument("assemble_central_spin_effective: basis built for a "
                                    "different model");

    CentralSpinEffectiveModel model;
    model.alpha_bar = alpha_bar;

    // Conserved excitation K = col + (spin up ? 1 : 0): block K pairs the
    // spin-up states of column K-1 with the spin-down states of column K.
    for (int K = basis.col_min; K <= basis.col_max + 1; ++K) {
        BlockRange block{K, static_cast<int>(model.labels.size()), 0};
        const int up_col = K - 1;
        if (up_col >= basis.col_min && up_col <= basis.col_max)
            for (int r = 1; r <= basis.rows(up_col); ++r)
                model.labels.push_back({true, {r, up_col}});
        if (K >= basis.col_min && K <= basis.col_max)
            for (int r = 1; r <= basis.rows(K); ++r)
                model.labels.push_back({false, {r, K}});
        block.size = static_cast<int>(model.labels.size()) - block.offset;
        if (block.size > 0) model.blocks.push_back(block);
    }

    const int dim = model.dim();
    model.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& from = model.labels[static_cast<std::size_t>(i)];
        const int m = from.chain.col;
        const double sz = from.spin_up ? 0.5 : -0.5;
        model.hamiltonian(i, i) = alpha_bar * sz * static_cast<double>(m);
        if (!from.spin_up || m >= basis.col_max) continue;
        // (1/2) A_+ S_-: |up, (r, m)> -> (1/2) sum_r' T(r', r) |down, (r', m+1)>
        const Eigen::MatrixXd& T = basis.raise_block(m);
        for (int rp = 1; rp <= basis.rows(m + 1); ++rp) {
            const int j = model.index_of(false, {rp, m + 1});
            if (j < 0) continue;
            const double value = 0.5 * T(rp - 1, from.chain.row - 1);
            model.hamiltonian(j, i) = value;
            model.hamiltonian(i, j) = value;
        }
    }
    return model;
}

} // namespace effdyn
