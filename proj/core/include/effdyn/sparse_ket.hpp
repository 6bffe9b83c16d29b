// sparse_ket.hpp — sparse complex vectors over a fixed-excitation sector

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "effdyn/sector.hpp"

namespace effdyn {

// Amplitudes below this magnitude are dropped on normalization/compaction;
// well under complex-double noise, keeps two-excitation kets of N=10^3 tractable.
inline constexpr double kAmplitudePruneTol = 1e-15;

class SparseKet {
public:
    using Entry = std::pair<std::uint64_t, std::complex<double>>;

    explicit SparseKet(SectorBasis sector) : sector_(sector) {}
    SparseKet(SectorBasis sector, std::vector<Entry> entries);

    const SectorBasis& sector() const { return sector_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    double norm() const;
    std::complex<double> amplitude(std::uint64_t index) const;

    SparseKet& scale(std::complex<double> factor);
    SparseKet& add_scaled(const SparseKet& other, std::complex<double> factor);
    SparseKet& prune(double tol = kAmplitudePruneTol);
    SparseKet& normalize();

    // Basis state |index> with unit amplitude.
    static SparseKet basis_state(SectorBasis sector, std::uint64_t index);

private:
    SectorBasis sector_;
    std::vector<Entry> entries_; // sorted by index, unique
};

// <a|b>; both kets must live in the same sector.
std::complex<double> dot(const SparseKet& a, const SparseKet& b);

} // namespace effdyn
