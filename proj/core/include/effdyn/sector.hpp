// sector.hpp — fixed-excitation sector bookkeeping (colex-ranked m-subsets)

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace effdyn {

// C(n, k) as exact 64-bit integer; throws std::overflow_error if it does not fit.
std::uint64_t binomial(int n, int k);

// Dimension of the m-excitation sector of N two-level systems, i.e. C(N, m).
std::uint64_t sector_dim(int n_particles, int n_excited);

// Indexed computational basis of one fixed-excitation sector. A basis state is
// the m-subset of {0..N-1} naming which two-level systems are excited; states
// are ordered colexicographically, giving O(m) rank/unrank without tables.
class SectorBasis {
public:
    SectorBasis(int n_particles, int n_excited);

    int n_particles() const { return n_particles_; }
    int n_excited()  const { return n_excited_; }
    std::uint64_t dim() const { return dim_; }

    // subset must be strictly ascending, length n_excited, entries in [0, N).
    std::uint64_t rank(std::span<const int> subset) const;
    std::vector<int> unrank(std::uint64_t index) const;
    void unrank_into(std::uint64_t index, std::vector<int>& subset) const;

    bool operator==(const SectorBasis& other) const {
        return n_particles_ == other.n_particles_ && n_excited_ == other.n_excited_;
    }

private:
    int n_particles_;
    int n_excited_;
    std::uint64_t dim_;
};

} // namespace effdyn
