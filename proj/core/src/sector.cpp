#include "effdyn/sector.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace effdyn {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t sector_dim(int n_particles, int n_excited) {
    if (n_particles < 1) throw std::invalid_argument("sector_dim: need at least one particle");
    if (n_excited < 0 || n_excited > n_particles)
        throw std::invalid_argument("sector_dim: excitation count out of range");
    return binomial(n_particles, n_excited);
}

SectorBasis::SectorBasis(int n_particles, int n_excited)
    : n_particles_(n_particles), n_excited_(n_excited),
      dim_(sector_dim(n_particles, n_excited)) {}

std::uint64_t SectorBasis::rank(std::span<const int> subset) const {
    if (static_cast<int>(subset.size()) != n_excited_)
        throw std::invalid_argument("SectorBasis::rank: subset size mismatch");
    std::uint64_t r = 0;
    int prev = -1;
    for (int k = 0; k < n_excited_; ++k) {
        const int s = subset[k];
        if (s <= prev || s >= n_particles_)
            throw std::invalid_argument("SectorBasis::rank: subset not strictly ascending in range");
        r += binomial(s, k + 1);
        prev = s;
    }
    return r;
}

void SectorBasis::unrank_into(std::uint64_t index, std::vector<int>& subset) const {
    if (index >= dim_) throw std::out_of_range("SectorBasis::unrank: index out of range");
    subset.resize(static_cast<std::size_t>(n_excited_));
    std::uint64_t r = index;
    int s = n_particles_ - 1;
    for (int k = n_excited_; k >= 1; --k) {
        while (binomial(s, k) > r) --s;
        subset[static_cast<std::size_t>(k - 1)] = s;
        r -= binomial(s, k);
        --s;
    }
}

std::vector<int> SectorBasis::unrank(std::uint64_t index) const {
    std::vector<int> subset;
    unrank_into(index, subset);
    return subset;
}

} // namespace effdyn
