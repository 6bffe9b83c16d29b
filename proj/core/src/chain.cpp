#include "effdyn/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "effdyn/errors.hpp"

namespace effdyn {

namespace {

constexpr std::uint64_t kDenseColumnCap = std::uint64_t{1} << 22;

// Binomials C(s, k) for s <= n, k <= k_max, used by the in-place rank updates.
struct BinomTable {
    int k_max;
    std::vector<std::uint64_t> c; // (n+1) x (k_max+1)

    BinomTable(int n, int k_max_) : k_max(k_max_), c(static_cast<std::size_t>(n + 1) * (k_max_ + 1)) {
        for (int s = 0; s <= n; ++s) {
            at(s, 0) = 1;
            for (int k = 1; k <= k_max; ++k)
                at(s, k) = (k > s) ? 0 : (s == 0 ? 0 : at(s - 1, k - 1) + at(s - 1, k));
        }
    }
    std::uint64_t& at(int s, int k) { return c[static_cast<std::size_t>(s) * (k_max + 1) + k]; }
    std::uint64_t get(int s, int k) const {
        return c[static_cast<std::size_t>(s) * (k_max + 1) + k];
    }
};

// Colex-order odometer over m-subsets of {0..N-1}; advances in rank order.
struct SubsetCursor {
    int n_particles;
    std::vector<int> subset;

    SubsetCursor(int n, int m) : n_particles(n), subset(static_cast<std::size_t>(m)) {
        for (int k = 0; k < m; ++k) subset[static_cast<std::size_t>(k)] = k;
    }
    void advance() {
        const int m = static_cast<int>(subset.size());
        for (int k = 0; k < m; ++k) {
            const int limit = (k + 1 < m) ? subset[static_cast<std::size_t>(k + 1)] : n_particles;
            if (subset[static_cast<std::size_t>(k)] + 1 < limit) {
                ++subset[static_cast<std::size_t>(k)];
                for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j;
                return;
            }
        }
    }
};

// J~+ applied to a dense sector-m vector; output lives in sector m+1.
Eigen::VectorXd apply_raise_dense(const CouplingProfile& profile, int m,
                                  const Eigen::VectorXd& x, const BinomTable& binom) {
    const int n = profile.size();
    const SectorBasis target(n, m + 1);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(target.dim()));

    SubsetCursor cursor(n, m);
    // prefix[p]  = sum_{j<p} C(s_j, j+1)
    // shifted[p] = sum_{j>=p} C(s_j, j+2)
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(m) + 1);
    std::vector<std::uint64_t> shifted(static_cast<std::size_t>(m) + 1);
    for (Eigen::Index idx = 0; idx < x.size(); ++idx, cursor.advance()) {
        const double amp = x[idx];
        if (amp == 0.0) continue;
        const auto& s = cursor.subset;
        prefix[0] = 0;
        for (int j = 0; j < m; ++j)
            prefix[static_cast<std::size_t>(j + 1)] =
                prefix[static_cast<std::size_t>(j)] + binom.get(s[static_cast<std::size_t>(j)], j + 1);
        shifted[static_cast<std::size_t>(m)] = 0;
        for (int j = m - 1; j >= 0; --j)
            shifted[static_cast<std::size_t>(j)] =
                shifted[static_cast<std::size_t>(j + 1)] + binom.get(s[static_cast<std::size_t>(j)], j + 2);

        int p = 0; // insertion position of the new excitation
        for (int i = 0; i < n; ++i) {
            if (p < m && s[static_cast<std::size_t>(p)] == i) {
                ++p;
                continue;
            }
            const std::uint64_t rank =
                prefix[static_cast<std::size_t>(p)] + binom.get(i, p + 1) + shifted[static_cast<std::size_t>(p)];
            out[static_cast<Eigen::Index>(rank)] += profile.values[static_cast<std::size_t>(i)] * amp;
        }
    }
    return out;
}

// J~- applied to a dense sector-m vector; output lives in sector m-1.
Eigen::VectorXd apply_lower_dense(const CouplingProfile& profile, int m,
                                  const Eigen::VectorXd& x, const BinomTable& binom) {
    const int n = profile.size();
    const SectorBasis target(n, m - 1);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(target.dim()));

    SubsetCursor cursor(n, m);
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(m) + 1);
    std::vector<std::uint64_t> dropped(static_cast<std::size_t>(m) + 1);
    for (Eigen::Index idx = 0; idx < x.size(); ++idx, cursor.advance()) {
        const double amp = x[idx];
        if (amp == 0.0) continue;
        const auto& s = cursor.subset;
        prefix[0] = 0;
        for (int j = 0; j < m; ++j)
            prefix[static_cast<std::size_t>(j + 1)] =
                prefix[static_cast<std::size_t>(j)] + binom.get(s[static_cast<std::size_t>(j)], j + 1);
        // dropped[p] = sum_{j>p} C(s_j, j), the rank tail after removing element p
        dropped[static_cast<std::size_t>(m - 1)] = 0;
        for (int j = m - 2; j >= 0; --j)
            dropped[static_cast<std::size_t>(j)] =
                dropped[static_cast<std::size_t>(j + 1)] + binom.get(s[static_cast<std::size_t>(j + 1)], j + 1);

        for (int p = 0; p < m; ++p) {
            const std::uint64_t rank = prefix[static_cast<std::size_t>(p)] + dropped[static_cast<std::size_t>(p)];
            out[static_cast<Eigen::Index>(rank)] +=
                profile.values[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])] * amp;
        }
    }
    return out;
}

struct DenseGsResult {
    Eigen::VectorXd residual;
    double residual_norm = 0.0;
    bool dependent = true;
};

DenseGsResult orthogonalize_dense(Eigen::VectorXd candidate,
                                  const std::vector<Eigen::VectorXd>& basis, double dep_tol) {
    const double cand_norm = candidate.norm();
    if (cand_norm == 0.0) return {std::move(candidate), 0.0, true};
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) candidate -= b.dot(candidate) * b;
    }
    const double rnorm = candidate.norm();
    if (rnorm <= dep_tol * cand_norm) return {std::move(candidate), rnorm, true};
    candidate /= rnorm;
    return {std::move(candidate), rnorm, false};
}

SparseKet dense_to_ket(const SectorBasis& sector, const Eigen::VectorXd& x) {
    std::vector<SparseKet::Entry> entries;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) >= kAmplitudePruneTol)
            entries.emplace_back(static_cast<std::uint64_t>(i), std::complex<double>(x[i], 0.0));
    return SparseKet(sector, std::move(entries));
}

} // namespace

SparseKet collective_raise(const CouplingProfile& profile, const SparseKet& ket) {
    profile.validate();
    const SectorBasis& sector = ket.sector();
    if (sector.n_particles() != profile.size())
        throw std::invalid_argument("collective_raise: profile/sector size mismatch");
    const int m = sector.n_excited();
    if (m >= sector.n_particles())
        throw std::invalid_argument("collective_raise: sector already fully excited");

    const SectorBasis target(sector.n_particles(), m + 1);
    std::vector<SparseKet::Entry> out;
    out.reserve(ket.nnz() * static_cast<std::size_t>(sector.n_particles() - m));
    std::vector<int> subset, grown;
    for (const auto& [idx, amp] : ket.entries()) {
        sector.unrank_into(idx, subset);
        for (int i = 0; i < sector.n_particles(); ++i) {
            if (std::binary_search(subset.begin(), subset.end(), i)) continue;
            grown = subset;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
            out.emplace_back(target.rank(grown), profile.values[static_cast<std::size_t>(i)] * amp);
        }
    }
    return SparseKet(target, std::move(out));
}

SparseKet collective_lower(const CouplingProfile& profile, const SparseKet& ket) {
    profile.validate();
    const SectorBasis& sector = ket.sector();
    if (sector.n_particles() != profile.size())
        throw std::invalid_argument("collective_lower: profile/sector size mismatch");
    const int m = sector.n_excited();
    if (m <= 0) throw std::invalid_argument("collective_lower: sector has no excitations");

    const SectorBasis target(sector.n_particles(), m - 1);
    std::vector<SparseKet::Entry> out;
    out.reserve(ket.nnz() * static_cast<std::size_t>(m));
    std::vector<int> subset, shrunk;
    for (const auto& [idx, amp] : ket.entries()) {
        sector.unrank_into(idx, subset);
        for (int p = 0; p < m; ++p) {
            shrunk = subset;
            shrunk.erase(shrunk.begin() + p);
            out.emplace_back(target.rank(shrunk),
                             profile.values[static_cast<std::size_t>(subset[static_cast<std::size_t>(p)])] * amp);
        }
    }
    return SparseKet(target, std::move(out));
}

OrthogonalizeResult orthogonalize(const SparseKet& candidate, const std::vector<SparseKet>& basis,
                                  double dep_tol) {
    const double cand_norm = candidate.norm();
    SparseKet work = candidate;
    Eigen::VectorXcd overlaps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::complex<double> c = dot(basis[k], work);
            overlaps[static_cast<Eigen::Index>(k)] += c;
            work.add_scaled(basis[k], -c);
        }
    }
    const double rnorm = work.norm();
    OrthogonalizeResult result{std::move(work), std::move(overlaps), rnorm, false};
    if (rnorm <= dep_tol * cand_norm || rnorm == 0.0) {
        result.dependent = true;
        return result;
    }
    result.residual.scale(1.0 / rnorm).prune();
    return result;
}

namespace {

class ChainBuilder {
public:
    ChainBuilder(const CouplingProfile& profile, ChainModel model, const SparseKet& seed,
                 const ChainOptions& options)
        : profile_(profile), model_(model), options_(options),
          binom_(profile.size(), std::min(profile.size(), options.col_max + 2)) {
        profile_.validate();
        if (options_.col_max > profile_.size())
            throw std::invalid_argument("build_effective_basis: col_max exceeds particle count");
        if (options_.col_min < 0 || options_.col_min > options_.col_max)
            throw std::invalid_argument("build_effective_basis: bad column range");
        if (options_.max_row < 1)
            throw std::invalid_argument("build_effective_basis: max_row must be >= 1");
        for (int m = options_.col_min; m <= options_.col_max; ++m) {
            if (sector_dim(profile_.size(), m) > kDenseColumnCap)
                throw EngineGuardError("build_effective_basis: sector dimension exceeds the "
                                       "dense-column cap");
        }
        columns_.resize(static_cast<std::size_t>(options_.col_max - options_.col_min + 1));

        const int seed_col = seed.sector().n_excited();
        if (seed.sector().n_particles() != profile_.size())
            throw std::invalid_argument("build_effective_basis: seed/profile size mismatch");
        if (seed_col < options_.col_min || seed_col > options_.col_max)
            throw std::invalid_argument("build_effective_basis: seed column outside range");

        Eigen::VectorXd dense =
            Eigen::VectorXd::Zero(static_cast<Eigen::Index>(seed.sector().dim()));
        for (const auto& [idx, amp] : seed.entries()) {
            if (std::abs(amp.imag()) > 1e-12 * std::max(1.0, std::abs(amp)))
                throw std::invalid_argument("build_effective_basis: seed must be real");
            dense[static_cast<Eigen::Index>(idx)] = amp.real();
        }
        const double n = dense.norm();
        if (n == 0.0) throw std::invalid_argument("build_effective_basis: zero seed");
        column(seed_col).push_back(dense / n);
        seed_col_ = seed_col;
    }

    EffectiveBasis build() {
        extend_row(seed_col_);
        while (true) {
            const auto seeded = scan_for_seed();
            if (!seeded) break;
            extend_row(*seeded);
        }
        return finish();
    }

private:
    std::vector<Eigen::VectorXd>& column(int m) {
        return columns_[static_cast<std::size_t>(m - options_.col_min)];
    }

    Eigen::VectorXd apply(bool raising, int m, const Eigen::VectorXd& x) const {
        return raising ? apply_raise_dense(profile_, m, x, binom_)
                       : apply_lower_dense(profile_, m, x, binom_);
    }

    // From the newest state of column start, chain raises to the right and lowers
    // to the left, keeping residuals while columns have row capacity.
    void extend_row(int start) {
        for (int m = start; m < options_.col_max; ++m) {
            if (static_cast<int>(column(m + 1).size()) >= options_.max_row) break;
            auto gs = orthogonalize_dense(apply(true, m, column(m).back()), column(m + 1),
                                          options_.dep_tol);
            if (gs.dependent) break;
            column(m + 1).push_back(std::move(gs.residual));
        }
        for (int m = start; m > options_.col_min; --m) {
            if (static_cast<int>(column(m - 1).size()) >= options_.max_row) break;
            auto gs = orthogonalize_dense(apply(false, m, column(m).back()), column(m - 1),
                                          options_.dep_tol);
            if (gs.dependent) break;
            column(m - 1).push_back(std::move(gs.residual));
        }
    }

    // Column-major sweep over every kept state, lowering then raising; the first
    // image with a genuinely new direction (and row capacity) seeds the next row.
    std::optional<int> scan_for_seed() {
        for (int m = options_.col_min; m <= options_.col_max; ++m) {
            for (const auto& state : column(m)) {
                for (const bool raising : {false, true}) {
                    const int target = m + (raising ? 1 : -1);
                    if (target < options_.col_min || target > options_.col_max) continue;
                    if (static_cast<int>(column(target).size()) >= options_.max_row) continue;
                    auto gs = orthogonalize_dense(apply(raising, m, state), column(target),
                                                  options_.dep_tol);
                    if (gs.dependent) continue;
                    column(target).push_back(std::move(gs.residual));
                    return target;
                }
            }
        }
        return std::nullopt;
    }

    EffectiveBasis finish() {
        EffectiveBasis basis;
        basis.model = model_;
        basis.n_particles = profile_.size();
        basis.col_min = options_.col_min;
        basis.col_max = options_.col_max;

        for (int m = options_.col_min; m <= options_.col_max; ++m) {
            const auto& col = column(m);
            basis.col_counts.push_back(static_cast<int>(col.size()));
            const SectorBasis sector(profile_.size(), m);
            for (int r = 0; r < static_cast<int>(col.size()); ++r) {
                basis.labels.push_back({r + 1, m});
                if (options_.keep_vectors)
                    basis.vectors.push_back(dense_to_ket(sector, col[static_cast<std::size_t>(r)]));
            }
        }

        // Exact coupling blocks plus the truncation audit. The raise image of a
        // kept state decomposes into kept states of the next column and a leak;
        // lower leaks are measured the same way against the transposed block.
        for (int m = options_.col_min; m < options_.col_max; ++m) {
            const auto& src = column(m);
            const auto& dst = column(m + 1);
            Eigen::MatrixXd T(static_cast<Eigen::Index>(dst.size()),
                              static_cast<Eigen::Index>(src.size()));
            for (int r = 0; r < static_cast<int>(src.size()); ++r) {
                const Eigen::VectorXd image = apply(true, m, src[static_cast<std::size_t>(r)]);
                double image_sq = image.squaredNorm();
                double kept_sq = 0.0;
                for (int rp = 0; rp < static_cast<int>(dst.size()); ++rp) {
                    const double t = dst[static_cast<std::size_t>(rp)].dot(image);
                    T(rp, r) = t;
                    kept_sq += t * t;
                }
                const double leak = std::sqrt(std::max(0.0, image_sq - kept_sq));
                if (leak > 1e-12)
                    basis.residual_log.push_back({{r + 1, m}, true, leak});
            }
            basis.raise_couplings.push_back(std::move(T));
        }
        for (int m = options_.col_min + 1; m <= options_.col_max; ++m) {
            const auto& src = column(m);
            const auto& T = basis.raise_couplings[static_cast<std::size_t>(m - 1 - options_.col_min)];
            for (int r = 0; r < static_cast<int>(src.size()); ++r) {
                const Eigen::VectorXd image = apply(false, m, src[static_cast<std::size_t>(r)]);
                const double leak_sq = image.squaredNorm() - T.row(r).squaredNorm();
                const double leak = std::sqrt(std::max(0.0, leak_sq));
                if (leak > 1e-12)
                    basis.residual_log.push_back({{r + 1, m}, false, leak});
            }
        }
        return basis;
    }

    CouplingProfile profile_;
    ChainModel model_;
    ChainOptions options_;
    BinomTable binom_;
    std::vector<std::vector<Eigen::VectorXd>> columns_;
    int seed_col_ = 0;
};

} // namespace

int EffectiveBasis::total_states() const { return static_cast<int>(labels.size()); }

int EffectiveBasis::state_index(ChainLabel label) const {
    if (label.col < col_min || label.col > col_max || label.row < 1 || label.row > rows(label.col))
        throw std::out_of_range("EffectiveBasis::state_index: no such state");
    int offset = 0;
    for (int m = col_min; m < label.col; ++m) offset += rows(m);
    return offset + label.row - 1;
}

EffectiveBasis build_effective_basis(const CouplingProfile& profile, ChainModel model,
                                     const SparseKet& seed, const ChainOptions& options) {
    return ChainBuilder(profile, model, seed, options).build();
}

EffectiveBasis build_effective_basis(const CouplingProfile& profile, ChainModel model,
                                     int max_col, int max_row) {
    profile.validate();
    if (max_col > profile.size())
        throw std::invalid_argument("build_effective_basis: max_col exceeds particle count");
    ChainOptions options;
    options.col_min = 0;
    options.col_max = max_col;
    options.max_row = max_row;
    const SparseKet vacuum = SparseKet::basis_state(SectorBasis(profile.size(), 0), 0);
    return build_effective_basis(profile, model, vacuum, options);
}

SparseKet row_one_closed_form(const CouplingProfile& profile, int n_excited) {
    profile.validate();
    const SectorBasis sector(profile.size(), n_excited);
    std::vector<SparseKet::Entry> entries;
    entries.reserve(static_cast<std::size_t>(sector.dim()));
    std::vector<int> subset;
    for (std::uint64_t idx = 0; idx < sector.dim(); ++idx) {
        sector.unrank_into(idx, subset);
        double product = 1.0;
        for (int i : subset) product *= profile.values[static_cast<std::size_t>(i)];
        entries.emplace_back(idx, product);
    }
    SparseKet ket(sector, std::move(entries));
    return ket.normalize();
}

} // namespace effdyn
