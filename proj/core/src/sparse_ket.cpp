#include "effdyn/sparse_ket.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace effdyn {

namespace {

void compact(std::vector<SparseKet::Entry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        std::uint64_t idx = entries[i].first;
        std::complex<double> sum = 0.0;
        while (i < entries.size() && entries[i].first == idx) {
            sum += entries[i].second;
            ++i;
        }
        if (std::abs(sum) > 0.0) entries[out++] = {idx, sum};
    }
    entries.resize(out);
}

} // namespace

SparseKet::SparseKet(SectorBasis sector, std::vector<Entry> entries)
    : sector_(sector), entries_(std::move(entries)) {
    for (const auto& [idx, amp] : entries_) {
        if (idx >= sector_.dim())
            throw std::out_of_range("SparseKet: entry index outside sector");
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
            throw std::invalid_argument("SparseKet: non-finite amplitude");
    }
    compact(entries_);
}

double SparseKet::norm() const {
    double s = 0.0;
    for (const auto& [idx, amp] : entries_) s += std::norm(amp);
    return std::sqrt(s);
}

std::complex<double> SparseKet::amplitude(std::uint64_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::uint64_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0.0;
}

SparseKet& SparseKet::scale(std::complex<double> factor) {
    for (auto& [idx, amp] : entries_) amp *= factor;
    return *this;
}

SparseKet& SparseKet::add_scaled(const SparseKet& other, std::complex<double> factor) {
    if (!(sector_ == other.sector_))
        throw std::invalid_argument("SparseKet::add_scaled: sector mismatch");
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < other.entries_.size()) {
        if (j == other.entries_.size() ||
            (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
            merged.push_back(entries_[i++]);
        } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
            merged.emplace_back(other.entries_[j].first, factor * other.entries_[j].second);
            ++j;
        } else {
            merged.emplace_back(entries_[i].first, entries_[i].second + factor * other.entries_[j].second);
            ++i;
            ++j;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

SparseKet& SparseKet::prune(double tol) {
    std::erase_if(entries_, [tol](const Entry& e) { return std::abs(e.second) < tol; });
    return *this;
}

SparseKet& SparseKet::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("SparseKet::normalize: zero vector");
    scale(1.0 / n);
    return prune();
}

SparseKet SparseKet::basis_state(SectorBasis sector, std::uint64_t index) {
    if (index >= sector.dim()) throw std::out_of_range("SparseKet::basis_state: index out of range");
    return SparseKet(sector, {{index, 1.0}});
}

std::complex<double> dot(const SparseKet& a, const SparseKet& b) {
    if (!(a.sector() == b.sector()))
        throw std::invalid_argument("dot: sector mismatch");
    std::complex<double> s = 0.0;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) ++i;
        else if (eb[j].first < ea[i].first) ++j;
        else {
            s += std::conj(ea[i].second) * eb[j].second;
            ++i;
            ++j;
        }
    }
    return s;
}

} // namespace effdyn
