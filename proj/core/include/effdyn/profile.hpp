// profile.hpp — per-particle coupling strengths and their generators

#pragma once

#include <map>
#include <string>
#include <vector>

namespace effdyn {

enum class ProfileKind { SineCavity, GaussianDot, HomogeneousMatched, Explicit };

// Vector of real coupling strengths g_i (cavity) or alpha_i (dot), hbar = 1.
// Immutable after construction; safe to share across concurrent runs.
struct CouplingProfile {
    std::vector<double> values;
    ProfileKind kind = ProfileKind::Explicit;
    std::map<std::string, double> params;

    int size() const { return static_cast<int>(values.size()); }
    double sum() const;
    double sum_squares() const;
    double mean() const { return sum() / static_cast<double>(values.size()); }

    void validate() const; // length >= 1, finite, non-negative
};

// kind-specific parameters:
//   SineCavity:          g                      -> g_j = g sin(j pi / (N+1)), j = 1..N
//   GaussianDot:         A, r0 (optional R)     -> alpha_i from a Gaussian envelope
//                        exp(-r^2/r0^2) sampled at equal-volume radii inside a
//                        ball of radius R (default 2*r0), normalized to sum A
//   HomogeneousMatched:  (use matched_homogeneous below)
//   Explicit:            (use explicit_profile below)
CouplingProfile make_profile(ProfileKind kind, int n_particles,
                             const std::map<std::string, double>& params);

// Constant profile with the same sum of squared couplings as `base`:
// every value equals sqrt(sum_j g_j^2 / N).
CouplingProfile matched_homogeneous(const CouplingProfile& base);

CouplingProfile explicit_profile(std::vector<double> values);

} // namespace effdyn
