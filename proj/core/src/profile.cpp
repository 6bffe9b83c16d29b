#include "effdyn/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace effdyn {

namespace {

double require_param(const std::map<std::string, double>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("make_profile: missing parameter '" + name + "'");
    return it->second;
}

} // namespace

double CouplingProfile::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double CouplingProfile::sum_squares() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return s;
}

void CouplingProfile::validate() const {
    if (values.empty()) throw std::invalid_argument("CouplingProfile: empty profile");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("CouplingProfile: non-finite coupling");
        if (v < 0.0) throw std::invalid_argument("CouplingProfile: negative coupling");
    }
}

CouplingProfile make_profile(ProfileKind kind, int n_particles,
                             const std::map<std::string, double>& params) {
    if (n_particles < 1) throw std::invalid_argument("make_profile: need at least one particle");
    const std::size_t n = static_cast<std::size_t>(n_particles);

    CouplingProfile profile;
    profile.kind = kind;
    profile.params = params;
    profile.params["N"] = static_cast<double>(n_particles);

    switch (kind) {
    case ProfileKind::SineCavity: {
        const double g = require_param(params, "g");
        profile.values.resize(n);
        for (std::size_t j = 1; j <= n; ++j)
            profile.values[j - 1] =
                g * std::sin(static_cast<double>(j) * std::numbers::pi / (n_particles + 1.0));
        break;
    }
    case ProfileKind::GaussianDot: {
        const double A = require_param(params, "A");
        const double r0 = require_param(params, "r0");
        if (A <= 0.0 || r0 <= 0.0)
            throw std::invalid_argument("make_profile: GaussianDot needs A > 0, r0 > 0");
        // Nuclei at equal-volume radii in a ball of radius R: site j (1-based,
        // ordered by increasing radius) sits at r_j = R ((j - 1/2)/N)^{1/3}.
        const double R = params.count("R") ? params.at("R") : 2.0 * r0;
        profile.params["R"] = R;
        profile.values.resize(n);
        double total = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double u = (static_cast<double>(j) - 0.5) / static_cast<double>(n_particles);
            const double r = R * std::cbrt(u);
            profile.values[j - 1] = std::exp(-(r * r) / (r0 * r0));
            total += profile.values[j - 1];
        }
        for (double& v : profile.values) v *= A / total;
        break;
    }
    case ProfileKind::HomogeneousMatched:
        throw std::invalid_argument("make_profile: HomogeneousMatched is derived from a base "
                                    "profile; use matched_homogeneous()");
    case ProfileKind::Explicit:
        throw std::invalid_argument("make_profile: Explicit takes values; use explicit_profile()");
    }

    profile.validate();
    return profile;
}

CouplingProfile matched_homogeneous(const CouplingProfile& base) {
    base.validate();
    CouplingProfile profile;
    profile.kind = ProfileKind::HomogeneousMatched;
    const double g_hom = std::sqrt(base.sum_squares() / base.size());
    profile.values.assign(base.values.size(), g_hom);
    profile.params["g"] = g_hom;
    profile.params["N"] = static_cast<double>(base.size());
    return profile;
}

CouplingProfile explicit_profile(std::vector<double> values) {
    CouplingProfile profile;
    profile.kind = ProfileKind::Explicit;
    profile.values = std::move(values);
    profile.params["N"] = static_cast<double>(profile.values.size());
    profile.validate();
    return profile;
}

} // namespace effdyn
