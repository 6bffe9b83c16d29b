// linalg.hpp — small dense Hermitian helpers shared by every module

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace effdyn {

struct HermitianEig {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // columns are eigenvectors
};

// Spectral decomposition H = V diag(lambda) V^dagger. Throws std::invalid_argument
// when the input deviates from Hermitian by more than herm_tol (relative to the norm).
HermitianEig hermitian_eig(const Eigen::MatrixXcd& H, double herm_tol = 1e-10);

// Dense Hermitian matrix for reduced/mixed states (electron qubit, small subspaces).
struct DensityMatrixSmall {
    Eigen::MatrixXcd mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace_real() const { return mat.trace().real(); }

    // Hermitian within herm_tol elementwise, unit trace within trace_tol,
    // eigenvalues >= -psd_tol. Throws on violation.
    void validate(double herm_tol = 1e-12, double trace_tol = 1e-10,
                  double psd_tol = 1e-10) const;

    static DensityMatrixSmall pure(const Eigen::VectorXcd& psi);
};

} // namespace effdyn
