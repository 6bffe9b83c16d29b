#include "effdyn/linalg.hpp"

#include <stdexcept>

namespace effdyn {

HermitianEig hermitian_eig(const Eigen::MatrixXcd& H, double herm_tol) {
    if (H.rows() != H.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    const double scale = std::max(1.0, H.norm());
    const double dev = (H - H.adjoint()).norm();
    if (dev > herm_tol * scale)
        throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (H + H.adjoint()));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

void DensityMatrixSmall::validate(double herm_tol, double trace_tol, double psd_tol) const {
    if (mat.rows() != mat.cols())
        throw std::invalid_argument("DensityMatrixSmall: matrix not square");
    if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::invalid_argument("DensityMatrixSmall: not Hermitian within tolerance");
    if (std::abs(mat.trace() - std::complex<double>(1.0, 0.0)) > trace_tol)
        throw std::invalid_argument("DensityMatrixSmall: trace differs from one");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
    if (solver.eigenvalues().minCoeff() < -psd_tol)
        throw std::invalid_argument("DensityMatrixSmall: negative eigenvalue beyond tolerance");
}

DensityMatrixSmall DensityMatrixSmall::pure(const Eigen::VectorXcd& psi) {
    return {psi * psi.adjoint()};
}

} // namespace effdyn
