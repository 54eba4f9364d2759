#include "floq/fock.hpp"

#include <cmath>

namespace floq {

FockSpace::FockSpace(int dim) : dim(dim) {
    if (dim < 2) throw ValidationError("fock_dim", "must be >= 2");
}

Ket::Ket(FockSpace space, Vec amplitudes) : space(space), amplitudes(std::move(amplitudes)) {
    if (this->amplitudes.size() != space.dim)
        throw DimensionMismatch("ket length does not match Fock dimension");
    double norm = this->amplitudes.norm();
    if (norm == 0.0) throw ValidationError("amplitudes", "zero vector is not a state");
    this->amplitudes /= norm;
}

OperatorMatrix::OperatorMatrix(FockSpace space, Mat elements)
    : space(space), elements(std::move(elements)) {
    if (this->elements.rows() != space.dim || this->elements.cols() != space.dim)
        throw DimensionMismatch("operator shape does not match Fock dimension");
}

DensityMatrix::DensityMatrix(FockSpace space, Mat elements)
    : space(space), elements(std::move(elements)) {
    const Mat& m = this->elements;
    if (m.rows() != space.dim || m.cols() != space.dim)
        throw DimensionMismatch("density matrix shape does not match Fock dimension");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("elements", "density matrix is not Hermitian");
    if (std::abs(m.trace() - Complex(1.0)) > 1e-12)
        throw ValidationError("elements", "density matrix trace is not 1");
}

OperatorMatrix number_operator(FockSpace space) {
    Mat n = Mat::Zero(space.dim, space.dim);
    for (int k = 0; k < space.dim; ++k) n(k, k) = double(k);
    return {space, std::move(n)};
}

OperatorMatrix parity_operator(FockSpace space) {
    Mat p = Mat::Zero(space.dim, space.dim);
    for (int k = 0; k < space.dim; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return {space, std::move(p)};
}

namespace {

// Untruncated coherent amplitudes on levels 0..dim-1, via the stable recurrence
// c_n = c_{n-1} * alpha / sqrt(n).
Vec coherent_amplitudes(int dim, Complex alpha) {
    Vec c(dim);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
    return c;
}

void check_tail(double retained_mass, double tail_tol, const char* what) {
    double tail = 1.0 - retained_mass;
    if (tail > tail_tol)
        throw TruncationError(std::string(what) + ": tail mass " + std::to_string(tail) +
                              " above threshold; increase the Fock dimension");
}

}  // namespace

Ket coherent_state(FockSpace space, Complex alpha, double tail_tol) {
    Vec c = coherent_amplitudes(space.dim, alpha);
    check_tail(c.squaredNorm(), tail_tol, "coherent_state");
    return {space, std::move(c)};
}

Ket cat_state(FockSpace space, Complex alpha, double tail_tol) {
    Vec c = coherent_amplitudes(space.dim, alpha);
    // |alpha> + |-alpha>: odd amplitudes cancel exactly.
    for (int n = 1; n < space.dim; n += 2) c(n) = 0.0;
    for (int n = 0; n < space.dim; n += 2) c(n) *= 2.0;
    // Untruncated squared norm of |alpha> + |-alpha| is 2(1 + e^{-2|alpha|^2}).
    double full = 2.0 * (1.0 + std::exp(-2.0 * std::norm(alpha)));
    check_tail(c.squaredNorm() / full, tail_tol, "cat_state");
    return {space, std::move(c)};
}

OperatorMatrix displacement_operator(FockSpace space, Complex alpha) {
    int work = space.dim + int(std::ceil(8.0 * std::abs(alpha)));
    // alpha b^dag - conj(alpha) b is anti-Hermitian; exponentiate i H with
    // H = -i (alpha b^dag - conj(alpha) b) Hermitian.
    Mat h = Mat::Zero(work, work);
    for (int n = 0; n < work - 1; ++n) {
        Complex up = Complex(0, -1) * alpha * std::sqrt(double(n + 1));  // (n+1, n)
        h(n + 1, n) = up;
        h(n, n + 1) = std::conj(up);
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(h);
    if (eig.info() != Eigen::Success) throw EigensolveFailure("displacement eigensolve failed");
    Vec phases(work);
    for (int k = 0; k < work; ++k) phases(k) = std::exp(Complex(0, eig.eigenvalues()(k)));
    Mat d = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    return {space, d.topLeftCorner(space.dim, space.dim)};
}

DensityMatrix density_from_ket(const Ket& psi) {
    return {psi.space, psi.amplitudes * psi.amplitudes.adjoint()};
}

DensityMatrix maximally_mixed(FockSpace space) {
    return {space, Mat::Identity(space.dim, space.dim) / double(space.dim)};
}

double purity(const DensityMatrix& rho) {
    return (rho.elements * rho.elements).trace().real();
}

Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op) {
    if (!(rho.space == op.space)) throw DimensionMismatch("expectation: spaces differ");
    return (rho.elements * op.elements).trace();
}

}  // namespace floq
