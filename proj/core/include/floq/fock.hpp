#ifndef FLOQ_FOCK_HPP
#define FLOQ_FOCK_HPP

#include <complex>

#include <Eigen/Dense>

#include "floq/errors.hpp"

namespace floq {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Default bound on the probability a state may carry above the truncation level.
inline constexpr double kDefaultTailTol = 1e-10;

// Truncated bosonic Hilbert space with levels n = 0 .. dim-1.
struct FockSpace {
    explicit FockSpace(int dim);
    int dim;

    bool operator==(const FockSpace& other) const { return dim == other.dim; }
};

// Pure state; amplitudes are normalized on construction.
struct Ket {
    Ket(FockSpace space, Vec amplitudes);
    FockSpace space;
    Vec amplitudes;
};

struct OperatorMatrix {
    OperatorMatrix(FockSpace space, Mat elements);
    FockSpace space;
    Mat elements;
};

// Hermitian trace-one matrix; both properties checked on construction.
struct DensityMatrix {
    DensityMatrix(FockSpace space, Mat elements);
    FockSpace space;
    Mat elements;
};

OperatorMatrix number_operator(FockSpace space);
OperatorMatrix parity_operator(FockSpace space);

// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized after truncation.
// Throws TruncationError if the untruncated tail mass exceeds tail_tol.
Ket coherent_state(FockSpace space, Complex alpha, double tail_tol = kDefaultTailTol);

// Even cat C(alpha)(|alpha> + |-alpha>); odd amplitudes are exactly zero.
Ket cat_state(FockSpace space, Complex alpha, double tail_tol = kDefaultTailTol);

// exp(alpha b^dag - conj(alpha) b), built in an enlarged working space of
// dimension dim + ceil(8|alpha|) and truncated back to suppress edge artifacts.
OperatorMatrix displacement_operator(FockSpace space, Complex alpha);

DensityMatrix density_from_ket(const Ket& psi);
DensityMatrix maximally_mixed(FockSpace space);

double purity(const DensityMatrix& rho);
Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op);

}  // namespace floq

#endif
