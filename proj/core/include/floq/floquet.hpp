#ifndef FLOQ_FLOQUET_HPP
#define FLOQ_FLOQUET_HPP

#include <functional>
#include <optional>
#include <vector>

#include "floq/exact.hpp"
#include "floq/fock.hpp"

namespace floq {

// Dense complex matrix acting on column-major vectorized density matrices.
struct Superoperator {
    Superoperator(int fock_dim, Mat elements);
    int fock_dim;
    Mat elements;

    bool is_diagonal(double tol = 1e-10) const;
};

// Fundamental matrix Phi(t_start -> t_end); identity when t_end == t_start.
struct DynamicalMap {
    int fock_dim = 0;
    Mat matrix;
    double t_start = 0.0;
    double t_end = 0.0;
    // Max elementwise deviation against the double-resolution re-run, when requested.
    std::optional<double> richardson_dev;

    double span() const { return t_end - t_start; }
};

struct PropagationConfig {
    int steps_per_period = 40000;
    bool richardson_check = false;
    double richardson_tol = 1e-6;

    void validate() const;  // throws StepCountTooSmall below 100 steps/period
};

struct FloquetMode {
    Complex multiplier;
    Complex exponent;  // principal branch, Im in (-pi/T, pi/T]; branch index 0
    // Analytic labeling (m, n) of the coherence |m><n|; -1 when unlabeled.
    int m = -1;
    int n = -1;
};

struct FloquetSpectrum {
    std::vector<FloquetMode> modes;
    bool labeled = false;  // true when read off a diagonal monodromy
    int branch_index = 0;  // exponents are defined mod 2 pi i / T
};

// Column-major vectorization; index of rho(row, col) is col * dim + row.
Vec vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const Vec& v);

Mat kron(const Mat& a, const Mat& b);

// D(O) rho = O rho O^dag - 1/2 {O^dag O, rho}, as a matrix on vec(rho).
Superoperator dissipator_superop(const OperatorMatrix& op);

// L(t) = -i[H(t), .] + gamma(t) D(n), H(t) = omega n - g(t) n^2.
Superoperator liouvillian_at(const SystemSpec& sys, double t);

// Diagonal of L(t) in O(dim^2); the model Liouvillian is diagonal because H
// and n are diagonal in the Fock basis.
Vec liouvillian_diagonal(const SystemSpec& sys, double t);

using GeneratorFn = std::function<Superoperator(double)>;

// Fundamental matrix of dPhi/dt = L(t) Phi by fixed-step classical RK4.
// The SystemSpec overload runs the diagonal fast path; the generator overload
// handles arbitrary dense periodic generators. `period` fixes the step size
// as span/period * steps_per_period.
DynamicalMap propagate_map(const SystemSpec& sys, double t0, double t1,
                           const PropagationConfig& cfg);
DynamicalMap propagate_map(const GeneratorFn& gen, int fock_dim, double period,
                           double t0, double t1, const PropagationConfig& cfg);

DynamicalMap monodromy(const SystemSpec& sys, const PropagationConfig& cfg);

// Multipliers are eigenvalues of the monodromy; diagonal fast path keeps the
// (m, n) labels, the general path uses a dense complex eigensolve.
FloquetSpectrum floquet_spectrum(const DynamicalMap& mono);

// lambda_{m,n} = e^{-i(E_m - E_n)T} e^{i G(T)(m^2 - n^2)} e^{-Gamma(T)(m-n)^2}.
std::vector<FloquetMode> analytic_multipliers(const SystemSpec& sys);

// det accumulated as log-magnitude plus phase, via LU with partial pivoting.
struct LogDet {
    double log_abs;
    double phase;
};
LogDet log_det(const Mat& a);

double det_modulus(const DynamicalMap& map);

// Delta_m = |det Phi(T)|^m / T * (|det Phi(T)| - 1); <= 0 means divisible.
double divisibility_delta(const DynamicalMap& mono, int m);
bool stroboscopically_divisible(const DynamicalMap& mono, double tol = 1e-9);

// |det Phi(lT)| = |det Phi(T)|^l for l = 0..l_max.
std::vector<double> volume_series(const DynamicalMap& mono, int l_max);

Mat apply_map(const DynamicalMap& map, const DensityMatrix& rho);

// Greedy nearest-neighbor matching of two equally sized complex multisets;
// returns the largest matched distance. Degenerate clusters pair as multisets.
double multiset_match_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace floq

#endif
