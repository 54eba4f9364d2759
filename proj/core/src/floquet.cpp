#include "floq/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace floq {

Superoperator::Superoperator(int fock_dim, Mat elements)
    : fock_dim(fock_dim), elements(std::move(elements)) {
    long d = long(fock_dim) * fock_dim;
    if (this->elements.rows() != d || this->elements.cols() != d)
        throw DimensionMismatch("superoperator shape must be dim^2 x dim^2");
}

bool Superoperator::is_diagonal(double tol) const {
    for (long j = 0; j < elements.cols(); ++j)
        for (long i = 0; i < elements.rows(); ++i)
            if (i != j && std::abs(elements(i, j)) > tol) return false;
    return true;
}

void PropagationConfig::validate() const {
    if (steps_per_period < 100)
        throw StepCountTooSmall("steps_per_period must be >= 100");
}

Vec vectorize(const DensityMatrix& rho) {
    return Eigen::Map<const Vec>(rho.elements.data(), rho.elements.size());
}

DensityMatrix devectorize(const Vec& v) {
    int dim = int(std::lround(std::sqrt(double(v.size()))));
    if (long(dim) * dim != v.size())
        throw DimensionMismatch("devectorize: length is not a perfect square");
    return {FockSpace(dim), Eigen::Map<const Mat>(v.data(), dim, dim)};
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Superoperator dissipator_superop(const OperatorMatrix& op) {
    int dim = op.space.dim;
    const Mat& o = op.elements;
    Mat odo = o.adjoint() * o;
    Mat id = Mat::Identity(dim, dim);
    Mat s = kron(o.conjugate(), o) - 0.5 * kron(id, odo) - 0.5 * kron(odo.transpose(), id);
    return {dim, std::move(s)};
}

Superoperator liouvillian_at(const SystemSpec& sys, double t) {
    int dim = sys.space.dim;
    Mat n = number_operator(sys.space).elements;
    Mat h = sys.omega * n - drive_g(sys.bath, t) * (n * n);
    Mat id = Mat::Identity(dim, dim);
    Mat l = Complex(0, -1) * (kron(id, h) - kron(h.transpose(), id));
    l += rate_gamma(sys.bath, t) * dissipator_superop(number_operator(sys.space)).elements;
    return {dim, std::move(l)};
}

Vec liouvillian_diagonal(const SystemSpec& sys, double t) {
    int dim = sys.space.dim;
    double g = drive_g(sys.bath, t);
    double gamma = rate_gamma(sys.bath, t);
    Vec d(long(dim) * dim);
    for (int col = 0; col < dim; ++col) {
        for (int row = 0; row < dim; ++row) {
            double dr = double(row), dc = double(col);
            double diff = dr - dc;
            d(long(col) * dim + row) =
                Complex(-0.5 * gamma * diff * diff,
                        -(diff * sys.omega - g * (dr * dr - dc * dc)));
        }
    }
    return d;
}

namespace {

int step_count(double span, double period, int steps_per_period) {
    return std::max(1, int(std::ceil(steps_per_period * span / period - 1e-9)));
}

// RK4 on the diagonal entries only; Phi stays diagonal for diagonal L(t).
Vec rk4_diagonal(const SystemSpec& sys, double t0, double t1, int steps) {
    long d = long(sys.space.dim) * sys.space.dim;
    Vec y = Vec::Ones(d);
    double h = (t1 - t0) / steps;
    for (int i = 0; i < steps; ++i) {
        double t = t0 + i * h;
        Vec d1 = liouvillian_diagonal(sys, t);
        Vec d2 = liouvillian_diagonal(sys, t + 0.5 * h);
        Vec d3 = liouvillian_diagonal(sys, t + h);
        Vec k1 = d1.cwiseProduct(y);
        Vec k2 = d2.cwiseProduct(y + 0.5 * h * k1);
        Vec k3 = d2.cwiseProduct(y + 0.5 * h * k2);
        Vec k4 = d3.cwiseProduct(y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

Mat rk4_dense(const GeneratorFn& gen, long d, double t0, double t1, int steps) {
    Mat y = Mat::Identity(d, d);
    double h = (t1 - t0) / steps;
    for (int i = 0; i < steps; ++i) {
        double t = t0 + i * h;
        Mat l1 = gen(t).elements;
        Mat l2 = gen(t + 0.5 * h).elements;
        Mat l3 = gen(t + h).elements;
        Mat k1 = l1 * y;
        Mat k2 = l2 * (y + 0.5 * h * k1);
        Mat k3 = l2 * (y + 0.5 * h * k2);
        Mat k4 = l3 * (y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

void check_richardson(DynamicalMap& map, const Mat& fine, const PropagationConfig& cfg) {
    double dev = (map.matrix - fine).cwiseAbs().maxCoeff();
    map.richardson_dev = dev;
    if (dev > cfg.richardson_tol)
        throw NonConvergence("Richardson deviation " + std::to_string(dev) +
                             " exceeds tolerance; increase steps_per_period");
}

}  // namespace

DynamicalMap propagate_map(const SystemSpec& sys, double t0, double t1,
                           const PropagationConfig& cfg) {
    cfg.validate();
    if (!(t1 > t0)) throw ValidationError("t1", "must be > t0");
    int steps = step_count(t1 - t0, sys.bath.period(), cfg.steps_per_period);
    DynamicalMap map{sys.space.dim, Mat(), t0, t1, std::nullopt};
    map.matrix = Mat(rk4_diagonal(sys, t0, t1, steps).asDiagonal());
    if (cfg.richardson_check) {
        Mat fine = Mat(rk4_diagonal(sys, t0, t1, 2 * steps).asDiagonal());
        check_richardson(map, fine, cfg);
    }
    return map;
}

DynamicalMap propagate_map(const GeneratorFn& gen, int fock_dim, double period,
                           double t0, double t1, const PropagationConfig& cfg) {
    cfg.validate();
    if (!(t1 > t0)) throw ValidationError("t1", "must be > t0");
    long d = long(fock_dim) * fock_dim;
    int steps = step_count(t1 - t0, period, cfg.steps_per_period);
    DynamicalMap map{fock_dim, rk4_dense(gen, d, t0, t1, steps), t0, t1, std::nullopt};
    if (cfg.richardson_check)
        check_richardson(map, rk4_dense(gen, d, t0, t1, 2 * steps), cfg);
    return map;
}

DynamicalMap monodromy(const SystemSpec& sys, const PropagationConfig& cfg) {
    return propagate_map(sys, 0.0, sys.bath.period(), cfg);
}

namespace {

Complex principal_exponent(Complex multiplier, double period) {
    return std::log(multiplier) / period;  // std::log has Im in (-pi, pi]
}

void sort_modes(std::vector<FloquetMode>& modes) {
    std::sort(modes.begin(), modes.end(), [](const FloquetMode& a, const FloquetMode& b) {
        if (a.multiplier.real() != b.multiplier.real())
            return a.multiplier.real() > b.multiplier.real();
        return a.multiplier.imag() > b.multiplier.imag();
    });
}

}  // namespace

FloquetSpectrum floquet_spectrum(const DynamicalMap& mono) {
    double period = mono.span();
    if (period <= 0.0) throw ValidationError("monodromy", "map must span one period");
    int dim = mono.fock_dim;
    FloquetSpectrum spec;
    long d = long(dim) * dim;

    double offdiag = 0.0;
    for (long j = 0; j < d; ++j)
        for (long i = 0; i < d; ++i)
            if (i != j) offdiag = std::max(offdiag, std::abs(mono.matrix(i, j)));

    if (offdiag <= 1e-10) {
        spec.labeled = true;
        for (long idx = 0; idx < d; ++idx) {
            FloquetMode mode;
            mode.multiplier = mono.matrix(idx, idx);
            mode.exponent = principal_exponent(mode.multiplier, period);
            mode.m = int(idx % dim);  // row: coherence |m><n|
            mode.n = int(idx / dim);
            spec.modes.push_back(mode);
        }
    } else {
        Eigen::ComplexEigenSolver<Mat> eig(mono.matrix, /*computeEigenvectors=*/false);
        if (eig.info() != Eigen::Success)
            throw EigensolveFailure("monodromy eigensolve did not converge");
        for (long idx = 0; idx < d; ++idx) {
            FloquetMode mode;
            mode.multiplier = eig.eigenvalues()(idx);
            mode.exponent = principal_exponent(mode.multiplier, period);
            spec.modes.push_back(mode);
        }
    }
    sort_modes(spec.modes);
    return spec;
}

std::vector<FloquetMode> analytic_multipliers(const SystemSpec& sys) {
    double period = sys.bath.period();
    double gT = integral_G(sys.bath, period);
    double gammaT = integral_Gamma(sys.bath, period);
    std::vector<FloquetMode> modes;
    modes.reserve(size_t(sys.space.dim) * sys.space.dim);
    for (int n = 0; n < sys.space.dim; ++n) {
        for (int m = 0; m < sys.space.dim; ++m) {
            double dm = double(m), dn = double(n);
            Complex lam = std::exp(Complex(-gammaT * (dm - dn) * (dm - dn),
                                           -(dm - dn) * sys.omega * period +
                                               gT * (dm * dm - dn * dn)));
            FloquetMode mode{lam, principal_exponent(lam, period), m, n};
            modes.push_back(mode);
        }
    }
    sort_modes(modes);
    return modes;
}

LogDet log_det(const Mat& a) {
    Eigen::PartialPivLU<Mat> lu(a);
    double log_abs = 0.0, phase = 0.0;
    for (long i = 0; i < a.rows(); ++i) {
        Complex u = lu.matrixLU()(i, i);
        log_abs += std::log(std::abs(u));
        phase += std::arg(u);
    }
    if (lu.permutationP().determinant() < 0) phase += M_PI;
    phase = std::remainder(phase, 2.0 * M_PI);
    return {log_abs, phase};
}

double det_modulus(const DynamicalMap& map) { return std::exp(log_det(map.matrix).log_abs); }

double divisibility_delta(const DynamicalMap& mono, int m) {
    if (m < 0) throw ValidationError("m", "must be >= 0");
    double d = det_modulus(mono);
    return std::pow(d, m) / mono.span() * (d - 1.0);
}

bool stroboscopically_divisible(const DynamicalMap& mono, double tol) {
    return divisibility_delta(mono, 0) <= tol;
}

std::vector<double> volume_series(const DynamicalMap& mono, int l_max) {
    double d = det_modulus(mono);
    std::vector<double> out;
    out.reserve(l_max + 1);
    for (int l = 0; l <= l_max; ++l) out.push_back(std::pow(d, l));
    return out;
}

double multiset_match_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("multiset_match_distance: sizes differ");
    size_t n = a.size();
    std::vector<bool> used_a(n, false), used_b(n, false);
    double worst = 0.0;
    for (size_t round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < n; ++i) {
            if (used_a[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (used_b[j]) continue;
                double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = used_b[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

Mat apply_map(const DynamicalMap& map, const DensityMatrix& rho) {
    if (map.fock_dim != rho.space.dim) throw DimensionMismatch("apply_map: spaces differ");
    Vec v = map.matrix * vectorize(rho);
    return Eigen::Map<const Mat>(v.data(), rho.space.dim, rho.space.dim);
}

}  // namespace floq
