#include "floq/analysis.hpp"

#include <cmath>
#include <thread>

#include "floq/quadrature.hpp"

namespace floq {

void PhaseGrid::validate() const {
    if (n_q < 2 || n_p < 2) throw ValidationError("grid", "n_q and n_p must be >= 2");
    if (!(q_max > q_min) || !(p_max > p_min))
        throw ValidationError("grid", "max must exceed min on both axes");
}

double PhaseGrid::max_abs_alpha() const {
    double q = std::max(std::abs(q_min), std::abs(q_max));
    double p = std::max(std::abs(p_min), std::abs(p_max));
    return std::sqrt(q * q + p * p) / std::sqrt(2.0);
}

WignerEvaluator::WignerEvaluator(FockSpace space, double max_abs_alpha)
    : space_(space), work_(space.dim + int(std::ceil(8.0 * max_abs_alpha))) {
    // i(b^dag - b) is Hermitian; alpha b^dag - conj(alpha) b is a phase rotation
    // of |alpha|(b^dag - b), so one decomposition serves every grid point.
    Mat h = Mat::Zero(work_, work_);
    for (int n = 0; n < work_ - 1; ++n) {
        h(n + 1, n) = Complex(0, 1) * std::sqrt(double(n + 1));
        h(n, n + 1) = Complex(0, -1) * std::sqrt(double(n + 1));
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(h);
    if (eig.info() != Eigen::Success) throw EigensolveFailure("wigner eigensolve failed");
    mu_ = eig.eigenvalues();
    v_ = eig.eigenvectors();
}

double WignerEvaluator::at(const DensityMatrix& rho, Complex alpha) const {
    if (!(rho.space == space_)) throw DimensionMismatch("wigner: state space mismatch");
    int dim = space_.dim;
    double r = std::abs(alpha), phi = std::arg(alpha);

    // Rows 0..dim-1 of D(alpha) = R V e^{-i r mu} V^dag R^dag, R = diag(e^{i phi n});
    // only these rows meet the state's support. The parity sum must run over the
    // whole working space, not just the state's levels: D(alpha)|k> leaks below
    // dim even for k >= dim.
    Mat c = v_.topRows(dim);
    for (int k = 0; k < work_; ++k) c.col(k) *= std::exp(Complex(0, -r * mu_(k)));
    Mat d_rows = c * v_.adjoint();  // dim x work block of V e^{-i r mu} V^dag
    for (int n = 0; n < dim; ++n) d_rows.row(n) *= std::exp(Complex(0, phi * n));
    // the column phases e^{-i phi k} cancel in the quadratic form below

    Mat rho_d = rho.elements * d_rows;
    Complex w = 0.0;
    for (int k = 0; k < work_; ++k) {
        Complex term = d_rows.col(k).dot(rho_d.col(k));  // <D k| rho |D k>
        w += (k % 2 == 0) ? term : -term;
    }
    if (std::abs(w.imag()) > 1e-10)
        throw Error("wigner: displaced-parity trace has non-negligible imaginary part");
    return w.real() / M_PI;
}

WignerField wigner(const DensityMatrix& rho, const PhaseGrid& grid, int threads) {
    grid.validate();
    WignerEvaluator eval(rho.space, grid.max_abs_alpha());
    WignerField field{grid, Eigen::MatrixXd::Zero(grid.n_q, grid.n_p)};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    auto run_rows = [&](int i_begin, int i_end) {
        for (int i = i_begin; i < i_end; ++i)
            for (int j = 0; j < grid.n_p; ++j) {
                Complex alpha = Complex(grid.q_at(i), grid.p_at(j)) * inv_sqrt2;
                field.values(i, j) = eval.at(rho, alpha);
            }
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        run_rows(0, grid.n_q);
    } else {
        // Per-point evaluation is pure; disjoint row chunks keep the result
        // bit-identical to the sequential order.
        std::vector<std::thread> pool;
        int chunk = (grid.n_q + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(grid.n_q, lo + chunk);
            if (lo < hi) pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return field;
}

double wigner_norm(const WignerField& field) {
    const PhaseGrid& g = field.grid;
    double dq = (g.q_max - g.q_min) / (g.n_q - 1);
    double dp = (g.p_max - g.p_min) / (g.n_p - 1);
    double acc = 0.0;
    for (int i = 0; i < g.n_q; ++i) {
        double wi = (i == 0 || i == g.n_q - 1) ? 0.5 : 1.0;
        for (int j = 0; j < g.n_p; ++j) {
            double wj = (j == 0 || j == g.n_p - 1) ? 0.5 : 1.0;
            acc += wi * wj * field.values(i, j);
        }
    }
    return acc * dq * dp;
}

namespace {

double pair_difference_sum(int dim) {
    // sum_{n,m} (n - m)^2 over 0..dim-1
    double acc = 0.0;
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) acc += double(n - m) * double(n - m);
    return acc;
}

double observable_at(const SystemSpec& sys, const DensityMatrix& rho0, Observable obs,
                     double t) {
    DensityMatrix rho = evolve_exact(rho0, sys, t);
    switch (obs) {
        case Observable::ReturnProbability:
            return return_probability(rho, rho0);
        case Observable::LinearEntropy:
            return linear_entropy(rho);
        case Observable::N2:
            return n2_expectation(rho);
        case Observable::Volume:
            break;
    }
    // |det Phi(0 -> t)| = exp(Re int_0^t Tr L) by the Liouville-Jacobi formula;
    // Tr L(tau) = -gamma(tau)/2 * sum_{n,m}(n-m)^2 for this model.
    if (t == 0.0) return 1.0;
    double integral = integrate([&](double tau) { return rate_gamma(sys.bath, tau); }, 0.0,
                                t, std::max(32, int(std::ceil(4.0 * t / sys.bath.period()))),
                                20);
    return std::exp(-0.5 * pair_difference_sum(sys.space.dim) * integral);
}

}  // namespace

std::vector<SeriesPoint> stroboscopic_series(const SystemSpec& sys, const DensityMatrix& rho0,
                                             Observable obs, int l_max,
                                             const PropagationConfig& cfg) {
    if (l_max < 0) throw ValidationError("l_max", "must be >= 0");
    double period = sys.bath.period();
    std::vector<SeriesPoint> out;
    out.reserve(l_max + 1);
    if (obs == Observable::Volume) {
        std::vector<double> vols = volume_series(monodromy(sys, cfg), l_max);
        for (int l = 0; l <= l_max; ++l) out.push_back({l * period, vols[l]});
        return out;
    }
    for (int l = 0; l <= l_max; ++l)
        out.push_back({l * period, observable_at(sys, rho0, obs, l * period)});
    return out;
}

std::vector<SeriesPoint> dense_series(const SystemSpec& sys, const DensityMatrix& rho0,
                                      Observable obs, const std::vector<double>& t_grid) {
    std::vector<SeriesPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back({t, observable_at(sys, rho0, obs, t)});
    return out;
}

}  // namespace floq
