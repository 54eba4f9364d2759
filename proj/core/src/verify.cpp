#include "floq/verify.hpp"

#include <cmath>
#include <random>

#include "floq/quadrature.hpp"

namespace floq {

namespace {

double pair_difference_sum(int dim) {
    double acc = 0.0;
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) acc += double(n - m) * double(n - m);
    return acc;
}

struct GateRecorder {
    std::vector<GateResult> results;
    void record(const std::string& name, double measured, double threshold) {
        results.push_back({name, measured, threshold, measured <= threshold});
    }
};

}  // namespace

std::vector<GateResult> run_verification(const RunConfig& cfg, std::uint64_t seed) {
    GateRecorder rec;
    SystemSpec sys = cfg.system_spec();
    const BathSpec& bath = sys.bath;
    double period = bath.period();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Rate identities.
    double gamma_integral =
        std::abs(integrate([&](double t) { return rate_gamma(bath, t); }, 0.0, period));
    rec.record("gamma_period_integral", gamma_integral, 1e-8);

    double sym = 0.0;
    for (int i = 0; i < 100; ++i) {
        double t = unit(rng) * period;
        sym = std::max(sym, std::abs(rate_gamma(bath, period - t) + rate_gamma(bath, t)));
        sym = std::max(sym, std::abs(drive_g(bath, period - t) - drive_g(bath, t)));
    }
    rec.record("rate_reflection_symmetry", sym, 1e-10);

    double fd = 0.0, delta = 1e-5 * period;
    for (int i = 0; i < 20; ++i) {
        double t = 0.05 * period + 0.9 * unit(rng) * period;
        double dG = (integral_G(bath, t + delta) - integral_G(bath, t - delta)) / (2 * delta);
        double dGam =
            (integral_Gamma(bath, t + delta) - integral_Gamma(bath, t - delta)) / (2 * delta);
        fd = std::max(fd, std::abs(dG - drive_g(bath, t)));
        fd = std::max(fd, std::abs(2.0 * dGam - rate_gamma(bath, t)));
    }
    rec.record("antiderivative_consistency", fd, 1e-6);

    if (bath.s == 1 && !bath.beta) {
        BathSpec closed = bath;
        closed.modes = std::nullopt;
        BathSpec big = bath;
        big.modes = 4000;
        double dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            double t = unit(rng) * period;
            dev = std::max(dev, std::abs(rate_gamma(big, t) - rate_gamma(closed, t)));
            dev = std::max(dev, std::abs(drive_g(big, t) - drive_g(closed, t)));
        }
        rec.record("closed_form_agreement", dev, 1e-6);
    }

    // Monodromy, determinant identity, Richardson gate.
    PropagationConfig prop = cfg.propagation;
    prop.richardson_check = true;
    DynamicalMap mono = monodromy(sys, prop);
    rec.record("richardson_deviation", mono.richardson_dev.value_or(0.0),
               prop.richardson_tol);

    double trace_integral = -0.5 * pair_difference_sum(cfg.fock_dim) * gamma_integral;
    LogDet det = log_det(mono.matrix);
    rec.record("det_vs_trace_integral",
               std::abs(std::exp(Complex(det.log_abs, det.phase)) -
                        std::exp(Complex(trace_integral, 0.0))),
               1e-6);
    rec.record("det_modulus_unity", std::abs(det_modulus(mono) - 1.0), 1e-6);
    rec.record("trace_integral_zero", std::abs(trace_integral), 1e-8);

    // Oracle equivalence of the two propagation channels.
    DensityMatrix rho0 = cfg.initial_state();
    double oracle_dev = 0.0;
    for (int i = 0; i < 5; ++i) {
        double t = (0.1 + 2.9 * unit(rng)) * period;
        PropagationConfig quick = cfg.propagation;
        quick.richardson_check = false;
        DynamicalMap map = propagate_map(sys, 0.0, t, quick);
        Mat via_floquet = apply_map(map, rho0);
        Mat exact = evolve_exact(rho0, sys, t).elements;
        oracle_dev = std::max(oracle_dev, (via_floquet - exact).cwiseAbs().maxCoeff());
    }
    rec.record("oracle_equivalence", oracle_dev, 1e-6);

    // Spectrum against the analytic multipliers.
    FloquetSpectrum spec = floquet_spectrum(mono);
    std::vector<Complex> numeric, analytic;
    for (const auto& m : spec.modes) numeric.push_back(m.multiplier);
    for (const auto& m : analytic_multipliers(sys)) analytic.push_back(m.multiplier);
    rec.record("spectrum_match", multiset_match_distance(numeric, analytic), 1e-6);

    double mod_dev = 0.0;
    for (const auto& m : spec.modes)
        mod_dev = std::max(mod_dev, std::abs(std::abs(m.multiplier) - 1.0));
    rec.record("multiplier_modulus", mod_dev, 1e-6);

    // Stroboscopic purification (initial states from the config are pure).
    double entropy = 0.0;
    for (int l = 1; l <= 3; ++l)
        entropy = std::max(entropy, linear_entropy(evolve_exact(rho0, sys, l * period)));
    rec.record("stroboscopic_purification", entropy, 1e-8);

    double worst_delta = 0.0;
    for (int m = 0; m <= cfg.l_max; ++m)
        worst_delta = std::max(worst_delta, divisibility_delta(mono, m));
    rec.record("divisibility_delta", worst_delta, 1e-9);

    // Bath-mode pendulum-wave structure.
    if (bath.modes) {
        double n2 = n2_expectation(rho0), nbar = n_expectation(rho0);
        double bath_dev = 0.0, circle_dev = 0.0, strobe = 0.0;
        for (int i = 0; i < 50; ++i) {
            double t = unit(rng) * period;
            int k = 1 + int(unit(rng) * *bath.modes);
            bath_dev = std::max(bath_dev,
                                std::abs(bath_mode_photon_number(bath, k, period - t, n2) -
                                         bath_mode_photon_number(bath, k, t, n2)));
            auto [x, p] = bath_mode_quadratures(bath, k, t, nbar);
            double r = std::sqrt(2.0) * bath.coupling(k) / bath.mode_frequency(k) * nbar;
            circle_dev = std::max(circle_dev, std::abs((x + r) * (x + r) + p * p - r * r));
            strobe = std::max(strobe, bath_mode_photon_number(bath, k, period, n2));
        }
        rec.record("bath_mode_reversal", bath_dev, 1e-12);
        rec.record("bath_quadrature_circle", circle_dev, 1e-10);
        rec.record("bath_mode_stroboscopic_zero", strobe, 1e-12);
    }

    // Wigner parity identity at the origin.
    WignerEvaluator eval(sys.space, 0.0);
    double parity = expectation(rho0, parity_operator(sys.space)).real();
    rec.record("wigner_parity_origin", std::abs(eval.at(rho0, 0.0) - parity / M_PI), 1e-10);

    return rec.results;
}

}  // namespace floq
