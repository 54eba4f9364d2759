#ifndef FLOQ_BATH_HPP
#define FLOQ_BATH_HPP

#include <complex>
#include <optional>
#include <utility>

namespace floq {

// Engineered bath with mode frequencies w_k = k^s Omega and couplings
// g_k = h e^{-z k / 2}. modes == nullopt selects the infinite-mode closed
// forms, which exist only for s = 1 at zero temperature. beta == nullopt
// means zero temperature (coth factor 1).
struct BathSpec {
    double h = 1.0;
    double z = 0.1;
    double omega0 = 2.0 * 3.14159265358979323846;  // fundamental frequency Omega
    int s = 1;
    std::optional<int> modes = 60;
    std::optional<double> beta = std::nullopt;

    void validate() const;  // throws ValidationError

    double period() const { return 2.0 * 3.14159265358979323846 / omega0; }
    double coupling(int k) const;        // g_k
    double mode_frequency(int k) const;  // w_k
    double thermal_factor(int k) const;  // coth(beta w_k / 2), 1 at zero temperature
};

// Dephasing rate gamma(t) = 2 sum_k g_k^2/w_k sin(w_k t) coth(beta w_k/2).
double rate_gamma(const BathSpec& spec, double t);

// Bath-induced nonlinearity g(t) = sum_k g_k^2/w_k (1 - cos(w_k t)).
double drive_g(const BathSpec& spec, double t);

// G(t) = sum_k (g_k/w_k)^2 [w_k t - sin(w_k t)]; antiderivative of drive_g.
double integral_G(const BathSpec& spec, double t);

// Gamma(t) = sum_k (g_k/w_k)^2 [1 - cos(w_k t)] coth(beta w_k/2);
// antiderivative of gamma/2.
double integral_Gamma(const BathSpec& spec, double t);

// Mean photon number of bath mode k, given the system's conserved <n^2>.
double bath_mode_photon_number(const BathSpec& spec, int k, double t, double n2_expect);

// (<X_k>, <P_k>) of bath mode k, given the system's conserved <n>.
std::pair<double, double> bath_mode_quadratures(const BathSpec& spec, int k, double t,
                                                double n_expect);

// Dilogarithm Li_2(w) for |w| < 1, by series summation.
std::complex<double> dilog(std::complex<double> w);

}  // namespace floq

#endif
