#include "floq/bath.hpp"

#include <cmath>

#include "floq/errors.hpp"

namespace floq {

namespace {
using Complex = std::complex<double>;
}

void BathSpec::validate() const {
    if (h < 0.0) throw ValidationError("bath.h", "must be >= 0");
    if (z <= 0.0) throw ValidationError("bath.z", "must be > 0");
    if (omega0 <= 0.0) throw ValidationError("bath.omega0", "must be > 0");
    if (s < 1) throw ValidationError("bath.s", "must be a positive integer");
    if (modes && *modes < 1) throw ValidationError("bath.modes", "must be >= 1");
    if (beta && *beta <= 0.0) throw ValidationError("bath.beta", "must be > 0 when finite");
    if (!modes && (s != 1 || beta))
        throw ValidationError("bath.modes",
                              "closed forms require s = 1 and zero temperature");
}

double BathSpec::coupling(int k) const { return h * std::exp(-0.5 * z * k); }

double BathSpec::mode_frequency(int k) const { return std::pow(double(k), s) * omega0; }

double BathSpec::thermal_factor(int k) const {
    if (!beta) return 1.0;
    return 1.0 / std::tanh(0.5 * *beta * mode_frequency(k));
}

std::complex<double> dilog(std::complex<double> w) {
    if (std::abs(w) >= 1.0) throw ValidationError("dilog", "argument must satisfy |w| < 1");
    Complex term = w, sum = w;
    for (int k = 2; k < 200000; ++k) {
        term *= w;
        Complex add = term / double(k * double(k));
        sum += add;
        if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

namespace {

void check_mode_index(const BathSpec& spec, int k) {
    if (k < 1 || (spec.modes && k > *spec.modes))
        throw ModeIndexOutOfRange("bath mode index " + std::to_string(k));
}

// log(1 - e^{-z + i Omega t}); z > 0 keeps the argument off the branch cut.
Complex log_one_minus(const BathSpec& spec, double t) {
    Complex w = std::exp(Complex(-spec.z, spec.omega0 * t));
    return std::log(1.0 - w);
}

}  // namespace

double rate_gamma(const BathSpec& spec, double t) {
    if (!spec.modes)
        return -2.0 * spec.h * spec.h / spec.omega0 * log_one_minus(spec, t).imag();
    double acc = 0.0;
    for (int k = 1; k <= *spec.modes; ++k) {
        double wk = spec.mode_frequency(k), gk = spec.coupling(k);
        acc += gk * gk / wk * std::sin(wk * t) * spec.thermal_factor(k);
    }
    return 2.0 * acc;
}

double drive_g(const BathSpec& spec, double t) {
    if (!spec.modes) {
        double c = spec.h * spec.h / spec.omega0;
        // Additive constant -log(1 - e^{-z}); equals the -log(1 - cosh z + sinh z)
        // form but stable for small z via log1p.
        return c * (log_one_minus(spec, t).real() - std::log1p(-std::exp(-spec.z)));
    }
    double acc = 0.0;
    for (int k = 1; k <= *spec.modes; ++k) {
        double wk = spec.mode_frequency(k), gk = spec.coupling(k);
        acc += gk * gk / wk * (1.0 - std::cos(wk * t));
    }
    return acc;
}

double integral_G(const BathSpec& spec, double t) {
    if (!spec.modes) {
        double h2 = spec.h * spec.h, om = spec.omega0;
        Complex w = std::exp(Complex(-spec.z, om * t));
        return -h2 * t / om * std::log1p(-std::exp(-spec.z)) - h2 / (om * om) * dilog(w).imag();
    }
    double acc = 0.0;
    for (int k = 1; k <= *spec.modes; ++k) {
        double wk = spec.mode_frequency(k), gk = spec.coupling(k);
        double r = gk / wk;
        acc += r * r * (wk * t - std::sin(wk * t));
    }
    return acc;
}

double integral_Gamma(const BathSpec& spec, double t) {
    if (!spec.modes) {
        double c = spec.h * spec.h / (spec.omega0 * spec.omega0);
        Complex w = std::exp(Complex(-spec.z, spec.omega0 * t));
        return c * (dilog(std::exp(-spec.z)).real() - dilog(w).real());
    }
    double acc = 0.0;
    for (int k = 1; k <= *spec.modes; ++k) {
        double wk = spec.mode_frequency(k), gk = spec.coupling(k);
        double r = gk / wk;
        acc += r * r * (1.0 - std::cos(wk * t)) * spec.thermal_factor(k);
    }
    return acc;
}

double bath_mode_photon_number(const BathSpec& spec, int k, double t, double n2_expect) {
    check_mode_index(spec, k);
    double r = spec.coupling(k) / spec.mode_frequency(k);
    return 2.0 * r * r * (1.0 - std::cos(spec.mode_frequency(k) * t)) * n2_expect;
}

std::pair<double, double> bath_mode_quadratures(const BathSpec& spec, int k, double t,
                                                double n_expect) {
    check_mode_index(spec, k);
    double wk = spec.mode_frequency(k);
    double r = spec.coupling(k) / wk;
    double x = std::sqrt(2.0) * r * (std::cos(wk * t) - 1.0) * n_expect;
    double p = -std::sqrt(2.0) * r * std::sin(wk * t) * n_expect;
    return {x, p};
}

}  // namespace floq
