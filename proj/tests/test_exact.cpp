#include <doctest.h>

#include "floq/exact.hpp"
#include "oracles.hpp"

using namespace floq;

namespace {
const SystemSpec kSys = oracles::reference_system(12);
const double kT = kSys.bath.period();
}  // namespace

TEST_CASE("influence functional basics") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        double t = unit(rng) * kT;
        // populations never decay
        CHECK(influence_functional(kSys, 3, 3, t) == Complex(1.0));
        // coherence modulus from Gamma alone
        double want = std::exp(-integral_Gamma(kSys.bath, t) * 9.0);
        CHECK(std::abs(std::abs(influence_functional(kSys, 4, 1, t)) - want) < 1e-14);
    }
    // unit modulus at stroboscopic times (complete bath revival)
    for (int l = 1; l <= 3; ++l)
        for (int n = 0; n < 5; ++n)
            for (int m = 0; m < 5; ++m)
                CHECK(std::abs(std::abs(influence_functional(kSys, n, m, l * kT)) - 1.0) <
                      1e-12);
    // explicit phase: F_20(t) = e^{i 4 G(t)} e^{-4 Gamma(t)}
    double t = 0.3 * kT;
    Complex want = std::exp(Complex(-4.0 * integral_Gamma(kSys.bath, t),
                                    4.0 * integral_G(kSys.bath, t)));
    CHECK(std::abs(influence_functional(kSys, 2, 0, t) - want) < 1e-14);
}

TEST_CASE("Fock states are stationary") {
    Vec amp = Vec::Zero(12);
    amp(3) = 1.0;
    DensityMatrix rho0 = density_from_ket({kSys.space, amp});
    DensityMatrix rho = evolve_exact(rho0, kSys, 1.234 * kT);
    CHECK((rho.elements - rho0.elements).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(return_probability(rho, rho0) == 1.0);
}

TEST_CASE("free resonator rotates coherences without damping") {
    SystemSpec free_sys = kSys;
    free_sys.bath.h = 0.0;
    DensityMatrix rho0 = density_from_ket(coherent_state(kSys.space, Complex(1.0, 0.0), 1e-6));
    double t = 0.4321 * kT;
    DensityMatrix rho = evolve_exact(rho0, free_sys, t);
    for (int n = 0; n < 12; ++n)
        for (int m = 0; m < 12; ++m) {
            Complex want = rho0.elements(n, m) * std::exp(Complex(0, -(n - m) * free_sys.omega * t));
            CHECK(std::abs(rho.elements(n, m) - want) < 1e-14);
        }
}

TEST_CASE("coherence envelope is e^{-Gamma (n-m)^2}") {
    std::mt19937_64 rng(37);
    DensityMatrix rho0 = oracles::random_density(kSys.space, rng);
    double t = 0.61 * kT;
    double gam = integral_Gamma(kSys.bath, t);
    DensityMatrix rho = evolve_exact(rho0, kSys, t);
    for (int n = 0; n < 12; ++n)
        for (int m = 0; m < 12; ++m) {
            double want = std::abs(rho0.elements(n, m)) * std::exp(-gam * (n - m) * (n - m));
            CHECK(std::abs(std::abs(rho.elements(n, m)) - want) < 1e-13);
        }
}

TEST_CASE("evolution composes and preserves structure") {
    std::mt19937_64 rng(41);
    DensityMatrix rho0 = oracles::random_density(kSys.space, rng);
    DensityMatrix two_step = evolve_exact(evolve_exact(rho0, kSys, kT), kSys, kT);
    // The exact channel depends only on t; strobing by T twice lands on 2T
    // because G is additive over periods and Gamma(T) = 0.
    DensityMatrix direct = evolve_exact(rho0, kSys, 2.0 * kT);
    CHECK((two_step.elements - direct.elements).cwiseAbs().maxCoeff() < 1e-12);

    std::uniform_real_distribution<double> unit(0.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        DensityMatrix rho = evolve_exact(rho0, kSys, unit(rng) * kT);
        CHECK((rho.elements - rho.elements.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(rho.elements.trace().real() - 1.0) < 1e-14);
    }
}

TEST_CASE("stroboscopic purification of pure states") {
    DensityMatrix cat = density_from_ket(cat_state(kSys.space, Complex(1.2, 0.0), 1e-6));
    for (int l = 1; l <= 5; ++l) {
        DensityMatrix rho = evolve_exact(cat, kSys, l * kT);
        CHECK(linear_entropy(rho) < 1e-12);
        CHECK(std::abs(purity(rho) - 1.0) < 1e-12);
    }
    // strictly mixed in between
    CHECK(linear_entropy(evolve_exact(cat, kSys, 0.5 * kT)) > 1e-3);
}

TEST_CASE("observables") {
    SUBCASE("linear entropy of pure and mixed states") {
        std::mt19937_64 rng(43);
        CHECK(linear_entropy(density_from_ket(oracles::random_ket(kSys.space, rng))) < 1e-12);
        CHECK(std::abs(linear_entropy(maximally_mixed(FockSpace(4))) - 0.75) < 1e-15);
    }
    SUBCASE("return probability at t = 0 is the purity") {
        std::mt19937_64 rng(47);
        DensityMatrix rho = oracles::random_density(kSys.space, rng);
        CHECK(std::abs(return_probability(rho, rho) - purity(rho)) < 1e-14);
    }
    SUBCASE("n and n^2 moments") {
        Vec amp = Vec::Zero(12);
        amp(2) = 1.0;
        DensityMatrix fock2 = density_from_ket({kSys.space, amp});
        CHECK(n_expectation(fock2) == 2.0);
        CHECK(n2_expectation(fock2) == 4.0);
        Vec vac = Vec::Zero(12);
        vac(0) = 1.0;
        CHECK(n2_expectation(density_from_ket({kSys.space, vac})) == 0.0);
    }
    SUBCASE("n^2 is conserved") {
        std::mt19937_64 rng(53);
        DensityMatrix rho0 = oracles::random_density(kSys.space, rng);
        double want = n2_expectation(rho0);
        std::uniform_real_distribution<double> unit(0.0, 3.0);
        for (int i = 0; i < 30; ++i)
            CHECK(std::abs(n2_expectation(evolve_exact(rho0, kSys, unit(rng) * kT)) - want) <
                  1e-12);
    }
}
