#include <doctest.h>

#include <cmath>

#include "pairwell/atlas.hpp"
#include "pairwell/bessel.hpp"
#include "pairwell/effective.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/integrator.hpp"
#include "pairwell/quasienergy.hpp"
#include "test_helpers.hpp"

using namespace pairwell;

namespace {

// Direct brute-force evaluation of the coupling sums over a fixed wide
// window, independent of the library's adaptive truncation.
double brute_force_rho(double arg, double detuning, bool cross, int window = 200) {
    double sum = 0.0;
    for (int p = -window; p <= window; ++p) {
        const double jp = bessel_j(p, arg);
        const double jm = bessel_j(-p, arg);
        sum += (cross ? jp * jm : jp * jp) / (p + detuning);
    }
    return sum;
}

SystemParams sc_params(double f_ratio, double u1_ratio) {
    SystemParams p;
    p.nu = 1.0;
    p.alpha = 1.0;
    p.omega = 40.0;
    p.omega_z = 40.0;
    p.f = 0.5 * f_ratio * p.omega;
    p.u1 = 0.5 * u1_ratio * p.omega;
    return p;
}

}  // namespace

TEST_CASE("bessel_j values, parity and domain") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(7, 0.0) == 0.0);
    CHECK(bessel_j(0, 1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(bessel_j(1, 2.0) == doctest::Approx(0.57672480775687339).epsilon(1e-14));
    CHECK(bessel_j(3, 2.5) == doctest::Approx(0.21660039103911352).epsilon(1e-14));
    CHECK(bessel_j(-3, 2.5) == -bessel_j(3, 2.5));
    CHECK(bessel_j(-4, 2.5) == bessel_j(4, 2.5));
    CHECK(bessel_j(3, -2.5) == -bessel_j(3, 2.5));
    CHECK(bessel_j(-3, -2.5) == bessel_j(3, 2.5));
    CHECK_THROWS_AS(bessel_j(10001, 1.0), std::domain_error);
}

TEST_CASE("undriven couplings collapse to the single zero-photon term") {
    SystemParams p = sc_params(0.0, 3.5);  // f = 0, u1 = 70
    const EffectiveCouplings rho = couplings(Channel::InterwellSpinConserving, p);
    CHECK(rho.rho_a == doctest::Approx(p.omega / (2.0 * p.u1)).epsilon(1e-15));
    CHECK(rho.rho_b == doctest::Approx(p.omega / (2.0 * p.u1)).epsilon(1e-15));
    CHECK(rho.argument == 0.0);
    CHECK(rho.detuning == doctest::Approx(3.5));
}

TEST_CASE("cross coupling magnitude at the published balance point") {
    // beta1 beta2 = nu^4 rho_2^2/omega^2 at f = 90.491 with beta = (0.01, 0.02)
    SystemParams p = sc_params(0.0, 3.5);
    p.f = 90.491;
    p.beta1 = 0.01;
    p.beta2 = 0.02;
    const EffectiveCouplings rho = couplings(Channel::InterwellSpinConserving, p);
    const double target = p.omega * std::sqrt(p.beta1 * p.beta2) / (p.nu * p.nu);
    CHECK(std::abs(std::abs(rho.rho_b) - target) / target < 1e-3);
    // and the adaptive sum agrees with a wide brute-force window
    CHECK(rho.rho_b ==
          doctest::Approx(brute_force_rho(2.0 * p.f / p.omega, 3.5, true)).epsilon(1e-12));
    CHECK(rho.rho_a ==
          doctest::Approx(brute_force_rho(2.0 * p.f / p.omega, 3.5, false)).epsilon(1e-12));
}

TEST_CASE("truncation window is converged") {
    SystemParams p = sc_params(5.5, 2.57);
    const EffectiveCouplings rho = couplings(Channel::InterwellSpinConserving, p);
    CHECK(rho.truncation_order >= static_cast<int>(std::ceil(std::abs(rho.argument))) + 40);
    const double edge = bessel_j(rho.truncation_order, rho.argument);
    const double tail = edge * edge * (1.0 / std::abs(rho.truncation_order + rho.detuning) +
                                       1.0 / std::abs(-rho.truncation_order + rho.detuning));
    CHECK(tail < 1e-14 * (1.0 + std::max(std::abs(rho.rho_a), std::abs(rho.rho_b))));
}

TEST_CASE("spin-flipping cross coupling is mirror symmetric in the drive") {
    testutil::ParamSampler sampler(9001);
    for (int draw = 0; draw < 100; ++draw) {
        SystemParams p = sampler.draw();
        p.alpha = 0.5;
        p.omega_z = sampler.uniform(20.0, 300.0);
        SystemParams mirrored = p;
        mirrored.f = 2.0 * p.omega_z - p.f;  // 2f/w -> 4W/w - 2f/w
        const double rho_b = couplings(Channel::InterwellSpinFlipping, p).rho_b;
        const double rho_b_mirrored = couplings(Channel::InterwellSpinFlipping, mirrored).rho_b;
        CHECK(std::abs(rho_b - rho_b_mirrored) < 1e-12 * (1.0 + std::abs(rho_b)));
    }
}

TEST_CASE("no such mirror symmetry in the spin-conserving channel") {
    // witness: 2f/omega = 0.9 against its reflection 3.1 about 2W/omega = 2
    SystemParams p = sc_params(0.9, 1.4);
    p.beta1 = p.beta2 = 0.01;
    SystemParams mirrored = sc_params(3.1, 1.4);
    mirrored.beta1 = mirrored.beta2 = 0.01;
    const auto spectrum = quasienergies(Channel::InterwellSpinConserving, p);
    const auto spectrum_mirrored = quasienergies(Channel::InterwellSpinConserving, mirrored);
    CHECK(spectrum.zeta_or_xi->imag() > 1e-3);
    CHECK(spectrum_mirrored.zeta_or_xi->imag() == 0.0);
    CHECK(spectrum.verdict == Verdict::Unstable);
    CHECK(spectrum_mirrored.verdict == Verdict::StableAllReal);
}

TEST_CASE("effective equations: pair block decouples from the unpaired state") {
    SystemParams p = sc_params(1.6, 1.4);
    const EffectiveCouplings rho = couplings(Channel::InterwellSpinConserving, p);
    Eigen::VectorXcd amplitudes(3);
    amplitudes << 1.0, 0.0, 0.0;  // (A5, A7, A2)
    const Eigen::VectorXcd rhs = effective_rhs(Channel::InterwellSpinConserving, p, amplitudes);
    const double g = 2.0 * p.nu * p.nu / p.omega;
    CHECK(std::abs(rhs(0) - Complex(0.0, -1.0) * g * rho.rho_a) < 1e-15);
    CHECK(std::abs(rhs(2) - Complex(0.0, -1.0) * g * rho.rho_b) < 1e-15);
    CHECK(std::abs(rhs(1)) == 0.0);
}

TEST_CASE("effective equations: dimension checks and trivial zero") {
    SystemParams p = sc_params(1.6, 1.4);
    Eigen::VectorXcd wrong(4);
    wrong.setZero();
    CHECK_THROWS_AS(effective_rhs(Channel::InterwellSpinConserving, p, wrong),
                    std::invalid_argument);

    SystemParams off = p;
    off.nu = 0.0;  // couplings enter as nu^2
    Eigen::VectorXcd amplitudes(3);
    amplitudes << 0.3, 0.4, 0.5;
    CHECK(effective_rhs(Channel::InterwellSpinConserving, off, amplitudes).norm() == 0.0);
}

TEST_CASE("intrawell well-1 block is Hermitian without gain") {
    SystemParams p;
    p.nu = 1.0;
    p.alpha = 1.0;
    p.delta = 1.0;
    p.omega = 40.0;
    p.omega_z = 40.0;
    p.f = 110.0;
    p.u1 = 51.5;
    p.u2 = 24.0;
    p.beta1 = 0.0;
    p.beta2 = 0.1;
    const Eigen::MatrixXcd m = effective_generator(Channel::IntrawellSpinFlipping, p);
    // (A2, A3) block self-adjoint => |A2|^2 + |A3|^2 conserved
    const Eigen::Matrix2cd block = m.block(1, 1, 2, 2);
    CHECK((block - block.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    // well-2 block is the well-1 block shifted by the loss alone
    const Eigen::Matrix2cd lossy = m.block(4, 4, 2, 2);
    const Eigen::Matrix2cd shift = lossy - block;
    CHECK(std::abs(shift(0, 0) - Complex(0.0, -0.2)) < 1e-15);
    CHECK(std::abs(shift(0, 1)) < 1e-15);
}

TEST_CASE("undriven balanced spectrum reduces to the pair-superexchange doublet") {
    SystemParams p = sc_params(0.0, 3.5);  // f = 0, u1 = 70, beta = 0
    const auto spectrum = quasienergies(Channel::InterwellSpinConserving, p);
    const double shift = 2.0 * p.nu * p.nu / p.u1;  // 2 nu^2 / u1
    REQUIRE(spectrum.energies.size() == 3);
    CHECK(spectrum.energies[0].real() == doctest::Approx(-shift).epsilon(1e-12));
    CHECK(spectrum.energies[1].real() == doctest::Approx(2.0 * p.u1).epsilon(1e-12));
    CHECK(spectrum.energies[2].real() == doctest::Approx(2.0 * p.u1 + shift).epsilon(1e-12));
    for (const auto& e : spectrum.energies) CHECK(std::abs(e.imag()) < 1e-14);
    CHECK(spectrum.verdict == Verdict::StableAllReal);
}

TEST_CASE("balanced stability threshold") {
    // Im(zeta) = 0 exactly when the coherent pair coupling beats the
    // total dissipation
    SystemParams p = sc_params(1.6, 1.4);
    p.beta1 = p.beta2 = 0.01;
    auto spectrum = quasienergies(Channel::InterwellSpinConserving, p);
    const double coupling =
        2.0 * p.nu * p.nu * std::abs(couplings(Channel::InterwellSpinConserving, p).rho_b) /
        p.omega;
    REQUIRE(coupling >= 2.0 * p.beta1);
    CHECK(spectrum.zeta_or_xi->imag() == 0.0);
    CHECK(spectrum.verdict == Verdict::StableAllReal);

    p.beta1 = p.beta2 = 0.51 * coupling;  // dissipation now dominates
    spectrum = quasienergies(Channel::InterwellSpinConserving, p);
    CHECK(spectrum.zeta_or_xi->imag() > 0.0);
    CHECK(spectrum.verdict == Verdict::Unstable);
}

TEST_CASE("unbalanced spectrum at the balance condition") {
    SystemParams p = sc_params(0.0, 3.5);
    p.beta1 = 0.01;
    p.beta2 = 0.02;
    const SolveResult root =
        solve_balance_f(Channel::InterwellSpinConserving, p, 85.0, 95.0, 90.491);
    p.f = root.value;
    const auto spectrum = quasienergies(Channel::InterwellSpinConserving, p);
    const double tol = stability_tolerance(p);
    // one real quasienergy, the others decay at (b1 - b2) and 2 (b1 - b2)
    CHECK(std::abs(spectrum.energies[0].imag() - (p.beta1 - p.beta2)) < 1e-9);
    CHECK(std::abs(spectrum.energies[1].imag() - 2.0 * (p.beta1 - p.beta2)) < 1e-9);
    CHECK(std::abs(spectrum.energies[2].imag()) < tol);
    CHECK(spectrum.verdict == Verdict::StableDissipative);
}

TEST_CASE("spectrum midpoint identity over random draws") {
    // (E2 + E3)/2 - E1 = 2 u1 + 6 nu^2 rho_a / omega; the discriminant
    // cancels pairwise
    testutil::ParamSampler sampler(9002);
    for (int draw = 0; draw < 50; ++draw) {
        SystemParams p = sampler.draw();
        p.alpha = 1.0;
        SystemParams probe = p;
        probe.delta = 0.0;
        const auto spectrum = quasienergies(Channel::InterwellSpinConserving, probe);
        const auto rho = couplings(Channel::InterwellSpinConserving, probe);
        const Complex mid =
            0.5 * (spectrum.energies[1] + spectrum.energies[2]) - spectrum.energies[0];
        const double expected = 2.0 * probe.u1 + 6.0 * probe.nu * probe.nu * rho.rho_a / probe.omega;
        CHECK(std::abs(mid.real() - expected) < 1e-10 * (1.0 + std::abs(expected)));
        CHECK(std::abs(mid.imag()) < 1e-12);  // net gain and discriminant both cancel
    }
}

TEST_CASE("principal branch of the discriminant") {
    CHECK(discriminant(0.05, 0.02) == Complex(std::sqrt(0.05 * 0.05 - 0.02 * 0.02), 0.0));
    const Complex im = discriminant(0.01, 0.02);
    CHECK(im.real() == 0.0);
    CHECK(im.imag() == doctest::Approx(std::sqrt(3.0) * 0.01).epsilon(1e-14));
}

TEST_CASE("resonant detuning raises instead of corrupting the sums") {
    SystemParams p = sc_params(1.6, 1.0);  // 2 u1 / omega = 1 exactly
    CHECK_THROWS_AS(couplings(Channel::InterwellSpinConserving, p), ResonanceError);
    CHECK_THROWS_AS(quasienergies(Channel::InterwellSpinConserving, p), ResonanceError);
    try {
        couplings(Channel::InterwellSpinConserving, p);
    } catch (const ResonanceError& err) {
        CHECK(err.p() == -1);
        CHECK(std::abs(err.denominator()) < 1e-6);
    }
}

TEST_CASE("intrawell spectrum structure") {
    SystemParams p;
    p.nu = 1.0;
    p.alpha = 1.0;
    p.delta = 1.0;
    p.omega = 40.0;
    p.omega_z = 40.0;
    p.f = 110.0;
    p.u1 = 51.50137757885238;
    p.u2 = 24.0;
    p.beta1 = 0.0;
    p.beta2 = 0.1;
    auto spectrum = intrawell_spectrum(p);
    REQUIRE(spectrum.energies.size() == 6);
    const double tol = stability_tolerance(p);
    int reals = 0, decaying = 0;
    for (const auto& e : spectrum.energies) {
        if (std::abs(e.imag()) < tol) ++reals;
        if (std::abs(e.imag() + 2.0 * p.beta2) < 1e-10) ++decaying;
    }
    CHECK(reals == 3);
    CHECK(decaying == 3);
    CHECK(spectrum.verdict == Verdict::StableDissipative);
    CHECK_FALSE(spectrum.zeta_or_xi.has_value());
    CHECK(interwell_suppressed(p));

    SUBCASE("Hermitian limit: all six real") {
        p.beta2 = 0.0;
        spectrum = intrawell_spectrum(p);
        for (const auto& e : spectrum.energies) CHECK(std::abs(e.imag()) < tol);
        CHECK(spectrum.verdict == Verdict::StableAllReal);
    }

    SUBCASE("no Raman coupling: bare interaction energies plus gain-loss shifts") {
        p.delta = 0.0;
        spectrum = intrawell_spectrum(p);
        CHECK(spectrum.energies[0] == Complex(2.0 * p.u2, 0.0));
        CHECK(spectrum.energies[1] == Complex(2.0 * p.u1, 0.0));
        CHECK(spectrum.energies[3] == Complex(2.0 * p.u2, -2.0 * p.beta2));
        CHECK(spectrum.energies[5] == Complex(2.0 * p.u1, -2.0 * p.beta2));
    }
}

TEST_CASE("intrawell spectrum against the monodromy oracle without hopping") {
    // with nu = 0 the six-state block is exactly closed, so the one-period
    // propagator validates all intrawell signs and shifts
    SystemParams p;
    p.nu = 0.0;
    p.alpha = 1.0;
    p.delta = 1.0;
    p.omega = 40.0;
    p.omega_z = 40.0;
    p.f = 110.0;
    p.u1 = 51.50137757885238;
    p.u2 = 24.0;
    p.beta1 = 0.0;
    p.beta2 = 0.1;
    const auto analytic = intrawell_spectrum(p);
    const MonodromyResult oracle = monodromy(p, {1, 2, 3, 4, 5, 6}, IntegratorConfig{});
    for (const auto& target : analytic.energies) {
        double best = 1e300;
        for (const auto& numeric : oracle.quasienergies)
            best = std::min(best, std::abs(align_quasienergy(numeric, target, p.omega) - target));
        CHECK(best < 5e-4);
    }
}

TEST_CASE("spin-flipping spectrum against the monodromy oracle") {
    SystemParams p;
    p.nu = 1.0;
    p.alpha = 0.5;
    p.omega = 40.0;
    p.omega_z = 200.0;
    p.f = 0.5 * 11.83 * p.omega;
    p.u1 = 28.0;
    p.beta1 = p.beta2 = 0.01;
    const auto analytic = quasienergies(Channel::InterwellSpinFlipping, p);
    const MonodromyResult oracle = monodromy(p, {5, 9, 3}, IntegratorConfig{});
    for (const auto& target : analytic.energies) {
        double best = 1e300;
        for (const auto& numeric : oracle.quasienergies)
            best = std::min(best, std::abs(align_quasienergy(numeric, target, p.omega) - target));
        CHECK(best < 5e-3);
    }
}

TEST_CASE("effective trajectory conserves the well-1 pair norm without gain") {
    SystemParams p;
    p.nu = 1.0;
    p.alpha = 1.0;
    p.delta = 1.0;
    p.omega = 40.0;
    p.omega_z = 40.0;
    p.f = 110.0;
    p.u1 = 51.50137757885238;
    p.u2 = 24.0;
    p.beta1 = 0.0;
    p.beta2 = 0.1;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(10);
    psi(5 - 1) = psi(2 - 1) = std::sqrt(0.5);
    std::vector<double> times;
    for (int j = 0; j <= 60; ++j) times.push_back(j * 1.0);
    const Trajectory traj = effective_trajectory(Channel::IntrawellSpinFlipping, p, psi, times);
    for (std::size_t j = 0; j < traj.size(); ++j) {
        const double well1 = traj.probability_of_state(j, 1) + traj.probability_of_state(j, 2) +
                             traj.probability_of_state(j, 3);
        CHECK(well1 == doctest::Approx(0.5).epsilon(1e-10));
    }
}
