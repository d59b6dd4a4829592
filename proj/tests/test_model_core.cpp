#include <doctest.h>

#include <cmath>
#include <complex>

#include "pairwell/channel.hpp"
#include "pairwell/fock_basis.hpp"
#include "pairwell/hamiltonian.hpp"
#include "pairwell/integrator.hpp"
#include "test_helpers.hpp"

using namespace pairwell;
using Complexd = std::complex<double>;

TEST_CASE("basis order matches the fixed amplitude indexing") {
    CHECK(fock::label(1) == "|1100>");
    CHECK(fock::label(2) == "|2000>");
    CHECK(fock::label(3) == "|0200>");
    CHECK(fock::label(4) == "|0011>");
    CHECK(fock::label(5) == "|0020>");
    CHECK(fock::label(6) == "|0002>");
    CHECK(fock::label(7) == "|1010>");
    CHECK(fock::label(8) == "|1001>");
    CHECK(fock::label(9) == "|0110>");
    CHECK(fock::label(10) == "|0101>");
    for (int k = 1; k <= fock::kDim; ++k) {
        CHECK(fock::state(k).total() == 2);
        CHECK(fock::index_of(fock::state(k)) == k);  // bijection
        CHECK(fock::parse_label(fock::label(k)) == k);
    }
    CHECK(fock::parse_label("0020") == 5);
    CHECK_THROWS_AS(fock::parse_label("|0030>"), std::invalid_argument);
    CHECK_THROWS_AS(fock::parse_label("|110>"), std::invalid_argument);
}

// Coefficient matrix of the three coupled spin-conserving amplitude
// equations, written out directly as an independent reference.
static Eigen::Matrix3cd reduced_reference(const SystemParams& p, double t) {
    const Complexd i_unit(0.0, 1.0);
    const double drive = std::cos(p.omega * t);
    const double root2nu = std::sqrt(2.0) * p.nu;
    Eigen::Matrix3cd m;  // order (c5, c7, c2)
    m.setZero();
    m(0, 0) = (2.0 * p.omega_z - 2.0 * p.f) * drive + 2.0 * p.u1 - 2.0 * i_unit * p.beta2;
    m(0, 1) = root2nu;
    m(1, 0) = root2nu;
    m(1, 1) = 2.0 * p.omega_z * drive + i_unit * (p.beta1 - p.beta2);
    m(1, 2) = root2nu;
    m(2, 1) = root2nu;
    m(2, 2) = (2.0 * p.omega_z + 2.0 * p.f) * drive + 2.0 * p.u1 + 2.0 * i_unit * p.beta1;
    return m;
}

TEST_CASE("spin-conserving projection reproduces the reduced coefficient matrix") {
    testutil::ParamSampler sampler(7001);
    const int subspace[3] = {5, 7, 2};
    for (int draw = 0; draw < 100; ++draw) {
        SystemParams p = sampler.draw();
        p.alpha = 1.0;
        const double t = sampler.uniform(0.0, 2.0 * p.period());
        const Matrix10 h = build_hamiltonian(p, t);
        const Eigen::Matrix3cd expected = reduced_reference(p, t);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs(h(subspace[r] - 1, subspace[c] - 1) - expected(r, c)) < 1e-12);
    }
}

TEST_CASE("half-integer alpha leaves only spin-flipping hopping") {
    SystemParams p;
    p.nu = 1.3;
    p.alpha = 0.5;
    p.omega = 40.0;
    const Matrix10 h = build_hamiltonian(p, 0.17);
    const double root2nu = std::sqrt(2.0) * p.nu;
    // -nu (a1dn^dag a2up - a1up^dag a2dn + H.c.)
    CHECK(h(9 - 1, 5 - 1).real() == doctest::Approx(-root2nu).epsilon(1e-14));
    CHECK(h(3 - 1, 9 - 1).real() == doctest::Approx(-root2nu).epsilon(1e-14));
    CHECK(h(8 - 1, 2 - 1).real() == doctest::Approx(root2nu).epsilon(1e-14));
    CHECK(h(6 - 1, 8 - 1).real() == doctest::Approx(root2nu).epsilon(1e-14));
    // no spin-conserving transfer
    CHECK(std::abs(h(7 - 1, 5 - 1)) < 1e-14);
    CHECK(std::abs(h(2 - 1, 7 - 1)) < 1e-14);
    CHECK(std::abs(h(9 - 1, 6 - 1)) < 1e-14);
}

TEST_CASE("interaction diagonal carries 2U1 on same-spin pairs and 2U2 on mixed pairs") {
    SystemParams p;
    p.nu = 0.0;
    p.omega = 40.0;
    p.u1 = 31.0;
    p.u2 = 13.0;
    const Matrix10 h = build_hamiltonian(p, 0.0);
    for (int k : {2, 3, 5, 6}) CHECK(h(k - 1, k - 1).real() == doctest::Approx(2.0 * p.u1));
    for (int k : {1, 4}) CHECK(h(k - 1, k - 1).real() == doctest::Approx(2.0 * p.u2));
    for (int k : {7, 8, 9, 10}) CHECK(std::abs(h(k - 1, k - 1)) < 1e-14);
}

TEST_CASE("static limit is Hermitian") {
    SystemParams p;
    p.nu = 0.7;
    p.alpha = 0.0;
    p.delta = 0.0;
    p.omega = 40.0;
    p.f = 0.0;
    p.u1 = 12.0;
    const Matrix10 h = build_hamiltonian(p, 0.0);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gain-loss free Hamiltonian is Hermitian at every sampled time") {
    testutil::ParamSampler sampler(7002);
    for (int draw = 0; draw < 20; ++draw) {
        SystemParams p = sampler.draw();
        p.beta1 = p.beta2 = 0.0;
        p.alpha = sampler.uniform(0.0, 2.0);
        p.delta = sampler.uniform(0.0, 3.0);
        const double t = sampler.uniform(0.0, 5.0);
        const Matrix10 h = build_hamiltonian(p, t);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("Hamiltonian is periodic in the driving period") {
    testutil::ParamSampler sampler(7003);
    SystemParams p = sampler.draw();
    p.delta = 0.4;
    const double t = 1.234;
    const Matrix10 a = build_hamiltonian(p, t);
    const Matrix10 b = build_hamiltonian(p, t + p.period());
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + a.cwiseAbs().maxCoeff()));
}

TEST_CASE("channel subspaces and their preconditions") {
    SystemParams sc;
    sc.alpha = 1.0;
    SystemParams sf;
    sf.alpha = 0.5;
    SystemParams iw;
    iw.alpha = 1.0;
    iw.delta = 1.0;

    CHECK(channel_subspace(Channel::InterwellSpinConserving, sc, "|0020>") ==
          std::vector<int>{5, 7, 2});
    CHECK(channel_subspace(Channel::InterwellSpinFlipping, sf, "|0020>") ==
          std::vector<int>{5, 9, 3});
    CHECK(channel_subspace(Channel::IntrawellSpinFlipping, iw, "superposition") ==
          std::vector<int>{5, 4, 6, 2, 1, 3});
    CHECK(channel_subspace(Channel::IntrawellSpinFlipping, iw, "|2000>") ==
          std::vector<int>{5, 4, 6, 2, 1, 3});

    // channel/parameter mismatches are rejected
    CHECK_THROWS_AS(channel_subspace(Channel::InterwellSpinConserving, sf, "|0020>"),
                    std::invalid_argument);
    CHECK_THROWS_AS(channel_subspace(Channel::InterwellSpinFlipping, sc, "|0020>"),
                    std::invalid_argument);
    SystemParams raman = sc;
    raman.delta = 0.3;
    CHECK_THROWS_AS(channel_subspace(Channel::InterwellSpinConserving, raman, "|0020>"),
                    std::invalid_argument);
    // initial state outside the subspace
    CHECK_THROWS_AS(channel_subspace(Channel::InterwellSpinConserving, sc, "|1100>"),
                    std::invalid_argument);
}

TEST_CASE("subspace closure under exact propagation") {
    IntegratorConfig cfg;
    cfg.t_end = 5.0;
    cfg.sample_stride = 256;

    auto closure_leak = [&](const SystemParams& p, const std::vector<int>& subspace,
                            const Eigen::VectorXcd& psi0) {
        const Trajectory traj = integrate(p, psi0, cfg);  // full 10-state propagation
        double leak = 0.0;
        for (std::size_t j = 0; j < traj.size(); ++j) {
            for (int k = 1; k <= fock::kDim; ++k) {
                bool inside = false;
                for (int s : subspace) inside = inside || s == k;
                if (!inside) leak = std::max(leak, std::abs(traj.amplitudes[j](k - 1)));
            }
        }
        return leak;
    };

    SystemParams sc;
    sc.nu = 1.0;
    sc.alpha = 1.0;
    sc.omega = 40.0;
    sc.omega_z = 40.0;
    sc.f = 32.0;
    sc.u1 = 28.0;
    sc.beta1 = sc.beta2 = 0.01;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(10);
    psi(5 - 1) = std::sqrt(0.5);
    psi(7 - 1) = Complexd(0.3, 0.4);
    psi(2 - 1) = std::sqrt(0.5 - 0.25);
    CHECK(closure_leak(sc, {5, 7, 2}, psi) < 1e-12);

    SystemParams sf = sc;
    sf.alpha = 0.5;
    psi.setZero();
    psi(5 - 1) = 1.0;
    CHECK(closure_leak(sf, {5, 9, 3}, psi) < 1e-12);

    // the intrawell six-state block closes exactly once interwell hopping
    // is switched off
    SystemParams iw;
    iw.nu = 0.0;
    iw.alpha = 1.0;
    iw.delta = 1.0;
    iw.omega = 40.0;
    iw.omega_z = 40.0;
    iw.f = 110.0;
    iw.u1 = 51.5;
    iw.u2 = 24.0;
    iw.beta2 = 0.1;
    psi.setZero();
    psi(5 - 1) = psi(2 - 1) = std::sqrt(0.5);
    CHECK(closure_leak(iw, {5, 4, 6, 2, 1, 3}, psi) < 1e-12);
}

TEST_CASE("parameter validation and derived quantities") {
    SystemParams p;
    p.omega = 40.0;
    p.nu = 2.0;
    p.delta = 1.0;
    CHECK(p.epsilon() == doctest::Approx(0.05));
    CHECK(p.theta() == doctest::Approx(0.025));

    SystemParams bad = p;
    bad.omega = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.nu = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.beta2 = -0.01;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("resonance guard distance") {
    SystemParams p;
    p.omega = 40.0;
    p.u1 = 60.0;  // 2 u1 = 3 omega
    p.u2 = 23.0;
    CHECK(p.resonance_margin() == doctest::Approx(0.0));
    CHECK(p.near_resonance());

    p.u1 = 28.0;  // 2 u1 = 56, distances {56, 16, 24}
    p.u2 = 23.0;  // 2 u2 = 46, distances {46, 6, 34}
    CHECK(p.resonance_margin() == doctest::Approx(6.0));
    CHECK_FALSE(p.near_resonance());
}
