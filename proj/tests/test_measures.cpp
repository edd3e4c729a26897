#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spinpair/measures.hpp"
#include "spinpair/model.hpp"
#include "spinpair/thermal.hpp"

using namespace spinpair;
using model::SpinPairParams;

namespace {

SpinPairParams params(int two_s, double J, double Jz, double h1, double h2) {
    SpinPairParams p;
    p.two_s = two_s;
    p.J = J;
    p.Jz = Jz;
    p.h1 = h1;
    p.h2 = h2;
    return p;
}

thermal::DensityMatrix gibbs(const SpinPairParams& p, double T) {
    return thermal::thermal_state(model::build_hamiltonian(p), T);
}

// ground state of the full pair space as a product-basis vector
std::vector<double> ground_vector(const SpinPairParams& p) {
    auto h = model::build_hamiltonian(p);
    auto gs = thermal::ground_state(h);
    return thermal::embed_block_vector(h, gs.members[0].magnetization, gs.members[0].vector);
}

}  // namespace

TEST_CASE("pure-state concurrence C = J/Delta") {
    CHECK(measures::concurrence_pure_psi(params(1, 1.0, 0.3, 0.7, 0.7)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    // h1 - h2 = sqrt(3) J gives Delta = 2J, C = 1/2
    CHECK(measures::concurrence_pure_psi(params(1, 1.0, 0.0, std::sqrt(3.0), 0.0)) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(measures::concurrence_pure_psi(params(1, 1.0, 0.0, 1e8, 0.0)) <= 1e-7);
    CHECK_THROWS_AS(measures::concurrence_pure_psi(params(2, 1.0, 0.0, 0.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("Wootters concurrence: Bell state 1, maximally mixed 0") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(measures::concurrence_wootters(thermal::projector({0.0, r, r, 0.0})) ==
          doctest::Approx(1.0).epsilon(1e-12));

    thermal::DensityMatrix mixed;
    mixed.entries = linalg::SymMatrix(4);
    for (int i = 0; i < 4; ++i) mixed.entries.set(i, i, 0.25);
    CHECK(measures::concurrence_wootters(mixed) == doctest::Approx(0.0));
}

TEST_CASE("Wootters equals the closed form 2 max(|w| - sqrt(p+ p-), 0) on thermal states") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (int rep = 0; rep < 300; ++rep) {
        auto p = params(1, std::abs(u(rng)) + 0.2, u(rng), u(rng), u(rng));
        const double T = std::abs(u(rng)) + 0.1;
        auto a = measures::halfspin_analytics(p, T);
        const double c = measures::concurrence_wootters(gibbs(p, T));
        worst = std::max(worst, std::abs(c - a.concurrence()));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("entanglement of formation endpoints and monotonicity") {
    CHECK(measures::eof_from_concurrence(0.0) == doctest::Approx(0.0));
    CHECK(measures::eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // C = 0.6 -> binary entropy of {0.9, 0.1}
    const double want = -(0.9 * std::log2(0.9) + 0.1 * std::log2(0.1));
    CHECK(measures::eof_from_concurrence(0.6) == doctest::Approx(want).epsilon(1e-14));
    double prev = -1.0;
    for (double c = 0.0; c <= 1.0; c += 0.05) {
        const double s = measures::eof_from_concurrence(c);
        CHECK(s >= prev);
        prev = s;
    }
    CHECK_THROWS_AS(measures::eof_from_concurrence(1.5), std::invalid_argument);
    CHECK_THROWS_AS(measures::eof_from_concurrence(-0.5), std::invalid_argument);
}

TEST_CASE("negativity anchors for the s=1 eigenstates at eta = 0") {
    auto a = measures::spinone_analytics(0.0);

    // |Psi_{+1}> = cos(a)|1,0> + sin(a)|0,1>
    std::vector<double> psi1(9, 0.0);
    psi1[1] = std::cos(a.alpha_plus);
    psi1[3] = std::sin(a.alpha_plus);
    CHECK(measures::negativity(thermal::projector(psi1), 2) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a.negativity_m1() == doctest::Approx(0.5).epsilon(1e-14));

    // M=0 ground state at Jz=0: N = (1 + 2 sqrt 2)/4
    std::vector<double> psi0(9, 0.0);
    psi0[2] = a.gamma_plus;   // |1,-1>
    psi0[4] = a.gamma_zero;   // |0,0>
    psi0[6] = a.gamma_minus;  // |-1,1>
    const double want = (1.0 + 2.0 * std::sqrt(2.0)) / 4.0;
    CHECK(measures::negativity(thermal::projector(psi0), 2) ==
          doctest::Approx(want).epsilon(1e-12));
    CHECK(a.negativity_m0() == doctest::Approx(want).epsilon(1e-14));
    CHECK(a.negativity_m0_eta_form() == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("s=1 closed forms vs partial-transpose negativity across eta") {
    for (double eta : {-3.0, -1.0, -0.4, 0.0, 0.3, 1.0, 2.5}) {
        auto a = measures::spinone_analytics(eta);

        std::vector<double> psi0(9, 0.0);
        psi0[2] = a.gamma_plus;
        psi0[4] = a.gamma_zero;
        psi0[6] = a.gamma_minus;
        CHECK(measures::negativity(thermal::projector(psi0), 2) ==
              doctest::Approx(a.negativity_m0()).epsilon(1e-12));
        CHECK(a.negativity_m0_eta_form() == doctest::Approx(a.negativity_m0()).epsilon(1e-12));
        CHECK(measures::negativity_pure(psi0, 2) ==
              doctest::Approx(a.negativity_m0()).epsilon(1e-10));

        // the Jz=0 M=0 coefficients are the exact eigenvector
        auto gs = ground_vector(params(2, 1.0, 0.0, eta / 2, -eta / 2));
        const double n_gs = measures::negativity_pure(gs, 2);
        if (std::abs(2.0 * std::sqrt(1.0 + eta * eta / 4.0)) >
            std::sqrt(2.0 + eta * eta)) {
            // M=0 is the ground sector for all eta at Jz=0
        }
        CHECK(n_gs == doctest::Approx(a.negativity_m0()).epsilon(1e-10));

        CHECK(a.negativity_m1() == doctest::Approx(1.0 / std::sqrt(4.0 + eta * eta)));
    }

    // N(|Psi_{+-1}|) strictly decreasing in |eta|
    double prev = 1.0;
    for (double eta = 0.0; eta <= 5.0; eta += 0.25) {
        const double n = measures::spinone_analytics(eta).negativity_m1();
        CHECK(n <= prev);
        if (eta > 0) CHECK(n < prev);
        prev = n;
    }
}

TEST_CASE("maximally entangled spin-s state has N = s, product states 0") {
    for (int two_s : {1, 2, 4, 6}) {
        const int d = two_s + 1;
        std::vector<double> psi(d * d, 0.0);
        for (int k = 0; k < d; ++k) psi[k * d + k] = 1.0 / std::sqrt(d);
        CHECK(measures::negativity_pure(psi, two_s) ==
              doctest::Approx(0.5 * two_s).epsilon(1e-10));
        CHECK(measures::negativity(thermal::projector(psi), two_s) ==
              doctest::Approx(0.5 * two_s).epsilon(1e-10));

        std::vector<double> prod(d * d, 0.0);
        prod[0] = 1.0;
        CHECK(measures::negativity_pure(prod, two_s) == doctest::Approx(0.0));
        CHECK(measures::negativity(thermal::projector(prod), two_s) ==
              doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("pure-state negativity equals PT negativity on random states (s <= 3)") {
    std::mt19937_64 rng(32);
    double worst = 0.0;
    for (int two_s : {1, 2, 3, 4, 5, 6}) {
        const int d = two_s + 1;
        for (int rep = 0; rep < 50; ++rep) {
            auto psi = oracles::random_state(d * d, rng);
            const double a = measures::negativity_pure(psi, two_s);
            const double b = measures::negativity(thermal::projector(psi), two_s);
            worst = std::max(worst, std::abs(a - b));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("entanglement entropy: Bell = 1, product = 0, |Psi-> matches EoF(J/Delta)") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(measures::entanglement_entropy_pure({0.0, r, r, 0.0}, 1) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(measures::entanglement_entropy_pure({1.0, 0.0, 0.0, 0.0}, 1) == doctest::Approx(0.0));

    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        auto p = params(1, 1.0, u(rng), u(rng), u(rng));
        auto v = model::derived_scales(p);
        auto bv = model::build_hamiltonian(p);
        auto blk = linalg::eig_sym_tridiag(bv.blocks.at(0));
        std::vector<double> psi(4, 0.0);
        psi[1] = blk.vec(0, 0);
        psi[2] = blk.vec(1, 0);
        CHECK(measures::entanglement_entropy_pure(psi, 1) ==
              doctest::Approx(measures::eof_from_concurrence(p.J / v.Delta)).epsilon(1e-12));
    }
}

TEST_CASE("coherence: diagonal states give zero, pure GS gives its entanglement entropy") {
    thermal::DensityMatrix diag;
    diag.entries = linalg::SymMatrix(9);
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    double z = 0.0;
    std::vector<double> w(9);
    for (double& x : w) {
        x = u(rng);
        z += x;
    }
    for (int i = 0; i < 9; ++i) diag.entries.set(i, i, w[i] / z);
    CHECK(measures::rel_entropy_coherence(diag) == doctest::Approx(0.0).epsilon(1e-12));

    auto p = params(2, 1.0, 0.4, 0.5, -0.1);
    auto psi = ground_vector(p);
    CHECK(measures::rel_entropy_coherence(thermal::projector(psi)) ==
          doctest::Approx(measures::entanglement_entropy_pure(psi, 2)).epsilon(1e-10));
}

TEST_CASE("coherence: thermal s=1/2 matches the exact closed expression") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        auto p = params(1, std::abs(u(rng)) + 0.2, u(rng), u(rng), u(rng));
        const double T = std::abs(u(rng)) + 0.15;
        auto a = measures::halfspin_analytics(p, T);
        worst = std::max(worst,
                         std::abs(measures::rel_entropy_coherence(gibbs(p, T)) - a.coherence()));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("coherence approaches the GS entanglement entropy as T -> 0") {
    for (auto p : {params(1, 1.0, 0.6, 0.3, -0.2), params(2, 1.0, 0.2, 0.4, 0.1),
                   params(4, 1.0, -0.4, 1.0, -1.3)}) {
        auto h = model::build_hamiltonian(p);
        const double gap = thermal::spectral_gap(h);
        REQUIRE(gap > 1e-6);
        const double T = gap / 50.0;
        auto psi = ground_vector(p);
        CHECK(std::abs(measures::rel_entropy_coherence(thermal::thermal_state(h, T)) -
                       measures::entanglement_entropy_pure(psi, p.two_s)) <= 1e-8);
    }
}

TEST_CASE("coherence asymptotics: leading term and next-order refinements") {
    // general leading term with J -> 0 vanishes
    auto pz = params(2, 1e-14, 0.4, 0.3, 0.1);
    CHECK(measures::coherence_asymptotic_leading(pz, 10.0) <= 1e-20);

    // s=1/2 anchor: leading coefficient 1/(16 ln 2) at kT = 100 J
    auto ph = params(1, 1.0, 0.0, 0.0, 0.0);
    CHECK(measures::coherence_asymptotic_leading(ph, 100.0) ==
          doctest::Approx(1e-4 / (16.0 * std::log(2.0))).epsilon(1e-12));

    // high-T decay: T^2 C_h -> (s(s+1) J)^2/(9 ln 2) within 0.5%
    for (int two_s : {1, 2, 4}) {
        auto p = params(two_s, 1.0, 0.3, 0.2, -0.4);
        const double kt = 200.0;
        const double ch = measures::rel_entropy_coherence(gibbs(p, kt));
        const double lead = measures::coherence_asymptotic_leading(p, kt);
        CHECK(std::abs(ch - lead) / lead <= 0.005);
    }

    // next-order terms cut the residual by far more than 10x at kT = 20 J
    {
        auto p = params(1, 1.0, 0.3, 0.2, -0.4);
        const double kt = 20.0;
        const double exact = measures::rel_entropy_coherence(gibbs(p, kt));
        const double lead = measures::coherence_asymptotic_leading(p, kt);
        const double refined = measures::coherence_asymptotic(p, kt);
        CHECK(std::abs(exact - lead) / std::abs(exact - refined) >= 10.0);
    }
    {
        auto p = params(2, 1.0, 0.0, 0.2, -0.4);
        const double kt = 20.0;
        const double exact = measures::rel_entropy_coherence(gibbs(p, kt));
        const double lead = measures::coherence_asymptotic_leading(p, kt);
        const double refined = measures::coherence_asymptotic(p, kt);
        CHECK(std::abs(exact - lead) / std::abs(exact - refined) >= 10.0);
    }

    // s=1 with Jz != 0 falls back to the leading term
    auto pj = params(2, 1.0, 0.5, 0.0, 0.0);
    CHECK(measures::coherence_asymptotic(pj, 50.0) ==
          doctest::Approx(measures::coherence_asymptotic_leading(pj, 50.0)));

    CHECK_THROWS_AS(measures::coherence_asymptotic(ph, 0.0), std::invalid_argument);
}

TEST_CASE("gauge invariance: all measures unchanged under J -> -J") {
    // H(-J) arises from H(J) by the site-2 pi rotation; measures must agree
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int two_s : {1, 2}) {
        auto p = params(two_s, 1.0, u(rng), u(rng), u(rng));
        const double T = 0.4;

        // build H(-J) densely through the sign similarity of the blocks
        auto h = model::build_hamiltonian(p);
        auto cert = model::gauge_flip_J(p);
        CHECK(cert.max_spectrum_diff <= 1e-12);
        CHECK(cert.max_entropy_diff <= 1e-10);

        // thermal measures through the flipped-couplings state: equal because
        // the flip is a local unitary that is diagonal in the standard basis
        auto rho = thermal::thermal_state(h, T);
        const int d = two_s + 1;
        thermal::DensityMatrix flipped;
        flipped.entries = linalg::SymMatrix(d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int ap = 0; ap < d; ++ap)
                    for (int bp = 0; bp < d; ++bp) {
                        // U = I x diag((-1)^k): conjugation flips sign per site-2 index parity
                        const double sgn = (((b + bp) % 2) == 0) ? 1.0 : -1.0;
                        flipped.entries.set(a * d + b, ap * d + bp,
                                            sgn * rho.entries(a * d + b, ap * d + bp));
                    }
        CHECK(std::abs(measures::negativity(rho, two_s) -
                       measures::negativity(flipped, two_s)) <= 1e-10);
        CHECK(std::abs(measures::rel_entropy_coherence(rho) -
                       measures::rel_entropy_coherence(flipped)) <= 1e-10);
        if (two_s == 1)
            CHECK(std::abs(measures::concurrence_wootters(rho) -
                           measures::concurrence_wootters(flipped)) <= 1e-10);
    }
}

TEST_CASE("s=1 M=0 negativity at eta=0 is maximal at Jz = J (paper's 'Jz=1')") {
    auto m0_negativity = [&](double jz) {
        auto h = model::build_hamiltonian(params(2, 1.0, jz, 0.0, 0.0));
        auto dec = linalg::eig_sym_tridiag(h.blocks.at(0));
        auto psi = thermal::embed_block_vector(h, 0, {dec.vec(0, 0), dec.vec(1, 0), dec.vec(2, 0)});
        return measures::negativity_pure(psi, 2);
    };
    const double at_j = m0_negativity(1.0);
    CHECK(at_j == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(m0_negativity(0.9) < at_j);
    CHECK(m0_negativity(1.1) < at_j);
}

TEST_CASE("at Jz = -J an M=0 eigenstate is maximally entangled (N = s)") {
    // the paper labels this case 'uniform AFM' although Jz < 0 is FM elsewhere;
    // only the mathematical statement is asserted here
    for (int two_s : {2, 4}) {
        auto h = model::build_hamiltonian(params(two_s, 1.0, -1.0, 0.0, 0.0));
        auto dec = linalg::eig_sym_tridiag(h.blocks.at(0));
        double best = 0.0;
        for (int k = 0; k < dec.dim; ++k) {
            std::vector<double> blk(dec.dim);
            for (int i = 0; i < dec.dim; ++i) blk[i] = dec.vec(i, k);
            best = std::max(best,
                            measures::negativity_pure(thermal::embed_block_vector(h, 0, blk), two_s));
        }
        CHECK(best == doctest::Approx(0.5 * two_s).epsilon(1e-10));
    }
}

TEST_CASE("error paths") {
    thermal::DensityMatrix bad;
    bad.entries = linalg::SymMatrix(9);
    CHECK_THROWS_AS(measures::concurrence_wootters(bad), std::invalid_argument);
    CHECK_THROWS_AS(measures::negativity(bad, 1), std::invalid_argument);
    std::vector<double> unnorm(4, 1.0);
    CHECK_THROWS_AS(measures::negativity_pure(unnorm, 1), std::invalid_argument);
    CHECK_THROWS_AS(measures::entanglement_entropy_pure(unnorm, 1), std::invalid_argument);

    thermal::DensityMatrix non_psd;
    non_psd.entries = linalg::SymMatrix(4);
    non_psd.entries.set(0, 0, 1.5);
    non_psd.entries.set(1, 1, -0.5);
    CHECK_THROWS_AS(measures::rel_entropy_coherence(non_psd), std::invalid_argument);
}
