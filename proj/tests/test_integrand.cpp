#include "kashaev/asymptotics.hpp"
#include "kashaev/errors.hpp"
#include "kashaev/integrand.hpp"
#include "support.hpp"

#include <random>

using namespace kashaev;
using namespace kashaev::test;

namespace {

Complex pii() { return {Real(0), pi()}; }

Complex random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {Real(u(rng)), Real(u(rng))};
}

const CableParams kPairs[] = {new_cable_params(1, 7), new_cable_params(2, 11), new_cable_params(1, 10)};

}  // namespace

TEST_SUITE("integrand") {

TEST_CASE("theta and delta at reference points") {
    PrecisionScope scope(kBits);
    const CableParams p = new_cable_params(1, 7);
    CHECK(abs(theta(p, Complex(0), Complex(0))) == 0);
    CHECK(abs(delta(p, Complex(0), Complex(0))) == 0);

    const Complex xi0 = pii() / Real(4);
    const Complex eta0 = pii() / Real(2);
    const Complex expected = Complex(pi() * pi() / 3) / (Real(2) * pii()) + pii();
    CHECK(dist(theta(p, xi0, eta0), expected) < 1e-35);
    CHECK(dist(delta(p, xi0, eta0), Complex(-pi() * pi() / 6)) < 1e-35);
}

TEST_CASE("critical point") {
    PrecisionScope scope(kBits);
    const auto [c1, c2] = critical_point(kPairs[0]);
    CHECK(dist(c1, pii() * Real(15) / Real(2)) < 1e-35);
    CHECK(dist(c2, pii() * Real(6)) < 1e-35);
    const auto [d1, d2] = critical_point(kPairs[1]);
    CHECK(dist(d1, pii() * Real(23) / Real(2)) < 1e-35);
    CHECK(dist(d2, pii() * Real(10)) < 1e-35);
    for (const CableParams& p : kPairs) {
        const auto [z1, z2] = critical_point(p);
        const auto [g1, g2] = grad_theta(p, z1, z2);
        CHECK(to_d(abs(g1)) < 1e-30);
        CHECK(to_d(abs(g2)) < 1e-30);
    }
}

TEST_CASE("gradient against central differences") {
    PrecisionScope scope(kBits);
    std::mt19937_64 rng(20240601);
    const Complex h(pow2(-40));
    for (const CableParams& p : kPairs) {
        for (int i = 0; i < 10; ++i) {
            const Complex z1 = random_point(rng), z2 = random_point(rng);
            const auto [g1, g2] = grad_theta(p, z1, z2);
            const Complex fd1 = (theta(p, z1 + h, z2) - theta(p, z1 - h, z2)) / (Real(2) * h);
            const Complex fd2 = (theta(p, z1, z2 + h) - theta(p, z1, z2 - h)) / (Real(2) * h);
            CHECK(dist(g1, fd1) < 1e-12);
            CHECK(dist(g2, fd2) < 1e-12);
        }
    }
}

TEST_CASE("partial in z2 on the line z1 = 0") {
    PrecisionScope scope(kBits);
    const CableParams p = kPairs[0];
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        const Complex z2 = random_point(rng);
        const Complex expected = -Real(2) * z2 / (pii() * Real(p.P)) - Real(8) * z2 / (pii() * Real(p.R));
        CHECK(dist(grad_theta(p, Complex(0), z2).second, expected) < 1e-30);
    }
}

TEST_CASE("theta = -delta/(pi i) + 4 z1 and delta is even") {
    PrecisionScope scope(kBits);
    std::mt19937_64 rng(11);
    for (const CableParams& p : kPairs) {
        for (int i = 0; i < 10; ++i) {
            const Complex z1 = random_point(rng), z2 = random_point(rng);
            CHECK(dist(theta(p, z1, z2), -delta(p, z1, z2) / pii() + Real(4) * z1) < 1e-30);
            CHECK(dist(delta(p, -z1, -z2), delta(p, z1, z2)) < 1e-30);
        }
    }
}

TEST_CASE("psi values and symmetries") {
    PrecisionScope scope(kBits);
    const CableParams p = kPairs[0];
    CHECK(dist(psi1(Complex(0)), Complex(Real(1) / 2)) < 1e-35);
    CHECK(to_d(abs(psi2(p, Complex(0)))) < 1e-35);
    for (int m = 0; m <= 4 * p.a + 1; ++m) CHECK(dist(psi1(saddle_z1(p, m)), Complex(Real(1) / 2)) < 1e-30);

    std::mt19937_64 rng(3);
    const Complex w1 = pii() / Real(2);
    for (const CableParams& q : kPairs) {
        const Complex w2 = pii() * Real(q.P);
        for (int i = 0; i < 8; ++i) {
            const Complex z = random_point(rng);
            CHECK(dist(psi1(z + w1), -psi1(z)) < 1e-25);
            CHECK(dist(psi1(-z), psi1(z)) < 1e-25);
            CHECK(dist(psi2(q, z + w2), -psi2(q, z)) < 1e-25);
            CHECK(dist(psi2(q, -z), -psi2(q, z)) < 1e-25);
        }
    }
    CHECK_THROWS_AS(psi1(pii() / Real(4)), Error);
    CHECK_THROWS_AS(psi2(p, pii() / Real(2)), Error);
}

TEST_CASE("poles and residues") {
    PrecisionScope scope(kBits);
    const CableParams p = kPairs[0];
    CHECK(poles_psi1(p).size() == static_cast<std::size_t>(2 * p.b + 1));
    CHECK(poles_psi2(p).size() == static_cast<std::size_t>(4 * p.a + 2));

    const PoleData x0 = pole_psi1(p, 0);
    CHECK(dist(x0.location, pii() / Real(4)) < 1e-35);
    CHECK(dist(x0.residue, Complex(Real(0), Real(-1) / 4)) < 1e-35);
    const PoleData e0 = pole_psi2(p, 0);
    CHECK(dist(e0.location, pii() / Real(2)) < 1e-35);
    CHECK(dist(e0.residue, Complex(boost::multiprecision::sqrt(Real(3)) / 4)) < 1e-35);

    CHECK_THROWS_AS(pole_psi1(p, 2 * p.b + 1), Error);
    CHECK_THROWS_AS(pole_psi2(p, -1), Error);

    // (z - pole) psi(z) averaged over opposite directions kills the constant Laurent term.
    const Real eps = dec("1e-15");
    const Complex dirs[] = {Complex(1), imag_unit(), cis(pi() / 3), cis(dec("2.2"))};
    for (const CableParams& q : kPairs) {
        for (const PoleData& d : poles_psi1(q)) {
            for (const Complex& dir : dirs) {
                const Complex w = dir * eps;
                const Complex lim = (w * psi1(d.location + w) - w * psi1(d.location - w)) / Real(2);
                CHECK(dist(lim, d.residue) < 1e-20);
            }
        }
        for (const PoleData& d : poles_psi2(q)) {
            for (const Complex& dir : dirs) {
                const Complex w = dir * eps;
                const Complex lim = (w * psi2(q, d.location + w) - w * psi2(q, d.location - w)) / Real(2);
                CHECK(dist(lim, d.residue) < 1e-20);
            }
        }
    }
}

TEST_CASE("saddles") {
    PrecisionScope scope(kBits);
    const CableParams p = kPairs[0];
    CHECK(dist(saddle_z1(p, 0), pii() * Real(2)) < 1e-35);
    CHECK(dist(saddle_z2(p, 0), pii() / Real(5)) < 1e-35);

    std::mt19937_64 rng(5);
    for (const CableParams& q : kPairs) {
        for (int m = 0; m <= 4 * q.a + 1; ++m) {
            const Complex eta = pole_psi2(q, m).location;
            const Complex zeta = saddle_z1(q, m);
            CHECK(to_d(abs(grad_theta(q, zeta, eta).first)) < 1e-30);
            const Complex z1 = random_point(rng);
            const Complex square = theta(q, zeta, eta) - Real(4) * (z1 - zeta) * (z1 - zeta) / (pii() * Real(q.R));
            CHECK(dist(theta(q, z1, eta), square) < 1e-28);
            // zeta_m is an integer multiple of pi i, a quarter period away from every psi1 pole.
            Real nearest = abs(zeta - pole_psi1(q, 0).location);
            for (const PoleData& d : poles_psi1(q)) nearest = std::min(nearest, abs(zeta - d.location));
            CHECK(nearest > pi() / (4 * boost::multiprecision::sqrt(Real(2))));
        }
        for (int l = 0; l <= 2 * q.b; ++l) {
            const Complex xi = pole_psi1(q, l).location;
            const Complex zeta = saddle_z2(q, l);
            CHECK(to_d(abs(grad_theta(q, xi, zeta).second)) < 1e-30);
            const Complex z2 = random_point(rng);
            const Complex square =
                theta(q, xi, zeta) - Real(q.Q) * (z2 - zeta) * (z2 - zeta) / (pii() * Real(q.P * q.R));
            CHECK(dist(theta(q, xi, z2), square) < 1e-28);
            // The psi2 poles can come as close as pi/(2Q) to zeta'_l but never coincide with it.
            Real nearest = abs(zeta - pole_psi2(q, 0).location);
            for (const PoleData& d : poles_psi2(q)) nearest = std::min(nearest, abs(zeta - d.location));
            CHECK(nearest >= pi() / (2 * q.Q) - pow2(-100));
        }
    }
}

TEST_CASE("F_N at residue points") {
    PrecisionScope scope(kBits);
    for (const CableParams& p : kPairs) {
        for (int N : {2, 3, 7}) {
            const Real sign = (N % 2 == 1) ? Real(1) : Real(-1);
            for (int l = 0; l <= 2 * p.b; l += 3) {
                for (int m = 0; m <= 4 * p.a + 1; ++m) {
                    const Complex S = Complex(real_of(s3_tilde(p, l, m)) * pi() * pi());
                    const Complex expected = sign / 2 * S * unit_phase(s3_tilde(p, l, m), N);
                    CHECK(rel(f_N(p, N, pole_psi1(p, l).location, pole_psi2(p, m).location), expected) < 1e-25);
                }
            }
            for (int l = 0; l <= 2 * p.b; ++l) {
                const TauS ts = tau_S_an(p, l);
                const Complex expected = sign / 2 * Complex(ts.S()) * unit_phase(ts.s_over_pi2, N);
                CHECK(rel(f_N(p, N, pole_psi1(p, l).location, saddle_z2(p, l)), expected) < 1e-25);
            }
        }
    }
}

}
