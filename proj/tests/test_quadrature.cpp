#include "kashaev/asymptotics.hpp"
#include "kashaev/errors.hpp"
#include "kashaev/integrand.hpp"
#include "kashaev/quadrature.hpp"
#include "kashaev/skein.hpp"
#include "support.hpp"

#include <cmath>

using namespace kashaev;
using namespace kashaev::test;

namespace {

// exact values at q = e^{2 pi i/N} for (a,b) = (1,7)
Complex j2_17() { return Complex(-15); }
Complex j3_17() { return {Real(4), 9 * boost::multiprecision::sqrt(Real(3))}; }

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("gaussian along the contour") {
    const PrecisionContext ctx;
    PrecisionScope scope(kBits + 32);
    const int N = 10;
    const Complex pii(Real(0), pi());
    LineIntegrand f = [&](const Complex& z) { return exp(-(z * z) * Real(N) / pii); };
    const IntegralResult r = integrate_line(f, truncate_contour(f, Complex(), ctx), ctx);
    const Complex expected = cis(pi() / 4) * pi() / boost::multiprecision::sqrt(Real(N));
    CHECK(rel(r.value, expected) < 1e-20);
    CHECK(r.nodes_used > 0);
}

TEST_CASE("zero and odd integrands") {
    const PrecisionContext ctx;
    PrecisionScope scope(kBits + 32);
    LineIntegrand zero = [](const Complex&) { return Complex(); };
    CHECK(to_d(abs(integrate_line(zero, ContourSpec{}, ctx).value)) == 0);

    LineIntegrand odd = [](const Complex& z) { return z * exp(imag_unit() * z * z); };
    const IntegralResult r = integrate_line(odd, truncate_contour(odd, Complex(), ctx), ctx);
    CHECK(to_d(abs(r.value)) < 1e-30);
}

TEST_CASE("shifted gaussian is independent of the shift") {
    const PrecisionContext ctx;
    PrecisionScope scope(kBits + 32);
    LineIntegrand f = [](const Complex& z) { return exp(imag_unit() * z * z); };
    const Complex base = integrate_line(f, truncate_contour(f, Complex(), ctx), ctx).value;
    const Complex shift(dec("0.7"), dec("-1.3"));
    const Complex moved = integrate_line(f, truncate_contour(f, shift, ctx), ctx).value;
    CHECK(rel(moved, base) < 1e-25);
}

TEST_CASE("I_3 is the double residue sum") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    const IntegralResult r = compute_I_k(p, Level(3), 3, ctx);
    PrecisionScope scope(kBits + 32);
    const Complex tpi(Real(0), 2 * pi());
    Complex sum;
    for (int l = 0; l <= 2 * p.b; ++l)
        for (int m = 0; m <= 4 * p.a + 1; ++m) {
            const PoleData x = pole_psi1(p, l), y = pole_psi2(p, m);
            sum += tpi * tpi * x.residue * y.residue * f_N(p, 3, x.location, y.location);
        }
    CHECK(rel(r.value, sum) < 1e-30);
    CHECK_THROWS_AS(compute_I_k(p, Level(3), 4, ctx), Error);
}

TEST_CASE("J_3 piece equals its closed form") {
    const PrecisionContext ctx;
    for (const CableParams& p : {new_cable_params(1, 7), new_cable_params(2, 11)}) {
        for (int N : {3, 11}) {
            const Complex j3 = compute_J_k(p, Level(N), 3, ctx);
            PrecisionScope scope(kBits);
            CHECK(dist(j3, proof_form_J3(p, N, ctx)) < 1e-20);
        }
    }
}

TEST_CASE("literal and saddle routes agree") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    for (int k : {1, 2}) {
        const IntegralResult lit = compute_I_k(p, Level(3), k, ctx, LineRoute::Literal);
        const IntegralResult sad = compute_I_k(p, Level(3), k, ctx, LineRoute::Saddle);
        PrecisionScope scope(kBits);
        CHECK(rel(lit.value, sad.value) < 1e-30);
    }
}

TEST_CASE("exact values at N = 2 and 3") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    const Complex j2 = exact_jones(p, Level(2), ctx);
    const Complex j3 = exact_jones(p, Level(3), ctx, JonesRoute::Direct);
    const Complex j3d = exact_jones(p, Level(3), ctx, JonesRoute::Decomposed);
    PrecisionScope scope(kBits);
    CHECK(rel(j2, j2_17()) < 1e-30);
    CHECK(rel(j3, j3_17()) < 1e-30);
    CHECK(rel(j3d, j3) < 1e-30);
}

TEST_CASE("direct integral matches the skein value") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    const IntegralResult in = compute_I_N(p, Level(2), ctx);
    const Complex sk = oracle_jones(p, Level(2), ctx);
    PrecisionScope scope(kBits);
    const Complex j = framing_phase(p, 2) * rescale_factor(p, 2) * in.value;
    CHECK(rel(j, sk) < ctx.tol_cross);
}

TEST_CASE("growth of J_N over N^2 stays bounded") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    for (int N : {25, 51, 101, 201}) {
        const Complex j = exact_jones(p, Level(N), ctx);
        const double ratio = std::exp(log_abs(j)) / (double(N) * N);
        CHECK(ratio < 3.0);
        CHECK(ratio > 0.5);
    }
}

TEST_CASE("J_2 piece against the printed and corrected closed forms") {
    const PrecisionContext ctx;
    const CableParams p = new_cable_params(1, 7);
    std::vector<double> ns, printed, corrected;
    for (int N : {25, 51, 101}) {
        const Complex j2 = compute_J_k(p, Level(N), 2, ctx);
        PrecisionScope scope(kBits);
        ns.push_back(N);
        printed.push_back(dist(j2, proof_form_J2(p, N, ctx)));
        corrected.push_back(dist(j2, proof_form_J2_corrected(p, N, ctx)));
        CHECK(corrected.back() / std::sqrt(double(N)) < 5.0);
    }
    CHECK(loglog_slope(ns, corrected) < 0.7);
    CHECK(loglog_slope(ns, printed) > 1.2);
}

TEST_CASE("framing phase and rescale factor") {
    const CableParams p = new_cable_params(1, 7);
    PrecisionScope scope(kBits);
    CHECK(to_d(abs(abs(framing_phase(p, 5)) - Real(1))) < 1e-35);
    const Complex r = rescale_factor(p, 2);
    CHECK(to_d(abs(r.re)) == 0);
    CHECK(r.im < 0);
    CHECK(rescale_factor(p, 3).im > 0);
}

}

TEST_SUITE("quadrature_nested") {

TEST_CASE("nested and factorized surface integrals agree") {
    const PrecisionContext ctx(80);
    const CableParams p = new_cable_params(1, 7);
    const IntegralResult fast = integrate_surface(p, 2, Complex(), Complex(), ctx);
    const IntegralResult slow = integrate_surface_nested(p, 2, Complex(), Complex(), ctx);
    PrecisionScope scope(80);
    CHECK(rel(slow.value, fast.value) < 1e-20);
}

}
