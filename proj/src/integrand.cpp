#include "kashaev/integrand.hpp"

#include "kashaev/errors.hpp"

#include <cmath>
#include <string>

namespace kashaev {

namespace {

Complex pi_i() { return {Real(0), pi()}; }

// Denominators closer to zero than this are treated as poles.  The quadrature
// contours stay at distance >= pi/(4 sqrt 2) from every pole, so nodes never
// trip it.
void check_pole(const Complex& denom, const char* what) {
    if (abs(denom) < pow2(-static_cast<long>(working_bits() / 2)))
        throw Error(ErrorKind::PoleProximity, what);
}

void check_index(int i, int hi, const char* what) {
    if (i < 0 || i > hi)
        throw Error(ErrorKind::IndexOutOfRange,
                    std::string(what) + " index " + std::to_string(i) + " outside [0," + std::to_string(hi) + "]");
}

}  // namespace

Complex contour_direction() {
    Real h = boost::multiprecision::sqrt(Real(2)) / 2;
    return {h, h};
}

Complex theta(const CableParams& p, const Complex& z1, const Complex& z2) {
    const Complex d = z1 - z2;
    const Complex pii = pi_i();
    return -(z2 * z2) / (pii * Real(p.P)) - Real(4) * d * d / (pii * Real(p.R)) + Real(4) * z1;
}

Complex delta(const CableParams& p, const Complex& z1, const Complex& z2) {
    const Complex d = z1 - z2;
    return z2 * z2 / Real(p.P) + Real(4) * d * d / Real(p.R);
}

Complex psi1(const Complex& z1) {
    const Complex c = cosh(z1 * Real(2));
    check_pole(c, "psi1 evaluated at a pole");
    return Complex(1) / (c * Real(2));
}

Complex psi2(const CableParams& p, const Complex& z2) {
    const Complex c = cosh(z2);
    check_pole(c, "psi2 evaluated at a pole");
    return sinh(z2 * Real(2) / Real(p.P)) / (c * Real(2));
}

Complex f_N(const CableParams& p, int N, const Complex& z1, const Complex& z2) {
    return delta(p, z1, z2) * exp(theta(p, z1, z2) * Real(N));
}

std::pair<Complex, Complex> critical_point(const CableParams& p) {
    const Complex pii = pi_i();
    return {pii * Real(p.Q) / Real(2), pii * Real(2 * p.P)};
}

std::pair<Complex, Complex> grad_theta(const CableParams& p, const Complex& z1, const Complex& z2) {
    const Complex pii = pi_i();
    const Complex d = z1 - z2;
    Complex g1 = Complex(4) - Real(8) * d / (pii * Real(p.R));
    Complex g2 = -Real(2) * z2 / (pii * Real(p.P)) + Real(8) * d / (pii * Real(p.R));
    return {g1, g2};
}

PoleData pole_psi1(const CableParams& p, int l) {
    check_index(l, 2 * p.b, "psi1 pole");
    PoleData d;
    d.which = PoleOf::Psi1;
    d.index = l;
    d.location = pi_i() * Real(2 * l + 1) / Real(4);
    // (-1)^{l-1} i/4
    const int sign = (l % 2 == 1) ? 1 : -1;
    d.residue = Complex(Real(0), Real(sign) / 4);
    return d;
}

PoleData pole_psi2(const CableParams& p, int m) {
    check_index(m, 4 * p.a + 1, "psi2 pole");
    PoleData d;
    d.which = PoleOf::Psi2;
    d.index = m;
    d.location = pi_i() * Real(2 * m + 1) / Real(2);
    const int sign = (m % 2 == 0) ? 1 : -1;
    d.residue = Complex(Real(sign) * boost::multiprecision::sin(Real(2 * m + 1) * pi() / p.P) / 2);
    return d;
}

std::vector<PoleData> poles_psi1(const CableParams& p) {
    std::vector<PoleData> out;
    for (int l = 0; l <= 2 * p.b; ++l) out.push_back(pole_psi1(p, l));
    return out;
}

std::vector<PoleData> poles_psi2(const CableParams& p) {
    std::vector<PoleData> out;
    for (int m = 0; m <= 4 * p.a + 1; ++m) out.push_back(pole_psi2(p, m));
    return out;
}

Complex saddle_z1(const CableParams& p, int m) {
    check_index(m, 4 * p.a + 1, "saddle_z1");
    return pi_i() * Real(p.R + 2 * m + 1) / Real(2);
}

Complex saddle_z2(const CableParams& p, int l) {
    check_index(l, 2 * p.b, "saddle_z2");
    return pi_i() * Real(p.P * (2 * l + 1)) / Real(p.Q);
}

}  // namespace kashaev
