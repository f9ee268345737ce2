#pragma once

#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <utility>
#include <vector>

namespace kashaev {

/// The line {shift + e^{i pi/4} s : |s| <= s_max}.  `nodes` is the initial
/// number of quadrature nodes per unit length of s.
struct ContourSpec {
    Complex shift;
    Real s_max{12};
    int nodes = 8;
};

/// e^{i pi/4}
Complex contour_direction();

enum class PoleOf { Psi1, Psi2 };

struct PoleData {
    Complex location;
    Complex residue;
    int index = 0;
    PoleOf which = PoleOf::Psi1;
};

// theta(z1,z2) = -z2^2/(P pi i) - 4(z1-z2)^2/(R pi i) + 4 z1
Complex theta(const CableParams& p, const Complex& z1, const Complex& z2);
// delta(z1,z2) = z2^2/P + 4(z1-z2)^2/R
Complex delta(const CableParams& p, const Complex& z1, const Complex& z2);
// 1 / (2 cosh 2z)
Complex psi1(const Complex& z1);
// sinh(2z/P) / (2 cosh z)
Complex psi2(const CableParams& p, const Complex& z2);
// delta * exp(N theta)
Complex f_N(const CableParams& p, int N, const Complex& z1, const Complex& z2);

std::pair<Complex, Complex> critical_point(const CableParams& p);
std::pair<Complex, Complex> grad_theta(const CableParams& p, const Complex& z1, const Complex& z2);

std::vector<PoleData> poles_psi1(const CableParams& p);
std::vector<PoleData> poles_psi2(const CableParams& p);
PoleData pole_psi1(const CableParams& p, int l);
PoleData pole_psi2(const CableParams& p, int m);

/// zeta_m = R pi i / 2 + eta_m, critical point of z1 -> theta(z1, eta_m).
Complex saddle_z1(const CableParams& p, int m);
/// zeta'_l = P(2l+1) pi i / Q, critical point of z2 -> theta(xi_l, z2).
Complex saddle_z2(const CableParams& p, int l);

}  // namespace kashaev
