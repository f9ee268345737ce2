#pragma once

#include "kashaev/integrand.hpp"
#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <functional>

namespace kashaev {

struct IntegralResult {
    Complex value;
    Real error_estimate{0};
    Real s_max_used{0};
    long nodes_used = 0;
    unsigned working_bits = 0;
};

using LineIntegrand = std::function<Complex(const Complex& z)>;

/// Integral of f(shift + e^{i pi/4} s) e^{i pi/4} ds over |s| <= s_max.
///
/// Trapezoidal sums on the grid s = k h with h halved until two successive
/// sums agree to 2^{-bits} relative (or to the rounding floor of the working
/// precision when the integral cancels to zero).  Working precision is raised
/// above ctx.bits by the log2 of the peak |f| found by a coarse scan, and
/// again if the result turns out to have cancelled further than that.
IntegralResult integrate_line(const LineIntegrand& f, const ContourSpec& contour, const PrecisionContext& ctx);

/// Picks s_max by scanning |f| outward from the shift until it has dropped
/// 2^{-(bits+40)} below min(peak, 1) on both sides.
ContourSpec truncate_contour(const LineIntegrand& f, const Complex& shift, const PrecisionContext& ctx);

/// Double integral of psi1(z1) psi2(z2) F_N(z1,z2) over (C + shift1) x (C + shift2),
/// inner integral in z2.  Uses the quadratic structure of theta: the coupling
/// factor e^{N theta} splits into per-node exponentials and a geometric
/// cross term along the uniform inner grid.
IntegralResult integrate_surface(const CableParams& p, int N, const Complex& shift1, const Complex& shift2,
                                 const PrecisionContext& ctx);

/// Same integral through two nested integrate_line calls.  Slow reference path.
IntegralResult integrate_surface_nested(const CableParams& p, int N, const Complex& shift1,
                                        const Complex& shift2, const PrecisionContext& ctx);

/// How the single-residue pieces I_1 and I_2 are evaluated.
enum class LineRoute {
    /// On the contours C + w2 (I_1) and C + w1 (I_2) exactly as defined.
    Literal,
    /// Moved to the saddle lines C + zeta'_l and C + zeta_m, with the residues
    /// of the poles crossed on the way subtracted.
    Saddle,
};

/// I_N on the unshifted contours.
IntegralResult compute_I_N(const CableParams& p, Level N, const PrecisionContext& ctx);

/// I_{k,N}, k in 0..3.
IntegralResult compute_I_k(const CableParams& p, Level N, int k, const PrecisionContext& ctx,
                           LineRoute route = LineRoute::Saddle);

/// (-1)^{N-1} 2 N^2 i / (sqrt(P R) pi^4), the factor taking I to the rescaled J.
Complex rescale_factor(const CableParams& p, int N);

/// e^{pi i (3Q + 3P - 4/P) / (4N)}: J_N = phase * (rescaled I_N).
Complex framing_phase(const CableParams& p, int N);

enum class JonesRoute {
    /// Direct for small N, Decomposed otherwise.
    Automatic,
    /// I_N on the unshifted contours.
    Direct,
    /// I_0 + I_1 + I_2 + I_3 with the saddle-line route.
    Decomposed,
};

struct JonesValue {
    Complex value;
    Real error_estimate{0};
    JonesRoute route_used = JonesRoute::Direct;
};

JonesValue exact_jones_detailed(const CableParams& p, Level N, const PrecisionContext& ctx,
                                JonesRoute route = JonesRoute::Automatic);

/// J_N(T(2,2a+1)^{(2,2b+1)}; e^{2 pi i/N}) from the contour integral.
Complex exact_jones(const CableParams& p, Level N, const PrecisionContext& ctx,
                    JonesRoute route = JonesRoute::Automatic);

/// rescale_factor * I_{k,N}
Complex compute_J_k(const CableParams& p, Level N, int k, const PrecisionContext& ctx,
                    LineRoute route = LineRoute::Saddle);

}  // namespace kashaev
