#include "kashaev/quadrature.hpp"

#include "kashaev/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace kashaev {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxNodesPerUnit = 1 << 16;
constexpr int kMaxSurfaceHalvings = 5;

mpfr_ptr raw(Real& x) { return x.backend().data(); }
mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

std::complex<double> to_double(const Complex& z) {
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

Complex two_pi_i() { return {Real(0), 2 * pi()}; }

// Line integrands.  Constants that enter the integrand are rebuilt at the
// precision of each call; only the contour shift may be coarser, which moves
// the line but not the value of the integral.

Complex residue_line_integrand_1(const CableParams& p, int N, int l, const Complex& z2) {
    return psi2(p, z2) * f_N(p, N, pole_psi1(p, l).location, z2);
}

Complex residue_line_integrand_2(const CableParams& p, int N, int m, const Complex& z1) {
    return psi1(z1) * f_N(p, N, z1, pole_psi2(p, m).location);
}

// First psi2 pole index crossed between C + w2 and C + zeta'_l.
int first_crossed_eta(const CableParams& p, int l) {
    return (2 * p.P * (2 * l + 1) + p.Q) / (2 * p.Q);
}

// Quadratic model of N theta on (c1 + e u, c2 + e v):
//   auu u^2 + auv u v + avv v^2 + bu u + bv v + g, with real a's.
struct Model {
    double auu, auv, avv;
    std::complex<double> bu, bv, g;
    double u_star, v_star, peak;  // maximiser of the real part and its value
    double aeff;                  // u-curvature after maximising over v

    double v_centre(double u) const { return -(auv * u + bv.real()) / (2 * avv); }
    double profile(double u) const { return peak + aeff * (u - u_star) * (u - u_star); }
};

Model make_model(const CableParams& p, int N, const Complex& shift1, const Complex& shift2) {
    const std::complex<double> I(0, 1);
    const std::complex<double> e(std::sqrt(0.5), std::sqrt(0.5));
    const std::complex<double> c1 = to_double(shift1), c2 = to_double(shift2), d = c1 - c2;
    const double P = p.P, R = p.R;
    Model m{};
    m.auu = -4.0 * N / (R * kPi);
    m.auv = 8.0 * N / (R * kPi);
    m.avv = -N * (1 / (P * kPi) + 4 / (R * kPi));
    m.bu = double(N) * (8.0 * I * d * e / (R * kPi) + 4.0 * e);
    m.bv = double(N) * (2.0 * I * c2 * e / (P * kPi) - 8.0 * I * d * e / (R * kPi));
    m.g = double(N) * (I * c2 * c2 / (P * kPi) + 4.0 * I * d * d / (R * kPi) + 4.0 * c1);
    const double det = 4 * m.auu * m.avv - m.auv * m.auv;
    m.u_star = (-2 * m.avv * m.bu.real() + m.auv * m.bv.real()) / det;
    m.v_star = (-2 * m.auu * m.bv.real() + m.auv * m.bu.real()) / det;
    m.peak = m.auu * m.u_star * m.u_star + m.auv * m.u_star * m.v_star + m.avv * m.v_star * m.v_star +
             m.bu.real() * m.u_star + m.bv.real() * m.v_star + m.g.real();
    m.aeff = m.auu - m.auv * m.auv / (4 * m.avv);
    return m;
}

struct SurfacePlan {
    Model model;
    double threshold;  // log-magnitude below which nodes are dropped
    double u_lo, u_hi, v_lo, v_hi;
    double hu, hv;
};

SurfacePlan make_plan(const Model& m, const PrecisionContext& ctx) {
    SurfacePlan s{};
    s.model = m;
    // 10 nats cover the prefactors psi1 psi2 delta, which the model ignores.
    const double accuracy = (ctx.bits + 40) * kLn2 + 10;
    s.threshold = std::min(m.peak, 0.0) - accuracy;
    const double depth = m.peak - s.threshold;
    const double du = std::sqrt(depth / -m.aeff);
    s.u_lo = m.u_star - du;
    s.u_hi = m.u_star + du;
    const double half = std::sqrt(depth / -m.avv);
    const double va = m.v_centre(s.u_lo), vb = m.v_centre(s.u_hi);
    s.v_lo = std::min(va, vb) - half;
    s.v_hi = std::max(va, vb) + half;

    // Trapezoid error for e^{-a s^2 + i w s} is about e^{-(2 pi/h - w)^2/(4a)}.
    const double wv = std::abs(m.bv.imag());
    const double wu = std::abs((m.bu - m.auv * m.bv / (2 * m.avv)).imag());
    // Poles of psi1, psi2 sit at least pi/(4 sqrt 2) from the contours.
    const double pole_cap = 2 * kPi * 0.55 / accuracy;
    s.hv = std::min({2 * kPi / (wv + std::sqrt(4 * -m.avv * depth)), pole_cap, 0.25});
    s.hu = std::min({2 * kPi / (wu + std::sqrt(4 * -m.aeff * depth)), pole_cap, 0.25});
    return s;
}

// Trapezoidal sum of psi1 psi2 delta e^{N theta} over the plan's region with
// steps (hu, hv), at the current working precision.
Complex surface_sum(const CableParams& p, int N, const Complex& shift1, const Complex& shift2,
                    const SurfacePlan& plan, double hu_d, double hv_d, long& count) {
    const Model& m = plan.model;
    const Real pi_r = pi();
    const Real Nr(N), P(p.P), R(p.R);
    const Complex I = imag_unit();
    const Complex e = contour_direction();
    const Complex c1 = rounded(shift1), c2 = rounded(shift2);
    const Complex d = c1 - c2;

    const Real auu = -Nr * 4 / (R * pi_r);
    const Real auv = Nr * 8 / (R * pi_r);
    const Real avv = -Nr * (1 / (P * pi_r) + Real(4) / (R * pi_r));
    const Complex bu = (I * d * e * Real(8) / (R * pi_r) + e * Real(4)) * Nr;
    const Complex bv = (I * c2 * e * Real(2) / (P * pi_r) - I * d * e * Real(8) / (R * pi_r)) * Nr;
    const Complex g = (I * c2 * c2 / (P * pi_r) + I * d * d * Real(4) / (R * pi_r) + c1 * Real(4)) * Nr;

    // delta = d0(u) + d1(u) v + d2 v^2
    const Complex c2sq_over_P = c2 * c2 / P;
    const Complex d1_const = c2 * e * Real(2) / P;
    const Complex d2 = I * (1 / P + Real(4) / R);

    const Real hu = Real(hu_d), hv = Real(hv_d);

    const long kv_lo = static_cast<long>(std::floor(plan.v_lo / hv_d));
    const long kv_hi = static_cast<long>(std::ceil(plan.v_hi / hv_d));
    const std::size_t nv = static_cast<std::size_t>(kv_hi - kv_lo + 1);

    // w_k = psi2(z2_k) e^{avv v^2 + bv v}, times 1, v, v^2; re and im parts.
    std::vector<Real> t0r(nv), t0i(nv), t1r(nv), t1i(nv), t2r(nv), t2i(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        const Real v = Real(kv_lo + static_cast<long>(j)) * hv;
        const Complex z2 = c2 + e * v;
        const Complex w = psi2(p, z2) * exp(Complex(avv * v * v) + bv * v);
        const Complex wv = w * v;
        const Complex wvv = wv * v;
        t0r[j] = w.re;
        t0i[j] = w.im;
        t1r[j] = wv.re;
        t1i[j] = wv.im;
        t2r[j] = wvv.re;
        t2i[j] = wvv.im;
    }

    Real s0r, s0i, s1r, s1i, s2r, s2i, gk, tmp;
    Complex total;
    const long ku_lo = static_cast<long>(std::ceil(plan.u_lo / hu_d));
    const long ku_hi = static_cast<long>(std::floor(plan.u_hi / hu_d));
    for (long ku = ku_lo; ku <= ku_hi; ++ku) {
        const double ud = static_cast<double>(ku) * hu_d;
        const double level = m.profile(ud);
        if (level < plan.threshold) continue;
        const double half = std::sqrt((level - plan.threshold) / -m.avv);
        const double vc = m.v_centre(ud);
        const long k0 = std::max(kv_lo, static_cast<long>(std::floor((vc - half) / hv_d)));
        const long k1 = std::min(kv_hi, static_cast<long>(std::ceil((vc + half) / hv_d)));
        if (k1 < k0) continue;

        const Real u = Real(ku) * hu;
        const Real rho = exp(auv * u * hv);
        gk = exp(auv * u * (Real(k0) * hv));
        for (Real* s : {&s0r, &s0i, &s1r, &s1i, &s2r, &s2i}) mpfr_set_zero(raw(*s), 1);
        for (long k = k0; k <= k1; ++k) {
            const std::size_t j = static_cast<std::size_t>(k - kv_lo);
            mpfr_mul(raw(tmp), raw(gk), raw(t0r[j]), MPFR_RNDN);
            mpfr_add(raw(s0r), raw(s0r), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(tmp), raw(gk), raw(t0i[j]), MPFR_RNDN);
            mpfr_add(raw(s0i), raw(s0i), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(tmp), raw(gk), raw(t1r[j]), MPFR_RNDN);
            mpfr_add(raw(s1r), raw(s1r), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(tmp), raw(gk), raw(t1i[j]), MPFR_RNDN);
            mpfr_add(raw(s1i), raw(s1i), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(tmp), raw(gk), raw(t2r[j]), MPFR_RNDN);
            mpfr_add(raw(s2r), raw(s2r), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(tmp), raw(gk), raw(t2i[j]), MPFR_RNDN);
            mpfr_add(raw(s2i), raw(s2i), raw(tmp), MPFR_RNDN);
            mpfr_mul(raw(gk), raw(gk), raw(rho), MPFR_RNDN);
        }
        count += k1 - k0 + 1;

        const Complex z1 = c1 + e * u;
        const Complex du = d + e * u;
        const Complex d0 = c2sq_over_P + du * du * Real(4) / R;
        const Complex d1 = d1_const - du * e * Real(8) / R;
        const Complex inner = d0 * Complex(s0r, s0i) + d1 * Complex(s1r, s1i) + d2 * Complex(s2r, s2i);
        total += psi1(z1) * exp(Complex(auu * u * u) + bu * u + g) * inner;
    }
    return total * (hu * hv) * I;  // dz1 dz2 = e^2 du dv = i du dv
}

}  // namespace

IntegralResult integrate_line(const LineIntegrand& f, const ContourSpec& contour, const PrecisionContext& ctx) {
    if (contour.nodes < 2) throw Error(ErrorKind::ConstraintViolated, "contour needs at least 2 nodes per unit");
    const double s_max = contour.s_max.convert_to<double>();
    if (!(s_max > 0)) throw Error(ErrorKind::ConstraintViolated, "contour s_max must be positive");

    // Coarse magnitude scan: peak and tail of |f|.
    double peak = -std::numeric_limits<double>::infinity();
    double tail = peak;
    {
        PrecisionScope scope(64);
        const Complex e = contour_direction();
        const Complex shift = rounded(contour.shift);
        const long steps = static_cast<long>(std::ceil(s_max * 8));
        for (long k = -steps; k <= steps; ++k) {
            const double s = std::clamp(static_cast<double>(k) / 8, -s_max, s_max);
            const double l = log_abs(f(shift + e * Real(s)));
            peak = std::max(peak, l);
            if (k == -steps || k == steps) tail = std::max(tail, l);
        }
    }

    IntegralResult out;
    out.s_max_used = contour.s_max;
    if (std::isinf(peak)) {
        out.working_bits = ctx.bits;
        return out;
    }

    double guard = std::max(0.0, peak / kLn2) + 24;
    for (int attempt = 0;; ++attempt) {
        const unsigned wbits = ctx.bits + static_cast<unsigned>(std::ceil(guard));
        PrecisionScope scope(wbits);
        const Complex e = contour_direction();
        const Complex shift = rounded(contour.shift);
        auto node = [&](long k, const Real& h) { return f(shift + e * (Real(k) * h)); };

        long per_unit = contour.nodes;
        Real h = Real(1) / per_unit;
        long K = static_cast<long>(std::floor(s_max * per_unit));
        Complex sum;
        for (long k = -K; k <= K; ++k) sum += node(k, h);
        long used = 2 * K + 1;
        Complex T = sum * h;

        const Real rel = pow2(-static_cast<long>(ctx.bits));
        const Real rounding = pow2(-static_cast<long>(wbits) + 16) * exp(Real(peak)) * Real(2 * s_max);
        const Real truncation = exp(Real(tail));
        const Real noise = rounding + truncation;
        Real err;
        bool converged = false;
        bool at_noise = false;
        while (per_unit < kMaxNodesPerUnit) {
            per_unit *= 2;
            h /= 2;
            K = static_cast<long>(std::floor(s_max * per_unit));
            Complex added;
            for (long k = (K % 2 != 0) ? -K : -K + 1; k <= K; k += 2) added += node(k, h);
            used += K + 1;
            Complex next = T * Real(0.5) + added * h;
            err = abs(next - T);
            T = std::move(next);
            const Real target = rel * abs(T);
            if (err <= target) {
                converged = true;
                break;
            }
            if (err <= noise) {
                converged = true;
                at_noise = true;
                break;
            }
        }
        if (!converged)
            throw Error(ErrorKind::NoConvergence,
                        "trapezoid node cap reached, error " + to_string(err, 6));

        // Retry once or twice when the sum cancelled below the guard bits.
        const double lt = log_abs(T);
        const double cancelled = (peak - lt) / kLn2 + std::log2(2 * s_max);
        if (at_noise && attempt < 2 && !std::isinf(lt) && cancelled + 16 > guard && rounding > truncation) {
            guard = cancelled + 32;
            continue;
        }

        out.value = T * e;
        out.error_estimate = err + truncation;
        out.nodes_used = used;
        out.working_bits = wbits;
        return out;
    }
}

ContourSpec truncate_contour(const LineIntegrand& f, const Complex& shift, const PrecisionContext& ctx) {
    constexpr double step = 0.25;
    constexpr int quiet_steps = 8;
    constexpr double limit = 4096;
    const double drop = (ctx.bits + 40) * kLn2;
    double reach = 0;
    {
        PrecisionScope scope(64);
        const Complex e = contour_direction();
        const Complex c = rounded(shift);
        double runmax = log_abs(f(c));
        for (int side : {-1, 1}) {
            int quiet = 0;
            double s = 0;
            while (quiet < quiet_steps) {
                s += step;
                if (s > limit) throw Error(ErrorKind::NoConvergence, "integrand does not decay along the contour");
                const double l = log_abs(f(c + e * Real(side * s)));
                runmax = std::max(runmax, l);
                quiet = (l < std::min(runmax, 0.0) - drop) ? quiet + 1 : 0;
            }
            reach = std::max(reach, s);
        }
    }
    ContourSpec spec;
    spec.shift = shift;
    spec.s_max = Real(reach);
    spec.nodes = 8;
    return spec;
}

IntegralResult integrate_surface(const CableParams& p, int N, const Complex& shift1, const Complex& shift2,
                                 const PrecisionContext& ctx) {
    const SurfacePlan plan = make_plan(make_model(p, N, shift1, shift2), ctx);
    double guard = std::max(0.0, plan.model.peak / kLn2) + 32;

    for (int attempt = 0;; ++attempt) {
        const unsigned wbits = ctx.bits + static_cast<unsigned>(std::ceil(guard));
        PrecisionScope scope(wbits);
        long count = 0;
        double hu = plan.hu, hv = plan.hv;
        Complex T = surface_sum(p, N, shift1, shift2, plan, hu, hv, count);
        const Real rel = pow2(-static_cast<long>(ctx.bits));
        const double area = (plan.u_hi - plan.u_lo) * (plan.v_hi - plan.v_lo);
        const Real noise = pow2(-static_cast<long>(wbits) + 8) * exp(Real(plan.model.peak + 10)) * Real(area);
        Real err;
        bool converged = false, at_noise = false;
        for (int level = 0; level < kMaxSurfaceHalvings; ++level) {
            hu /= 2;
            hv /= 2;
            Complex next = surface_sum(p, N, shift1, shift2, plan, hu, hv, count);
            err = abs(next - T);
            T = std::move(next);
            if (err <= rel * abs(T)) {
                converged = true;
                break;
            }
            if (err <= noise) {
                converged = at_noise = true;
                break;
            }
        }
        if (!converged)
            throw Error(ErrorKind::NoConvergence, "surface trapezoid did not settle, error " + to_string(err, 6));

        const double lt = log_abs(T);
        const double cancelled = (plan.model.peak + 10 - lt) / kLn2 + std::log2(area);
        if (at_noise && attempt < 2 && !std::isinf(lt) && cancelled + 16 > guard) {
            guard = cancelled + 32;
            continue;
        }

        IntegralResult out;
        out.value = T;
        out.error_estimate = err;
        out.s_max_used = Real(std::max({std::abs(plan.u_lo), std::abs(plan.u_hi), std::abs(plan.v_lo),
                                        std::abs(plan.v_hi)}));
        out.nodes_used = count;
        out.working_bits = wbits;
        return out;
    }
}

IntegralResult integrate_surface_nested(const CableParams& p, int N, const Complex& shift1,
                                        const Complex& shift2, const PrecisionContext& ctx) {
    const SurfacePlan plan = make_plan(make_model(p, N, shift1, shift2), ctx);
    const double reach_u = std::max(std::abs(plan.u_lo), std::abs(plan.u_hi));
    const double reach_v = std::max(std::abs(plan.v_lo), std::abs(plan.v_hi));

    long inner_nodes = 0;
    LineIntegrand outer = [&](const Complex& z1) {
        // Inner integrals run at least at the outer working precision.
        const PrecisionContext inner_ctx(std::max(ctx.bits, working_bits()));
        const Complex z1w = rounded(z1);
        LineIntegrand inner = [&](const Complex& z2) { return psi2(p, z2) * f_N(p, N, z1w, z2); };
        ContourSpec c;
        c.shift = shift2;
        c.s_max = Real(reach_v);
        IntegralResult r = integrate_line(inner, c, inner_ctx);
        inner_nodes += r.nodes_used;
        return psi1(z1w) * r.value;
    };
    ContourSpec c;
    c.shift = shift1;
    c.s_max = Real(reach_u);
    IntegralResult out = integrate_line(outer, c, ctx);
    out.nodes_used += inner_nodes;
    out.s_max_used = Real(std::max(reach_u, reach_v));
    return out;
}

IntegralResult compute_I_N(const CableParams& p, Level N, const PrecisionContext& ctx) {
    return integrate_surface(p, N, Complex(), Complex(), ctx);
}

IntegralResult compute_I_k(const CableParams& p, Level N, int k, const PrecisionContext& ctx, LineRoute route) {
    if (k < 0 || k > 3) throw Error(ErrorKind::IndexOutOfRange, "I_k index " + std::to_string(k) + " outside [0,3]");
    const int n = N;
    const auto [w1, w2] = critical_point(p);
    if (k == 0) return integrate_surface(p, n, w1, w2, ctx);

    PrecisionScope scope(ctx.bits + 32);
    IntegralResult out;
    out.working_bits = ctx.bits + 32;
    const Complex tpi = two_pi_i();

    if (k == 3) {
        for (const PoleData& x : poles_psi1(p))
            for (const PoleData& y : poles_psi2(p))
                out.value += tpi * tpi * x.residue * y.residue * f_N(p, n, x.location, y.location);
        return out;
    }

    auto add_line = [&](const Complex& weight, const LineIntegrand& f, const Complex& shift) {
        const ContourSpec c = truncate_contour(f, shift, ctx);
        const IntegralResult r = integrate_line(f, c, ctx);
        out.value += weight * r.value;
        out.error_estimate += abs(weight) * r.error_estimate;
        out.nodes_used += r.nodes_used;
        out.s_max_used = std::max(out.s_max_used, r.s_max_used);
        out.working_bits = std::max(out.working_bits, r.working_bits);
    };

    if (k == 1) {
        for (int l = 0; l <= 2 * p.b; ++l) {
            const PoleData x = pole_psi1(p, l);
            const Complex weight = tpi * x.residue;
            LineIntegrand f = [&p, n, l](const Complex& z2) { return residue_line_integrand_1(p, n, l, z2); };
            if (route == LineRoute::Literal) {
                add_line(weight, f, w2);
                continue;
            }
            add_line(weight, f, saddle_z2(p, l));
            for (int m = first_crossed_eta(p, l); m <= 4 * p.a + 1; ++m) {
                const PoleData y = pole_psi2(p, m);
                out.value -= weight * tpi * y.residue * f_N(p, n, x.location, y.location);
            }
        }
        return out;
    }

    for (int m = 0; m <= 4 * p.a + 1; ++m) {
        const PoleData y = pole_psi2(p, m);
        const Complex weight = tpi * y.residue;
        LineIntegrand f = [&p, n, m](const Complex& z1) { return residue_line_integrand_2(p, n, m, z1); };
        if (route == LineRoute::Literal) {
            add_line(weight, f, w1);
            continue;
        }
        add_line(weight, f, saddle_z1(p, m));
        for (int l = p.R + 2 * m + 1; l <= 2 * p.b; ++l) {
            const PoleData x = pole_psi1(p, l);
            out.value -= weight * tpi * x.residue * f_N(p, n, x.location, y.location);
        }
    }
    return out;
}

Complex rescale_factor(const CableParams& p, int N) {
    const Real pi_r = pi();
    const Real sign = (N % 2 == 1) ? Real(1) : Real(-1);
    const Real magnitude = sign * 2 * Real(N) * Real(N) /
                           (boost::multiprecision::sqrt(Real(p.P * p.R)) * pi_r * pi_r * pi_r * pi_r);
    return {Real(0), magnitude};
}

Complex framing_phase(const CableParams& p, int N) {
    const Real exponent = Real(3 * p.Q + 3 * p.P) - Real(4) / Real(p.P);
    return cis(pi() * exponent / Real(4 * N));
}

JonesValue exact_jones_detailed(const CableParams& p, Level N, const PrecisionContext& ctx, JonesRoute route) {
    if (route == JonesRoute::Automatic) route = (N <= 12) ? JonesRoute::Direct : JonesRoute::Decomposed;
    PrecisionScope scope(ctx.bits + 32);
    JonesValue out;
    out.route_used = route;
    IntegralResult total;
    if (route == JonesRoute::Direct) {
        total = compute_I_N(p, N, ctx);
    } else {
        for (int k = 0; k <= 3; ++k) {
            const IntegralResult r = compute_I_k(p, N, k, ctx);
            total.value += r.value;
            total.error_estimate += r.error_estimate;
        }
    }
    const Complex factor = framing_phase(p, N) * rescale_factor(p, N);
    out.value = factor * total.value;
    out.error_estimate = abs(factor) * total.error_estimate;
    return out;
}

Complex exact_jones(const CableParams& p, Level N, const PrecisionContext& ctx, JonesRoute route) {
    return exact_jones_detailed(p, N, ctx, route).value;
}

Complex compute_J_k(const CableParams& p, Level N, int k, const PrecisionContext& ctx, LineRoute route) {
    const IntegralResult r = compute_I_k(p, N, k, ctx, route);
    PrecisionScope scope(ctx.bits + 32);
    return rescale_factor(p, N) * r.value;
}

}  // namespace kashaev
