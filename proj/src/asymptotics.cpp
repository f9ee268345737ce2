#include "kashaev/asymptotics.hpp"

#include "kashaev/errors.hpp"

#include <cmath>
#include <numeric>

namespace kashaev {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

void check_range(int i, int hi, const char* what) {
    if (i < 0 || i > hi)
        throw Error(ErrorKind::IndexOutOfRange,
                    std::string(what) + " index " + std::to_string(i) + " outside [0," + std::to_string(hi) + "]");
}

Real sign_of(long parity) { return (parity % 2 == 0) ? Real(1) : Real(-1); }

// (N / (2 pi i))^{3/2}, principal branch
Complex level_power_three_halves(int N) {
    const Complex x = Complex(Real(0), -Real(N) / (2 * pi()));
    return pow(x, Real(1.5));
}

// sqrt(i/2), principal branch
Complex root_i_half() { return sqrt(Complex(Real(0), Real(1) / 2)); }

Complex weighted(const Real& tau, const Rational& s, int N) {
    return unit_phase(s, N) * (tau * Real(s.numerator()) / Real(s.denominator()) * pi() * pi());
}

Complex tilde_double_sum(const CableParams& p, int N, const std::vector<IndexPair>& lm) {
    Complex sum;
    for (const auto& [l, m] : lm) sum += weighted(tau3_lm(p, l, m), s3_tilde(p, l, m), N);
    return sum;
}

Complex sum_an(const CableParams& p, int N) {
    Complex s;
    for (int l = 0; l <= 2 * p.b; ++l) {
        const TauS t = tau_S_an(p, l);
        s += weighted(t.tau, t.s_over_pi2, N);
    }
    return s;
}

Complex sum_na(const CableParams& p, int N) {
    Complex s;
    for (int m = 0; m <= 4 * p.a + 1; ++m) {
        const TauS t = tau_S_na(p, m);
        s += weighted(t.tau, t.s_over_pi2, N);
    }
    return s;
}

Real level_squared_over_8pi2(int N) { return Real(N) * Real(N) / (8 * pi() * pi()); }

// N^{3/2} sqrt(i/2) / (4 pi^2)
Complex three_halves_factor(int N) {
    return root_i_half() * (pow(Real(N), Real(1.5)) / (4 * pi() * pi()));
}

Complex j2_residue_part(const CableParams& p, int N) {
    std::vector<IndexPair> lm;
    for (int m = 0; m <= 4 * p.a + 1; ++m)
        for (int l = p.R + 2 * m + 1; l <= 2 * p.b; ++l) lm.emplace_back(l, m);
    return tilde_double_sum(p, N, lm) * level_squared_over_8pi2(N);
}

void check_torus(int c, int d) {
    if (c < 2 || d < 2) throw Error(ErrorKind::ConstraintViolated, "torus knot needs c, d >= 2");
    if (std::gcd(c, d) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(c) + "," + std::to_string(d) + ") != 1");
}

}  // namespace

Real TauS::S() const { return Real(s_over_pi2.numerator()) / Real(s_over_pi2.denominator()) * pi() * pi(); }

TauS tau_S_an(const CableParams& p, int l) {
    check_range(l, 2 * p.b, "AN");
    const long k = 2 * l + 1;
    const Real c = cos(Real(p.P * k) * pi() / p.Q);
    // P k / Q is never a half-integer since 2 P k is even and Q is odd
    if (abs(c) < pow2(-static_cast<long>(working_bits() / 2)))
        throw Error(ErrorKind::DegenerateCosine, "cos(P(2l+1)pi/Q) vanishes");
    TauS t;
    t.tau = sign_of(l) * sqrt(Real(2) / p.Q) * sin(Real(2 * k) * pi() / p.Q) / c;
    t.s_over_pi2 = Rational(k * k, 2L * p.Q);
    return t;
}

TauS tau_S_na(const CableParams& p, int m) {
    check_range(m, 4 * p.a + 1, "NA");
    const long k = 2 * m + 1;
    TauS t;
    t.tau = sign_of(m) * sqrt(Real(2) / p.P) * sin(Real(k) * pi() / p.P);
    t.s_over_pi2 = Rational(k * k, 2L * p.P);
    return t;
}

TauS tau_S_nn(const CableParams& p, int j, int k) {
    check_range(j, p.R - 1, "NN j");
    check_range(k, 4 * p.a + 1, "NN k");
    TauS t;
    t.tau = tau3_lm(p, j, k);
    const long kk = 2 * k + 1, jj = 2 * j + 1;
    t.s_over_pi2 = Rational(kk * kk, 2L * p.P) + Rational(jj * jj, 2L * p.R);
    return t;
}

Real tau3_lm(const CableParams& p, int l, int m) {
    return sign_of(l + m) * 4 / sqrt(Real(p.P * p.R)) * sin(Real(2 * m + 1) * pi() / p.P);
}

Rational s3_tilde(const CableParams& p, int l, int m) {
    check_range(l, 2 * p.b, "S3~ l");
    check_range(m, 4 * p.a + 1, "S3~ m");
    const long mm = 2 * m + 1;
    const long shifted = (2 * l + 1) - 2 * mm;
    return Rational(2) * (Rational(mm * mm, 4L * p.P) + Rational(shifted * shifted, 4L * p.R));
}

std::vector<IndexPair> index_set_B(const CableParams& p) {
    std::vector<IndexPair> out;
    for (int k = 0; k <= 4 * p.a + 1; ++k)
        for (int j = 0; j <= p.R - 1; ++j)
            if (long(p.R) * (2 * k + 1) < 2L * p.P * (2 * j + 1)) out.emplace_back(j, k);
    return out;
}

namespace {

std::vector<IndexPair> index_set_A_with_bound(const CableParams& p, int slack) {
    std::vector<IndexPair> out;
    for (int m = 0; m <= 4 * p.a + 1; ++m)
        for (int l = 0; l <= 2 * p.b; ++l)
            if (l <= p.R + 2 * m + slack && long(p.Q) * (2 * m + 1) < 2L * p.P * (2 * l + 1)) out.emplace_back(l, m);
    return out;
}

}  // namespace

std::vector<IndexPair> index_set_A(const CableParams& p) { return index_set_A_with_bound(p, 0); }

std::vector<IndexPair> index_set_A_printed(const CableParams& p) { return index_set_A_with_bound(p, 1); }

IndexPair reindex(const IndexPair& lm) { return {lm.first - 2 * lm.second - 1, lm.second}; }

const char* to_string(Family f) {
    switch (f) {
        case Family::AN: return "AN";
        case Family::NA: return "NA";
        case Family::NN: return "NN";
    }
    return "?";
}

Complex unit_phase(const Rational& s_over_pi2, int N) {
    // N S / (2 pi i) = -2 pi i * (N s / 4); keep N s / 4 mod 1 exact.
    Rational t = s_over_pi2 * Rational(N, 4);
    const long long whole = t.numerator() / t.denominator();
    t -= whole;
    return cis(-2 * pi() * Real(t.numerator()) / Real(t.denominator()));
}

std::vector<AsymptoticTerm> theorem_terms(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    const Complex pre = level_power_three_halves(N) / (2 * sqrt(pi()));
    const Complex pre_na = (N % 2 == 0) ? pre : -pre;
    // -(1/2)(N/(2 pi i))^2 = N^2 / (8 pi^2)
    const Real pre_nn = level_squared_over_8pi2(N);

    std::vector<AsymptoticTerm> out;
    for (int l = 0; l <= 2 * p.b; ++l) {
        const TauS t = tau_S_an(p, l);
        out.push_back({Family::AN, {l}, t.tau, t.s_over_pi2, pre * weighted(t.tau, t.s_over_pi2, N)});
    }
    for (int m = 0; m <= 4 * p.a + 1; ++m) {
        const TauS t = tau_S_na(p, m);
        out.push_back({Family::NA, {m}, t.tau, t.s_over_pi2, pre_na * weighted(t.tau, t.s_over_pi2, N)});
    }
    for (const auto& [j, k] : index_set_B(p)) {
        const TauS t = tau_S_nn(p, j, k);
        out.push_back({Family::NN, {j, k}, t.tau, t.s_over_pi2, weighted(t.tau, t.s_over_pi2, N) * pre_nn});
    }
    return out;
}

Complex theorem_rhs(const CableParams& p, int N, const PrecisionContext& ctx, int b_sum_sign) {
    PrecisionScope scope(ctx.bits + 16);
    Complex total;
    for (const AsymptoticTerm& t : theorem_terms(p, N, ctx)) {
        if (t.family == Family::NN && b_sum_sign < 0)
            total -= t.contribution;
        else
            total += t.contribution;
    }
    return total;
}

Complex proof_form_J1(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    std::vector<IndexPair> lm;
    for (int l = 0; l <= 2 * p.b; ++l)
        for (int m = (2 * p.P * (2 * l + 1) + p.Q) / (2 * p.Q); m <= 4 * p.a + 1; ++m) lm.emplace_back(l, m);
    return tilde_double_sum(p, N, lm) * level_squared_over_8pi2(N) - three_halves_factor(N) * sum_an(p, N);
}

Complex proof_form_J2(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    const Complex t = three_halves_factor(N) * sum_na(p, N);
    return j2_residue_part(p, N) + ((N % 2 == 1) ? t : -t);
}

Complex proof_form_J2_corrected(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    return j2_residue_part(p, N) - three_halves_factor(N) * sum_na(p, N);
}

Complex proof_form_J3(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    std::vector<IndexPair> lm;
    for (int l = 0; l <= 2 * p.b; ++l)
        for (int m = 0; m <= 4 * p.a + 1; ++m) lm.emplace_back(l, m);
    return -(tilde_double_sum(p, N, lm) * level_squared_over_8pi2(N));
}

Complex vanishing_sum(const CableParams& p, int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + 16);
    Complex s;
    for (int m = 0; m <= 4 * p.a + 1; ++m) {
        const Real w = sign_of(m) * sin(Real(2 * m + 1) * pi() / p.P);
        s += unit_phase(tau_S_na(p, m).s_over_pi2, N) * w;
    }
    return s;
}

Rational dk_S(int c, int d, int k) {
    const long long diff = k - c * d;
    return Rational(diff * diff, c * d);
}

Rational dk_S_tilde(int c, int d, int k) { return Rational((long long)k * k, c * d); }

Real dk_tau(int c, int d, int k) {
    return 4 * sin(Real(k) * pi() / c) * sin(Real(k) * pi() / d) / sqrt(Real(c * d));
}

Complex dk_rhs(int c, int d, int N, const PrecisionContext& ctx) {
    check_torus(c, d);
    PrecisionScope scope(ctx.bits + 16);
    Complex s;
    for (int k = 1; k < c * d; ++k) {
        const Real w = sign_of(k + 1) * Real(k) * Real(k) * dk_tau(c, d, k);
        s += unit_phase(dk_S(c, d, k), N) * w;
    }
    const Real pi_r = pi();
    return level_power_three_halves(N) * s * (pi_r * sqrt(pi_r) / (2 * c * d));
}

Complex dk_remark_rhs(int c, int d, int N, const PrecisionContext& ctx) {
    check_torus(c, d);
    PrecisionScope scope(ctx.bits + 16);
    // i^{-cdN}
    const int quarter = ((-(c * d % 4) * (N % 4)) % 4 + 4) % 4;
    const Complex i_power = (quarter == 0)   ? Complex(1)
                            : (quarter == 1) ? imag_unit()
                            : (quarter == 2) ? Complex(-1)
                                             : -imag_unit();
    Complex s;
    for (int k = 1; k < c * d; ++k) {
        const Rational st = dk_S_tilde(c, d, k);
        s += weighted(sign_of(long(k) * (N + 1)) * dk_tau(c, d, k), st, N);
    }
    return level_power_three_halves(N) * i_power * s / (2 * sqrt(pi()));
}

Complex dk_phase_correction(int c, int d, int N, const PrecisionContext& ctx) {
    check_torus(c, d);
    PrecisionScope scope(ctx.bits + 16);
    const Rational x = Rational(c * d) - Rational(c, d) - Rational(d, c);
    return cis(-pi() * Real(x.numerator()) / Real(x.denominator()) / (2 * N));
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

double loglog_slope(const std::vector<double>& ns, const std::vector<double>& residuals) {
    if (ns.size() != residuals.size() || ns.size() < 2)
        throw Error(ErrorKind::ConstraintViolated, "slope fit needs at least two matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = std::log(ns[i]), y = std::log(residuals[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace kashaev
