#include "kashaev/numeric.hpp"

#include <cmath>
#include <ios>
#include <limits>

namespace kashaev {

namespace {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

mpfr_ptr raw(Real& x) { return x.backend().data(); }
mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

unsigned working_bits() {
    Real x;
    return static_cast<unsigned>(mpfr_get_prec(raw(x)));
}

Real pi() {
    Real r;
    mpfr_const_pi(raw(r), MPFR_RNDN);
    return r;
}

Real pow2(long exponent) {
    Real r(1);
    mpfr_mul_2si(raw(r), raw(r), exponent, MPFR_RNDN);
    return r;
}

Real rounded(const Real& x) {
    Real r;
    mpfr_set(raw(r), raw(x), MPFR_RNDN);
    return r;
}

Complex rounded(const Complex& z) { return {rounded(z.re), rounded(z.im)}; }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    *this = *this / o;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
Complex operator*(const Real& s, const Complex& a) { return {a.re * s, a.im * s}; }

Complex operator/(const Complex& a, const Complex& b) {
    // Smith's scaling keeps intermediate magnitudes near those of the inputs.
    using boost::multiprecision::abs;
    if (abs(b.re) >= abs(b.im)) {
        Real r = b.im / b.re;
        Real d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    Real r = b.re / b.im;
    Real d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(raw(r), raw(z.re), raw(z.im), MPFR_RNDN);
    return r;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
    Real r;
    mpfr_atan2(raw(r), raw(z.im), raw(z.re), MPFR_RNDN);
    return r;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex cis(const Real& phase) {
    Real s, c;
    mpfr_sin_cos(raw(s), raw(c), raw(phase), MPFR_RNDN);
    return {c, s};
}

Complex polar(const Real& r, const Real& phase) { return cis(phase) * r; }

Complex exp(const Complex& z) {
    Real m;
    mpfr_exp(raw(m), raw(z.re), MPFR_RNDN);
    return polar(m, z.im);
}

Complex log(const Complex& z) {
    Real m = abs(z);
    Real l;
    mpfr_log(raw(l), raw(m), MPFR_RNDN);
    return {l, arg(z)};
}

Complex sqrt(const Complex& z) {
    if (mpfr_zero_p(raw(z.re)) && mpfr_zero_p(raw(z.im))) return {};
    return exp(log(z) * Real(0.5));
}

Complex pow(const Complex& z, const Real& power) {
    if (mpfr_zero_p(raw(z.re)) && mpfr_zero_p(raw(z.im))) return {};
    return exp(log(z) * power);
}

Complex pow(const Complex& z, long n) {
    if (n < 0) return Complex(1) / pow(z, -n);
    Complex result(1);
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Complex sinh(const Complex& z) {
    // sinh(x+iy) = sinh x cos y + i cosh x sin y
    Real sh, ch, s, c;
    mpfr_sinh_cosh(raw(sh), raw(ch), raw(z.re), MPFR_RNDN);
    mpfr_sin_cos(raw(s), raw(c), raw(z.im), MPFR_RNDN);
    return {sh * c, ch * s};
}

Complex cosh(const Complex& z) {
    Real sh, ch, s, c;
    mpfr_sinh_cosh(raw(sh), raw(ch), raw(z.re), MPFR_RNDN);
    mpfr_sin_cos(raw(s), raw(c), raw(z.im), MPFR_RNDN);
    return {ch * c, sh * s};
}

double log_abs(const Real& x) {
    if (mpfr_zero_p(raw(x))) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, raw(x), MPFR_RNDN);
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const Complex& z) {
    double a = log_abs(z.re);
    double b = log_abs(z.im);
    double hi = std::max(a, b);
    if (std::isinf(hi)) return hi;
    double lo = std::min(a, b);
    return hi + 0.5 * std::log1p(std::exp(2.0 * (lo - hi)));
}

std::string to_string(const Real& x) {
    int digits = static_cast<int>(std::ceil(mpfr_get_prec(raw(x)) * 0.30102999566398120)) + 1;
    return to_string(x, digits);
}

std::string to_string(const Real& x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

}  // namespace kashaev
