#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace kashaev {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// RAII guard for the precision of newly created Real values.
///
/// Arithmetic results are created at the current default precision, so every
/// computation runs inside one of these.  Values keep the precision they were
/// created with after the scope ends.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits10_;
};

/// Precision in bits of a freshly constructed Real.
unsigned working_bits();

Real pi();
Real pow2(long exponent);
/// Copy of x rounded to the current working precision.
Real rounded(const Real& x);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(int r) : re(r), im(0) {}          // NOLINT(google-explicit-constructor)
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator*=(const Real& s);
    Complex& operator/=(const Complex& o);
};

/// Copy of z rounded to the current working precision.
Complex rounded(const Complex& z);

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator*(const Real& s, const Complex& a);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& s);

inline Complex imag_unit() { return {Real(0), Real(1)}; }

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // in (-pi, pi]
Complex conj(const Complex& z);
Complex polar(const Real& r, const Real& phase);
/// e^{i phase}
Complex cis(const Real& phase);

Complex exp(const Complex& z);
Complex log(const Complex& z);                     // principal branch
Complex sqrt(const Complex& z);                    // principal branch
Complex pow(const Complex& z, const Real& power);  // principal branch
Complex pow(const Complex& z, long n);             // integer power by squaring
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);

/// Natural log of |z| as a double; -inf for zero.  Never overflows.
double log_abs(const Complex& z);
double log_abs(const Real& x);

/// Scientific decimal string carrying every significant digit of x.
std::string to_string(const Real& x);
std::string to_string(const Real& x, int digits);

}  // namespace kashaev
