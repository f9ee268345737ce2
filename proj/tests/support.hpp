#pragma once

#include "kashaev/asymptotics.hpp"
#include "kashaev/numeric.hpp"

#include <doctest.h>

#include <string>

namespace kashaev::test {

inline constexpr unsigned kBits = 128;

inline Real dec(const char* s) { return Real(std::string(s)); }

inline double to_d(const Real& x) { return x.convert_to<double>(); }

inline double dist(const Complex& a, const Complex& b) { return to_d(abs(a - b)); }

inline double rel(const Complex& a, const Complex& b) { return to_d(abs(a - b) / abs(b)); }

inline Real real_of(const Rational& r) { return Real(r.numerator()) / Real(r.denominator()); }

inline Complex cx(const char* re, const char* im) { return {dec(re), dec(im)}; }

}  // namespace kashaev::test
