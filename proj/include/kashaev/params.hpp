#pragma once

#include "kashaev/numeric.hpp"

namespace kashaev {

/// Cable parameters of T(2,2a+1)^{(2,2b+1)}.
///
/// companion = 2a+1, pattern = 2b+1, excess = pattern - 4*companion.
/// The excess is odd and positive for every valid pair.
struct CableParams {
    int a = 0;
    int b = 0;
    int P = 0;  // 2a+1
    int Q = 0;  // 2b+1
    int R = 0;  // 2b+1-4(2a+1)

    friend bool operator==(const CableParams&, const CableParams&) = default;
};

/// Throws ConstraintViolated unless a >= 1, b >= 1 and 2b+1 > 4(2a+1).
CableParams new_cable_params(long a, long b);

struct PrecisionContext {
    unsigned bits = 128;
    double tol_cross = 1e-6;

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned b);

    /// 2^{-bits/2}
    Real tol_identity() const;
    /// Default context, with KASHAEV_PREC_BITS honoured when set.
    static PrecisionContext from_environment();
};

/// Order of the root of unity, N >= 2.
class Level {
public:
    explicit Level(long n);
    int value() const noexcept { return n_; }
    operator int() const noexcept { return n_; }  // NOLINT(google-explicit-constructor)

private:
    int n_;
};

/// e^{2 pi i / N}
Complex root_of_unity(int N, const PrecisionContext& ctx);

/// [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}); throws DegenerateVariable when A^4 = 1.
Complex quantum_integer(long k, const Complex& A);

}  // namespace kashaev
