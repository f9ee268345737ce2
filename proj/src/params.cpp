#include "kashaev/params.hpp"

#include "kashaev/errors.hpp"

#include <cstdlib>
#include <string>

namespace kashaev {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::DegenerateVariable: return "DegenerateVariable";
        case ErrorKind::PoleProximity: return "PoleProximity";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DegenerateEvaluation: return "DegenerateEvaluation";
        case ErrorKind::DegenerateIndex: return "DegenerateIndex";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::DegenerateCosine: return "DegenerateCosine";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    }
    return "Error";
}

CableParams new_cable_params(long a, long b) {
    if (a < 1 || b < 1)
        throw Error(ErrorKind::ConstraintViolated,
                    "a and b must be positive (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    if (a > 100000 || b > 100000)
        throw Error(ErrorKind::ConstraintViolated, "parameters out of supported range");
    const long P = 2 * a + 1;
    const long Q = 2 * b + 1;
    if (Q <= 4 * P)
        throw Error(ErrorKind::ConstraintViolated,
                    "need 2b+1 > 4(2a+1), got " + std::to_string(Q) + " <= " + std::to_string(4 * P));
    CableParams p;
    p.a = static_cast<int>(a);
    p.b = static_cast<int>(b);
    p.P = static_cast<int>(P);
    p.Q = static_cast<int>(Q);
    p.R = static_cast<int>(Q - 4 * P);
    return p;
}

PrecisionContext::PrecisionContext(unsigned b) : bits(b) {
    if (bits < 64) throw Error(ErrorKind::ConstraintViolated, "precision below 64 bits");
}

Real PrecisionContext::tol_identity() const {
    PrecisionScope scope(bits);
    return pow2(-static_cast<long>(bits / 2));
}

PrecisionContext PrecisionContext::from_environment() {
    if (const char* env = std::getenv("KASHAEV_PREC_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 64)
            throw Error(ErrorKind::ConstraintViolated, std::string("bad KASHAEV_PREC_BITS: ") + env);
        return PrecisionContext(static_cast<unsigned>(v));
    }
    return PrecisionContext();
}

Level::Level(long n) : n_(static_cast<int>(n)) {
    if (n < 2) throw Error(ErrorKind::ConstraintViolated, "N must be at least 2");
}

Complex root_of_unity(int N, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits);
    return cis(2 * pi() / N);
}

Complex quantum_integer(long k, const Complex& A) {
    const Complex a2 = A * A;
    const Complex a2inv = Complex(1) / a2;
    const Complex denom = a2 - a2inv;
    if (abs(denom) < pow2(-static_cast<long>(working_bits() / 2)))
        throw Error(ErrorKind::DegenerateVariable, "A^4 = 1");
    return (pow(a2, k) - pow(a2inv, k)) / denom;
}

}  // namespace kashaev
