#include "kashaev/skein.hpp"

#include "kashaev/errors.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

namespace kashaev {

namespace {

constexpr unsigned kGuardBits = 64;

// Precomputed pieces of the R-matrix on V_N (x) V_N.
class RTables {
public:
    RTables(int N, const Complex& A) : N_(N), span_(std::max((N - 1) * (N - 1), 2 * (N - 1))) {
        const Complex v = A * A;
        const Complex vinv = Complex(1) / v;
        const Complex gap = v - vinv;
        const Real tiny = pow2(-static_cast<long>(working_bits() / 2));
        if (abs(gap) < tiny) throw Error(ErrorKind::DegenerateEvaluation, "v - 1/v vanishes at this q");

        apow_.reserve(2 * span_ + 1);
        const Complex logA = log(A);
        for (int k = -span_; k <= span_; ++k) apow_.push_back(exp(logA * Real(k)));

        std::vector<Complex> qint(N + 1);
        for (int k = 0; k <= N; ++k) qint[k] = (pow(v, long(k)) - pow(vinv, long(k))) / gap;

        // forward_[n] = v^{n(n-1)/2} (v - 1/v)^n / [n]!, backward_[n] the inverse-matrix analogue.
        Complex fact(1), gap_pow(1);
        for (int n = 0; n < N; ++n) {
            if (n > 0) {
                if (abs(qint[n]) < tiny)
                    throw Error(ErrorKind::DegenerateEvaluation,
                                "quantum integer [" + std::to_string(n) + "] vanishes at this q");
                fact *= qint[n];
                gap_pow *= gap;
            }
            const long tri = long(n) * (n - 1) / 2;
            const Complex base = gap_pow / fact;
            forward_.push_back(pow(v, tri) * base);
            Complex back = pow(vinv, tri) * base;
            if (n % 2 == 1) back = -back;
            backward_.push_back(back);
        }

        // lowering_[a*N + n] = prod_{t<n} [a-t][N-a+t], defined for n <= a
        lowering_.assign(static_cast<std::size_t>(N) * N, Complex());
        for (int a = 0; a < N; ++a) {
            Complex prod(1);
            lowering_[a * N] = prod;
            for (int n = 1; n <= a; ++n) {
                prod *= qint[a - n + 1] * qint[N - a + n - 1];
                lowering_[a * N + n] = prod;
            }
        }
    }

    int weight(int i) const { return N_ - 1 - 2 * i; }
    const Complex& a_power(int k) const { return apow_[k + span_]; }

    template <typename Sink>
    void apply(int a, int b, bool inverse, Sink&& sink) const {
        if (!inverse) {
            const int top = std::min(a, N_ - 1 - b);
            for (int n = 0; n <= top; ++n) {
                const Complex c = forward_[n] * lowering_[a * N_ + n] * a_power(weight(a - n) * weight(b + n));
                sink(c, b + n, a - n);
            }
            return;
        }
        const Complex& diag = a_power(-weight(a) * weight(b));
        const int top = std::min(b, N_ - 1 - a);
        for (int n = 0; n <= top; ++n) sink(diag * backward_[n] * lowering_[b * N_ + n], b - n, a + n);
    }

private:
    int N_;
    int span_;
    std::vector<Complex> apow_;
    std::vector<Complex> forward_;
    std::vector<Complex> backward_;
    std::vector<Complex> lowering_;
};

Complex principal_fourth_root(const Complex& q) { return pow(q, Real(0.25)); }

void check_state_space(int strands, int N) {
    long size = 1;
    for (int i = 0; i < strands; ++i) {
        size *= N;
        if (size > kStateSpaceLimit)
            throw Error(ErrorKind::TooLarge, "state space N^" + std::to_string(strands) + " with N=" +
                                                 std::to_string(N) + " exceeds " + std::to_string(kStateSpaceLimit));
    }
}

IntPoly multiply(const IntPoly& f, const IntPoly& g) {
    IntPoly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

// Exact division by a polynomial with leading coefficient +-1.
IntPoly divide_exact(IntPoly f, const IntPoly& g) {
    const long long lead = g.back();
    if (std::llabs(lead) != 1) throw Error(ErrorKind::ConstraintViolated, "divisor must be monic up to sign");
    const std::size_t dg = g.size() - 1;
    if (f.size() < g.size()) throw Error(ErrorKind::ConstraintViolated, "division leaves a remainder");
    IntPoly q(f.size() - dg, 0);
    for (std::size_t i = f.size(); i-- > dg;) {
        const long long c = f[i] * lead;
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
    }
    for (long long r : f)
        if (r != 0) throw Error(ErrorKind::ConstraintViolated, "division leaves a remainder");
    return q;
}

IntPoly t_power_minus_one(int n) {
    IntPoly f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    return f;
}

}  // namespace

int BraidWord::writhe() const {
    int w = 0;
    for (int g : letters) w += (g > 0) ? 1 : -1;
    return w;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> at(strands);
    std::iota(at.begin(), at.end(), 0);  // at[position] = strand currently there
    for (int g : letters) {
        const int k = std::abs(g) - 1;
        std::swap(at[k], at[k + 1]);
    }
    std::vector<int> perm(strands);
    for (int pos = 0; pos < strands; ++pos) perm[at[pos]] = pos;
    return perm;
}

int BraidWord::components() const {
    const std::vector<int> perm = permutation();
    std::vector<bool> seen(strands, false);
    int count = 0;
    for (int s = 0; s < strands; ++s) {
        if (seen[s]) continue;
        ++count;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return count;
}

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 1) throw Error(ErrorKind::ConstraintViolated, "a braid needs at least one strand");
    for (int g : letters)
        if (g == 0 || std::abs(g) > strands - 1)
            throw Error(ErrorKind::ConstraintViolated,
                        "generator " + std::to_string(g) + " invalid on " + std::to_string(strands) + " strands");
    BraidWord w;
    w.strands = strands;
    w.letters = std::move(letters);
    return w;
}

BraidWord cable_braid(const CableParams& p) {
    std::vector<int> letters;
    for (int i = 0; i < p.P; ++i) letters.insert(letters.end(), {2, 1, 3, 2});
    for (int i = 0; i < p.Q - 2 * p.P; ++i) letters.push_back(1);
    return make_braid(4, std::move(letters));
}

BraidWord torus_braid(int c, int d) {
    if (c < 2 || d < 2) throw Error(ErrorKind::ConstraintViolated, "torus knot needs c, d >= 2");
    if (std::gcd(c, d) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(c) + "," + std::to_string(d) + ") != 1");
    std::vector<int> letters;
    for (int r = 0; r < d; ++r)
        for (int i = 1; i < c; ++i) letters.push_back(i);
    return make_braid(c, std::move(letters));
}

std::vector<RTerm> apply_r_matrix(int N, const Complex& A, int a, int b, bool inverse) {
    if (a < 0 || a >= N || b < 0 || b >= N) throw Error(ErrorKind::IndexOutOfRange, "basis index outside [0,N)");
    const RTables tables(N, A);
    std::vector<RTerm> out;
    tables.apply(a, b, inverse, [&](const Complex& c, int i, int j) { out.push_back({c, i, j}); });
    return out;
}

Complex colored_jones_braid(const BraidWord& braid, int N, const Complex& q, const PrecisionContext& ctx) {
    if (N < 1) throw Error(ErrorKind::ConstraintViolated, "color N must be at least 1");
    if (N == 1) return Complex(1);
    if (braid.components() != 1) throw Error(ErrorKind::ConstraintViolated, "braid closure is not a knot");
    check_state_space(braid.strands, N);

    PrecisionScope scope(ctx.bits + kGuardBits);
    const Complex A = principal_fourth_root(rounded(q));
    const RTables tables(N, A);

    std::vector<long> radix(braid.strands, 1);
    for (int k = 1; k < braid.strands; ++k) radix[k] = radix[k - 1] * N;
    auto digit = [&](long s, int k) { return static_cast<int>((s / radix[k]) % N); };

    long closed_states = 1;
    for (int k = 1; k < braid.strands; ++k) closed_states *= N;

    Complex total;
    for (long rest = 0; rest < closed_states; ++rest) {
        const long start = rest * N;  // strand 0 in e_0
        std::map<long, Complex> state{{start, Complex(1)}};
        for (int g : braid.letters) {
            const int k = std::abs(g) - 1;
            std::map<long, Complex> next;
            for (const auto& [s, amp] : state) {
                const int a = digit(s, k), b = digit(s, k + 1);
                const long base = s - a * radix[k] - b * radix[k + 1];
                tables.apply(a, b, g < 0, [&](const Complex& c, int i, int j) {
                    next[base + i * radix[k] + j * radix[k + 1]] += c * amp;
                });
            }
            state = std::move(next);
        }
        const auto it = state.find(start);
        if (it == state.end()) continue;
        Complex term = it->second;
        for (int k = 1; k < braid.strands; ++k) term *= tables.a_power(2 * tables.weight(digit(start, k)));
        total += term;
    }

    const long framing = -static_cast<long>(N * N - 1) * braid.writhe();
    return total * pow(A, framing);
}

Complex oracle_jones(const CableParams& p, Level N, const PrecisionContext& ctx) {
    check_state_space(4, N);
    PrecisionScope scope(ctx.bits + kGuardBits);
    return colored_jones_braid(cable_braid(p), N, root_of_unity(N, PrecisionContext(ctx.bits + kGuardBits)), ctx);
}

Complex torus_jones(int c, int d, int N, const Complex& q, const PrecisionContext& ctx) {
    const BraidWord w = torus_braid(c, d);
    if (N > 1) check_state_space(c, N);
    return colored_jones_braid(w, N, q, ctx);
}

IntPoly torus_alexander(int c, int d) {
    if (c < 1 || d < 1) throw Error(ErrorKind::ConstraintViolated, "torus parameters must be positive");
    if (std::gcd(c, d) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(c) + "," + std::to_string(d) + ") != 1");
    const IntPoly num = multiply(t_power_minus_one(c * d), t_power_minus_one(1));
    const IntPoly den = multiply(t_power_minus_one(c), t_power_minus_one(d));
    return divide_exact(num, den);
}

IntPoly cable_alexander(const CableParams& p) {
    const IntPoly companion = torus_alexander(2, p.P);
    IntPoly doubled(2 * companion.size() - 1, 0);
    for (std::size_t i = 0; i < companion.size(); ++i) doubled[2 * i] = companion[i];
    return multiply(doubled, torus_alexander(2, p.Q));
}

long long evaluate(const IntPoly& f, long long t) {
    long long acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
    return acc;
}

long long cable_determinant(const CableParams& p) { return std::llabs(evaluate(cable_alexander(p), -1)); }

}  // namespace kashaev
