#include "kashaev/holonomy.hpp"

#include "kashaev/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kashaev {

namespace {

constexpr unsigned kGuardBits = 32;

bool divides(long d, long n) { return n % d == 0; }

// e^{pi i n / d}, with n reduced mod 2d first.
Complex root_power(long n, long d) {
    const long r = ((n % (2 * d)) + 2 * d) % (2 * d);
    return cis(pi() * Real(r) / Real(d));
}

Mat2 diag_upper(const Complex& a, const Complex& b, const Complex& d) { return {a, b, Complex(), d}; }

Mat2 conjugate_by(const Mat2& T, const Mat2& M) { return T.inverse() * M * T; }

Mat2 p_image(const Complex& u) {
    const Complex h = exp(u / Real(2));
    return {h, Complex(1), Complex(), Complex(1) / h};
}

void require_range(const char* name, int value, int last) {
    if (value < 0 || value > last)
        throw Error(ErrorKind::IndexOutOfRange,
                    std::string(name) + "=" + std::to_string(value) + " outside [0," + std::to_string(last) + "]");
}

void require_arity(Family f, const std::vector<int>& indices) {
    const std::size_t want = (f == Family::NN) ? 2 : 1;
    if (indices.size() != want)
        throw Error(ErrorKind::IndexOutOfRange, std::string(to_string(f)) + " takes " + std::to_string(want) +
                                                    " indices, got " + std::to_string(indices.size()));
}

void check_full_range(Family f, const CableParams& p, const std::vector<int>& idx) {
    require_arity(f, idx);
    switch (f) {
        case Family::AN: require_range("l", idx[0], 2 * p.b); break;
        case Family::NA: require_range("m", idx[0], 4 * p.a + 1); break;
        case Family::NN:
            require_range("j", idx[0], p.R - 1);
            require_range("k", idx[1], 4 * p.a + 1);
            break;
    }
}

// The builders take any integer index; the public constructors add the range checks.
struct AnParts {
    Mat2 T1;
    Mat2 X;  // before conjugation
    Mat2 T;  // before conjugation
};

AnParts an_parts(const CableParams& p, long l, const Complex& u) {
    const long k = 2 * l + 1;
    if (divides(p.Q, k))
        throw Error(ErrorKind::DegenerateIndex, "AN: " + std::to_string(p.Q) + " divides 2l+1 for l=" + std::to_string(l));
    const Complex h = exp(u / Real(2));
    const Complex w = root_power(k, p.Q), winv = root_power(-k, p.Q);
    const Complex c = root_power(k * p.b, p.Q), cinv = root_power(-k * p.b, p.Q);
    return {Mat2{Complex(1), Complex(), winv * h - Complex(1) / h, Complex(1)}, diag_upper(w, Complex(1) / h, winv),
            diag_upper(c, (c - cinv) / (w - winv) / h, cinv)};
}

Representation build_an(const CableParams& p, long l, const Complex& u) {
    const AnParts parts = an_parts(p, l, u);
    const Mat2 X = conjugate_by(parts.T1, parts.X);

    Representation rep;
    rep.family = Family::AN;
    rep.indices = {static_cast<int>(l)};
    rep.u = u;
    rep.images = {X, X, p_image(u), conjugate_by(parts.T1, parts.T)};
    rep.bits = working_bits();
    return rep;
}

Representation build_na(const CableParams& p, long m, const Complex& u) {
    const long K = 2 * m + 1;
    if (divides(p.P, K))
        throw Error(ErrorKind::DegenerateIndex, "NA: " + std::to_string(p.P) + " divides 2m+1 for m=" + std::to_string(m));
    const Complex h = exp(u / Real(2));
    const Complex eu = exp(u), eui = Complex(1) / eu;
    const Complex cosh_sum = h + Complex(1) / h;
    const Mat2 X = diag_upper(eu, cosh_sum, eui);
    const Complex lower = (root_power(K, p.P) + root_power(-K, p.P) - eu * eu - eui * eui) / cosh_sum;
    const Mat2 Y{eu, Complex(), lower, eui};
    const long e = p.b - 4 * p.a - 2;
    const Complex ee = exp(u * Real(e));
    const Mat2 T = diag_upper(-ee, removable_ratio(e, u), -(Complex(1) / ee));

    Representation rep;
    rep.family = Family::NA;
    rep.indices = {static_cast<int>(m)};
    rep.u = u;
    rep.images = {X, Y, p_image(u), T};
    rep.bits = working_bits();
    return rep;
}

Representation build_nn(const CableParams& p, long j, long k, const Complex& u) {
    const long J = 2 * j + 1, K = 2 * k + 1;
    if (divides(p.R, J))
        throw Error(ErrorKind::DegenerateIndex, "NN: " + std::to_string(p.R) + " divides 2j+1 for j=" + std::to_string(j));
    if (divides(p.P, K))
        throw Error(ErrorKind::DegenerateIndex, "NN: " + std::to_string(p.P) + " divides 2k+1 for k=" + std::to_string(k));
    const Complex q = exp(u / Real(4));
    const Complex w = root_power(J, p.R), winv = root_power(-J, p.R);
    const Mat2 T2{q, Complex(), winv * q - exp(u * Real(-3) / Real(4)), Complex(1) / q};
    const Mat2 X = conjugate_by(T2, diag_upper(w, Complex(1), winv));
    const Complex lower = root_power(K, p.P) + root_power(-K, p.P) - root_power(2 * J, p.R) - root_power(-2 * J, p.R);
    const Mat2 Y = conjugate_by(T2, Mat2{w, Complex(), lower, winv});
    const long e = p.b - 4 * p.a - 2;
    const Complex c = root_power(e * J, p.R), cinv = root_power(-e * J, p.R);
    const Mat2 T = conjugate_by(T2, diag_upper(-c, (cinv - c) / (w - winv), -cinv));

    Representation rep;
    rep.family = Family::NN;
    rep.indices = {static_cast<int>(j), static_cast<int>(k)};
    rep.u = u;
    rep.images = {X, Y, p_image(u), T};
    rep.bits = working_bits();
    return rep;
}

Real generator_distance(const Representation& r, const Representation& s, std::initializer_list<Generator> gens) {
    Real worst(0);
    for (Generator g : gens) worst = std::max(worst, max_distance(r.image(g), s.image(g)));
    return worst;
}

constexpr std::initializer_list<Generator> kAllGenerators = {Generator::x, Generator::y, Generator::p, Generator::t};

std::string index_label(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

}  // namespace

const char* to_string(Generator g) {
    switch (g) {
        case Generator::x: return "x";
        case Generator::y: return "y";
        case Generator::p: return "p";
        case Generator::t: return "t";
    }
    return "?";
}

GroupWord::GroupWord(std::initializer_list<Letter> letters) {
    for (const Letter& l : letters) append(l.generator, l.exponent);
}

GroupWord& GroupWord::append(Generator g, long e) {
    if (e == 0) return *this;
    if (!letters_.empty() && letters_.back().generator == g) {
        letters_.back().exponent += e;
        if (letters_.back().exponent == 0) letters_.pop_back();
        return *this;
    }
    letters_.push_back({g, e});
    return *this;
}

GroupWord& GroupWord::operator*=(const GroupWord& w) {
    for (const Letter& l : w.letters_) append(l.generator, l.exponent);
    return *this;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->generator, -it->exponent);
    return out;
}

GroupWord GroupWord::power(long n) const {
    const GroupWord base = (n < 0) ? inverse() : *this;
    GroupWord out;
    for (long i = 0; i < std::labs(n); ++i) out *= base;
    return out;
}

long GroupWord::length() const {
    long n = 0;
    for (const Letter& l : letters_) n += std::labs(l.exponent);
    return n;
}

std::array<long, 4> GroupWord::exponent_sums() const {
    std::array<long, 4> sums{};
    for (const Letter& l : letters_) sums[static_cast<int>(l.generator)] += l.exponent;
    return sums;
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << kashaev::to_string(letters_[i].generator);
        if (letters_[i].exponent != 1) out << '^' << letters_[i].exponent;
    }
    return out.str();
}

bool operator==(const GroupWord& a, const GroupWord& b) {
    return std::equal(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
                      [](const Letter& l, const Letter& r) { return l.generator == r.generator && l.exponent == r.exponent; });
}

GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }

GroupWord gen(Generator g, long e) {
    GroupWord w;
    return w.append(g, e);
}

std::vector<GroupWord> relators(const CableParams& p) {
    using G = Generator;
    const GroupWord xy = gen(G::x) * gen(G::y);
    const GroupWord r1 = xy.power(p.a) * gen(G::x) * (gen(G::y) * xy.power(p.a)).inverse();
    const GroupWord r2 =
        gen(G::y) * xy.power(2 * p.a) * gen(G::x, -4 * p.a - 1) * (gen(G::t) * gen(G::x, -p.b)).inverse();
    const GroupWord r3 = gen(G::x) * (gen(G::p) * gen(G::t) * gen(G::p) * gen(G::t, -1)).inverse();
    return {r1, r2, r3};
}

GroupWord pattern_relator() {
    using G = Generator;
    const GroupWord pt = gen(G::p) * gen(G::t);
    const GroupWord tp = gen(G::t) * gen(G::p);
    return pt * pt * (tp * tp).inverse();
}

GroupWord meridian() { return gen(Generator::p); }

GroupWord longitude(const CableParams& p) {
    using G = Generator;
    const GroupWord part = gen(G::y) * (gen(G::x) * gen(G::y)).power(2 * p.a) * gen(G::x, p.b - 4 * p.a - 1);
    const GroupWord conj = gen(G::t) * gen(G::p) * gen(G::t, -1);
    return part * gen(G::p) * conj.power(-p.b) * part * gen(G::p, -3 * p.b - 1);
}

Mat2 Mat2::identity() { return {Complex(1), Complex(), Complex(), Complex(1)}; }
Complex Mat2::det() const { return a * d - b * c; }
Complex Mat2::trace() const { return a + d; }

Mat2 Mat2::inverse() const {
    const Complex D = det();
    return {d / D, -b / D, -c / D, a / D};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 pow(const Mat2& m, long n) {
    Mat2 base = (n < 0) ? m.inverse() : m;
    unsigned long e = static_cast<unsigned long>(std::labs(n));
    Mat2 out = Mat2::identity();
    while (e) {
        if (e & 1UL) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

Real max_distance(const Mat2& m, const Mat2& n) {
    return std::max({abs(m.a - n.a), abs(m.b - n.b), abs(m.c - n.c), abs(m.d - n.d)});
}

Mat2 word_eval(const Representation& rep, const GroupWord& w) {
    PrecisionScope scope(rep.bits ? rep.bits : working_bits());
    Mat2 out = Mat2::identity();
    for (const Letter& l : w.letters()) out = out * pow(rep.image(l.generator), l.exponent);
    return out;
}

Representation rho_an(const CableParams& p, int l, const Complex& u, const PrecisionContext& ctx) {
    check_full_range(Family::AN, p, {l});
    PrecisionScope scope(ctx.bits + kGuardBits);
    return build_an(p, l, rounded(u));
}

Representation rho_na(const CableParams& p, int m, const Complex& u, const PrecisionContext& ctx) {
    check_full_range(Family::NA, p, {m});
    PrecisionScope scope(ctx.bits + kGuardBits);
    return build_na(p, m, rounded(u));
}

Representation rho_nn(const CableParams& p, int j, int k, const Complex& u, const PrecisionContext& ctx) {
    check_full_range(Family::NN, p, {j, k});
    PrecisionScope scope(ctx.bits + kGuardBits);
    return build_nn(p, j, k, rounded(u));
}

Representation make_representation(Family f, const CableParams& p, const std::vector<int>& indices,
                                   const Complex& u, const PrecisionContext& ctx) {
    require_arity(f, indices);
    switch (f) {
        case Family::AN: return rho_an(p, indices[0], u, ctx);
        case Family::NA: return rho_na(p, indices[0], u, ctx);
        case Family::NN: return rho_nn(p, indices[0], indices[1], u, ctx);
    }
    throw Error(ErrorKind::ConstraintViolated, "unknown family");
}

CanonicalRange canonical_range(const CableParams& p) { return {p.b, p.a, p.a, p.R}; }

bool is_degenerate(Family f, const CableParams& p, const std::vector<int>& idx) {
    require_arity(f, idx);
    switch (f) {
        case Family::AN: return divides(p.Q, 2L * idx[0] + 1);
        case Family::NA: return divides(p.P, 2L * idx[0] + 1);
        case Family::NN: return divides(p.R, 2L * idx[0] + 1) || divides(p.P, 2L * idx[1] + 1);
    }
    return false;
}

namespace {

std::vector<std::vector<int>> full_range(Family f, const CableParams& p) {
    std::vector<std::vector<int>> out;
    switch (f) {
        case Family::AN:
            for (int l = 0; l <= 2 * p.b; ++l) out.push_back({l});
            break;
        case Family::NA:
            for (int m = 0; m <= 4 * p.a + 1; ++m) out.push_back({m});
            break;
        case Family::NN:
            for (int k = 0; k <= 4 * p.a + 1; ++k)
                for (int j = 0; j < p.R; ++j) out.push_back({j, k});
            break;
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> degenerate_indices(Family f, const CableParams& p) {
    std::vector<std::vector<int>> out;
    for (auto& idx : full_range(f, p))
        if (is_degenerate(f, p, idx)) out.push_back(idx);
    return out;
}

std::vector<std::vector<int>> admissible_indices(Family f, const CableParams& p) {
    std::vector<std::vector<int>> out;
    for (auto& idx : full_range(f, p))
        if (!is_degenerate(f, p, idx)) out.push_back(idx);
    return out;
}

Complex removable_ratio(long c, const Complex& u) {
    if (u.re == 0 && u.im == 0) return Complex(Real(-2 * c));
    const Complex den = sinh(u / Real(2));
    if (abs(den) < pow2(-static_cast<long>(working_bits()) + 8))
        throw Error(ErrorKind::DegenerateVariable, "e^{u/2} - e^{-u/2} vanishes at nonzero u");
    return -sinh(u * Real(c)) / den;
}

Mat2 printed_longitude(const Representation& rep, const CableParams& p) {
    PrecisionScope scope(rep.bits ? rep.bits : working_bits());
    const Complex& u = rep.u;
    if (rep.family == Family::NA) {
        const long c = 4L * p.P;
        const Complex e = exp(u * Real(c));
        return diag_upper(Complex(1) / e, removable_ratio(c, u), e);
    }
    const Complex e = exp(u * Real(p.Q));
    return diag_upper(-(Complex(1) / e), -removable_ratio(p.Q, u), -e);
}

Real relator_deviation(const Representation& rep, const CableParams& p) {
    PrecisionScope scope(rep.bits ? rep.bits : working_bits());
    Real worst = max_distance(word_eval(rep, pattern_relator()), Mat2::identity());
    for (const GroupWord& r : relators(p)) worst = std::max(worst, max_distance(word_eval(rep, r), Mat2::identity()));
    return worst;
}

Mat2 an_conjugator(const CableParams& p, int l, const Complex& u_in, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.bits + kGuardBits);
    const Complex u = rounded(u_in);
    const Complex h = exp(u / Real(2));
    return {Complex(1), Complex(), Complex(1) / h - root_power(2L * l + 1, p.Q) * h, Complex(1)};
}

std::array<Mat2, 4> an_core(const CableParams& p, int l, const Complex& u_in, const PrecisionContext& ctx) {
    check_full_range(Family::AN, p, {l});
    PrecisionScope scope(ctx.bits + kGuardBits);
    const Complex u = rounded(u_in);
    const AnParts parts = an_parts(p, l, u);
    return {parts.X, parts.X, p_image(u), parts.T};
}

std::vector<CheckOutcome> symmetry_checks(const CableParams& p, const Complex& u_in, const PrecisionContext& ctx,
                                          const Real& tol) {
    PrecisionScope scope(ctx.bits + kGuardBits);
    const Complex u = rounded(u_in);
    std::vector<CheckOutcome> out;
    auto record = [&](std::string name, Real worst) {
        const bool ok = worst < tol;
        out.push_back({std::move(name), std::move(worst), tol, ok, false});
    };

    {
        Real period(0), conj(0), equal(0), core_conj(0);
        for (int l = 0; l <= 2 * p.b; ++l) {
            if (divides(p.Q, 2L * l + 1)) continue;
            const Representation r = build_an(p, l, u);
            period = std::max(period, generator_distance(r, build_an(p, l + p.Q, u), kAllGenerators));
            const Representation mirror = build_an(p, 2 * p.b - l, u);
            equal = std::max(equal, generator_distance(r, mirror, kAllGenerators));
            const Mat2 C = an_conjugator(p, l, u, ctx);
            const Mat2 Ci = C.inverse();
            const AnParts core = an_parts(p, 2 * p.b - l, u);
            const std::array<Mat2, 4> core_images{core.X, core.X, p_image(u), core.T};
            for (Generator g : kAllGenerators) {
                conj = std::max(conj, max_distance(C * mirror.image(g) * Ci, r.image(g)));
                if (g != Generator::p)
                    core_conj = std::max(core_conj, max_distance(C * core_images[static_cast<int>(g)] * Ci, r.image(g)));
            }
        }
        record("AN periodicity l -> l+2b+1", period);
        record("AN conjugacy R_{1,l} rho_{2b-l} R_{1,l}^{-1} = rho_l", conj);
        record("AN rho_{2b-l} = rho_l", equal);
        out.back().diagnostic = true;
        record("AN R_{1,l} (triangular core of rho_{2b-l}) R_{1,l}^{-1} = rho_l on x, y, t", core_conj);
        out.back().diagnostic = true;
    }
    {
        Real period(0), reflect(0);
        for (int m = 0; m <= 4 * p.a + 1; ++m) {
            if (divides(p.P, 2L * m + 1)) continue;
            const Representation r = build_na(p, m, u);
            period = std::max(period, generator_distance(r, build_na(p, m + p.P, u), kAllGenerators));
            reflect = std::max(reflect, generator_distance(r, build_na(p, 2 * p.a - m, u), kAllGenerators));
        }
        record("NA periodicity m -> m+2a+1", period);
        record("NA reflection m -> 2a-m", reflect);
    }
    {
        Real period_k(0), reflect_k(0), period_j(0);
        for (const auto& idx : admissible_indices(Family::NN, p)) {
            const int j = idx[0], k = idx[1];
            const Representation r = build_nn(p, j, k, u);
            period_k = std::max(period_k, generator_distance(r, build_nn(p, j, k + p.P, u), kAllGenerators));
            reflect_k = std::max(reflect_k, generator_distance(r, build_nn(p, j, 2 * p.a - k, u), kAllGenerators));
            period_j = std::max(period_j, generator_distance(r, build_nn(p, j + p.R, k, u), kAllGenerators));
        }
        record("NN periodicity k -> k+2a+1", period_k);
        record("NN reflection k -> 2a-k", reflect_k);
        record("NN periodicity j -> j+2b+1-4(2a+1)", period_j);
    }
    {
        Real trace_err(0);
        Real separation(-1);
        const GroupWord py = gen(Generator::p) * gen(Generator::y);
        for (const auto& idx : admissible_indices(Family::NN, p)) {
            const int j = idx[0], k = idx[1];
            const Representation r = build_nn(p, j, k, Complex());
            const Complex tr = word_eval(r, py).trace();
            const Complex w = root_power(2L * j + 1, p.R) - Complex(1);
            const Complex expected = -(w * w) + root_power(2L * k + 1, p.P) + root_power(-(2L * k + 1), p.P);
            trace_err = std::max(trace_err, abs(tr - expected));
            const Complex other = word_eval(build_nn(p, p.R - 1 - j, k, Complex()), py).trace();
            const Real gap = abs(tr - other);
            if (separation < 0 || gap < separation) separation = gap;
        }
        record("NN trace of py at u=0", trace_err);
        const bool separated = separation > tol;
        out.push_back({"NN trace separation j vs 2b-4(2a+1)-j (minimum gap)", separation, tol, separated, false});
    }
    return out;
}

CSValue cs_value(Family f, const CableParams& p, const std::vector<int>& idx) {
    check_full_range(f, p, idx);
    CSValue v;
    v.family = f;
    v.indices = idx;
    switch (f) {
        case Family::AN: {
            const long long k = 2LL * idx[0] + 1;
            v.value_over_pi2 = Rational(k * k, 2LL * p.Q);
            v.linear_term_note = "+ (1/2) d1 u pi i, d1 odd, unresolved";
            break;
        }
        case Family::NA: {
            const long long k = 2LL * idx[0] + 1;
            v.value_over_pi2 = Rational(k * k, 2LL * p.P);
            v.linear_term_note = "+ d2 u pi i, d2 integer, unresolved";
            break;
        }
        case Family::NN: {
            const long long J = 2LL * idx[0] + 1, K = 2LL * idx[1] + 1;
            v.value_over_pi2 = Rational(K * K, 2LL * p.P) + Rational(J * J, 2LL * p.R);
            v.linear_term_note = "+ (1/2) d3 u pi i, d3 integer, unresolved";
            break;
        }
    }
    return v;
}

TorsionValue torsion_value(Family f, const CableParams& p, const std::vector<int>& idx, const PrecisionContext& ctx) {
    check_full_range(f, p, idx);
    PrecisionScope scope(ctx.bits + kGuardBits);
    TorsionValue v;
    v.family = f;
    v.indices = idx;
    const Real pi_ = pi();
    auto degenerate = [&](const std::string& what) {
        return Error(ErrorKind::DegenerateDenominator, std::string(to_string(f)) + index_label(idx) + ": " + what);
    };
    switch (f) {
        case Family::AN: {
            const long k = 2L * idx[0] + 1;
            if (divides(p.Q, k)) throw degenerate("sin(2(2l+1)pi/(2b+1)) = 0");
            const Real s = sin(Real(2 * k) * pi_ / Real(p.Q));
            const Real c = cos(Real(long(p.P) * k) * pi_ / Real(p.Q));
            v.value = Real(p.Q) * c * c / (Real(2) * s * s);
            break;
        }
        case Family::NA: {
            const long k = 2L * idx[0] + 1;
            if (divides(p.P, k)) throw degenerate("sin((2m+1)pi/(2a+1)) = 0");
            const Real s = sin(Real(k) * pi_ / Real(p.P));
            v.value = Real(p.P) / (Real(2) * s * s);
            break;
        }
        case Family::NN: {
            const long k = 2L * idx[1] + 1;
            if (divides(p.P, k)) throw degenerate("sin((2k+1)pi/(2a+1)) = 0");
            const Real s = sin(Real(k) * pi_ / Real(p.P));
            v.value = Real(long(p.P) * p.R) / (Real(16) * s * s);
            break;
        }
    }
    return v;
}

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& A) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    SmithForm s;
    s.D = A;
    s.U.assign(m, std::vector<long long>(m, 0));
    s.V.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < m; ++i) s.U[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) s.V[j][j] = 1;
    auto& D = s.D;

    auto row_axpy = [&](std::size_t dst, std::size_t src, long long q) {  // row dst -= q row src
        for (std::size_t j = 0; j < n; ++j) D[dst][j] -= q * D[src][j];
        for (std::size_t j = 0; j < m; ++j) s.U[dst][j] -= q * s.U[src][j];
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, long long q) {  // col dst -= q col src
        for (std::size_t i = 0; i < m; ++i) D[i][dst] -= q * D[i][src];
        for (std::size_t i = 0; i < n; ++i) s.V[i][dst] -= q * s.V[i][src];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(s.U[a], s.U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : D) std::swap(row[a], row[b]);
        for (auto& row : s.V) std::swap(row[a], row[b]);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi_ = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D[i][j] != 0 && (pi_ == m || std::llabs(D[i][j]) < std::llabs(D[pi_][pj]))) {
                        pi_ = i;
                        pj = j;
                    }
            if (pi_ == m) goto finished;
            swap_rows(t, pi_);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                row_axpy(i, t, D[i][t] / D[t][t]);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                col_axpy(j, t, D[t][j] / D[t][t]);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_axpy(t, bad, -1);
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : s.U[t]) x = -x;
        }
    }
finished:
    for (std::size_t t = 0; t < std::min(m, n); ++t) s.diagonal.push_back(D[t][t]);
    return s;
}

Abelianization abelianization(const CableParams& p) {
    std::vector<GroupWord> rels = relators(p);
    rels.push_back(pattern_relator());
    std::vector<std::vector<long long>> A;
    for (const GroupWord& r : rels) {
        const auto e = r.exponent_sums();
        A.push_back({e[0], e[1], e[2], e[3]});
    }
    const SmithForm s = smith_normal_form(A);
    Abelianization ab;
    std::size_t rank = 0;
    for (long long d : s.diagonal)
        if (d != 0) {
            ++rank;
            if (d != 1) ab.invariant_factors.push_back(d);
        }
    ab.free_rank = static_cast<int>(4 - rank);
    if (ab.free_rank == 1) {
        std::array<long long, 4> phi{};
        for (int g = 0; g < 4; ++g) phi[g] = s.V[g][rank];
        long long gcd = 0;
        for (long long v : phi) gcd = std::gcd(gcd, v);
        const int sign = (phi[static_cast<int>(Generator::p)] < 0) ? -1 : 1;
        for (int g = 0; g < 4; ++g) ab.generator_class[g] = sign * phi[g] / gcd;
    }
    return ab;
}

long long abelian_class(const Abelianization& ab, const GroupWord& w) {
    const auto e = w.exponent_sums();
    long long total = 0;
    for (int g = 0; g < 4; ++g) total += ab.generator_class[g] * e[g];
    return total;
}

}  // namespace kashaev
