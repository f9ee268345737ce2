#pragma once

#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <boost/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace kashaev {

using Rational = boost::rational<long long>;
using IndexPair = std::pair<int, int>;

/// tau together with S = s_over_pi2 * pi^2, the rational part kept exact.
struct TauS {
    Real tau;
    Rational s_over_pi2;

    Real S() const;
};

TauS tau_S_an(const CableParams& p, int l);
TauS tau_S_na(const CableParams& p, int m);
TauS tau_S_nn(const CableParams& p, int j, int k);

/// The (l,m)-indexed tau_3 of the residue sums: tau_S_nn's tau with (j,k) = (l,m).
Real tau3_lm(const CableParams& p, int l, int m);

/// S3~(l,m) / pi^2 = 2((2m+1)^2/(4P) + ((2l+1) - 2(2m+1))^2/(4R)).
Rational s3_tilde(const CableParams& p, int l, int m);

/// Pairs (j,k), 0 <= k <= 4a+1, 0 <= j <= R-1, with R(2k+1) < 2P(2j+1).  Ordered by k, then j.
std::vector<IndexPair> index_set_B(const CableParams& p);

/// Pairs (l,m) in the box with R+2m+1 > l and Q(2m+1) < 2P(2l+1): the box minus the
/// two residue ranges of the J1 and J2 double sums.  Ordered by m, then l.
std::vector<IndexPair> index_set_A(const CableParams& p);

/// Same, with the bound l <= R+2m+1 as printed.  Contains pairs mapping outside B.
std::vector<IndexPair> index_set_A_printed(const CableParams& p);

/// (l,m) -> (l - 2m - 1, m)
IndexPair reindex(const IndexPair& lm);

enum class Family { AN, NA, NN };
const char* to_string(Family f);

struct AsymptoticTerm {
    Family family = Family::AN;
    std::vector<int> indices;
    Real tau;
    Rational s_over_pi2;
    Complex contribution;
};

/// e^{N S / (2 pi i)} with S = s * pi^2; the phase is reduced mod 2 pi exactly.
Complex unit_phase(const Rational& s_over_pi2, int N);

/// Terms of the three theorem sums at level N, each with its sum's prefactor.
std::vector<AsymptoticTerm> theorem_terms(const CableParams& p, int N, const PrecisionContext& ctx);

/// Sum of theorem_terms.  b_sum_sign multiplies the third (B-indexed) sum.
Complex theorem_rhs(const CableParams& p, int N, const PrecisionContext& ctx, int b_sum_sign = 1);

/// Leading parts of the rescaled I_1, I_2, I_3, as printed.
Complex proof_form_J1(const CableParams& p, int N, const PrecisionContext& ctx);
Complex proof_form_J2(const CableParams& p, int N, const PrecisionContext& ctx);
Complex proof_form_J3(const CableParams& p, int N, const PrecisionContext& ctx);

/// proof_form_J2 with the N^{3/2} term carrying -1 for every N instead of (-1)^{N-1}.
Complex proof_form_J2_corrected(const CableParams& p, int N, const PrecisionContext& ctx);

/// sum_m (-1)^m sin((2m+1) pi / P) e^{N S2(m) / (2 pi i)}
Complex vanishing_sum(const CableParams& p, int N, const PrecisionContext& ctx);

/// (k - cd)^2 / (cd)
Rational dk_S(int c, int d, int k);
/// k^2 / (cd)
Rational dk_S_tilde(int c, int d, int k);
Real dk_tau(int c, int d, int k);

Complex dk_rhs(int c, int d, int N, const PrecisionContext& ctx);
Complex dk_remark_rhs(int c, int d, int N, const PrecisionContext& ctx);

/// e^{-pi i (cd - c/d - d/c) / (2N)}
Complex dk_phase_correction(int c, int d, int N, const PrecisionContext& ctx);

bool is_integer(const Rational& r);

/// Least-squares slope of log(residual) against log(N).
double loglog_slope(const std::vector<double>& ns, const std::vector<double>& residuals);

}  // namespace kashaev
