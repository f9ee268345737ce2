#pragma once

#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <vector>

namespace kashaev {

/// Braid on `strands` strands; letter +i is sigma_i, -i its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int writhe() const;
    /// Image of each strand position under the braid permutation.
    std::vector<int> permutation() const;
    /// Number of components of the closure.
    int components() const;
};

/// Throws ConstraintViolated when a letter is out of range.
BraidWord make_braid(int strands, std::vector<int> letters);

/// Companion doubled along (sigma2 sigma1 sigma3 sigma2)^P, then sigma1^{Q-2P}.
BraidWord cable_braid(const CableParams& p);

/// (sigma1 ... sigma_{c-1})^d on c strands.
BraidWord torus_braid(int c, int d);

/// Largest allowed N^strands for the state sum.
constexpr long kStateSpaceLimit = 12L * 12 * 12 * 12;

/// Normalized N-colored Jones polynomial of the closure at q, zero framing.
///
/// State sum of the R-matrix of U_q(sl2) on V_N (basis weights N-1-2i,
/// A = q^{1/4} principal, v = A^2) over the closure with the first strand cut
/// open, times A^{-(N^2-1) writhe}.  The positive-knot chirality convention
/// gives -3 for sigma1^3 at N = 2.
Complex colored_jones_braid(const BraidWord& braid, int N, const Complex& q, const PrecisionContext& ctx);

/// Apply the R-matrix (or its inverse) to e_a (x) e_b; terms are
/// (coefficient, first output index, second output index).  Exposed for tests.
struct RTerm {
    Complex coefficient;
    int first;
    int second;
};
std::vector<RTerm> apply_r_matrix(int N, const Complex& A, int a, int b, bool inverse);

/// colored_jones_braid(cable_braid(p), N, e^{2 pi i/N}).  TooLarge when N^4 exceeds the limit.
Complex oracle_jones(const CableParams& p, Level N, const PrecisionContext& ctx);

/// Colored Jones polynomial of T(c,d).  NotCoprime, TooLarge, ConstraintViolated for c or d < 2.
Complex torus_jones(int c, int d, int N, const Complex& q, const PrecisionContext& ctx);

/// Integer Laurent polynomial stored from degree 0 upward.
using IntPoly = std::vector<long long>;

/// (t^{cd} - 1)(t - 1) / ((t^c - 1)(t^d - 1)) by exact division.
IntPoly torus_alexander(int c, int d);
/// Delta_{T(2,P)}(t^2) Delta_{T(2,Q)}(t).
IntPoly cable_alexander(const CableParams& p);
long long evaluate(const IntPoly& f, long long t);
/// |Delta(-1)| of the cable knot.
long long cable_determinant(const CableParams& p);

}  // namespace kashaev
