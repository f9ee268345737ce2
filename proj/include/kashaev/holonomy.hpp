#pragma once

#include "kashaev/asymptotics.hpp"
#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

namespace kashaev {

enum class Generator { x = 0, y = 1, p = 2, t = 3 };
const char* to_string(Generator g);

struct Letter {
    Generator generator;
    long exponent;
};

/// Freely reduced word in x, y, p, t.
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> letters);

    /// Appends g^e, merging with the last letter when it is the same generator.
    GroupWord& append(Generator g, long e);
    GroupWord& operator*=(const GroupWord& w);

    GroupWord inverse() const;
    GroupWord power(long n) const;

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Sum of |exponent| over the letters.
    long length() const;
    /// Exponent sums indexed by Generator.
    std::array<long, 4> exponent_sums() const;
    std::string to_string() const;

    friend bool operator==(const GroupWord&, const GroupWord&);

private:
    std::vector<Letter> letters_;
};

GroupWord operator*(GroupWord a, const GroupWord& b);
GroupWord gen(Generator g, long e = 1);

/// (xy)^a x (y(xy)^a)^{-1},  y(xy)^{2a} x^{-4a-1} (t x^{-b})^{-1},  x (ptpt^{-1})^{-1}
std::vector<GroupWord> relators(const CableParams& p);
/// ptpt (tptp)^{-1}; holds in the pattern piece, checked alongside the relators.
GroupWord pattern_relator();
GroupWord meridian();
/// y(xy)^{2a} x^{b-4a-1} p (tpt^{-1})^{-b} y(xy)^{2a} x^{b-4a-1} p^{-3b-1}
GroupWord longitude(const CableParams& p);

struct Mat2 {
    Complex a, b, c, d;

    static Mat2 identity();
    Complex det() const;
    Complex trace() const;
    Mat2 inverse() const;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 pow(const Mat2& m, long n);
/// Entrywise max norm of m - n.
Real max_distance(const Mat2& m, const Mat2& n);

struct Representation {
    Family family = Family::AN;
    std::vector<int> indices;
    Complex u;
    std::array<Mat2, 4> images;
    /// Working precision of the images; evaluations on them run at this precision.
    unsigned bits = 0;

    const Mat2& image(Generator g) const { return images[static_cast<int>(g)]; }
};

Mat2 word_eval(const Representation& rep, const GroupWord& w);

/// Index ranges of the three sums: l in [0,2b], m in [0,4a+1], j in [0,R-1], k in [0,4a+1].
/// IndexOutOfRange outside them, DegenerateIndex where the printed matrices divide 0 by 0.
Representation rho_an(const CableParams& p, int l, const Complex& u, const PrecisionContext& ctx);
Representation rho_na(const CableParams& p, int m, const Complex& u, const PrecisionContext& ctx);
Representation rho_nn(const CableParams& p, int j, int k, const Complex& u, const PrecisionContext& ctx);

/// Builds the family member for `indices` (one index for AN/NA, (j,k) for NN).
Representation make_representation(Family f, const CableParams& p, const std::vector<int>& indices,
                                   const Complex& u, const PrecisionContext& ctx);

/// Canonical ranges as printed: l < b, m < a, k < a.  The rest follow by the symmetries.
struct CanonicalRange {
    int an_l_end;
    int na_m_end;
    int nn_k_end;
    int nn_j_end;
};
CanonicalRange canonical_range(const CableParams& p);

bool is_degenerate(Family f, const CableParams& p, const std::vector<int>& indices);
/// Full-range index tuples whose printed matrices are 0/0.
std::vector<std::vector<int>> degenerate_indices(Family f, const CableParams& p);
/// Every non-degenerate index tuple of the full range; NN ordered by k, then j.
std::vector<std::vector<int>> admissible_indices(Family f, const CableParams& p);

/// (e^{-cu} - e^{cu}) / (e^{u/2} - e^{-u/2}), equal to -2c at u = 0.
Complex removable_ratio(long c, const Complex& u);

/// Longitude image as printed for each family.
Mat2 printed_longitude(const Representation& rep, const CableParams& p);

/// Largest deviation from the identity over the relators and the pattern relation.
Real relator_deviation(const Representation& rep, const CableParams& p);

struct CheckOutcome {
    std::string name;
    Real value;
    Real tolerance;
    bool passed = false;
    /// Reported alongside the printed statements; not one of them.
    bool diagnostic = false;
};

/// Periodicities, reflections and conjugacies of the three families at the given u,
/// the NN trace formula at u = 0 and the trace separation of j against R-1-j.
/// Identities pass below `tol`; the separation passes above it.
std::vector<CheckOutcome> symmetry_checks(const CableParams& p, const Complex& u, const PrecisionContext& ctx,
                                          const Real& tol);

/// [[1,0],[e^{-u/2} - w1^{2l+1} e^{u/2}, 1]]
Mat2 an_conjugator(const CableParams& p, int l, const Complex& u, const PrecisionContext& ctx);

/// Upper-triangular core of rho^AN_{u;l}: images before conjugation by T1.
std::array<Mat2, 4> an_core(const CableParams& p, int l, const Complex& u, const PrecisionContext& ctx);

struct CSValue {
    Family family = Family::AN;
    std::vector<int> indices;
    Rational value_over_pi2;
    std::string linear_term_note;
};

CSValue cs_value(Family f, const CableParams& p, const std::vector<int>& indices);

struct TorsionValue {
    Family family = Family::AN;
    std::vector<int> indices;
    Real value;
};

TorsionValue torsion_value(Family f, const CableParams& p, const std::vector<int>& indices,
                           const PrecisionContext& ctx);

/// U A V = D with U, V unimodular and D diagonal, each entry dividing the next.
struct SmithForm {
    std::vector<std::vector<long long>> D, U, V;
    std::vector<long long> diagonal;
};
SmithForm smith_normal_form(const std::vector<std::vector<long long>>& A);

struct Abelianization {
    /// Invariant factors above 1: the torsion part of the first homology.
    std::vector<long long> invariant_factors;
    int free_rank = 0;
    /// Image of each generator in Z when free_rank is 1, scaled so p maps to 1.
    std::array<long long, 4> generator_class{};
};

/// From the exponent-sum matrix of the relators and the pattern relation.
Abelianization abelianization(const CableParams& p);
long long abelian_class(const Abelianization& ab, const GroupWord& w);

}  // namespace kashaev
