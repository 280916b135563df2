#pragma once

#include "bmh/bigcomplex.hpp"
#include "bmh/quadext.hpp"
#include "bmh/scheme.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace bmh {

enum class Family { I, II, VI };

std::string to_string(Family f);
/// Accepts "I", "II", "VI" (case-insensitive, also "1", "2", "6").
Family parse_family(std::string_view s);

/// g(X_ij, X_ik, X_jk) = X_ij^2 + X_ik^2 + X_jk^2 - X_ij X_ik X_jk - 4.
MultiPoly g_poly(int i, int j, int k);

/// det [[2, X_ij, X_ik], [X_ij, 2, X_jk], [X_il, X_jl, X_kl]].
MultiPoly h_poly(int i, int j, int k, int l);

/// Expanded form used by the generator enumeration:
/// (X_kl^2 - 4) X_ij - X_kl (X_ki X_lj + X_kj X_li) + 2 (X_ki X_kj + X_li X_lj),
/// which equals -h_poly(k, l, i, j).
MultiPoly h_expanded(int i, int j, int k, int l);

/// 4 * (sum_{i<j} P_ki P_kj X_ij + sum_i P_ki^2 - n), a polynomial in the X_ij, q and r.
MultiPoly e_poly(int k, const EigenData& e);

struct Generator {
    std::string name;
    MultiPoly poly;
};

/// g over the ten 3-subsets, h_expanded over all 120 permutations of {0..4}
/// (deduplicated unless keep_duplicates), and e_1..e_4.
std::vector<Generator> full_generator_set(const EigenData& e, bool keep_duplicates = false);

/// a_{ij} for 0 <= i < j <= 4, stored in the order a01 a02 a03 a04 a12 a13 a14 a23 a24 a34.
template <class T>
struct AVector {
    std::array<T, 10> a;
    const T& operator()(int i, int j) const { return a[var::pair_index(i, j)]; }
    T& operator()(int i, int j) { return a[var::pair_index(i, j)]; }
};

/// Closed-form a-vector in (q, r). Throws std::invalid_argument for family VI.
AVector<RatFunc> family_avector(Family f);
AVector<Rational> family_avector(Family f, const SchemeParams& params);

struct Residual {
    std::string generator;
    std::string value;
};

struct CommonZeroReport {
    std::size_t generators = 0;
    std::vector<Residual> nonzero;
    bool passed() const { return nonzero.empty(); }
};

/// Substitutes X_ij := a_ij into every generator and reports the ones that do
/// not vanish (as rational functions of q, r, or exactly at params).
CommonZeroReport verify_common_zero(const AVector<RatFunc>& a, const std::vector<Generator>& gens);
CommonZeroReport verify_common_zero(const AVector<Rational>& a, const SchemeParams& params,
                                    const std::vector<Generator>& gens);

/// Descriptions of entries outside [-2, 2]; also flags a vector with no entry
/// strictly inside (-2, 2).
std::vector<std::string> avector_range_violations(const AVector<Rational>& a);

/// Exact weights with w[0] = 1.
using WExact = std::array<QuadExt, kRelations>;

struct WRecovery {
    WExact w;
    /// Pairs (i, j) with w_i/w_j + w_j/w_i != a_ij.
    std::vector<std::pair<int, int>> inconsistent;
};

/// Takes w_{i1}/w_{i0} as the class of x in Q[x]/(x^2 - a_{i0 i1} x + 1) and
/// recovers the others by w_i = (w_{i1}^2 - w_{i0}^2) / (a_{i1 i} w_{i1} - a_{i0 i} w_{i0}),
/// then rescales so that w_0 = 1. Throws std::invalid_argument if a_{i0 i1} = +-2
/// and std::domain_error when a denominator vanishes.
WRecovery recover_w(const AVector<Rational>& a, int i0, int i1);

/// The pair (i0, i1) used for each family: (0, 2) for I, (0, 1) for II.
std::pair<int, int> recovery_pair(Family f);

using WNumeric = std::array<BigComplex, kRelations>;

struct NumericW {
    WNumeric w;
    /// max_i | |w_i| - 1 |
    BigFloat modulus_defect;
};

/// Weights in floating point. Families I and II: the root of x^2 - a x + 1 with
/// the larger imaginary part (branch 0) or its conjugate (branch 1), then the
/// recovery formula. Family VI, only at (q, m) = (4, 2): branch 0 takes the upper
/// signs of the closed-form display and branch 1 the lower ones.
NumericW numeric_w(Family f, const SchemeParams& params, int branch, unsigned bits = kDefaultPrecisionBits);

/// Family VI weights at (q, m) = (4, 2) for an explicit choice of the sign in
/// the w1 and a02 formulas (sign_w) and in the a13 formula (sign_a13). The
/// coupled choices are sign_a13 == sign_w.
NumericW family_vi_weights(int sign_w, int sign_a13, unsigned bits = kDefaultPrecisionBits);

/// Image of the exact weights under one complex embedding.
WNumeric embed(const WExact& w, int branch, unsigned bits = kDefaultPrecisionBits);

}  // namespace bmh
