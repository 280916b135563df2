#pragma once

#include "bmh/gram.hpp"
#include "bmh/univariate.hpp"

#include <array>
#include <string>
#include <vector>

namespace bmh {

/// sum_{j<k} p_{jk}^i (a_jk^2 - 2) + sum_j p_{jj}^i for i = 1..4 (index i-1).
std::array<RatFunc, 4> symmetry_sums(const AVector<RatFunc>& a, const IntersectionTensor& t);

/// Expected numerators of the symmetry sums once they are reduced with a monic
/// denominator: (q^2r^2-1)(q^2r^2-4) throughout for family I, and
/// (q^2r^2-1) pp for i = 1..3 with (q^2r^2-1)(q^2r^2-4) for i = 4 for family II.
std::array<MultiPoly, 4> symmetry_golden(Family f);

struct SymmetryCheck {
    std::array<RatFunc, 4> sums;
    /// Indices (1-based) whose reduced numerator differs from the golden form.
    std::vector<int> mismatched;
    /// Indices whose numerator or denominator lacks a positivity certificate.
    std::vector<int> uncertified;
    bool passed() const { return mismatched.empty() && uncertified.empty(); }
};

SymmetryCheck check_symmetry(Family f, const IntersectionTensor& t);

/// True if p(4 + x, 4 + x + y) has only non-negative coefficients and a positive
/// constant term, which makes p positive whenever q >= 4 and r >= q (that is,
/// r = q^(m-1) with m >= 2).
bool positive_on_parameter_region(const MultiPoly& p);

/// Affine solution c(i,j,k) = c0 + t * v of the linear system on the eight
/// unknowns c(i,j,k), i,j,k in {1,2}, with every other c fixed.
struct CijkSystem {
    Matrix<Rational> coefficients;  // 12 x 8
    std::vector<Rational> rhs;      // 12
    std::size_t rank = 0;
    Tensor3<Rational> c0;           // particular solution, fixed entries included
    Tensor3<Rational> v;            // kernel direction, zero outside {1,2}^3

    /// The value as a polynomial in var::t.
    MultiPoly c(int i, int j, int k) const;
};

/// Unknown index order: (1,1,1) (1,1,2) (1,2,1) (1,2,2) (2,1,1) ... (2,2,2).
int cijk_unknown(int i, int j, int k);

/// Fixed entries: 1 on permutations of (0,4,4), p_33^4 at (3,3,3),
/// p_44^4 - 1 at (4,4,4), zero elsewhere outside {1,2}^3.
/// Throws std::logic_error if p_13^4 or p_23^4 is nonzero, since the fixed
/// pattern relies on both vanishing.
Tensor3<Rational> cijk_fixed(const ConcreteTensor& t);

/// Builds the system and solves it. Throws std::runtime_error if the system is
/// inconsistent or the rank is not 7.
CijkSystem cijk_system(const ConcreteTensor& t);

/// Exact rank of the 12 x 8 coefficient matrix; when keep_third is false the
/// third equation family is dropped (8 x 8).
std::size_t cijk_rank(const ConcreteTensor& t, bool keep_third = true);

/// Violations of sum_i c(i,j,k) = sum_i c(j,i,k) = sum_i c(j,k,i) = p_jk^4 for
/// all j, k in 0..4 at the given parameter value t.
std::vector<std::string> cijk_marginal_violations(const CijkSystem& s, const ConcreteTensor& tensor, const Rational& t);

/// The two sums sum c(i,j,k) w_i^2/(w_j w_k) and sum c(i,j,k) w_j w_k / w_i^2
/// are A + B t and C + D t over Q(w). A common zero t exists (in either complex
/// embedding) iff AD - BC = 0 when (B, D) != 0, or A = C = 0 otherwise.
struct FirstClaimResult {
    std::size_t rank = 0;
    QuadExt A, B, C, D;
    /// Norm of AD - BC from extension arithmetic.
    Rational norm_route;
    /// res_w(res_t(F, G), minimal polynomial of w) from polynomial resultants.
    Rational resultant_route;
    bool common_zero = true;
    bool passed() const { return !common_zero && norm_route == resultant_route; }
};

FirstClaimResult first_claim_obstruction(const WExact& w, const ConcreteTensor& t);

/// t_l = sum_{i,j,k} p_ij^l p_4k^i w_i^2 / (w_k w_j) for l = 1, 2, 3.
struct SecondClaimResult {
    std::array<QuadExt, 3> sums;
    std::array<Rational, 3> norms;
    /// l values (1-based) whose sum vanishes.
    std::vector<int> vanishing;
    bool passed() const { return vanishing.empty(); }
};

SecondClaimResult second_claim_sums(const WExact& w, const ConcreteTensor& t);

/// Certificate polynomial in (q, r) attached to a family and claim (1 or 2).
MultiPoly claim_certificate(Family f, int claim);

/// Distinct real roots of 5u^3 - 90u^2 + 313u - 128 with u > 255.
SturmResult obstruction_cubic_roots_beyond_255();

/// <Y_ab, Y_cd> = sum_x W_xa W_xc / (W_xb W_xd), where (Y_ab)_x = W_xa / W_xb.
BigComplex jones_inner_product(const SchemeInstance& s, const WNumeric& w, std::size_t a, std::size_t b,
                               std::size_t c, std::size_t d);

}  // namespace bmh
