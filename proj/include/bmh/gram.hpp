#pragma once

#include "bmh/hadamard.hpp"

#include <array>

namespace bmh {

using GramExact = std::array<QuadExt, kRelations>;
using GramNumeric = std::array<BigComplex, kRelations>;

/// S[k] = sum_{i,j} w_i conj(w_j) p_{ij}^k, the coefficient of A_k in W W^*.
/// The exact version uses conj(w) = 1/w and throws std::domain_error unless
/// every w_i has norm 1.
GramExact gram_coefficients(const WExact& w, const ConcreteTensor& t);
GramNumeric gram_coefficients(const WNumeric& w, const ConcreteTensor& t);

/// S == (n, 0, 0, 0, 0).
bool is_hadamard(const GramExact& s, const Rational& n);

struct GramVerdict {
    bool passed = false;
    int worst_k = 0;
    BigFloat worst_residual;  // max over k of |S[k] - n delta_k0|
};

GramVerdict gram_verdict(const GramNumeric& s, const Rational& n, const BigFloat& tol);

/// Default numeric tolerance 2^-80 * n.
BigFloat default_gram_tolerance(const Rational& n, unsigned bits = kDefaultPrecisionBits);

struct DenseReport {
    bool passed = false;
    BigFloat max_residual;
    long worst_x = -1;
    long worst_y = -1;
    std::size_t entries = 0;  // Gram entries examined (x <= y)
};

/// Entry (x, y) of W W^* with W[x][u] = w[rel(x, u)], summed directly over u.
BigComplex gram_entry(const SchemeInstance& s, const WNumeric& w, std::size_t x, std::size_t y);

/// Checks |(W W^*)[x][y] - n delta_xy| <= tol for all x <= y, two rows at a time.
/// The worst entry is the largest residual, ties broken by the smallest (x, y),
/// so both execution modes report the same witness.
DenseReport dense_verify(const SchemeInstance& s, const WNumeric& w, const BigFloat& tol,
                         Execution execution = Execution::parallel);

}  // namespace bmh
