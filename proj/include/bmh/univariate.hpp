#pragma once

#include "bmh/multipoly.hpp"

#include <optional>
#include <vector>

namespace bmh {

/// Outcome of a Sturm root count.
struct SturmResult {
    std::size_t count = 0;
    /// Endpoints actually used; std::nullopt stands for -inf / +inf.
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    /// 2^-k when an endpoint was a root and had to be moved inward, else 0.
    Rational shift;
    std::size_t sequence_length = 0;
};

/// Number of distinct real roots of the univariate polynomial p strictly inside
/// (lo, hi). A missing lo / hi means -inf / +inf.
///
/// If a finite endpoint is itself a root, it is moved inward by 2^-k for the
/// smallest k >= 1 such that the moved endpoint is not a root and no root of p
/// lies between the old and the new endpoint; the shift is reported.
///
/// Throws std::invalid_argument for the zero polynomial, for a polynomial in
/// more than one variable, or for lo >= hi.
SturmResult sturm_count(const MultiPoly& p, std::optional<Rational> lo, std::optional<Rational> hi);

/// The Sturm sequence p, p', -rem(...), ... with each member scaled by a
/// positive rational to coprime integer coefficients. Coefficients are listed
/// from the constant term upwards.
std::vector<std::vector<Rational>> sturm_sequence(const std::vector<Rational>& p);

/// Dense coefficients (constant term first) of a polynomial in at most one variable.
std::vector<Rational> dense_coefficients(const MultiPoly& p);

/// Determinant of the Sylvester matrix of f and g with respect to v.
/// Throws std::invalid_argument if either input is zero or both are constant in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v);

}  // namespace bmh
