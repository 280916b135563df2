#pragma once

#include "bmh/multipoly.hpp"

namespace bmh::reference {

/// Degree-9 polynomial in x satisfied by a04 at (q, m) = (4, 2) outside the
/// w4 = 1 branch; it has exactly one real root in (-2, 2).
MultiPoly a04_degree9_q4m2();

/// pp(q, r) appearing in the symmetry sums of family II.
MultiPoly family2_symmetry_factor();

/// 5u^3 - 90u^2 + 313u - 128 in u = x.
MultiPoly family1_obstruction_cubic();

/// Certificate polynomials in (q, r) attached to the Nomura-algebra claims.
MultiPoly family1_first_claim_certificate();   // (qm^2-1)(5qm^6-90qm^4+313qm^2-128)
MultiPoly family2_first_claim_certificate();   // qm^10 (qm^2-1)^3 (qm r+q-2)^4 (qm r-1)^5
MultiPoly family1_second_claim_certificate();  // (q-2)(qm^2-1)(5qm^6-90qm^4+313qm^2-128)
MultiPoly family2_second_claim_certificate();  // qm^7 r (q-2)(qm^2-1)^3 (qm r-1)^5 (qm r+q-2)^5

}  // namespace bmh::reference
