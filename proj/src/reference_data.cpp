#include "bmh/reference_data.hpp"

namespace bmh::reference {

namespace {

MultiPoly Q() { return MultiPoly::variable(var::q); }
MultiPoly R() { return MultiPoly::variable(var::r); }
MultiPoly qm() { return Q() * R(); }

MultiPoly cubic_in_qm2() {
    const MultiPoly u = qm().pow(2);
    return Rational(5) * u.pow(3) - Rational(90) * u.pow(2) + Rational(313) * u - Rational(128);
}

}  // namespace

MultiPoly a04_degree9_q4m2() {
    const MultiPoly x = MultiPoly::variable(var::x);
    return x.pow(9)
         - Rational::parse("235721/1785") * x.pow(8)
         - Rational::parse("17957726593/62475") * x.pow(7)
         + Rational::parse("33219815829811/937125") * x.pow(6)
         - Rational::parse("12554318926285933/4685625") * x.pow(5)
         + Rational::parse("29740292638491103/312375") * x.pow(4)
         - Rational::parse("696525696876795217/187425") * x.pow(3)
         + Rational::parse("851886544261448041/37485") * x.pow(2)
         - Rational::parse("124583919439776136/2499") * x
         + Rational::parse("30888835313436500/833");
}

MultiPoly family2_symmetry_factor() {
    const MultiPoly q = Q(), r = R(), m = qm();
    return m.pow(5) * r
         + Rational(2) * (q.pow(2) - Rational(10) * q + Rational(14)) * m.pow(3) * r
         + q * (q - Rational(2)) * (q.pow(3) - Rational(2) * q.pow(2) + Rational(8) * q + Rational(16)) * r.pow(2)
         - Rational(4) * (q - Rational(2)) * (q.pow(2) - Rational(2) * q + Rational(4));
}

MultiPoly family1_obstruction_cubic() {
    const MultiPoly u = MultiPoly::variable(var::x);
    return Rational(5) * u.pow(3) - Rational(90) * u.pow(2) + Rational(313) * u - Rational(128);
}

MultiPoly family1_first_claim_certificate() { return (qm().pow(2) - Rational(1)) * cubic_in_qm2(); }

MultiPoly family2_first_claim_certificate() {
    const MultiPoly q = Q(), r = R(), m = qm();
    return m.pow(10) * (m.pow(2) - Rational(1)).pow(3) * (m * r + q - Rational(2)).pow(4)
         * (m * r - Rational(1)).pow(5);
}

MultiPoly family1_second_claim_certificate() {
    return (Q() - Rational(2)) * family1_first_claim_certificate();
}

MultiPoly family2_second_claim_certificate() {
    const MultiPoly q = Q(), r = R(), m = qm();
    return m.pow(7) * r * (q - Rational(2)) * (m.pow(2) - Rational(1)).pow(3) * (m * r - Rational(1)).pow(5)
         * (m * r + q - Rational(2)).pow(5);
}

}  // namespace bmh::reference
