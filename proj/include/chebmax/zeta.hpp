#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "chebmax/curve.hpp"

namespace chebmax::zeta {

// Exact rational, used for Newton-polygon slopes. Always normalized with
// den > 0 and gcd(num, den) = 1.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);
    friend bool operator==(const Rational&, const Rational&) = default;
    std::strong_ordering operator<=>(const Rational& o) const {
        return num * o.den <=> o.num * den;
    }
};

// Numerator L(t) of the zeta function of a curve over F_q:
// degree 2g, integer coefficients, c_0 = 1, functional equation
// c_{2g-k} = q^{g-k} c_k, and nonnegative reconstructed counts for r <= 2g.
// All of that is validated at construction.
class LPolynomial {
public:
    LPolynomial(std::vector<BigInt> coeffs, uint64_t q);
    static LPolynomial one(uint64_t q) { return LPolynomial({BigInt(1)}, q); }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    uint64_t q() const noexcept { return q_; }
    uint64_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    unsigned genus() const noexcept { return g_; }

    bool operator==(const LPolynomial& o) const { return q_ == o.q_ && c_ == o.c_; }

private:
    std::vector<BigInt> c_;
    uint64_t q_;
    uint64_t p_;
    unsigned n_;
    unsigned g_;
};

// L-polynomial of C over F_{p^base_degree} from the measured counts
// N_1..N_g via Newton's identities (all divisions must be exact).
LPolynomial l_polynomial(const curve::HCurve& C, unsigned base_degree,
                         const curve::CountOptions& opt = {});

// Does C attain the Hasse-Weil upper bound over F_{q^2}? One count over the
// field of order q^2; q must be a power of C.p.
bool is_maximal(const curve::HCurve& C, uint64_t q, const curve::CountOptions& opt = {});

// Self-test of Prop-2.1-style equivalence: [is_maximal(C,q)] ==
// [L over F_{q^2} equals (1+qt)^{2g}]. Returns the equivalence value
// (always true unless the implementation is broken).
bool maximal_iff_lpoly(const curve::HCurve& C, uint64_t q, const curve::CountOptions& opt = {});

// N_r for r = 1..r_max implied by L via the inverse Newton recurrence.
std::vector<BigInt> reconstruct_counts(const LPolynomial& L, unsigned r_max);

// Exact divisibility A | B over Z[t] (well-defined since c_0 = 1).
bool lpoly_divides(const LPolynomial& A, const LPolynomial& B);

// Coefficient vector of A*B (callers wrap it in LPolynomial when it is known
// to be a genuine L-polynomial; raw form suits identity testing).
std::vector<BigInt> lpoly_product(const LPolynomial& A, const LPolynomial& B);

// (1 + q t)^{2g}
std::vector<BigInt> maximal_shape(uint64_t q, unsigned g);

// Multiset of the 2g Frobenius slopes: lower convex hull of
// {(k, v_p(c_k)/n) : c_k != 0}, one slope per unit of horizontal length.
std::vector<Rational> newton_polygon(const LPolynomial& L);

// All slopes equal 1/2.
bool is_supersingular(const LPolynomial& L);

} // namespace chebmax::zeta
