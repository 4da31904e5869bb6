#pragma once

#include <cstdint>
#include <vector>

#include "chebmax/ff.hpp"

namespace chebmax::cheb {

// Dense univariate polynomial over Z, constant term first, no trailing zeros;
// the zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
    static IntPoly x() { return IntPoly({BigInt(0), BigInt(1)}); }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    BigInt evaluate(const BigInt& x) const;
    IntPoly derivative() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// f(g(x))
IntPoly compose(const IntPoly& f, const IntPoly& g);

// The degree-d Dickson polynomial D_d(x,1), i.e. the unique integer polynomial
// with x^d + x^{-d} = phi_d(x + x^{-1}). Built by the linear recurrence
// D_0 = 2, D_1 = x, D_n = x*D_{n-1} - D_{n-2}.
IntPoly cheb_poly(uint64_t d);

// Dense univariate polynomial over one F_{p^m}, canonical form as IntPoly.
class FqPoly {
public:
    explicit FqPoly(ff::FieldCtx field) : field_(std::move(field)) {}
    FqPoly(ff::FieldCtx field, std::vector<ff::FqElem> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    const ff::FieldCtx& field() const noexcept { return field_; }
    const std::vector<ff::FqElem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    bool operator==(const FqPoly& o) const;

    ff::FqElem evaluate(const ff::FqElem& x) const;
    FqPoly derivative() const;
    FqPoly monic() const; // unit multiple with leading coefficient 1

private:
    void trim();
    ff::FieldCtx field_;
    std::vector<ff::FqElem> c_;
};

// Coefficientwise reduction of f into F; the degree may drop.
FqPoly reduce_mod(const IntPoly& f, const ff::FieldCtx& F);

// Monic remainder-sequence gcd (every remainder normalized monic).
FqPoly poly_gcd(FqPoly a, FqPoly b);

// true iff gcd(f, f') is a nonzero constant. Requires deg f >= 1.
bool is_separable(const FqPoly& f);

// Closed form of the separability criterion for phi_d over F_q:
// gcd(q, 2d) = 1 or d = 1. Throws if q is not a prime power.
bool sep_criterion(uint64_t q, uint64_t d);

} // namespace chebmax::cheb
