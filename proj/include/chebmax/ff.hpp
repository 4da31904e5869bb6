#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chebmax/errors.hpp"

namespace chebmax {

using BigInt = boost::multiprecision::cpp_int;

namespace ff {

bool is_prime(uint64_t n);

struct PrimePower {
    uint64_t p;
    unsigned n;
};

// q = p^n with p prime, n >= 1; nullopt otherwise.
std::optional<PrimePower> as_prime_power(uint64_t q);

class FieldCtx;
class FieldImpl;

// Element of F_{p^m}: m residues in [0,p), low degree first, tied to its field.
class FqElem {
public:
    FqElem() = default;

    const std::vector<uint64_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept;
    FieldCtx field() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem pow(const BigInt& e) const;
    FqElem inv() const;

private:
    friend class FieldCtx;
    friend class FieldImpl;
    FqElem(std::shared_ptr<const FieldImpl> f, std::vector<uint64_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    std::shared_ptr<const FieldImpl> field_;
    std::vector<uint64_t> c_;
};

// F_{p^m} for prime p (p = 2 admitted for polynomial work only; curve modules
// insist on odd p themselves). The modulus is the smallest monic irreducible of
// degree m over F_p, comparing candidates by their non-leading coefficient
// vectors (a_0,...,a_{m-1}) read as base-p integers; this makes fields
// reproducible across runs and machines. m = 1 uses the modulus x and bypasses
// polynomial reduction entirely. Immutable and cheap to copy.
class FieldCtx {
public:
    static FieldCtx make(uint64_t p, unsigned m);

    uint64_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    const BigInt& order() const noexcept;                  // Q = p^m
    std::optional<uint64_t> order_u64() const noexcept;    // when Q fits
    const std::vector<uint64_t>& modulus() const noexcept; // m+1 coefficients, monic

    FqElem zero() const;
    FqElem one() const;
    FqElem from_integer(const BigInt& v) const; // reduce an integer into the prime subfield
    FqElem gen() const;                         // residue class of x (m >= 2)

    // Odometer order on coefficient vectors, coeffs[0] fastest. Requires Q <= 2^64.
    FqElem element_at(uint64_t index) const;
    uint64_t index_of(const FqElem& a) const;

    // All Q elements in odometer order; throws budget_exceeded when Q > budget.
    std::vector<FqElem> enumerate_elements(uint64_t budget) const;

    // chi(a) = a^((Q-1)/2) read as {-1,0,+1}. Odd characteristic only.
    int quadratic_character(const FqElem& a) const;

    bool same_field(const FieldCtx& o) const noexcept;

    const FieldImpl& impl() const noexcept; // internal use

private:
    friend class FqElem;
    friend class FieldImpl;
    FieldCtx() = default;
    std::shared_ptr<const FieldImpl> impl_;
};

} // namespace ff
} // namespace chebmax
