#pragma once

// Internal representation shared by ff.cpp and the counting kernels. Not part
// of the public headers.

#include <cstdint>
#include <vector>

#include "chebmax/ff.hpp"

namespace chebmax::ff {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % n);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return r;
}

class FieldImpl {
public:
    uint64_t p = 0;
    unsigned m = 0;
    std::vector<uint64_t> modulus; // m+1 coefficients, monic
    BigInt order;                  // p^m
    std::optional<uint64_t> order_u64;
    BigInt chi_exp;                // (Q-1)/2

    bool same(const FieldImpl& o) const { return p == o.p && modulus == o.modulus; }

    std::vector<uint64_t> mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const;
    std::vector<uint64_t> add(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const;
    std::vector<uint64_t> sub(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const;
    std::vector<uint64_t> pow(std::vector<uint64_t> a, BigInt e) const;
    bool is_zero(const std::vector<uint64_t>& a) const;

    FqElem elem(std::shared_ptr<const FieldImpl> self, std::vector<uint64_t> c) const {
        return FqElem(std::move(self), std::move(c));
    }
    static FqElem make_elem(std::shared_ptr<const FieldImpl> self, std::vector<uint64_t> c) {
        return FqElem(std::move(self), std::move(c));
    }
    static const std::vector<uint64_t>& vec(const FqElem& e) { return e.c_; }
    static const FieldImpl* impl_of(const FqElem& e) { return e.field_.get(); }
    static std::shared_ptr<const FieldImpl> impl_ptr(const FieldCtx& f) { return f.impl_; }
    static FieldCtx ctx_of(std::shared_ptr<const FieldImpl> impl) {
        FieldCtx c;
        c.impl_ = std::move(impl);
        return c;
    }
};

// ---- flat kernels used by the hot counting loop (m >= 2, p^m <= budget so
// p <= 2^16 and raw product accumulation cannot overflow) ----

// out <- a*b mod modulus; tmp must have 2m-1 slots.
inline void fq_mul_flat(const uint64_t* a, const uint64_t* b, uint64_t* out, uint64_t* tmp,
                        const uint64_t* mod, unsigned m, uint64_t p) {
    const unsigned tm = 2 * m - 1;
    for (unsigned i = 0; i < tm; ++i) tmp[i] = 0;
    for (unsigned i = 0; i < m; ++i) {
        const uint64_t ai = a[i];
        if (ai)
            for (unsigned j = 0; j < m; ++j) tmp[i + j] += ai * b[j];
    }
    for (unsigned i = tm; i-- > m;) {
        const uint64_t c = tmp[i] % p;
        if (c) {
            for (unsigned j = 0; j < m; ++j) tmp[i - m + j] += (p - mod[j]) * c;
        }
        tmp[i] = 0;
    }
    for (unsigned i = 0; i < m; ++i) out[i] = tmp[i] % p;
}

inline void fq_add_flat(const uint64_t* a, const uint64_t* b, uint64_t* out, unsigned m, uint64_t p) {
    for (unsigned i = 0; i < m; ++i) out[i] = (a[i] + b[i]) % p;
}

} // namespace chebmax::ff
