#include "chebmax/ff.hpp"

#include <algorithm>
#include <stdexcept>

#include "field_impl.hpp"

namespace chebmax::ff {

namespace {

// ---- dense polynomials over F_p, coefficients in [0,p), low degree first ----

using Pm = std::vector<uint64_t>;

int pm_deg(const Pm& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[static_cast<size_t>(d)] == 0) --d;
    return d;
}

// a * b reduced by the monic modulus f (degree m)
Pm pm_mulmod(const Pm& a, const Pm& b, const Pm& f, uint64_t p) {
    const size_t m = f.size() - 1;
    Pm t(2 * m - 1, 0);
    for (size_t i = 0; i < m && i < a.size(); ++i) {
        if (a[i])
            for (size_t j = 0; j < m && j < b.size(); ++j)
                t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
    for (size_t i = 2 * m - 2; i + 1 > m; --i) {
        const uint64_t c = t[i];
        if (c) {
            t[i] = 0;
            for (size_t j = 0; j < m; ++j)
                t[i - m + j] = (t[i - m + j] + (p - f[j]) % p * c % p) % p;
        }
    }
    t.resize(m);
    return t;
}

Pm pm_powmod(Pm a, uint64_t e, const Pm& f, uint64_t p) {
    const size_t m = f.size() - 1;
    Pm r(m, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = pm_mulmod(r, a, f, p);
        a = pm_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

Pm pm_gcd_monic(Pm a, Pm b, uint64_t p) {
    while (true) {
        int db = pm_deg(b);
        if (db < 0) {
            int da = pm_deg(a);
            if (da < 0) return {};
            a.resize(static_cast<size_t>(da) + 1);
            const uint64_t inv = powmod_u64(a.back(), p - 2, p);
            for (auto& c : a) c = mulmod_u64(c, inv, p);
            return a;
        }
        int da = pm_deg(a);
        const uint64_t lead_inv = powmod_u64(b[static_cast<size_t>(db)], p - 2, p);
        while (da >= db) {
            const uint64_t c = mulmod_u64(a[static_cast<size_t>(da)], lead_inv, p);
            if (c)
                for (int j = 0; j <= db; ++j) {
                    auto& ref = a[static_cast<size_t>(da - db + j)];
                    ref = (ref + p - mulmod_u64(c, b[static_cast<size_t>(j)], p)) % p;
                }
            da = pm_deg(a);
        }
        std::swap(a, b);
    }
}

// f monic of degree m is irreducible over F_p iff it has no irreducible factor
// of degree <= m/2, i.e. gcd(x^{p^i} - x, f) = 1 for all 1 <= i <= m/2.
bool pm_irreducible(const Pm& f, uint64_t p) {
    const size_t m = f.size() - 1;
    if (m == 1) return true;
    Pm t(m, 0);
    t[1] = 1; // x
    for (size_t i = 1; i <= m / 2; ++i) {
        t = pm_powmod(t, p, f, p);
        Pm diff = t;
        diff[1] = (diff[1] + p - 1) % p;
        if (pm_deg(pm_gcd_monic(diff, f, p)) != 0) return false;
    }
    return true;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(uint64_t q) {
    if (q < 2) return std::nullopt;
    uint64_t p = q;
    if (!is_prime(q)) {
        p = 0;
        for (uint64_t f = 2; f * f <= q; ++f)
            if (q % f == 0) { p = f; break; }
        if (p == 0) return std::nullopt;
    }
    unsigned n = 0;
    uint64_t rest = q;
    while (rest % p == 0) { rest /= p; ++n; }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, n};
}

// ---- FieldImpl arithmetic ----

std::vector<uint64_t> FieldImpl::mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
    if (m == 1) return {mulmod_u64(a[0], b[0], p)};
    return pm_mulmod(a, b, modulus, p);
}

std::vector<uint64_t> FieldImpl::add(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
    std::vector<uint64_t> r(m);
    for (unsigned i = 0; i < m; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

std::vector<uint64_t> FieldImpl::sub(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
    std::vector<uint64_t> r(m);
    for (unsigned i = 0; i < m; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
}

bool FieldImpl::is_zero(const std::vector<uint64_t>& a) const {
    return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

std::vector<uint64_t> FieldImpl::pow(std::vector<uint64_t> a, BigInt e) const {
    std::vector<uint64_t> r(m, 0);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

// ---- FqElem ----

namespace {

const FieldImpl& require_same(const FqElem& a, const FqElem& b) {
    const auto* fa = FieldImpl::impl_of(a);
    const auto* fb = FieldImpl::impl_of(b);
    if (!fa || !fb) throw std::invalid_argument("element has no field");
    if (fa != fb && !fa->same(*fb)) throw std::invalid_argument("mixed-field operands");
    return *fa;
}

} // namespace

bool FqElem::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t c) { return c == 0; });
}

FieldCtx FqElem::field() const {
    if (!field_) throw std::invalid_argument("default-constructed field element has no field");
    return FieldImpl::ctx_of(field_);
}

FqElem FqElem::operator+(const FqElem& o) const {
    const auto& f = require_same(*this, o);
    return FqElem(field_, f.add(c_, o.c_));
}

FqElem FqElem::operator-(const FqElem& o) const {
    const auto& f = require_same(*this, o);
    return FqElem(field_, f.sub(c_, o.c_));
}

FqElem FqElem::operator*(const FqElem& o) const {
    const auto& f = require_same(*this, o);
    return FqElem(field_, f.mul(c_, o.c_));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inv(); }

FqElem FqElem::operator-() const {
    if (!field_) throw std::invalid_argument("element has no field");
    std::vector<uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (field_->p - c_[i]) % field_->p;
    return FqElem(field_, std::move(r));
}

bool FqElem::operator==(const FqElem& o) const {
    if (!field_ || !o.field_) return !field_ == !o.field_ && c_ == o.c_;
    return field_->same(*o.field_) && c_ == o.c_;
}

FqElem FqElem::pow(const BigInt& e) const {
    if (!field_) throw std::invalid_argument("element has no field");
    if (e < 0) throw std::invalid_argument("negative exponent");
    return FqElem(field_, field_->pow(c_, e));
}

FqElem FqElem::inv() const {
    if (!field_) throw std::invalid_argument("element has no field");
    if (is_zero()) throw std::invalid_argument("division by zero in finite field");
    return pow(field_->order - 2);
}

// ---- FieldCtx ----

FieldCtx FieldCtx::make(uint64_t p, unsigned m) {
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >> 32) throw std::invalid_argument("characteristic too large (must fit 32 bits)");

    auto impl = std::make_shared<FieldImpl>();
    impl->p = p;
    impl->m = m;
    impl->order = boost::multiprecision::pow(BigInt(p), static_cast<int>(m));
    if (impl->order <= BigInt(UINT64_MAX)) impl->order_u64 = impl->order.convert_to<uint64_t>();
    impl->chi_exp = (impl->order - 1) / 2;

    if (m == 1) {
        impl->modulus = {0, 1}; // x; prime fields bypass reduction anyway
    } else {
        for (uint64_t k = 0;; ++k) {
            Pm f(m + 1, 0);
            uint64_t kk = k;
            for (unsigned i = 0; i < m; ++i) { f[i] = kk % p; kk /= p; }
            if (kk) throw std::logic_error("irreducible modulus scan exhausted");
            f[m] = 1;
            if (pm_irreducible(f, p)) { impl->modulus = std::move(f); break; }
        }
    }

    FieldCtx ctx;
    ctx.impl_ = std::move(impl);
    return ctx;
}

uint64_t FieldCtx::characteristic() const noexcept { return impl_->p; }
unsigned FieldCtx::degree() const noexcept { return impl_->m; }
const BigInt& FieldCtx::order() const noexcept { return impl_->order; }
std::optional<uint64_t> FieldCtx::order_u64() const noexcept { return impl_->order_u64; }
const std::vector<uint64_t>& FieldCtx::modulus() const noexcept { return impl_->modulus; }
const FieldImpl& FieldCtx::impl() const noexcept { return *impl_; }

FqElem FieldCtx::zero() const { return FqElem(impl_, std::vector<uint64_t>(impl_->m, 0)); }

FqElem FieldCtx::one() const {
    std::vector<uint64_t> c(impl_->m, 0);
    c[0] = 1;
    return FqElem(impl_, std::move(c));
}

FqElem FieldCtx::from_integer(const BigInt& v) const {
    BigInt r = v % impl_->p;
    if (r < 0) r += impl_->p;
    std::vector<uint64_t> c(impl_->m, 0);
    c[0] = r.convert_to<uint64_t>();
    return FqElem(impl_, std::move(c));
}

FqElem FieldCtx::gen() const {
    if (impl_->m < 2) throw std::invalid_argument("gen() needs extension degree >= 2");
    std::vector<uint64_t> c(impl_->m, 0);
    c[1] = 1;
    return FqElem(impl_, std::move(c));
}

FqElem FieldCtx::element_at(uint64_t index) const {
    if (!impl_->order_u64 || index >= *impl_->order_u64)
        throw std::invalid_argument("element index out of range");
    std::vector<uint64_t> c(impl_->m);
    for (unsigned i = 0; i < impl_->m; ++i) { c[i] = index % impl_->p; index /= impl_->p; }
    return FqElem(impl_, std::move(c));
}

uint64_t FieldCtx::index_of(const FqElem& a) const {
    const auto* fa = FieldImpl::impl_of(a);
    if (fa != impl_.get() && !impl_->same(*fa)) throw std::invalid_argument("mixed-field operands");
    uint64_t idx = 0;
    const auto& c = FieldImpl::vec(a);
    for (unsigned i = impl_->m; i-- > 0;) idx = idx * impl_->p + c[i];
    return idx;
}

std::vector<FqElem> FieldCtx::enumerate_elements(uint64_t budget) const {
    if (impl_->order > budget)
        throw budget_exceeded("field enumeration exceeds budget", impl_->order.str(), budget);
    const uint64_t q = *impl_->order_u64;
    std::vector<FqElem> out;
    out.reserve(q);
    for (uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
    return out;
}

int FieldCtx::quadratic_character(const FqElem& a) const {
    if (impl_->p == 2) throw std::invalid_argument("quadratic character needs odd characteristic");
    const auto* fa = FieldImpl::impl_of(a);
    if (fa != impl_.get() && !impl_->same(*fa)) throw std::invalid_argument("mixed-field operands");
    if (a.is_zero()) return 0;
    auto r = impl_->pow(FieldImpl::vec(a), impl_->chi_exp);
    std::vector<uint64_t> e(impl_->m, 0);
    e[0] = 1;
    if (r == e) return 1;
    e[0] = impl_->p - 1;
    if (r != e) throw std::logic_error("quadratic character did not evaluate to +-1");
    return -1;
}

bool FieldCtx::same_field(const FieldCtx& o) const noexcept {
    return impl_ == o.impl_ || impl_->same(*o.impl_);
}

} // namespace chebmax::ff
