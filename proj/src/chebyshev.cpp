#include "chebmax/chebyshev.hpp"

#include <numeric>
#include <stdexcept>

namespace chebmax::cheb {

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int64_t>(i);
    return IntPoly(std::move(r));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    IntPoly acc;
    for (size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * g + IntPoly::constant(f.coeffs()[i]);
    return acc;
}

IntPoly cheb_poly(uint64_t d) {
    if (d == 0) return IntPoly::constant(2);
    if (d == 1) return IntPoly::x();
    IntPoly prev = IntPoly::constant(2);
    IntPoly cur = IntPoly::x();
    const IntPoly x = IntPoly::x();
    for (uint64_t n = 2; n <= d; ++n) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---- FqPoly ----

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool FqPoly::operator==(const FqPoly& o) const {
    if (!field_.same_field(o.field_) || c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

ff::FqElem FqPoly::evaluate(const ff::FqElem& x) const {
    ff::FqElem acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

FqPoly FqPoly::derivative() const {
    std::vector<ff::FqElem> r;
    for (size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * field_.from_integer(BigInt(i)));
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    const ff::FqElem inv = c_.back().inv();
    std::vector<ff::FqElem> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * inv);
    return FqPoly(field_, std::move(r));
}

FqPoly reduce_mod(const IntPoly& f, const ff::FieldCtx& F) {
    std::vector<ff::FqElem> r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.push_back(F.from_integer(c));
    return FqPoly(F, std::move(r));
}

namespace {

// a mod b with b monic
FqPoly mod_by_monic(FqPoly a, const FqPoly& b) {
    const auto& F = a.field();
    std::vector<ff::FqElem> r = a.coeffs();
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        const ff::FqElem c = r.back();
        const size_t shift = r.size() - 1 - static_cast<size_t>(db);
        if (!c.is_zero())
            for (int j = 0; j <= db; ++j)
                r[shift + static_cast<size_t>(j)] =
                    r[shift + static_cast<size_t>(j)] - c * b.coeffs()[static_cast<size_t>(j)];
        r.pop_back();
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return FqPoly(F, std::move(r));
}

} // namespace

FqPoly poly_gcd(FqPoly a, FqPoly b) {
    if (!a.field().same_field(b.field())) throw std::invalid_argument("mixed-field polynomials");
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        FqPoly r = mod_by_monic(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_separable(const FqPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("separability needs deg >= 1");
    return poly_gcd(f, f.derivative()).degree() == 0;
}

bool sep_criterion(uint64_t q, uint64_t d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (!ff::as_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return std::gcd(q, 2 * d) == 1 || d == 1;
}

} // namespace chebmax::cheb
