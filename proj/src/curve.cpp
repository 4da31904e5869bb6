#include "chebmax/curve.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "field_impl.hpp"

namespace chebmax::curve {

using ff::FieldImpl;

HCurve make_curve(cheb::IntPoly f, uint64_t p, std::string label) {
    if (p == 2 || !ff::is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime");
    if (f.degree() < 1) throw std::invalid_argument("deg f must be >= 1");

    const auto Fp = ff::FieldCtx::make(p, 1);
    const auto fbar = cheb::reduce_mod(f, Fp);
    if (fbar.degree() != f.degree())
        throw bad_reduction(label + ": leading coefficient of f vanishes mod " + std::to_string(p));
    if (!cheb::is_separable(fbar))
        throw bad_reduction(label + ": f mod " + std::to_string(p) + " is inseparable");

    HCurve c;
    c.genus = static_cast<unsigned>((f.degree() - 1) / 2);
    c.f = std::move(f);
    c.p = p;
    c.label = std::move(label);
    return c;
}

namespace {

// chi lookup by element index; values in {-1,0,+1} encoded as int8.
// Built by marking b*b for every b: Q multiplications, parallelizable with
// relaxed atomic marks (hits may collide but only ever write 1).
std::vector<int8_t> build_chi_table(const FieldImpl& F, uint64_t q, unsigned workers) {
    std::vector<int8_t> chi(q, -1);
    const uint64_t p = F.p;
    const unsigned m = F.m;

    auto mark_range = [&](uint64_t lo, uint64_t hi) {
        if (m == 1) {
            for (uint64_t b = lo; b < hi; ++b) {
                const uint64_t s = ff::mulmod_u64(b, b, p);
                std::atomic_ref<int8_t>(chi[s]).store(1, std::memory_order_relaxed);
            }
            return;
        }
        std::vector<uint64_t> b(m, 0), s(m), tmp(2 * m - 1);
        uint64_t idx = lo;
        for (unsigned i = 0; i < m; ++i) { b[i] = idx % p; idx /= p; }
        for (uint64_t k = lo; k < hi; ++k) {
            ff::fq_mul_flat(b.data(), b.data(), s.data(), tmp.data(), F.modulus.data(), m, p);
            uint64_t si = 0;
            for (unsigned i = m; i-- > 0;) si = si * p + s[i];
            std::atomic_ref<int8_t>(chi[si]).store(1, std::memory_order_relaxed);
            // odometer increment
            for (unsigned i = 0; i < m; ++i) {
                if (++b[i] < p) break;
                b[i] = 0;
            }
        }
    };

    if (workers <= 1 || q < 65536) {
        mark_range(0, q);
    } else {
        std::vector<std::thread> pool;
        const uint64_t chunk = (q + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const uint64_t lo = w * chunk;
            if (lo >= q) break;
            pool.emplace_back(mark_range, lo, std::min(q, lo + chunk));
        }
        for (auto& t : pool) t.join();
    }

    chi[0] = 0;
    return chi;
}

// affine contribution sum over element indices [lo,hi): sum of (1 + chi(f(x)))
uint64_t count_range_prime(uint64_t p, const std::vector<uint64_t>& coeffs,
                           const std::vector<int8_t>& chi, uint64_t lo, uint64_t hi) {
    const size_t deg = coeffs.size() - 1;
    uint64_t total = 0;
    for (uint64_t x = lo; x < hi; ++x) {
        uint64_t acc = coeffs[deg];
        for (size_t i = deg; i-- > 0;) acc = (acc * x + coeffs[i]) % p;
        total += static_cast<uint64_t>(1 + chi[acc]);
    }
    return total;
}

uint64_t count_range_ext(const FieldImpl& F, const std::vector<std::vector<uint64_t>>& coeffs,
                         const std::vector<int8_t>& chi, uint64_t lo, uint64_t hi) {
    const uint64_t p = F.p;
    const unsigned m = F.m;
    const size_t deg = coeffs.size() - 1;
    std::vector<uint64_t> x(m, 0), acc(m), mul(m), tmp(2 * m - 1);
    uint64_t idx = lo;
    for (unsigned i = 0; i < m; ++i) { x[i] = idx % p; idx /= p; }

    uint64_t total = 0;
    for (uint64_t k = lo; k < hi; ++k) {
        for (unsigned i = 0; i < m; ++i) acc[i] = coeffs[deg][i];
        for (size_t i = deg; i-- > 0;) {
            ff::fq_mul_flat(acc.data(), x.data(), mul.data(), tmp.data(), F.modulus.data(), m, p);
            ff::fq_add_flat(mul.data(), coeffs[i].data(), acc.data(), m, p);
        }
        uint64_t ai = 0;
        for (unsigned i = m; i-- > 0;) ai = ai * p + acc[i];
        total += static_cast<uint64_t>(1 + chi[ai]);
        for (unsigned i = 0; i < m; ++i) {
            if (++x[i] < p) break;
            x[i] = 0;
        }
    }
    return total;
}

} // namespace

CountResult count_points(const HCurve& C, const ff::FieldCtx& F, const CountOptions& opt) {
    const FieldImpl& impl = F.impl();
    if (impl.p != C.p) throw std::invalid_argument("field characteristic does not match curve");
    if (impl.p == 2) throw std::invalid_argument("point counting needs odd characteristic");
    if (F.order() > opt.budget)
        throw budget_exceeded("point count exceeds budget", F.order().str(), opt.budget);
    if (impl.m > 1 && impl.p >= (1ull << 21))
        throw std::invalid_argument("extension-field count with p >= 2^21 is not supported");
    const uint64_t q = *F.order_u64();

    // Curve coefficients live in the prime subfield; reduce them once.
    std::vector<uint64_t> cp;
    std::vector<std::vector<uint64_t>> ce;
    const auto& ic = C.f.coeffs();
    for (const auto& c : ic) {
        BigInt r = c % impl.p;
        if (r < 0) r += impl.p;
        const uint64_t v = r.convert_to<uint64_t>();
        if (impl.m == 1) cp.push_back(v);
        else {
            std::vector<uint64_t> e(impl.m, 0);
            e[0] = v;
            ce.push_back(std::move(e));
        }
    }

    const unsigned workers = std::max(1u, opt.workers);
    const auto chi = build_chi_table(impl, q, workers);

    uint64_t affine = 0;
    if (workers <= 1 || q < 65536) {
        affine = impl.m == 1 ? count_range_prime(impl.p, cp, chi, 0, q)
                             : count_range_ext(impl, ce, chi, 0, q);
    } else {
        std::vector<uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        const uint64_t chunk = (q + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const uint64_t lo = w * chunk;
            if (lo >= q) break;
            const uint64_t hi = std::min(q, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                partial[w] = impl.m == 1 ? count_range_prime(impl.p, cp, chi, lo, hi)
                                         : count_range_ext(impl, ce, chi, lo, hi);
            });
        }
        for (auto& t : pool) t.join();
        for (uint64_t v : partial) affine += v; // fixed chunk order: deterministic
    }

    CountResult res;
    res.affine = affine;
    if (C.f.degree() % 2 == 1) {
        res.infinity = 1;
    } else {
        const int lead_chi = impl.m == 1
            ? chi[cp.back()]
            : chi[ce.back()[0]]; // constant vector: index = value of coeff 0
        res.infinity = lead_chi == 1 ? 2 : 0;
    }
    res.N = res.affine + static_cast<uint64_t>(res.infinity);
    res.order = F.order();

    // Hasse-Weil check with exact integers: (N - Q - 1)^2 <= 4 g^2 Q.
    const BigInt defect = BigInt(res.N) - F.order() - 1;
    if (defect * defect > BigInt(4) * C.genus * C.genus * F.order())
        throw std::logic_error("count violates the Hasse-Weil bound (internal bug)");
    return res;
}

CountSeries count_series(const HCurve& C, unsigned base_degree, unsigned r_max,
                         const CountOptions& opt) {
    if (base_degree < 1) throw std::invalid_argument("base degree must be >= 1");
    CountSeries s;
    for (unsigned r = 1; r <= r_max; ++r) {
        const BigInt qr = boost::multiprecision::pow(BigInt(C.p), static_cast<int>(base_degree * r));
        if (qr > opt.budget) { s.truncated = true; break; }
        const auto F = ff::FieldCtx::make(C.p, base_degree * r);
        s.counts.push_back(count_points(C, F, opt).N);
        s.completed = r;
    }
    return s;
}

} // namespace chebmax::curve
