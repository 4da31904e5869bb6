#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebmax/chebyshev.hpp"
#include "chebmax/ff.hpp"

namespace chebmax::curve {

// Hyperelliptic model y^2 = f(x) with integer f and odd characteristic p.
// Construction validates that f mod p keeps its degree and is separable, so
// the model defines a smooth complete curve of genus floor((deg f - 1)/2).
struct HCurve {
    cheb::IntPoly f;
    uint64_t p = 0;
    std::string label;
    unsigned genus = 0;
};

HCurve make_curve(cheb::IntPoly f, uint64_t p, std::string label = {});

struct CountResult {
    uint64_t N = 0;       // points of the smooth complete model
    uint64_t affine = 0;  // sum over x of (1 + chi(f(x)))
    int infinity = 0;     // 1 for odd deg f; 2 or 0 for even deg f by chi(lead)
    BigInt order;         // |F|
};

struct CountOptions {
    uint64_t budget = 100'000'000; // max field elements per count
    unsigned workers = 1;
};

// Exhaustive count over F. Requires F.characteristic() == C.p and |F| within
// budget. Deterministic for any worker count.
CountResult count_points(const HCurve& C, const ff::FieldCtx& F, const CountOptions& opt = {});

struct CountSeries {
    std::vector<uint64_t> counts; // N_r for r = 1..completed
    unsigned completed = 0;
    bool truncated = false;       // true when budget stopped the series early
};

// N_r over F_{p^(base_degree*r)} for r = 1..r_max, truncated at the budget.
CountSeries count_series(const HCurve& C, unsigned base_degree, unsigned r_max,
                         const CountOptions& opt = {});

} // namespace chebmax::curve
