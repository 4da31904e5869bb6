#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chebmax {

// A computation was asked to enumerate more field elements than the configured
// budget allows. Reportable outcome, not a crash: scans record it and move on,
// the CLI maps it to exit code 3.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::string what, std::string needed, uint64_t budget)
        : std::runtime_error(std::move(what)), needed_(std::move(needed)), budget_(budget) {}
    const std::string& needed() const noexcept { return needed_; }
    uint64_t budget() const noexcept { return budget_; }

private:
    std::string needed_;
    uint64_t budget_;
};

// y^2 = f(x) does not define a usable hyperelliptic model in the requested
// characteristic: the reduction of f mod p is inseparable or drops degree.
// CLI maps it to exit code 4.
class bad_reduction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace chebmax
