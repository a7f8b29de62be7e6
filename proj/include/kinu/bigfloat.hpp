#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace kinu {

/// Dynamic-precision real; the working precision is the thread's current
/// default at construction time.
using BigFloat = boost::multiprecision::mpfr_float;

/// Scoped working precision in decimal digits; restores the previous value.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

} // namespace kinu
