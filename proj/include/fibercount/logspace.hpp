// Arithmetic on very large nonnegative counts kept as natural logarithms.
//
// Fiber sizes handled by this library reach magnitudes around e^39000, far
// beyond double (and any practical big-integer budget), so counts are stored
// as ln(count) with an explicit flag for count = 0.

#ifndef FIBERCOUNT_LOGSPACE_HPP
#define FIBERCOUNT_LOGSPACE_HPP

#include <cstdint>

namespace fibercount {

class LogCount {
public:
    // Count of 0. The zero state is a flag, not a -inf sentinel, so that
    // equality checks downstream stay explicit.
    static LogCount zero() { return LogCount(0.0, true); }

    // Count of 1 (ln 1 = 0).
    static LogCount one() { return LogCount(0.0, false); }

    static LogCount from_ln(double ln_value) { return LogCount(ln_value, false); }

    // count must be >= 0; count == 0 maps to the zero state.
    static LogCount from_count(double count);

    bool is_zero() const { return is_zero_; }

    // Natural log of the count. Invalid for the zero state (throws).
    double ln() const;

    // Base-10 log, for reporting values like 1.26e16988.
    double log10() const;

    LogCount& operator*=(const LogCount& rhs);
    friend LogCount operator*(LogCount lhs, const LogCount& rhs) {
        lhs *= rhs;
        return lhs;
    }

private:
    LogCount(double ln_value, bool is_zero) : ln_value_(ln_value), is_zero_(is_zero) {}

    double ln_value_;
    bool is_zero_;
};

// Product of two counts: zero absorbs, otherwise logs add.
LogCount log_mul(const LogCount& a, const LogCount& b);

// Sum of two counts in log space (log-sum-exp).
LogCount log_add(const LogCount& a, const LogCount& b);

// ln C(n, k). Zero count when k < 0 or k > n. Symmetric in k <-> n-k
// bit-for-bit (the smaller side is always the one evaluated).
LogCount log_binomial(std::int64_t n, std::int64_t k);

// ln n!  (n >= 0; ln 0! = 0).
LogCount log_factorial(std::int64_t n);

}  // namespace fibercount

#endif  // FIBERCOUNT_LOGSPACE_HPP
