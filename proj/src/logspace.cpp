#include "fibercount/logspace.hpp"

#include <cmath>
#include <stdexcept>

namespace fibercount {

LogCount LogCount::from_count(double count) {
    if (count < 0.0) throw std::invalid_argument("LogCount: count must be nonnegative");
    if (count == 0.0) return zero();
    return from_ln(std::log(count));
}

double LogCount::ln() const {
    if (is_zero_) throw std::logic_error("LogCount: ln() of a zero count");
    return ln_value_;
}

double LogCount::log10() const {
    return ln() / std::log(10.0);
}

LogCount& LogCount::operator*=(const LogCount& rhs) {
    if (is_zero_ || rhs.is_zero_) {
        *this = zero();
    } else {
        ln_value_ += rhs.ln_value_;
    }
    return *this;
}

LogCount log_mul(const LogCount& a, const LogCount& b) {
    return a * b;
}

LogCount log_add(const LogCount& a, const LogCount& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const double hi = std::max(a.ln(), b.ln());
    const double lo = std::min(a.ln(), b.ln());
    return LogCount::from_ln(hi + std::log1p(std::exp(lo - hi)));
}

LogCount log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("log_binomial: n must be nonnegative");
    if (k < 0 || k > n) return LogCount::zero();
    // Canonicalize so that (n, k) and (n, n-k) evaluate the same expression.
    if (k > n - k) k = n - k;
    if (k == 0) return LogCount::one();
    const double value = std::lgamma(static_cast<double>(n) + 1.0) -
                         std::lgamma(static_cast<double>(k) + 1.0) -
                         std::lgamma(static_cast<double>(n - k) + 1.0);
    return LogCount::from_ln(value);
}

LogCount log_factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("log_factorial: n must be nonnegative");
    if (n <= 1) return LogCount::one();
    return LogCount::from_ln(std::lgamma(static_cast<double>(n) + 1.0));
}

}  // namespace fibercount
