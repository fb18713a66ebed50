#ifndef FIBERCOUNT_ERRORS_HPP
#define FIBERCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibercount {

// A degree sequence / distribution / mixing target that no simple graph
// realizes, or a construction step that cannot be completed.
class NotGraphicalError : public std::runtime_error {
public:
    explicit NotGraphicalError(const std::string& what) : std::runtime_error(what) {}
};

// A ratio along a path evaluated to something unusable (nonpositive
// numerator, zero denominator, ill-formed binomial). Carries the index of
// the failing step so callers can report where the estimate broke down.
class EstimationError : public std::runtime_error {
public:
    static constexpr std::size_t no_step = static_cast<std::size_t>(-1);

    explicit EstimationError(const std::string& what) : std::runtime_error(what), step_(no_step) {}

    EstimationError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace fibercount

#endif  // FIBERCOUNT_ERRORS_HPP
