#pragma once

#include <chrono>
#include <limits>

namespace bandcol {

/// Wall-clock budget measured on the steady clock. A non-positive or infinite
/// limit never expires.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() : Deadline(std::numeric_limits<double>::infinity()) {}
    explicit Deadline(double seconds) : start_(Clock::now()), limit_(seconds) {}

    static Deadline unlimited() { return Deadline(); }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }
    bool expired() const { return limit_ > 0.0 && limit_ < kInf && elapsed() >= limit_; }
    double limit() const noexcept { return limit_; }

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();
    Clock::time_point start_;
    double limit_;
};

} // namespace bandcol
