#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace domcrit {

/// Next bitmask with the same popcount (Gosper's hack).
inline uint64_t next_combination_bits(uint64_t x) {
    uint64_t c = x & (~x + 1);
    uint64_t r = x + c;
    return r | (((x ^ r) >> 2) / c);
}

/// Raised when an exact search refuses an instance above its exactness bound.
class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a per-call time budget expires mid-search.
class Timeout : public std::runtime_error {
public:
    Timeout() : std::runtime_error("time budget exhausted") {}
};

struct Deadline {
    std::chrono::steady_clock::time_point at;

    static Deadline after(std::chrono::duration<double> d) {
        return {std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(d)};
    }
    bool expired() const { return std::chrono::steady_clock::now() >= at; }
};

/// Checks the (optional) deadline; call sites amortize with a node counter.
inline void check_deadline(const Deadline* dl) {
    if (dl && dl->expired()) throw Timeout();
}

}  // namespace domcrit
