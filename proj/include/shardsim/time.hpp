#pragma once
// Simulated time, stored as integer microseconds so event ordering and
// window arithmetic are platform-exact.

#include <compare>
#include <cstdint>

namespace shardsim {

struct SimTime {
    int64_t us = 0;

    static constexpr SimTime zero() { return {0}; }
    static constexpr SimTime from_us(int64_t v) { return {v}; }
    static SimTime from_seconds(double s) {
        return {static_cast<int64_t>(s * 1e6 + (s >= 0 ? 0.5 : -0.5))};
    }
    constexpr double seconds() const { return static_cast<double>(us) * 1e-6; }

    constexpr auto operator<=>(const SimTime&) const = default;
    constexpr SimTime operator+(SimTime o) const { return {us + o.us}; }
    constexpr SimTime operator-(SimTime o) const { return {us - o.us}; }
    constexpr SimTime& operator+=(SimTime o) { us += o.us; return *this; }
    constexpr SimTime operator*(int64_t k) const { return {us * k}; }
};

}  // namespace shardsim
