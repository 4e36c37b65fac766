#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ffl/errors.hpp"

namespace ffl {

__extension__ typedef __int128 wide_int;

/// Exact rational with a reduced numerator/denominator pair and a positive
/// denominator. Homology coordinates stay far inside int64 range, so no
/// big-integer backing is needed here.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<wide_int>(a.num_) * b.den_ <=> static_cast<wide_int>(b.num_) * a.den_;
    }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Boundary slope or filling slope: a reduced rational or the point at infinity.
class Slope {
public:
    static Slope infinity() { return Slope(); }
    static Slope finite(Rational r) { return Slope(r); }
    /// Homogeneous form p/q; q == 0 gives infinity.
    static Slope from_ratio(std::int64_t p, std::int64_t q) {
        if (q == 0) {
            if (p == 0) throw DomainError("slope 0/0 is undefined");
            return infinity();
        }
        return finite(Rational(p, q));
    }
    /// Accepts "inf", "infinity", "1/0", "-1/2", "1/-2", "3".
    static Slope parse(const std::string& text);

    bool is_infinite() const noexcept { return infinite_; }
    const Rational& value() const {
        if (infinite_) throw DomainError("infinite slope has no finite value");
        return value_;
    }
    // Numerator/denominator of the homogeneous form (1/0 for infinity).
    std::int64_t p() const noexcept { return infinite_ ? 1 : value_.num(); }
    std::int64_t q() const noexcept { return infinite_ ? 0 : value_.den(); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }
    friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

private:
    Slope() : infinite_(true) {}
    explicit Slope(Rational r) : infinite_(false), value_(r) {}

    bool infinite_;
    Rational value_{};
};

} // namespace ffl
