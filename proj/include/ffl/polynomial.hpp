#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ffl/homology.hpp"

namespace ffl {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// indexed by degree. Always kept without trailing zero coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(const BigInt& coeff, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }
    const BigInt& leading() const;

    /// Coefficients read backwards: t^deg * p(1/t).
    IntPolynomial reversed() const;

    /// Sign of p(t) at a finite double; certified (falls back to exact
    /// arithmetic when the floating point evaluation cannot decide).
    int sign_at(double t) const;
    /// p(t) in long double, for reporting only.
    long double evaluate(long double t) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "t^7 - t^6 - t^5 - t^2 - t + 1"
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

    /// Inverse of to_string (accepts the same monomial grammar, any order).
    static IntPolynomial parse(const std::string& text);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Positive tolerance for root refinement. Parsed from decimal/scientific
/// ("1e-12") or rational ("1/1000") text.
class Tolerance {
public:
    constexpr Tolerance() = default;
    explicit Tolerance(double value);
    static Tolerance parse(const std::string& text);
    double value() const noexcept { return value_; }
    std::string to_string() const;

private:
    double value_ = 1e-12;
};

inline constexpr Tolerance default_tolerance{};

/// Dyadic bracket [low, high] around a root; low == high for an exactly
/// located root.
struct RootBracket {
    double low = 0.0;
    double high = 0.0;
    double tolerance = 0.0;
    double midpoint() const noexcept { return low + (high - low) / 2; }
    double width() const noexcept { return high - low; }
};

/// t^{x+y-z} - t^x - t^y - t^{x-z} - t^{y-z} + 1.
IntPolynomial dilatation_polynomial(const FiberedClass& a);

/// 1 - (t^k + t^{i+k} + t^{j+k} + t^{i+j+k}) + t^{i+j+2k}; independent of the sign.
IntPolynomial clique_polynomial_formula(const IjkClass& c);

/// t^{2a} - t^{a+b} - t^a - t^{a-b} + 1, a > b >= 0.
IntPolynomial lanneau_thiffeault(std::int64_t a, std::int64_t b);

bool is_reciprocal(const IntPolynomial& p);

struct DivisionResult {
    std::optional<IntPolynomial> quotient;
    IntPolynomial remainder;
    explicit operator bool() const noexcept { return quotient.has_value(); }
};

/// Exact division over Z. Fails (with the remainder) when q does not divide p
/// or when a quotient coefficient would be non-integral.
DivisionResult divide_exact(const IntPolynomial& p, const IntPolynomial& q);

/// Bracket of the largest real root: integer descending scan from the Cauchy
/// bound 1 + max|c_i|/|c_n| down to 1, then bisection. Throws SolverError when
/// no root >= 1 is found.
RootBracket bracket_largest_real_root(const IntPolynomial& p, Tolerance tol = default_tolerance);
double largest_real_root(const IntPolynomial& p, Tolerance tol = default_tolerance);

/// Bracket of the smallest root in (0, 1]: ascending scan with step 1/64,
/// then bisection. Requires p(0) != 0.
RootBracket bracket_smallest_positive_root(const IntPolynomial& p, Tolerance tol = default_tolerance);
double smallest_positive_root(const IntPolynomial& p, Tolerance tol = default_tolerance);

} // namespace ffl
