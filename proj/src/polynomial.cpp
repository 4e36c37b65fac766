#include "ffl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace ffl {

namespace {

using boost::multiprecision::abs;

int sign_of(const BigInt& v) { return v.sign(); }

// Exact sign of p(t) for a finite double t, which is a dyadic rational M / 2^s.
int exact_sign_at(const std::vector<BigInt>& c, double t) {
    if (t == 0.0) return sign_of(c.front());
    int exp = 0;
    const double frac = std::frexp(t, &exp);
    // t = mant * 2^(exp - 53) with mant an integer
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    int shift = exp - 53;
    while (mant % 2 == 0 && shift < 0) {
        mant /= 2;
        ++shift;
    }
    const std::size_t n = c.size() - 1;
    BigInt y = c[n];
    if (shift >= 0) {
        const BigInt tv = BigInt(mant) << shift;
        for (std::size_t i = n; i-- > 0;) y = y * tv + c[i];
        return sign_of(y);
    }
    // p(M/D) * D^n = sum c_i M^i D^(n-i), D = 2^-shift
    const BigInt m(mant);
    const unsigned s = static_cast<unsigned>(-shift);
    for (std::size_t i = n; i-- > 0;) y = y * m + (c[i] << static_cast<unsigned>(s * (n - i)));
    return sign_of(y);
}

bool fits_long_double(const BigInt& v) {
    return abs(v) < (BigInt(1) << 62);
}

} // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& coeff, std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(c));
}

long double IntPolynomial::evaluate(long double t) const {
    long double y = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) y = y * t + it->convert_to<long double>();
    return y;
}

int IntPolynomial::sign_at(double t) const {
    if (coeffs_.empty()) return 0;
    if (!std::isfinite(t)) throw DomainError("polynomial sign requested at a non-finite point");

    // Horner with a running rounding-error bound.
    bool fast = std::all_of(coeffs_.begin(), coeffs_.end(), fits_long_double);
    if (fast) {
        const long double lt = t;
        const long double at = std::fabs(lt);
        long double y = coeffs_.back().convert_to<long double>();
        long double mu = std::fabs(y) / 2;
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            y = y * lt + coeffs_[i].convert_to<long double>();
            mu = mu * at + std::fabs(y);
        }
        const long double u = std::numeric_limits<long double>::epsilon() / 2;
        const long double bound = 4 * u * (2 * mu - std::fabs(y));
        if (std::isfinite(y) && std::isfinite(mu) && std::fabs(y) > bound) return y > 0 ? 1 : -1;
    }
    return exact_sign_at(coeffs_, t);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || d == 0) out += mag.str();
        if (d >= 1) out += "t";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto digits = [&]() -> std::string {
        std::string d;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) d += text[pos++];
        return d;
    };
    IntPolynomial result;
    bool first = true;
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty polynomial", "", pos);
    if (text.substr(pos) == "0") return result;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sgn = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sgn = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between monomials", text.substr(pos, 1), pos);
        }
        const std::size_t term_start = pos;
        std::string coef = digits();
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        std::size_t degree = 0;
        if (pos < text.size() && (text[pos] == 't' || text[pos] == 'x')) {
            ++pos;
            degree = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                const std::string e = digits();
                if (e.empty()) throw ParseError("missing exponent", text.substr(pos, 1), pos);
                degree = static_cast<std::size_t>(std::stoull(e));
            }
        } else if (coef.empty()) {
            throw ParseError("expected a monomial", text.substr(term_start, 1), term_start);
        }
        BigInt c = coef.empty() ? BigInt(1) : BigInt(coef);
        result += monomial(sgn * c, degree);
        first = false;
    }
    return result;
}

Tolerance::Tolerance(double value) : value_(value) {
    if (!(value > 0) || !std::isfinite(value)) throw DomainError("tolerance must be a positive finite number");
}

Tolerance Tolerance::parse(const std::string& text) {
    auto number = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0')
            throw ParseError("malformed tolerance", text, static_cast<std::size_t>(end - s.c_str()));
        return v;
    };
    const auto slash = text.find('/');
    double v = 0;
    if (slash == std::string::npos) {
        v = number(text);
    } else {
        const double den = number(text.substr(slash + 1));
        if (den == 0) throw ParseError("tolerance with zero denominator", text, slash + 1);
        v = number(text.substr(0, slash)) / den;
    }
    if (!(v > 0) || !std::isfinite(v)) throw ParseError("tolerance must be positive and finite", text, 0);
    return Tolerance(v);
}

std::string Tolerance::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value_);
    return buf;
}

IntPolynomial dilatation_polynomial(const FiberedClass& a) {
    const std::int64_t n = norm(a);
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] += 1;
    c[static_cast<std::size_t>(n)] += 1;
    for (std::int64_t d : {a.x, a.y, a.x - a.z, a.y - a.z}) c[static_cast<std::size_t>(d)] -= 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial clique_polynomial_formula(const IjkClass& c) {
    if (c.i < 0 || c.j < 0 || c.k < 1) throw DomainError("clique polynomial needs i, j >= 0 and k >= 1");
    std::vector<BigInt> q(static_cast<std::size_t>(c.norm()) + 1);
    q[0] += 1;
    for (std::int64_t d : {c.k, c.i + c.k, c.j + c.k, c.i + c.j + c.k}) q[static_cast<std::size_t>(d)] -= 1;
    q[static_cast<std::size_t>(c.norm())] += 1;
    return IntPolynomial(std::move(q));
}

IntPolynomial lanneau_thiffeault(std::int64_t a, std::int64_t b) {
    if (!(a > b && b >= 0)) throw DomainError("Lanneau-Thiffeault polynomial needs a > b >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(2 * a) + 1);
    c[0] += 1;
    c[static_cast<std::size_t>(2 * a)] += 1;
    for (std::int64_t d : {a + b, a, a - b}) c[static_cast<std::size_t>(d)] -= 1;
    return IntPolynomial(std::move(c));
}

bool is_reciprocal(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("reciprocity is undefined for the zero polynomial");
    const auto& c = p.coefficients();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

DivisionResult divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<BigInt> rem = p.coefficients();
    const auto& d = q.coefficients();
    const std::size_t dq = d.size() - 1;
    if (rem.size() < d.size()) {
        if (rem.empty()) return {IntPolynomial{}, IntPolynomial{}};
        return {std::nullopt, p};
    }
    std::vector<BigInt> quot(rem.size() - dq);
    for (std::size_t top = rem.size(); top-- > dq;) {
        if (rem[top] == 0) continue;
        if (rem[top] % d.back() != 0) {
            rem.resize(top + 1);
            return {std::nullopt, IntPolynomial(std::move(rem))};
        }
        const BigInt f = rem[top] / d.back();
        quot[top - dq] = f;
        for (std::size_t i = 0; i <= dq; ++i) rem[top - dq + i] -= f * d[i];
    }
    IntPolynomial r(std::move(rem));
    if (!r.is_zero()) return {std::nullopt, r};
    return {IntPolynomial(std::move(quot)), IntPolynomial{}};
}

namespace {

// Shrinks [lo, hi] with sign(p(hi)) == hi_sign and sign(p(lo)) != hi_sign.
RootBracket bisect(const IntPolynomial& p, double lo, double hi, int hi_sign, Tolerance tol) {
    while (hi - lo >= tol.value()) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        const int s = p.sign_at(mid);
        if (s == 0) return {mid, mid, tol.value()};
        if (s == hi_sign)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi, tol.value()};
}

} // namespace

RootBracket bracket_largest_real_root(const IntPolynomial& p, Tolerance tol) {
    if (p.degree() < 1) throw SolverError("no-root-above-1: constant polynomial");
    const auto& c = p.coefficients();
    BigInt max_abs = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) max_abs = std::max(max_abs, BigInt(abs(c[i])));
    const BigInt lead = abs(c.back());
    const BigInt ratio = (max_abs + lead - 1) / lead;
    if (ratio > (BigInt(1) << 40)) throw SolverError("Cauchy bound too large for the integer scan");
    const double bound = 1.0 + ratio.convert_to<double>();

    const int lead_sign = sign_of(c.back());
    double hi = bound;
    if (p.sign_at(hi) != lead_sign) throw SolverError("sign at the Cauchy bound disagrees with the leading term");
    for (double t = bound - 1; t >= 1.0; t -= 1.0) {
        const int s = p.sign_at(t);
        if (s == 0) return {t, t, tol.value()};
        if (s != lead_sign) return bisect(p, t, hi, lead_sign, tol);
        hi = t;
    }
    throw SolverError("no-root-above-1: no sign change on [1, " + std::to_string(bound) + "]");
}

double largest_real_root(const IntPolynomial& p, Tolerance tol) {
    return bracket_largest_real_root(p, tol).midpoint();
}

RootBracket bracket_smallest_positive_root(const IntPolynomial& p, Tolerance tol) {
    if (p.is_zero()) throw SolverError("no-root-in-unit-interval: zero polynomial");
    const int s0 = sign_of(p.coefficients().front());
    if (s0 == 0) throw SolverError("no-root-in-unit-interval: p(0) = 0");
    constexpr int steps = 64;
    double lo = 0.0;
    for (int m = 1; m <= steps; ++m) {
        const double t = static_cast<double>(m) / steps;
        const int s = p.sign_at(t);
        if (s == 0) return {t, t, tol.value()};
        if (s != s0) return bisect(p, lo, t, s, tol);
        lo = t;
    }
    throw SolverError("no-root-in-unit-interval: no sign change on (0, 1]");
}

double smallest_positive_root(const IntPolynomial& p, Tolerance tol) {
    return bracket_smallest_positive_root(p, tol).midpoint();
}

} // namespace ffl
