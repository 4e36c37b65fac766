#include "ffl/homology.hpp"

#include <cassert>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace ffl {

std::string to_string(Cusp c) {
    switch (c) {
    case Cusp::alpha: return "alpha";
    case Cusp::beta: return "beta";
    case Cusp::gamma: return "gamma";
    }
    return "?";
}

Cusp parse_cusp(const std::string& text) {
    if (text == "alpha" || text == "a") return Cusp::alpha;
    if (text == "beta" || text == "b") return Cusp::beta;
    if (text == "gamma" || text == "c" || text == "g") return Cusp::gamma;
    throw DomainError("unknown cusp '" + text + "' (expected alpha, beta or gamma)");
}

Slope Slope::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw ParseError("empty slope component", raw, 0);
        char* end = nullptr;
        const long long v = std::strtoll(s.c_str(), &end, 10);
        if (*end != '\0') throw ParseError("malformed slope", raw, static_cast<std::size_t>(end - s.c_str()));
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return finite(Rational(parse_int(text)));
    return from_ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string FiberedClass::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

std::string IjkClass::to_string() const {
    if (i == 0) return "(" + std::to_string(j) + "," + std::to_string(k) + ")0";
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")" +
           (sign == Sign::plus ? "+" : "-");
}

std::int64_t FiberTopology::boundary(Cusp c) const noexcept {
    switch (c) {
    case Cusp::alpha: return boundary_alpha;
    case Cusp::beta: return boundary_beta;
    case Cusp::gamma: return boundary_gamma;
    }
    return 0;
}

std::int64_t FiberTopology::prongs(Cusp c) const noexcept {
    switch (c) {
    case Cusp::alpha: return prongs_alpha;
    case Cusp::beta: return prongs_beta;
    case Cusp::gamma: return prongs_gamma;
    }
    return 0;
}

std::string FiberTopology::surface_name() const {
    return "Sigma_{" + std::to_string(genus) + "," + std::to_string(boundary_total()) + "}";
}

bool is_fibered(std::int64_t x, std::int64_t y, std::int64_t z) noexcept {
    return x > 0 && y > 0 && x > z && y > z;
}

void require_fibered(const FiberedClass& a) {
    if (a.x <= 0) throw DomainError("class " + a.to_string() + " is not fibered: x > 0 fails");
    if (a.y <= 0) throw DomainError("class " + a.to_string() + " is not fibered: y > 0 fails");
    if (a.x <= a.z) throw DomainError("class " + a.to_string() + " is not fibered: x > z fails");
    if (a.y <= a.z) throw DomainError("class " + a.to_string() + " is not fibered: y > z fails");
}

std::int64_t norm(const FiberedClass& a) {
    require_fibered(a);
    return a.x + a.y - a.z;
}

FiberedClass to_xyz(const IjkClass& c) {
    if (c.i < 0 || c.j < 0 || c.k < 1)
        throw DomainError("class " + c.to_string() + " is not fibered: need i, j >= 0 and k >= 1");
    if (c.sign == Sign::plus || c.i == 0) return {c.i + c.k, c.i + c.j + c.k, c.i};
    return {c.k, c.j + c.k, -c.i};
}

IjkClass from_xyz(const FiberedClass& a) {
    require_fibered(a);
    if (a.y < a.x)
        throw DomainError("class " + a.to_string() +
                          " has y < x; apply the (x,y,z) -> (y,x,z) symmetry before converting");
    if (a.z >= 0) return {a.z, a.y - a.x, a.x - a.z, Sign::plus};
    return {-a.z, a.y - a.x, a.x, Sign::minus};
}

bool is_primitive(const FiberedClass& a) noexcept {
    return std::gcd(std::gcd(a.x, a.y), a.z) == 1;
}

std::int64_t boundary_gcd(std::int64_t a, std::int64_t b) {
    // gcd(0, w) = |w|; std::gcd already follows that convention.
    assert(!(a == 0 && b == 0) && "gcd(0,0) cannot occur for fibered classes");
    return std::gcd(a, b);
}

FiberTopology fiber_topology(const FiberedClass& a) {
    const std::int64_t n = norm(a);
    if (!is_primitive(a)) throw NotPrimitiveError(std::gcd(std::gcd(a.x, a.y), a.z));

    FiberTopology t;
    t.boundary_alpha = boundary_gcd(a.x, a.y + a.z);
    t.boundary_beta = boundary_gcd(a.y, a.z + a.x);
    t.boundary_gamma = boundary_gcd(a.z, a.x + a.y);
    t.prongs_alpha = a.x / t.boundary_alpha;
    t.prongs_beta = a.y / t.boundary_beta;
    t.prongs_gamma = (a.x + a.y - 2 * a.z) / t.boundary_gamma;
    t.orientable = a.x % 2 == 0 && a.y % 2 == 0 && a.z % 2 != 0;

    // chi(F) = 2 - 2g - b = -norm
    const std::int64_t twice_genus = n + 2 - t.boundary_total();
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error("inconsistent Euler characteristic for " + a.to_string());
    t.genus = twice_genus / 2;
    return t;
}

FiberedClass swap_symmetry(const FiberedClass& a) {
    require_fibered(a);
    return {a.y, a.x, a.z};
}

FaceCoordinates projection_to_face(const FiberedClass& a) {
    const std::int64_t n = norm(a);
    return {Rational(a.x, n), Rational(a.y, n)};
}

Slope boundary_slope(const FiberedClass& a, Cusp c) {
    require_fibered(a);
    switch (c) {
    case Cusp::alpha: return Slope::from_ratio(a.y + a.z, -a.x);
    case Cusp::beta: return Slope::from_ratio(a.z + a.x, -a.y);
    case Cusp::gamma: return Slope::from_ratio(a.x + a.y, -a.z);
    }
    throw Error("unreachable cusp");
}

std::array<Slope, 3> boundary_slopes(const FiberedClass& a) {
    return {boundary_slope(a, Cusp::alpha), boundary_slope(a, Cusp::beta), boundary_slope(a, Cusp::gamma)};
}

bool satisfies_star(std::int64_t g) {
    if (g < 2) throw DomainError("condition (*) is stated for g >= 2");
    const std::int64_t m = 2 * g + 1;
    for (std::int64_t s = 0; s <= g; ++s)
        if (std::gcd(m, s) != 1 && std::gcd(m, s + 1) != 1) return false;
    return true;
}

} // namespace ffl
