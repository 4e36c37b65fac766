#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "ffl/rational.hpp"

// Coordinate algebra on H_2(N, dN; Z) of the magic manifold N (the exterior of
// the 3-chain link) restricted to the open cone over the fibered face with
// vertices (1,0,0), (1,1,1), (0,1,0), (0,0,-1).
namespace ffl {

enum class Cusp { alpha, beta, gamma };

std::string to_string(Cusp c);
Cusp parse_cusp(const std::string& text);

/// x*alpha + y*beta + z*gamma. A plain value: operations that need a fibered
/// class validate their argument.
struct FiberedClass {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend bool operator==(const FiberedClass&, const FiberedClass&) = default;
    friend auto operator<=>(const FiberedClass&, const FiberedClass&) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const FiberedClass& a) { return os << a.to_string(); }
};

enum class Sign { plus, minus };

/// (i,j,k)_+ = i(1,1,1) + j(0,1,0) + k(1,1,0) and
/// (i,j,k)_- = i(0,0,-1) + j(0,1,0) + k(1,1,0).
/// With i == 0 both signs name the same class (j,k)_0; equality honours that.
struct IjkClass {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 1;
    Sign sign = Sign::plus;

    bool is_zero_form() const noexcept { return i == 0; }
    bool is_nondegenerate() const noexcept { return i > 0 && j > 0 && k > 0; }
    std::int64_t norm() const noexcept { return i + j + 2 * k; }

    friend bool operator==(const IjkClass& a, const IjkClass& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k && (a.sign == b.sign || a.i == 0);
    }

    /// "(1,4,1)+", "(3,1,1)-", "(2,3)0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const IjkClass& c) { return os << c.to_string(); }
};

/// Projection [x/|a|, y/|a|] of a fibered class to the open face.
struct FaceCoordinates {
    Rational u;
    Rational v;
    friend bool operator==(const FaceCoordinates&, const FaceCoordinates&) = default;
};

struct FiberTopology {
    std::int64_t genus = 0;
    std::int64_t boundary_alpha = 0;
    std::int64_t boundary_beta = 0;
    std::int64_t boundary_gamma = 0;
    std::int64_t prongs_alpha = 0;
    std::int64_t prongs_beta = 0;
    std::int64_t prongs_gamma = 0;
    bool orientable = false;

    std::int64_t boundary_total() const noexcept { return boundary_alpha + boundary_beta + boundary_gamma; }
    std::int64_t boundary(Cusp c) const noexcept;
    std::int64_t prongs(Cusp c) const noexcept;
    /// "Sigma_{2,5}"
    std::string surface_name() const;

    friend bool operator==(const FiberTopology&, const FiberTopology&) = default;
};

bool is_fibered(std::int64_t x, std::int64_t y, std::int64_t z) noexcept;
inline bool is_fibered(const FiberedClass& a) noexcept { return is_fibered(a.x, a.y, a.z); }

/// Throws DomainError naming the violated inequality.
void require_fibered(const FiberedClass& a);

/// Thurston norm x + y - z on the fibered cone.
std::int64_t norm(const FiberedClass& a);

FiberedClass to_xyz(const IjkClass& c);
/// Requires a fibered class with y >= x; z > 0 gives the plus form, z < 0 the
/// minus form and z == 0 the zero form (reported with Sign::plus).
IjkClass from_xyz(const FiberedClass& a);

bool is_primitive(const FiberedClass& a) noexcept;

/// gcd with the convention gcd(0, w) = |w|.
std::int64_t boundary_gcd(std::int64_t a, std::int64_t b);

/// Boundary counts, prong counts, genus and orientability of the fiber.
/// Throws NotPrimitiveError for non-primitive classes.
FiberTopology fiber_topology(const FiberedClass& a);

FiberedClass swap_symmetry(const FiberedClass& a);

FaceCoordinates projection_to_face(const FiberedClass& a);

/// Slopes of the boundary components on T_alpha, T_beta, T_gamma:
/// (y+z)/(-x), (z+x)/(-y), (x+y)/(-z).
std::array<Slope, 3> boundary_slopes(const FiberedClass& a);
Slope boundary_slope(const FiberedClass& a, Cusp c);

/// For every 0 <= s <= g: gcd(2g+1, s) == 1 or gcd(2g+1, s+1) == 1.
bool satisfies_star(std::int64_t g);

} // namespace ffl
