#ifndef EDEGEN_FAN_HPP
#define EDEGEN_FAN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edegen/graph.hpp"
#include "edegen/rational.hpp"

namespace edegen {

/// Nonzero vector in R^2 with exact rational components.
class Direction {
 public:
  /// Throws std::invalid_argument for the zero vector.
  Direction(Rational x, Rational y);
  Direction(std::int64_t x, std::int64_t y) : Direction(Rational(x), Rational(y)) {}
  /// Exact conversion of the binary values.
  static Direction from_doubles(double x, double y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  double x_double() const { return to_double(x_); }
  double y_double() const { return to_double(y_); }

  /// Positive rescaling with the first nonzero coordinate equal to +-1.
  /// Two directions are positively collinear iff their canonical forms agree.
  Direction canonical() const;

  Direction operator-() const { return {-x_, -y_}; }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rational x_;
  Rational y_;
};

/// Which closed cone of the limiting normal fan holds a direction:
///   C_empty    = cone{(1,-2), (-1,0)}
///   C_complete = cone{(1,0), (-1,2)}
///   C_U        = cone{(-1,0), (-1,2)}
///   C_L        = cone{(1,0), (1,-2)}
/// The four rays (1,-2), (-1,0), (1,0), (-1,2) are reported as Boundary.
enum class ConeClass { Empty, Complete, UpperInterior, LowerInterior, Boundary };

const char* to_string(ConeClass c);

ConeClass classify_direction(const Direction& d);

/// Outward face normals of P_n. `raw` are +-(1, -m) for the unnormalized
/// polytope; `normalized` are +-(1, -2m/n), the same faces after rescaling
/// into [0,1]^2. Both lists are ordered m = 1..n-1, + before -.
struct FaceNormals {
  std::vector<Direction> raw;
  std::vector<Direction> normalized;
};

/// Requires n >= 3.
FaceNormals face_normals(std::int64_t n);

/// Boundary curves of the limit set P = {(x, y) : L(x) <= y <= U(x)}.
double limit_lower(double x);  // 1 - sqrt(1 - x)
double limit_upper(double x);  // sqrt(x)

/// Exact membership of a rational point in P.
bool limit_contains(const ExactStat& p);

/// The point of the limit set P selected by `d`:
///   Empty          -> (0, 0)
///   Complete       -> (1, 1)
///   LowerInterior  d ~ (1, a),  a in (-2, 0) -> (1 - a^2/4, 1 + a/2), on y = L(x)
///   UpperInterior  d ~ (-1, a), a in (0, 2)  -> (a^2/4, a/2),         on y = U(x)
/// Throws DomainError for Boundary directions.
ExactStat alpha_exact(const Direction& d);
NormalizedStat alpha(const Direction& d);

/// Vertices of P_n (raw lattice coordinates) whose normalized images maximize
/// <d, .>. One vertex, or the two endpoints of an edge when d is a face
/// normal. Requires n >= 3.
std::vector<StatPair> nearest_extremal_vertex(std::int64_t n, const Direction& d);

/// L-infinity distance between two exact points.
Rational linf_distance(const ExactStat& a, const ExactStat& b);

}  // namespace edegen

#endif  // EDEGEN_FAN_HPP
