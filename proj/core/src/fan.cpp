#include "edegen/fan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edegen/errors.hpp"
#include "edegen/polytope.hpp"

namespace edegen {
namespace {

struct Vec {
  Rational x;
  Rational y;
};

Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Signs of the coefficients (l1, l2) in v = l1*g1 + l2*g2, by Cramer's rule.
std::pair<int, int> conic_signs(const Vec& v, const Vec& g1, const Vec& g2) {
  const int det = sign(cross(g1, g2));
  return {sign(cross(v, g2)) * det, sign(cross(g1, v)) * det};
}

bool in_interior(const Vec& v, const Vec& g1, const Vec& g2) {
  const auto [a, b] = conic_signs(v, g1, g2);
  return a > 0 && b > 0;
}

}  // namespace

Direction::Direction(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw std::invalid_argument("direction must be nonzero");
}

Direction Direction::from_doubles(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("direction components must be finite");
  }
  return {Rational(x), Rational(y)};
}

Direction Direction::canonical() const {
  if (x_ != 0) {
    const Rational scale = abs(x_);
    return {Rational(sign(x_)), y_ / scale};
  }
  return {Rational(0), Rational(sign(y_))};
}

const char* to_string(ConeClass c) {
  switch (c) {
    case ConeClass::Empty: return "empty";
    case ConeClass::Complete: return "complete";
    case ConeClass::UpperInterior: return "upper";
    case ConeClass::LowerInterior: return "lower";
    case ConeClass::Boundary: return "boundary";
  }
  return "?";
}

ConeClass classify_direction(const Direction& d) {
  const Direction c = d.canonical();
  const Vec v{c.x(), c.y()};
  const Vec down_right{1, -2};
  const Vec left{-1, 0};
  const Vec right{1, 0};
  const Vec up_left{-1, 2};
  if (in_interior(v, down_right, left)) return ConeClass::Empty;
  if (in_interior(v, right, up_left)) return ConeClass::Complete;
  if (in_interior(v, left, up_left)) return ConeClass::UpperInterior;
  if (in_interior(v, right, down_right)) return ConeClass::LowerInterior;
  return ConeClass::Boundary;
}

FaceNormals face_normals(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("face_normals requires n >= 3");
  FaceNormals out;
  for (std::int64_t m = 1; m <= n - 1; ++m) {
    const Direction raw(Rational(1), Rational(-m));
    const Direction normalized(Rational(1), Rational(-2 * m, n));
    out.raw.push_back(raw);
    out.raw.push_back(-raw);
    out.normalized.push_back(normalized);
    out.normalized.push_back(-normalized);
  }
  return out;
}

double limit_lower(double x) { return 1.0 - std::sqrt(1.0 - x); }

double limit_upper(double x) { return std::sqrt(x); }

bool limit_contains(const ExactStat& p) {
  const Rational& x = p.x;
  const Rational& y = p.y;
  if (x < 0 || x > 1 || y < 0 || y > 1) return false;
  // y <= sqrt(x)  <=>  y^2 <= x      (y >= 0)
  // y >= 1 - sqrt(1 - x)  <=>  (1 - y)^2 <= 1 - x   (y <= 1)
  const Rational one_minus_y = 1 - y;
  return y * y <= x && one_minus_y * one_minus_y <= 1 - x;
}

ExactStat alpha_exact(const Direction& d) {
  switch (classify_direction(d)) {
    case ConeClass::Empty: return {Rational(0), Rational(0)};
    case ConeClass::Complete: return {Rational(1), Rational(1)};
    case ConeClass::LowerInterior: {
      const Rational a = d.canonical().y();  // d ~ (1, a)
      return {1 - a * a / 4, 1 + a / 2};
    }
    case ConeClass::UpperInterior: {
      const Rational a = d.canonical().y();  // d ~ (-1, a)
      return {a * a / 4, a / 2};
    }
    case ConeClass::Boundary: break;
  }
  throw DomainError("alpha is undefined on the boundary rays of the limiting normal fan");
}

NormalizedStat alpha(const Direction& d) {
  const ExactStat p = alpha_exact(d);
  return {to_double(p.x), to_double(p.y)};
}

std::vector<StatPair> nearest_extremal_vertex(std::int64_t n, const Direction& d) {
  const Polytope poly = build_polytope(n);
  // <d, (e / C(n,2), k / (n-1))> scaled by n(n-1) is 2 d.x e + n d.y k.
  std::vector<StatPair> best;
  Rational best_score;
  for (const StatPair& v : poly.vertices) {
    const Rational score = 2 * d.x() * v.edges + d.y() * (n * v.degen);
    if (best.empty() || score > best_score) {
      best.assign(1, v);
      best_score = score;
    } else if (score == best_score) {
      best.push_back(v);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

Rational linf_distance(const ExactStat& a, const ExactStat& b) {
  const Rational dx = abs(a.x - b.x);
  const Rational dy = abs(a.y - b.y);
  return dx > dy ? dx : dy;
}

}  // namespace edegen
