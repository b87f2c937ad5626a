#include "edegen/polytope.hpp"

#include <stdexcept>
#include <string>

namespace edegen {
namespace {

void check_row(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  if (d < 0 || d > n - 1) {
    throw std::out_of_range("degeneracy " + std::to_string(d) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
}

enum class Side { Below, On, Above };

// Compares the point's edge coordinate against the piecewise-linear
// boundary e = f(d) through the lattice vertices (f(k), k).
template <typename Boundary>
Side compare_to_boundary(std::int64_t n, const Rational& e, const Rational& d, Boundary f) {
  BigInt k = boost::multiprecision::numerator(d) / boost::multiprecision::denominator(d);
  if (k >= n - 1) k = n - 2;
  const auto row = k.convert_to<std::int64_t>();
  const Rational lo(f(row));
  const Rational hi(f(row + 1));
  const Rational boundary = lo + (d - Rational(row)) * (hi - lo);
  if (e < boundary) return Side::Below;
  if (e > boundary) return Side::Above;
  return Side::On;
}

}  // namespace

std::int64_t upper_bound(std::int64_t n, std::int64_t d) {
  check_row(n, d);
  return choose2(d + 1);
}

std::int64_t lower_bound(std::int64_t n, std::int64_t d) {
  check_row(n, d);
  return choose2(d + 1) + (n - d - 1) * d;
}

ExactStat Polytope::center() const { return {Rational(n * (n - 1), 4), Rational(n - 1, 2)}; }

StatPair Polytope::rotate(StatPair p) const { return {choose2(n) - p.edges, (n - 1) - p.degen}; }

Polytope build_polytope(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("build_polytope requires n >= 3");
  Polytope p;
  p.n = n;
  p.vertices.reserve(static_cast<std::size_t>(2 * n - 2));
  for (std::int64_t d = 0; d <= n - 1; ++d) p.vertices.push_back({upper_bound(n, d), d});
  for (std::int64_t d = n - 2; d >= 1; --d) p.vertices.push_back({lower_bound(n, d), d});
  return p;
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::InteriorRealizable: return "InteriorRealizable";
    case PointClass::BoundaryVertex: return "BoundaryVertex";
    case PointClass::NotRealizable: return "NotRealizable";
  }
  return "?";
}

PointClass classify_point(std::int64_t n, std::int64_t e, std::int64_t d) {
  if (n < 1 || d < 0 || d > n - 1 || e < 0) return PointClass::NotRealizable;
  const std::int64_t lo = upper_bound(n, d);
  const std::int64_t hi = lower_bound(n, d);
  if (e < lo || e > hi) return PointClass::NotRealizable;
  if (e == lo || e == hi) return PointClass::BoundaryVertex;
  return PointClass::InteriorRealizable;
}

std::vector<StatPair> realizable_points(std::int64_t n) {
  std::vector<StatPair> out;
  for (std::int64_t d = 0; d <= n - 1; ++d) {
    for (std::int64_t e = upper_bound(n, d); e <= lower_bound(n, d); ++e) out.push_back({e, d});
  }
  return out;
}

std::int64_t count_integer_points(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("count_integer_points requires n >= 1");
  std::int64_t total = 0;
  for (std::int64_t d = 0; d <= n - 1; ++d) total += (n - d - 1) * d + 1;
  return total;
}

Rational interior_proportion(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("interior_proportion requires n >= 3");
  const std::int64_t count = count_integer_points(n);
  return Rational(count - (2 * n - 2), count);
}

bool polytope_contains(std::int64_t n, const ExactStat& point) {
  if (n < 3) throw std::invalid_argument("polytope membership requires n >= 3");
  const Rational& e = point.x;
  const Rational& d = point.y;
  if (d < 0 || d > n - 1) return false;
  const auto left = compare_to_boundary(n, e, d, [n](std::int64_t k) { return upper_bound(n, k); });
  const auto right = compare_to_boundary(n, e, d, [n](std::int64_t k) { return lower_bound(n, k); });
  return left != Side::Below && right != Side::Above;
}

bool mle_exists(std::int64_t n, const ExactStat& mean) {
  if (n < 3) throw std::invalid_argument("mle_exists requires n >= 3");
  const Rational& e = mean.x;
  const Rational& d = mean.y;
  if (d <= 0 || d >= n - 1) return false;
  const auto left = compare_to_boundary(n, e, d, [n](std::int64_t k) { return upper_bound(n, k); });
  const auto right = compare_to_boundary(n, e, d, [n](std::int64_t k) { return lower_bound(n, k); });
  return left == Side::Above && right == Side::Below;
}

bool mle_exists_normalized(std::int64_t n, const ExactStat& mean) {
  if (n < 3) throw std::invalid_argument("mle_exists requires n >= 3");
  return mle_exists(n, {mean.x * choose2(n), mean.y * (n - 1)});
}

}  // namespace edegen
