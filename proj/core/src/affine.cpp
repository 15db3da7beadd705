#include "polyvor/affine.hpp"

#include <cmath>

#include "polyvor/error.hpp"

namespace polyvor {
namespace {

Rational sum(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool nonnegative(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x < 0) return false;
  }
  return true;
}

void canonicalize(std::vector<Rational>& v) {
  for (auto& x : v) x.canonicalize();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, "vectors have different sizes");
}

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

}  // namespace

AffinePoint AffinePoint::simplex(std::vector<Rational> coords) {
  canonicalize(coords);
  if (coords.empty() || sum(coords) != 1 || !nonnegative(coords)) {
    throw Error(ErrorKind::NotInSimplex, "point is not a probability distribution");
  }
  return AffinePoint(std::move(coords), Chart::Simplex);
}

AffinePoint AffinePoint::hyperplane(std::vector<Rational> coords) {
  canonicalize(coords);
  if (coords.empty() || sum(coords) != 1) {
    throw Error(ErrorKind::NotInSimplex, "coordinates do not sum to one");
  }
  const Chart chart = nonnegative(coords) ? Chart::Simplex : Chart::Hyperplane;
  return AffinePoint(std::move(coords), chart);
}

AffinePoint AffinePoint::from_doubles(const std::vector<double>& coords) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "empty point");
  std::vector<Rational> exact;
  exact.reserve(coords.size());
  Rational partial = 0;
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    exact.push_back(from_double(coords[i]));
    partial += exact.back();
  }
  exact.push_back(1 - partial);
  return hyperplane(std::move(exact));
}

AffinePoint AffinePoint::vertex(std::size_t size, std::size_t i) {
  std::vector<Rational> coords(size, Rational(0));
  coords.at(i) = 1;
  return AffinePoint(std::move(coords), Chart::Simplex);
}

AffinePoint AffinePoint::barycenter(std::size_t size) {
  return AffinePoint(std::vector<Rational>(size, Rational(1, size)), Chart::Simplex);
}

bool AffinePoint::in_simplex() const { return nonnegative(coords_); }

std::vector<double> AffinePoint::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_d());
  return out;
}

DirectionVector::DirectionVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  canonicalize(coords_);
  if (sum(coords_) != 0) throw Error(ErrorKind::NotZeroSum, "direction coordinates must sum to zero");
}

DirectionVector DirectionVector::basis_difference(std::size_t size, std::size_t i, std::size_t j,
                                                  const Rational& scale) {
  std::vector<Rational> coords(size, Rational(0));
  coords.at(i) += 1 / scale;
  coords.at(j) -= 1 / scale;
  return DirectionVector(std::move(coords));
}

bool DirectionVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<double> DirectionVector::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_d());
  return out;
}

DirectionVector DirectionVector::operator-() const {
  DirectionVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

DirectionVector operator+(const DirectionVector& a, const DirectionVector& b) {
  require_same_size(a.size(), b.size());
  DirectionVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords_[i] += b.coords_[i];
  return out;
}

DirectionVector operator-(const DirectionVector& a, const DirectionVector& b) { return a + (-b); }

DirectionVector operator*(const Rational& s, const DirectionVector& v) {
  DirectionVector out = v;
  for (auto& c : out.coords_) c *= s;
  return out;
}

DirectionVector operator-(const AffinePoint& a, const AffinePoint& b) {
  require_same_size(a.size(), b.size());
  std::vector<Rational> coords(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) coords[i] = a[i] - b[i];
  return DirectionVector(std::move(coords));
}

AffinePoint operator+(const AffinePoint& p, const DirectionVector& v) {
  require_same_size(p.size(), v.size());
  std::vector<Rational> coords(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) coords[i] = p[i] + v[i];
  return AffinePoint::hyperplane(std::move(coords));
}

bool parallel(const DirectionVector& u, const DirectionVector& v) {
  require_same_size(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

ExactPoint2 exact_chart(const AffinePoint& p) {
  if (p.size() != 3) throw Error(ErrorKind::DimensionMismatch, "planar chart needs three states");
  return {p[0], p[1]};
}

ExactPoint2 exact_chart(const DirectionVector& v) {
  if (v.size() != 3) throw Error(ErrorKind::DimensionMismatch, "planar chart needs three states");
  return {v[0], v[1]};
}

int orientation(const ExactPoint2& a, const ExactPoint2& b) {
  return sgn(Rational(a.x * b.y - a.y * b.x));
}

ChartPoint to_plot_chart(const Point3& t) { return {t[0] + 0.5 * t[1], kSqrt3Half * t[1]}; }

ChartPoint to_plot_chart_direction(const Point3& v) { return {v[0] + 0.5 * v[1], kSqrt3Half * v[1]}; }

Point3 from_plot_chart(const ChartPoint& c) {
  const double t2 = c.y / kSqrt3Half;
  const double t1 = c.x - 0.5 * t2;
  return {t1, t2, 1.0 - t1 - t2};
}

Point3 from_plot_chart_direction(const ChartPoint& c) {
  const double t2 = c.y / kSqrt3Half;
  const double t1 = c.x - 0.5 * t2;
  return {t1, t2, -t1 - t2};
}

}  // namespace polyvor
