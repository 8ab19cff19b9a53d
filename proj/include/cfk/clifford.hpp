#pragma once

// Dense complexified Clifford algebra Cl_{0,m}^c and the geometric frame
// (u, v, t) plus the commutative plane algebra span{1, x^y} that all
// kernel values live in.

#include <cmath>
#include <complex>
#include <cstdint>
#include <bit>
#include <stdexcept>
#include <vector>

namespace cfk {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 10;

// Sign of the product e_A * e_B in Cl_{0,m}: reordering transpositions
// plus one factor -1 per repeated generator (e_i e_i = -1).
inline int blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  unsigned t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  swaps += std::popcount(a & b);  // metric contribution
  return (swaps & 1) ? -1 : 1;
}

// Conjugation sign on a blade of grade l: (-1)^l from the definition times
// (-1)^{l(l-1)/2} from reversing the factors.
inline int conjugation_sign(unsigned blade) {
  int l = std::popcount(blade);
  return ((l * (l + 1) / 2) & 1) ? -1 : 1;
}

template <class T>
class Multivector {
 public:
  Multivector() : dim_(0), c_(1, T{}) {}
  explicit Multivector(int dim) : dim_(dim), c_(std::size_t{1} << dim, T{}) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Multivector: dim out of range");
  }

  static Multivector scalar(int dim, const T& s) {
    Multivector r(dim);
    r.c_[0] = s;
    return r;
  }
  static Multivector basis_blade(int dim, unsigned blade, const T& coeff = T(1)) {
    Multivector r(dim);
    r.c_.at(blade) = coeff;
    return r;
  }
  // Embeds a coordinate vector as sum x_j e_j.
  static Multivector vector(const std::vector<double>& x) {
    Multivector r(static_cast<int>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j) r.c_[std::size_t{1} << j] = T(x[j]);
    return r;
  }

  int dim() const { return dim_; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t blade) const { return c_[blade]; }
  T& operator[](std::size_t blade) { return c_[blade]; }

  Multivector& operator+=(const Multivector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_dim(b);
    Multivector r(a.dim_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == T{}) continue;
        int sg = blade_sign(static_cast<unsigned>(i), static_cast<unsigned>(j));
        T prod = a.c_[i] * b.c_[j];
        if (sg > 0)
          r.c_[i ^ j] += prod;
        else
          r.c_[i ^ j] -= prod;
      }
    }
    return r;
  }

  Multivector grade(int l) const {
    Multivector r(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (std::popcount(static_cast<unsigned>(i)) == l) r.c_[i] = c_[i];
    return r;
  }

  Multivector conjugate() const {
    Multivector r(dim_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.c_[i] = conjugation_sign(static_cast<unsigned>(i)) > 0 ? c_[i] : -c_[i];
    return r;
  }

  double norm() const {
    double s = 0;
    for (const auto& v : c_) s += std::norm(cplx(v));
    return std::sqrt(s);
  }

 private:
  void check_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Multivector: dimension mismatch");
  }
  int dim_;
  std::vector<T> c_;
};

using Mv = Multivector<cplx>;

inline double inner(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
  double s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
  return s;
}

// wedge = (xy - yx)/2, grade 2.
template <class T = cplx>
Multivector<T> wedge(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("wedge: dimension mismatch");
  int m = static_cast<int>(x.size());
  Multivector<T> r(m);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      r[(1u << j) | (1u << k)] = T(x[j] * y[k] - x[k] * y[j]);
  return r;
}

// Invariants of a vector pair: u = (x,y), v = |x^y|, t = |x||y|,
// with u^2 + v^2 = t^2.
struct GeometricFrame {
  double u = 0;
  double v = 0;
  double t = 0;

  double cos_theta() const { return t > 0 ? u / t : 0.0; }

  static GeometricFrame from_uv(double u, double v) {
    if (v < 0) throw std::invalid_argument("GeometricFrame: v must be >= 0");
    return GeometricFrame{u, v, std::hypot(u, v)};
  }

  bool compatible(const GeometricFrame& o, double rtol = 1e-12) const {
    double scale = std::max({std::abs(u), v, t, o.t, 1e-300});
    return std::abs(u - o.u) <= rtol * scale && std::abs(v - o.v) <= rtol * scale;
  }
};

inline GeometricFrame frame_of(const std::vector<double>& x, const std::vector<double>& y) {
  double u = inner(x, y);
  double t = std::sqrt(inner(x, x)) * std::sqrt(inner(y, y));
  double d = t * t - u * u;
  // Cauchy-Schwarz guarantees d >= 0; clamp roundoff.
  if (d < 0) {
    if (d < -1e-12 * t * t) throw std::domain_error("frame_of: t^2 - u^2 < 0 beyond tolerance");
    d = 0;
  }
  return GeometricFrame{u, std::sqrt(d), t};
}

// Value alpha + beta * (x^y) in the commutative plane algebra, where
// (x^y)^2 = -v^2.
struct PlaneValue {
  cplx scalar{};
  cplx bivector_coeff{};
  GeometricFrame frame{};

  PlaneValue() = default;
  PlaneValue(cplx a, cplx b, GeometricFrame f) : scalar(a), bivector_coeff(b), frame(f) {}

  PlaneValue& operator+=(const PlaneValue& o) {
    require_frame(o);
    scalar += o.scalar;
    bivector_coeff += o.bivector_coeff;
    return *this;
  }
  PlaneValue& operator-=(const PlaneValue& o) {
    require_frame(o);
    scalar -= o.scalar;
    bivector_coeff -= o.bivector_coeff;
    return *this;
  }
  friend PlaneValue operator+(PlaneValue a, const PlaneValue& b) { return a += b; }
  friend PlaneValue operator-(PlaneValue a, const PlaneValue& b) { return a -= b; }
  friend PlaneValue operator*(PlaneValue a, cplx s) {
    a.scalar *= s;
    a.bivector_coeff *= s;
    return a;
  }
  friend PlaneValue operator*(cplx s, PlaneValue a) { return a * s; }

  void require_frame(const PlaneValue& o) const {
    if (!frame.compatible(o.frame)) throw std::invalid_argument("PlaneValue: frame mismatch");
  }

  double dist(const PlaneValue& o) const {
    return std::max(std::abs(scalar - o.scalar), std::abs(bivector_coeff - o.bivector_coeff));
  }
};

inline PlaneValue plane_mul(const PlaneValue& a, const PlaneValue& b) {
  a.require_frame(b);
  double v2 = a.frame.v * a.frame.v;
  return PlaneValue{a.scalar * b.scalar - a.bivector_coeff * b.bivector_coeff * v2,
                    a.scalar * b.bivector_coeff + a.bivector_coeff * b.scalar, a.frame};
}

// exp(x^y) for the frame's bivector: cos v + sinc(v) * (x^y).
inline double sinc(double z) { return std::abs(z) < 1e-8 ? 1.0 - z * z / 6.0 : std::sin(z) / z; }

inline PlaneValue exp_simple_bivector(const GeometricFrame& f) {
  return PlaneValue{std::cos(f.v), sinc(f.v), f};
}

// Embeds alpha + beta*(x^y) into the full algebra for concrete x, y.
inline Mv embed(const PlaneValue& p, const std::vector<double>& x, const std::vector<double>& y) {
  Mv w = wedge(x, y);
  Mv r = w * p.bivector_coeff;
  r[0] += p.scalar;
  return r;
}

}  // namespace cfk
