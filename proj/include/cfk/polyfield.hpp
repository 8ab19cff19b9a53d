#pragma once

// Polynomial multivector fields in the variables y_1..y_m with the Dirac,
// Euler, and angular (Gamma) operators, and a finite-dimensional matrix
// realization of Gamma on the homogeneous space P_k.
//
// The scalar ring R is a template parameter: exact rationals for operator
// identities, double for numerical oracles.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "cfk/clifford.hpp"

namespace cfk {

namespace detail {

// Graded-lex compare on exponent vectors (total degree first).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

}  // namespace detail

template <class R>
class PolyField {
 public:
  using Coeff = Multivector<R>;
  using TermMap = std::map<std::vector<int>, Coeff, detail::GradedLex>;

  explicit PolyField(int m = 0) : dim_(m) {
    if (m < 0 || m > kMaxDim) throw std::invalid_argument("PolyField: dim out of range");
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }

  void add_term(const std::vector<int>& mono, const Coeff& c) {
    if (static_cast<int>(mono.size()) != dim_)
      throw std::invalid_argument("PolyField: monomial arity mismatch");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, c);
    } else {
      it->second += c;
    }
  }

  // Drops terms whose multivector coefficient is identically zero.
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      bool zero = true;
      for (std::size_t b = 0; b < it->second.size(); ++b)
        if (!(it->second[b] == R{})) {
          zero = false;
          break;
        }
      it = zero ? terms_.erase(it) : std::next(it);
    }
  }

  bool is_zero() const {
    for (const auto& [mono, c] : terms_)
      for (std::size_t b = 0; b < c.size(); ++b)
        if (!(c[b] == R{})) return false;
    return true;
  }

  int degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) {
      int s = 0;
      for (int e : mono) s += e;
      if (s > d) d = s;
    }
    return d;
  }

  PolyField graded_part(int k) const {
    PolyField r(dim_);
    for (const auto& [mono, c] : terms_) {
      int s = 0;
      for (int e : mono) s += e;
      if (s == k) r.terms_.emplace(mono, c);
    }
    return r;
  }

  PolyField& operator+=(const PolyField& o) {
    check_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  PolyField& operator-=(const PolyField& o) {
    check_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c * R(-1));
    return *this;
  }
  PolyField& operator*=(const R& s) {
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
  }
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(PolyField a, const R& s) { return a *= s; }
  friend PolyField operator*(const R& s, PolyField a) { return a *= s; }

  static PolyField constant(int m, const Coeff& c) {
    PolyField r(m);
    r.add_term(std::vector<int>(m, 0), c);
    return r;
  }
  // The coordinate monomial y_j (scalar-valued).
  static PolyField coordinate(int m, int j) {
    PolyField r(m);
    std::vector<int> mono(m, 0);
    mono[j] = 1;
    r.add_term(mono, Coeff::scalar(m, R(1)));
    return r;
  }

  Coeff evaluate(const std::vector<double>& pt) const
    requires std::is_same_v<R, double>
  {
    if (static_cast<int>(pt.size()) != dim_)
      throw std::invalid_argument("PolyField: evaluation point arity mismatch");
    Coeff acc(dim_);
    for (const auto& [mono, c] : terms_) {
      double mval = 1.0;
      for (int j = 0; j < dim_; ++j)
        for (int e = 0; e < mono[j]; ++e) mval *= pt[j];
      acc += c * mval;
    }
    return acc;
  }

 private:
  void check_dim(const PolyField& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyField: dimension mismatch");
  }
  int dim_;
  TermMap terms_;
};

// D f = sum_j e_j d/dy_j f (left Clifford multiplication).
template <class R>
PolyField<R> dirac_apply(const PolyField<R>& f) {
  int m = f.dim();
  PolyField<R> r(m);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j < m; ++j) {
      if (mono[j] == 0) continue;
      auto down = mono;
      --down[j];
      auto ej = Multivector<R>::basis_blade(m, 1u << j);
      r.add_term(down, ej * c * R(mono[j]));
    }
  }
  r.prune();
  return r;
}

// E f = sum_j y_j d/dy_j f (degree on homogeneous pieces).
template <class R>
PolyField<R> euler_apply(const PolyField<R>& f) {
  PolyField<R> r(f.dim());
  for (const auto& [mono, c] : f.terms()) {
    int deg = 0;
    for (int e : mono) deg += e;
    if (deg != 0) r.add_term(mono, c * R(deg));
  }
  return r;
}

// Left multiplication by the vector variable y = sum_j y_j e_j.
template <class R>
PolyField<R> vector_multiply(const PolyField<R>& f) {
  int m = f.dim();
  PolyField<R> r(m);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j < m; ++j) {
      auto up = mono;
      ++up[j];
      auto ej = Multivector<R>::basis_blade(m, 1u << j);
      r.add_term(up, ej * c);
    }
  }
  r.prune();
  return r;
}

// Laplacian sum_j d^2/dy_j^2.
template <class R>
PolyField<R> laplacian_apply(const PolyField<R>& f) {
  int m = f.dim();
  PolyField<R> r(m);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j < m; ++j) {
      if (mono[j] < 2) continue;
      auto down = mono;
      down[j] -= 2;
      r.add_term(down, c * R(mono[j] * (mono[j] - 1)));
    }
  }
  r.prune();
  return r;
}

// Angular operator as the bivector sum -sum_{j<k} e_j e_k (y_j d_k - y_k d_j).
template <class R>
PolyField<R> gamma_apply(const PolyField<R>& f) {
  int m = f.dim();
  PolyField<R> r(m);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        auto ejk = Multivector<R>::basis_blade(m, (1u << j) | (1u << k));
        if (mono[k] > 0) {
          auto t = mono;
          --t[k];
          ++t[j];
          r.add_term(t, ejk * c * R(-mono[k]));
        }
        if (mono[j] > 0) {
          auto t = mono;
          --t[j];
          ++t[k];
          r.add_term(t, ejk * c * R(mono[j]));
        }
      }
    }
  }
  r.prune();
  return r;
}

// The same operator through Gamma = -yD - E.
template <class R>
PolyField<R> gamma_apply_vector_form(const PolyField<R>& f) {
  auto r = vector_multiply(dirac_apply(f)) * R(-1) - euler_apply(f);
  r.prune();
  return r;
}

// --- homogeneous basis and the matrix realization -------------------------

// All degree-k exponent vectors in m variables, graded-lex order.
inline std::vector<std::vector<int>> monomials_of_degree(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> mono(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      mono[pos] = left;
      out.push_back(mono);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      mono[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (m == 0) return out;
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), detail::GradedLex{});
  return out;
}

struct GammaMatrix {
  int degree = 0;
  int dimension = 0;
  std::vector<std::vector<int>> monomials;  // basis order for the monomial factor
  Eigen::MatrixXd matrix;                   // acts on (monomial x blade) coefficients

  int index(int mono_idx, unsigned blade) const {
    return mono_idx * (1 << dimension) + static_cast<int>(blade);
  }
};

// Matrix of gamma_apply on the homogeneous space P_k in m variables.
inline GammaMatrix gamma_matrix(int m, int k) {
  if (m < 1 || m > 5 || k < 0 || k > 8)
    throw std::domain_error("gamma_matrix: size guard (m <= 5, k <= 8)");
  GammaMatrix g;
  g.degree = k;
  g.dimension = m;
  g.monomials = monomials_of_degree(m, k);
  int nmono = static_cast<int>(g.monomials.size());
  int nblade = 1 << m;
  int n = nmono * nblade;
  std::map<std::vector<int>, int, detail::GradedLex> mono_index;
  for (int i = 0; i < nmono; ++i) mono_index[g.monomials[i]] = i;
  g.matrix = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < nmono; ++i) {
    for (int b = 0; b < nblade; ++b) {
      PolyField<double> e(m);
      e.add_term(g.monomials[i], Multivector<double>::basis_blade(m, b));
      auto ge = gamma_apply(e);
      for (const auto& [mono, c] : ge.terms()) {
        int row_mono = mono_index.at(mono);
        for (int rb = 0; rb < nblade; ++rb)
          if (c[rb] != 0.0) g.matrix(g.index(row_mono, rb), g.index(i, b)) = c[rb];
      }
    }
  }
  return g;
}

// --- exact monogenic construction -----------------------------------------

// Harmonic projection of a homogeneous degree-k field: the unique harmonic
// H with f = H + |y|^2 (...). Uses the ansatz H = sum_j b_j |y|^{2j} Lap^j f
// with b_0 = 1, b_{j+1} = -b_j / (2(j+1)(m + 2k - 2(j+1) - 2)).
template <class R>
PolyField<R> harmonic_projection(const PolyField<R>& f, int k) {
  int m = f.dim();
  PolyField<R> radial2(m);  // |y|^2 as a scalar field
  for (int j = 0; j < m; ++j) {
    std::vector<int> mono(m, 0);
    mono[j] = 2;
    radial2.add_term(mono, Multivector<R>::scalar(m, R(1)));
  }
  auto mult_radial = [&](const PolyField<R>& g) {
    PolyField<R> r(m);
    for (const auto& [mg, cg] : g.terms())
      for (const auto& [mr, cr] : radial2.terms()) {
        auto mono = mg;
        for (int j = 0; j < m; ++j) mono[j] += mr[j];
        r.add_term(mono, cg * cr[0]);
      }
    return r;
  };
  PolyField<R> result = f;
  PolyField<R> lap = f;
  R b(1);
  PolyField<R> radial_pow = PolyField<R>::constant(m, Multivector<R>::scalar(m, R(1)));
  for (int j = 0; 2 * (j + 1) <= k; ++j) {
    lap = laplacian_apply(lap);
    if (lap.is_zero()) break;
    R denom = R(2 * (j + 1)) * R(m + 2 * k - 2 * (j + 1) - 2);
    b = b * R(-1) / denom;
    radial_pow = mult_radial(radial_pow);
    PolyField<R> term(m);
    for (const auto& [ml, cl] : lap.terms())
      for (const auto& [mr, cr] : radial_pow.terms()) {
        auto mono = ml;
        for (int t = 0; t < m; ++t) mono[t] += mr[t];
        term.add_term(mono, cl * (cr[0] * b));
      }
    result += term;
  }
  result.prune();
  return result;
}

// Spherical monogenic of degree k extracted from a homogeneous degree-k seed:
// M = H + y D H / (2k + m - 2) where H is the harmonic projection.
// Requires a ring R with exact division (rationals).
template <class R>
PolyField<R> monogenic_projection(const PolyField<R>& f, int k) {
  int m = f.dim();
  if (k == 0) return harmonic_projection(f, 0);
  auto H = harmonic_projection(f, k);
  auto yDH = vector_multiply(dirac_apply(H));
  R denom(2 * k + m - 2);
  PolyField<R> r = H;
  for (const auto& [mono, c] : yDH.terms()) {
    Multivector<R> scaled(m);
    for (std::size_t b = 0; b < c.size(); ++b) scaled[b] = c[b] / denom;
    r.add_term(mono, scaled);
  }
  r.prune();
  return r;
}

}  // namespace cfk
