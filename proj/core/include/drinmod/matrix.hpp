#ifndef DRINMOD_MATRIX_HPP
#define DRINMOD_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "drinmod/parallel.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// Dense square matrix over a commutative coefficient ring R. Entry size,
/// not dimension, dominates cost here (dimensions stay <= psi_r), so the
/// representation is a flat row-major vector and products parallelize over
/// rows with a fixed summation order, keeping results identical for every
/// thread count.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(size_t n) : n_(n), e_(n * n) {}

  static Matrix identity(size_t n, const R& one) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }
  static Matrix scalar(size_t n, const R& v) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = v;
    return m;
  }

  size_t dim() const { return n_; }
  R& at(size_t i, size_t j) { return e_[i * n_ + j]; }
  const R& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

  Matrix operator+(const Matrix& o) const {
    check(o);
    Matrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check(o);
    Matrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    check(o);
    Matrix r(n_);
    parallel_for(n_, [&](size_t i) {
      for (size_t j = 0; j < n_; ++j) {
        R acc;
        for (size_t k = 0; k < n_; ++k) {
          if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
          acc = acc + at(i, k) * o.at(k, j);
        }
        r.at(i, j) = std::move(acc);
      }
    });
    return r;
  }
  /// Entrywise scaling by a ring element.
  Matrix scaled(const R& s) const {
    Matrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }
  bool operator==(const Matrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] == o.e_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  R trace() const {
    R acc;
    for (size_t i = 0; i < n_; ++i) acc = acc + at(i, i);
    return acc;
  }

  Matrix pow(uint64_t k, const R& one) const {
    Matrix r = identity(n_, one);
    Matrix b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
      k >>= 1;
    }
    return r;
  }

 private:
  void check(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  }
  size_t n_ = 0;
  std::vector<R> e_;
};

/// Companion matrix of a monic P of degree n: ones on the subdiagonal and
/// -P_i down the last column, so charpoly(companion(P)) == P.
template <class R>
Matrix<R> companion(const UPoly<R>& P) {
  if (!P.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
  size_t n = static_cast<size_t>(P.degree());
  if (n == 0) throw std::invalid_argument("companion: degree must be positive");
  Matrix<R> m(n);
  const R& one = P.leading();
  for (size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = one;
  for (size_t i = 0; i < n; ++i) m.at(i, n - 1) = -P.coeff(i);
  return m;
}

/// det(XI - M) by the Samuelson-Berkowitz scheme: no division happens in R,
/// which keeps the computation exact over rings of characteristic p where
/// trace/Newton methods would divide by integers. The per-stage Toeplitz
/// vectors are independent and computed in parallel.
template <class R>
UPoly<R> charpoly_division_free(const Matrix<R>& M, const R& one) {
  size_t n = M.dim();
  if (n == 0) return UPoly<R>::constant(one);

  // qv[k] (for the k-th leading principal submatrix, k = 1..n) has length
  // k+1: [1, -M_kk, -(row * col), -(row * A * col), ...].
  std::vector<std::vector<R>> qv(n + 1);
  parallel_for(n, [&](size_t idx) {
    size_t k = idx + 1;
    std::vector<R> v(k + 1);
    v[0] = one;
    v[1] = -M.at(k - 1, k - 1);
    if (k >= 2) {
      std::vector<R> w(k - 1);
      for (size_t i = 0; i + 1 < k; ++i) w[i] = M.at(i, k - 1);
      for (size_t j = 2; j <= k; ++j) {
        R dot;
        for (size_t i = 0; i + 1 < k; ++i) {
          if (w[i].is_zero() || M.at(k - 1, i).is_zero()) continue;
          dot = dot + M.at(k - 1, i) * w[i];
        }
        v[j] = -dot;
        if (j == k) break;
        std::vector<R> nw(k - 1);
        for (size_t i = 0; i + 1 < k; ++i) {
          R acc;
          for (size_t t = 0; t + 1 < k; ++t) {
            if (M.at(i, t).is_zero() || w[t].is_zero()) continue;
            acc = acc + M.at(i, t) * w[t];
          }
          nw[i] = std::move(acc);
        }
        w = std::move(nw);
      }
    }
    qv[k] = std::move(v);
  });

  // Fold the Toeplitz products c <- Toep(qv[k]) * c, descending coefficients.
  std::vector<R> c{one};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<R> nc(k + 1);
    parallel_for(k + 1, [&](size_t i) {
      R acc;
      for (size_t j = 0; j < c.size(); ++j) {
        if (i < j || i - j >= qv[k].size()) continue;
        if (qv[k][i - j].is_zero() || c[j].is_zero()) continue;
        acc = acc + qv[k][i - j] * c[j];
      }
      nc[i] = std::move(acc);
    });
    c = std::move(nc);
  }

  std::vector<R> ascending(c.rbegin(), c.rend());
  return UPoly<R>(std::move(ascending));
}

/// Exact inverse via Cayley-Hamilton: M * B = -chi(0) * I with
/// B = sum_{i>=1} chi_i M^{i-1}, so M^{-1} = B * (-chi(0))^{-1}. Requires
/// det(M) to be a unit (chi(0) = (-1)^n det M); R::inv() must reject
/// non-units. Returns {inverse, det}.
template <class R>
std::pair<Matrix<R>, R> adjugate_inverse(const Matrix<R>& M, const R& one) {
  size_t n = M.dim();
  if (n == 0) throw std::invalid_argument("adjugate_inverse: empty matrix");
  UPoly<R> chi = charpoly_division_free(M, one);
  R chi0 = chi.coeff(0);
  if (chi0.is_zero()) throw std::domain_error("adjugate_inverse: singular matrix");
  // Horner on the truncated charpoly: B = chi_n M^{n-1} + ... + chi_1 I.
  Matrix<R> B = Matrix<R>::scalar(n, chi.coeff(n));
  for (size_t i = n; i-- > 1;) {
    B = B * M;
    Matrix<R> d = Matrix<R>::scalar(n, chi.coeff(i));
    B = B + d;
  }
  R det = (n % 2 == 0) ? chi0 : -chi0;
  R scale = (-chi0).inv();
  return {B.scaled(scale), det};
}

}  // namespace drinmod

#endif
