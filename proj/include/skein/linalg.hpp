#ifndef SKEIN_LINALG_HPP
#define SKEIN_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

class singular_matrix_error : public domain_error {
 public:
  explicit singular_matrix_error(const std::string& what) : domain_error(what) {}
};

// Dense row-major matrix over an exact ring or field type T. T must provide
// +, -, *, ==, unary - and is_zero(); solving and elimination additionally
// need /.
template <class T>
class RingMatrix {
 public:
  RingMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  bool operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

template <class To, class From, class Conv>
RingMatrix<To> mat_convert(const RingMatrix<From>& m, const To& zero, Conv conv) {
  RingMatrix<To> r(m.rows(), m.cols(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = conv(m.at(i, j));
  return r;
}

template <class T>
RingMatrix<T> mat_mul(const RingMatrix<T>& a, const RingMatrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw domain_error("matrix size mismatch in product");
  RingMatrix<T> r(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

template <class T>
std::vector<T> mat_apply(const RingMatrix<T>& a, const std::vector<T>& x, const T& zero) {
  if (a.cols() != x.size()) throw domain_error("matrix size mismatch in apply");
  std::vector<T> r(a.rows(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || x[j].is_zero()) continue;
      r[i] = r[i] + a.at(i, j) * x[j];
    }
  return r;
}

template <class T>
T mat_trace(const RingMatrix<T>& a, const T& zero) {
  if (a.rows() != a.cols()) throw domain_error("trace of a non-square matrix");
  T s = zero;
  for (std::size_t i = 0; i < a.rows(); ++i) s = s + a.at(i, i);
  return s;
}

// Gaussian elimination over a field (or a fraction field with exact
// equality). prefer(x) marks pivot candidates that keep later arithmetic
// cheap; the first preferred nonzero in the column wins, otherwise the first
// nonzero.
template <class T, class Pref>
T det_field(RingMatrix<T> m, const T& zero, const T& one, Pref prefer) {
  if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det = one;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m.at(r, k).is_zero()) continue;
      if (piv == n) piv = r;
      if (prefer(m.at(r, k))) {
        piv = r;
        break;
      }
    }
    if (piv == n) return zero;
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    det = det * m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      T f = m.at(i, k) / m.at(k, k);
      m.at(i, k) = zero;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      }
    }
  }
  return negate ? -det : det;
}

template <class T>
T det_field(RingMatrix<T> m, const T& zero, const T& one) {
  return det_field(std::move(m), zero, one, [](const T&) { return false; });
}

// Solve a x = b over a field; the solution is verified by substitution.
// Throws singular_matrix_error when no pivot is available; any verification
// failure is an internal arithmetic bug.
template <class T>
std::vector<T> mat_solve(RingMatrix<T> a, std::vector<T> b, const T& zero) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw domain_error("solve requires a square system");
  const RingMatrix<T> a0 = a;
  const std::vector<T> b0 = b;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!a.at(r, k).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) throw singular_matrix_error("singular linear system");
    if (piv != k) {
      a.swap_rows(piv, k);
      std::swap(b[piv], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      T f = a.at(i, k) / a.at(k, k);
      a.at(i, k) = zero;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a.at(k, j).is_zero()) continue;
        a.at(i, j) = a.at(i, j) - f * a.at(k, j);
      }
      b[i] = b[i] - f * b[k];
    }
  }
  std::vector<T> x(n, zero);
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (a.at(ii, j).is_zero() || x[j].is_zero()) continue;
      acc = acc - a.at(ii, j) * x[j];
    }
    x[ii] = acc / a.at(ii, ii);
  }
  if (mat_apply(a0, x, zero) != b0)
    throw internal_check_error("linear solve failed verification by substitution");
  return x;
}

}  // namespace skein

#endif
