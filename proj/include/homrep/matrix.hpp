#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "homrep/errors.hpp"

namespace homrep {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<std::int64_t>;
using IntVector = DenseVector<std::int64_t>;

namespace detail {

template <typename T>
T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <typename T>
T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <typename T>
T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination. Every
/// intermediate is a minor of the input, so divisions are exact; any
/// overflow of Scalar raises OverflowError. The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "determinant() is for integer matrices");
  if (input.rows() != input.cols()) throw PreconditionError("determinant of a non-square matrix");

  DenseMatrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const Scalar num = detail::checked_sub(detail::checked_mul(a(i, j), a(k, k)),
                                               detail::checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Scalar{1} : detail::checked_mul(sign, a(n - 1, n - 1));
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  const auto d = determinant(m);
  return d == 1 || d == -1;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m == DenseMatrix<typename Derived::Scalar>::Identity(m.rows(), m.cols());
}

/// Exact inverse of a unimodular integer matrix, computed with unimodular
/// row operations (Euclid on each pivot column). Throws PreconditionError when
/// the input is singular or has |det| != 1.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> unimodular_inverse(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "unimodular_inverse() is for integer matrices");
  if (input.rows() != input.cols()) throw PreconditionError("inverse of a non-square matrix");

  const Eigen::Index n = input.rows();
  DenseMatrix<Scalar> a = input;
  DenseMatrix<Scalar> inv = DenseMatrix<Scalar>::Identity(n, n);

  auto axpy_row = [&](Eigen::Index dst, Eigen::Index src, Scalar q) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(dst, j) = detail::checked_sub(a(dst, j), detail::checked_mul(q, a(src, j)));
      inv(dst, j) = detail::checked_sub(inv(dst, j), detail::checked_mul(q, inv(src, j)));
    }
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    // Reduce column k below the diagonal to a single nonzero gcd at (k,k).
    for (;;) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k; i < n; ++i) {
        if (a(i, k) != 0 && (pivot < 0 || std::abs(a(i, k)) < std::abs(a(pivot, k)))) pivot = i;
      }
      if (pivot < 0) throw PreconditionError("matrix is singular");
      if (pivot != k) {
        a.row(k).swap(a.row(pivot));
        inv.row(k).swap(inv.row(pivot));
      }
      bool done = true;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        axpy_row(i, k, a(i, k) / a(k, k));
        if (a(i, k) != 0) done = false;
      }
      if (done) break;
    }
    if (a(k, k) != 1 && a(k, k) != -1) throw PreconditionError("matrix is not unimodular");
    if (a(k, k) == -1) {
      a.row(k) = -a.row(k);
      inv.row(k) = -inv.row(k);
    }
  }
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    for (Eigen::Index i = 0; i < k; ++i) {
      if (a(i, k) != 0) axpy_row(i, k, a(i, k));
    }
  }
  return inv;
}

/// Product with overflow detection.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> checked_product(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw PreconditionError("matrix dimensions do not agree");
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        s = detail::checked_add(s, detail::checked_mul(Scalar(a(i, k)), Scalar(b(k, j))));
      }
      c(i, j) = s;
    }
  }
  return c;
}

bool is_prime(std::int64_t p);

/// Entrywise reduction into 0..p-1. Throws PreconditionError unless p is prime.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> matrix_mod_p(const Eigen::MatrixBase<Derived>& m,
                                                   typename Derived::Scalar p) {
  if (!is_prime(static_cast<std::int64_t>(p))) {
    throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  }
  return m.unaryExpr([p](auto x) { return ((x % p) + p) % p; });
}

/// Rows of space-separated integers, one per line. The 0x0 matrix renders as "[]".
template <typename Derived>
std::string to_text(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return "[]\n";
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace homrep
