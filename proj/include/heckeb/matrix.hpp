#pragma once

#include <vector>

#include "heckeb/bigfloat.hpp"

namespace heckeb {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inv(const Rational& x) { return Rational(1) / x; }
  static std::size_t cost(const Rational&) { return 1; }
};

template <>
struct ScalarOps<RatFunc> {
  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1l); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static RatFunc inv(const RatFunc& x) { return x.inverse(); }
  static std::size_t cost(const RatFunc& x) {
    return x.num().term_count() + x.den().term_count();
  }
};

template <>
struct ScalarOps<BigComplex> {
  static BigComplex zero() { return BigComplex(); }
  static BigComplex one() {
    return BigComplex::from_rational(Rational(1), 128);
  }
  static bool is_zero(const BigComplex& x) { return x.is_exact_zero(); }
  static BigComplex inv(const BigComplex& x) { return one() / x; }
  static std::size_t cost(const BigComplex&) { return 1; }
};

template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, ScalarOps<T>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ScalarOps<T>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const T& x : a_)
      if (!ScalarOps<T>::is_zero(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const T& aik = a.at(i, k);
        if (ScalarOps<T>::is_zero(aik)) continue;
        for (int j = 0; j < b.c_; ++j) {
          const T& bkj = b.at(k, j);
          if (ScalarOps<T>::is_zero(bkj)) continue;
          m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  Mat scaled(const T& c) const {
    Mat m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
    return m;
  }

 private:
  int r_, c_;
  std::vector<T> a_;
};

// Row-reduce in place (reduced row echelon form); returns the rank.  Pivot
// rows are chosen by the scalar cost heuristic among nonzero candidates.
template <class T>
int rref_inplace(Mat<T>& m, std::vector<int>* pivot_cols = nullptr) {
  using Ops = ScalarOps<T>;
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int i = rank; i < m.rows(); ++i) {
      if (Ops::is_zero(m.at(i, col))) continue;
      std::size_t c = Ops::cost(m.at(i, col));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) continue;
    if (best != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(rank, j));
    T piv = Ops::inv(m.at(rank, col));
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || Ops::is_zero(m.at(i, col))) continue;
      T f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class T>
int rank_of(Mat<T> m) {
  return rref_inplace(m);
}

// Basis of the right nullspace {x : m x = 0}, as vectors of length cols().
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
  using Ops = ScalarOps<T>;
  std::vector<int> piv;
  rref_inplace(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_piv[free_col]) continue;
    std::vector<T> v(m.cols(), Ops::zero());
    v[free_col] = Ops::one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = Ops::zero() - m.at(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T det(Mat<T> m) {
  using Ops = ScalarOps<T>;
  if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
  T d = Ops::one();
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int i = col; i < n; ++i) {
      if (Ops::is_zero(m.at(i, col))) continue;
      std::size_t c = Ops::cost(m.at(i, col));
      if (best < 0 || c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) return Ops::zero();
    if (best != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(best, j), m.at(col, j));
      d = Ops::zero() - d;
    }
    const T piv = m.at(col, col);
    d = d * piv;
    T inv = Ops::inv(piv);
    for (int i = col + 1; i < n; ++i) {
      if (Ops::is_zero(m.at(i, col))) continue;
      T f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

// Inverse; returns false when singular.
template <class T>
bool invert(const Mat<T>& m, Mat<T>& out) {
  using Ops = ScalarOps<T>;
  if (m.rows() != m.cols()) throw std::logic_error("invert of non-square matrix");
  int n = m.rows();
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Ops::one();
  }
  int rank = rref_inplace(aug);
  if (rank != n) return false;
  out = Mat<T>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return true;
}

// Incremental row-space basis kept in reduced echelon form.
template <class T>
class RowBasis {
 public:
  explicit RowBasis(int width) : width_(width) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

  // Reduce v against the basis in place; true when the residual is zero.
  bool reduce(std::vector<T>& v) const {
    using Ops = ScalarOps<T>;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T& c = v[pivots_[r]];
      if (Ops::is_zero(c)) continue;
      T f = c;
      const std::vector<T>& row = rows_[r];
      for (int j = pivots_[r]; j < width_; ++j)
        if (!Ops::is_zero(row[j])) v[j] = v[j] - f * row[j];
    }
    for (const T& x : v)
      if (!Ops::is_zero(x)) return false;
    return true;
  }

  bool contains(std::vector<T> v) const { return reduce(v); }

  // Insert v; true when it enlarged the basis.
  bool add(std::vector<T> v) {
    using Ops = ScalarOps<T>;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T& c = v[pivots_[r]];
      if (Ops::is_zero(c)) continue;
      T f = c;
      const std::vector<T>& row = rows_[r];
      for (int j = 0; j < width_; ++j)
        if (!Ops::is_zero(row[j])) v[j] = v[j] - f * row[j];
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
      if (!Ops::is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    T inv = Ops::inv(v[piv]);
    for (int j = piv; j < width_; ++j)
      if (!Ops::is_zero(v[j])) v[j] = v[j] * inv;
    // Back-eliminate the new pivot column from the existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      T c = rows_[r][piv];
      if (Ops::is_zero(c)) continue;
      for (int j = piv; j < width_; ++j)
        if (!Ops::is_zero(v[j])) rows_[r][j] = rows_[r][j] - c * v[j];
    }
    // Keep rows sorted by pivot.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

 private:
  int width_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> pivots_;
};

// ---- numeric helpers (BigComplex) ----

inline mpf_class max_abs(const Mat<BigComplex>& m) {
  mpf_class best(0.0, 128);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      mpf_class a = m.at(i, j).abs();
      if (a > best) best = a;
    }
  return best;
}

// Gaussian elimination with partial pivoting by magnitude; throws on a
// numerically singular matrix (exact zero pivot column).
inline Mat<BigComplex> numeric_inverse(Mat<BigComplex> m) {
  int n = m.rows();
  Mat<BigComplex> inv = Mat<BigComplex>::identity(n);
  for (int col = 0; col < n; ++col) {
    int best = -1;
    mpf_class best_mag(0.0, 128);
    for (int i = col; i < n; ++i) {
      mpf_class a = m.at(i, col).abs();
      if (best < 0 || a > best_mag) {
        best = i;
        best_mag = a;
      }
    }
    if (best < 0 || best_mag == 0) throw std::domain_error("numerically singular matrix");
    if (best != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(best, j), m.at(col, j));
        std::swap(inv.at(best, j), inv.at(col, j));
      }
    BigComplex piv = ScalarOps<BigComplex>::one() / m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = m.at(col, j) * piv;
      inv.at(col, j) = inv.at(col, j) * piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      BigComplex f = m.at(i, col);
      if (f.is_exact_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace heckeb
