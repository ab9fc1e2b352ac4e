#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "liecheck/errors.hpp"
#include "liecheck/gaussian.hpp"
#include "liecheck/rational.hpp"

namespace liecheck {

using VecQ = std::vector<Rational>;
using VecG = std::vector<Gaussian>;

/// Dense row-major matrix over an exact field (Rational or Gaussian).
template <typename K>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionMismatch("matrix entry count");
  }
  /// Row-by-row construction from integer literals, for tests and tables.
  Mat(std::initializer_list<std::initializer_list<int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
      for (int v : r) a_.emplace_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == K(0))) return false;
    return true;
  }

  std::vector<K> row(std::size_t r) const {
    return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
  }
  std::vector<K> col(std::size_t c) const {
    std::vector<K> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const std::vector<K>& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void append_row(const std::vector<K>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionMismatch("append_row");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix +");
    Mat s = a;
    for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
    return s;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix -");
    Mat s = a;
    for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= b.a_[i];
    return s;
  }
  friend Mat operator-(const Mat& a) {
    Mat s = a;
    for (auto& x : s.a_) x = -x;
    return s;
  }
  friend Mat operator*(const K& s, const Mat& a) {
    Mat m = a;
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix *");
    Mat p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(r, k);
        if (x == K(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
      }
    return p;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// M · v with v in column convention.
  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply");
    std::vector<K> out(rows_, K(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!((*this)(r, c) == K(0))) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  K trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    K t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

  /// Kronecker product; index (a,b) flattens to a*cols(B)+b, matching the
  /// row-major tensor-basis convention used throughout.
  friend Mat kron(const Mat& a, const Mat& b) {
    Mat p(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ar = 0; ar < a.rows_; ++ar)
      for (std::size_t ac = 0; ac < a.cols_; ++ac) {
        if (a(ar, ac) == K(0)) continue;
        for (std::size_t br = 0; br < b.rows_; ++br)
          for (std::size_t bc = 0; bc < b.cols_; ++bc)
            p(ar * b.rows_ + br, ac * b.cols_ + bc) = a(ar, ac) * b(br, bc);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;

  template <typename K2>
  friend struct elimination;
};

using QMat = Mat<Rational>;
using GMat = Mat<Gaussian>;

// -- vector helpers -----------------------------------------------------------

template <typename K>
std::vector<K> vec_add(std::vector<K> a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector +");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <typename K>
std::vector<K> vec_sub(std::vector<K> a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector -");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <typename K>
std::vector<K> vec_scale(const K& s, std::vector<K> a) {
  for (auto& x : a) x *= s;
  return a;
}
template <typename K>
bool vec_is_zero(const std::vector<K>& a) {
  for (const auto& x : a)
    if (!(x == K(0))) return false;
  return true;
}

// -- exact elimination --------------------------------------------------------

template <typename K>
struct elimination {
  // Multiplies each row by the lcm of its entries' denominators so the
  // fraction-free recurrence runs on integral entries.
  static void clear_row_denominators(Mat<K>& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      Int l = 1;
      for (std::size_t c = 0; c < m.cols_; ++c) l = boost::multiprecision::lcm(l, row_den(m(r, c)));
      if (l == 1) continue;
      K s = K(Rational(l));
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) *= s;
    }
  }
  static Int row_den(const Rational& q) { return den(q); }
  static Int row_den(const Gaussian& z) {
    return boost::multiprecision::lcm(den(z.re), den(z.im));
  }

  static void content_accumulate(Int& g, const Rational& q) {
    g = boost::multiprecision::gcd(g, num(q));
  }
  static void content_accumulate(Int& g, const Gaussian& z) {
    g = boost::multiprecision::gcd(g, num(z.re));
    g = boost::multiprecision::gcd(g, num(z.im));
  }

  /// Divides an integral row by the gcd of its entries to bound growth.
  static void remove_content(Mat<K>& m, std::size_t r) {
    Int g = 0;
    for (std::size_t c = 0; c < m.cols_; ++c) content_accumulate(g, m(r, c));
    if (g == 0 || g == 1) return;
    K s = K(Rational(Int(1), g));
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (!(m(r, c) == K(0))) m(r, c) *= s;
  }
};

template <typename K>
struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  Mat<K> rref;
};

/// Reduced row echelon form. The forward pass is fraction-free: rows are
/// cleared of denominators, updated by integer cross-multiplication
/// (pivot * row_i - m(i,c) * row_pivot), and divided by their content after
/// each update so intermediate entries stay small. Back-substitution then
/// normalizes pivots with exact field divisions.
template <typename K>
RrefResult<K> reduced_row_echelon(Mat<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  elimination<K>::clear_row_denominators(m);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == K(0)) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    elimination<K>::remove_content(m, r);
    const K piv = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == K(0)) continue;
      const K mic = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = piv * m(i, j) - mic * m(r, j);
      m(i, c) = K(0);
      elimination<K>::remove_content(m, i);
    }
    pivots.push_back(c);
    ++r;
  }

  const std::size_t rank = pivots.size();
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = pivots[k];
    const K pv = m(k, pc);
    for (std::size_t j = pc; j < cols; ++j) m(k, j) = m(k, j) / pv;
    for (std::size_t i = 0; i < k; ++i) {
      const K f = m(i, pc);
      if (f == K(0)) continue;
      for (std::size_t j = pc; j < cols; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return {rank, std::move(pivots), std::move(m)};
}

template <typename K>
std::size_t rank_of(const Mat<K>& m) {
  return reduced_row_echelon(m).rank;
}

/// Rows span the null space {v : M v = 0}; one row per free column of M.
template <typename K>
Mat<K> kernel_basis(const Mat<K>& m) {
  auto e = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  Mat<K> out(cols - e.rank, cols);
  std::size_t k = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(k, f) = K(1);
    for (std::size_t i = 0; i < e.rank; ++i) out(k, e.pivot_cols[i]) = -e.rref(i, f);
    ++k;
  }
  return out;
}

/// One particular solution of M x = b, exactly, or nullopt when the system is
/// inconsistent (rank of the augmented matrix exceeds rank of M).
template <typename K>
std::optional<std::vector<K>> solve_linear(const Mat<K>& m, const std::vector<K>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_linear rhs length");
  Mat<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = reduced_row_echelon(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<K> x(m.cols(), K(0));
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivot_cols[i]] = e.rref(i, m.cols());
  return x;
}

/// Exact inverse, or nullopt for a singular matrix.
template <typename K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat<K>(0, 0);
  Mat<K> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = K(1);
  }
  auto e = reduced_row_echelon(std::move(aug));
  if (e.rank != n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Mat<K> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

/// Exact determinant via the fraction-free forward pass.
template <typename K>
K determinant(Mat<K> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return K(1);

  // Track the row scalings so the original determinant is recovered at the end.
  K scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < n; ++c)
      l = boost::multiprecision::lcm(l, elimination<K>::row_den(m(r, c)));
    if (l == 1) continue;
    K s = K(Rational(l));
    scale *= s;
    for (std::size_t c = 0; c < n; ++c) m(r, c) *= s;
  }

  K prev(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == K(0)) ++p;
    if (p == n) return K(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      const K mic = m(i, c);
      for (std::size_t j = c + 1; j < n; ++j)
        m(i, j) = (m(c, c) * m(i, j) - mic * m(c, j)) / prev;
      m(i, c) = K(0);
    }
    prev = m(c, c);
  }
  K d = m(n - 1, n - 1) / scale;
  return sign < 0 ? -d : d;
}

// -- subspaces ----------------------------------------------------------------

/// Linear subspace of Q^n, stored as a reduced-row-echelon basis so that two
/// subspaces are equal iff their stored bases are componentwise equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace from_rows(const QMat& rows) {
    Subspace s(rows.cols());
    auto e = reduced_row_echelon(rows);
    s.basis_ = QMat(e.rank, rows.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
      for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(r, c) = e.rref(r, c);
    s.pivots_.assign(e.pivot_cols.begin(), e.pivot_cols.begin() + e.rank);
    return s;
  }
  static Subspace full(std::size_t ambient_dim) {
    return from_rows(QMat::identity(ambient_dim));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  VecQ basis_vector(std::size_t k) const { return basis_.row(k); }

  /// Subtracts the projection onto the stored pivots; the result is zero
  /// exactly when v lies in the subspace.
  VecQ reduce(VecQ v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace reduce");
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
      const Rational f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * basis_(k, c);
    }
    return v;
  }

  bool contains(const VecQ& v) const { return vec_is_zero(reduce(v)); }

  /// Coefficients of v in the stored basis, when v belongs to the subspace.
  std::optional<VecQ> coordinates(const VecQ& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace coordinates");
    VecQ coeff(basis_.rows());
    for (std::size_t k = 0; k < basis_.rows(); ++k) coeff[k] = v[pivots_[k]];
    VecQ check(ambient_, Rational(0));
    for (std::size_t k = 0; k < basis_.rows(); ++k)
      if (coeff[k] != 0)
        for (std::size_t c = 0; c < ambient_; ++c) check[c] += coeff[k] * basis_(k, c);
    if (check != v) return std::nullopt;
    return coeff;
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace sum ambient");
    QMat rows(0, a.ambient_);
    for (std::size_t r = 0; r < a.basis_.rows(); ++r) rows.append_row(a.basis_.row(r));
    for (std::size_t r = 0; r < b.basis_.rows(); ++r) rows.append_row(b.basis_.row(r));
    return from_rows(rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

inline std::pair<std::size_t, Subspace> rank_and_kernel(const QMat& m) {
  return {rank_of(m), Subspace::from_rows(kernel_basis(m))};
}

/// Decides v ∈ S + T; on success returns coefficients (for S's basis, then
/// T's basis) whose combination reproduces v exactly.
inline std::optional<std::pair<VecQ, VecQ>> span_membership(const Subspace& s,
                                                            const Subspace& t,
                                                            const VecQ& v) {
  if (s.ambient() != t.ambient()) throw DimensionMismatch("span_membership ambients");
  if (v.size() != s.ambient()) throw DimensionMismatch("span_membership vector");
  QMat a(s.ambient(), s.dim() + t.dim());
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (std::size_t r = 0; r < s.ambient(); ++r) a(r, k) = s.basis()(k, r);
  for (std::size_t k = 0; k < t.dim(); ++k)
    for (std::size_t r = 0; r < t.ambient(); ++r) a(r, s.dim() + k) = t.basis()(k, r);
  auto x = solve_linear(a, v);
  if (!x) return std::nullopt;
  VecQ cs(x->begin(), x->begin() + s.dim());
  VecQ ct(x->begin() + s.dim(), x->end());
  return std::make_pair(std::move(cs), std::move(ct));
}

}  // namespace liecheck
