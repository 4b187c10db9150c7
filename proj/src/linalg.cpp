#include "polyharm/linalg.hpp"

namespace polyharm {

namespace {

// Bareiss forward pass.  Entries below each pivot are zeroed with the
// two-by-two determinant update divided by the previous pivot; over the
// rationals the division is exact arithmetic either way, but the scheme
// keeps numerators and denominators from snowballing.
void forward_eliminate(RatMatrix& m, std::vector<int>& pivot_cols) {
  const int rows = (int)m.rows(), cols = (int)m.cols();
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational p = m(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const Rational f = m(i, c);
      for (int j = c + 1; j < cols; ++j)
        m(i, j) = (p * m(i, j) - f * m(r, j)) / prev;
      m(i, c) = Rational(0);
    }
    prev = p;
    pivot_cols.push_back(c);
    ++r;
  }
}

}  // namespace

EchelonForm reduced_echelon(RatMatrix m) {
  EchelonForm ef;
  forward_eliminate(m, ef.pivot_cols);
  ef.rank = (int)ef.pivot_cols.size();
  const int cols = (int)m.cols();
  for (int r = ef.rank - 1; r >= 0; --r) {
    const int c = ef.pivot_cols[(std::size_t)r];
    const Rational inv = m(r, c).inverse();
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      const Rational f = m(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
  }
  ef.mat = std::move(m);
  return ef;
}

int rank_ff(const RatMatrix& m) {
  RatMatrix work = m;
  std::vector<int> pivot_cols;
  forward_eliminate(work, pivot_cols);
  return (int)pivot_cols.size();
}

std::optional<RatVector> solve_ff(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != b.rows()) throw Error("solve: size mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  EchelonForm ef = reduced_echelon(std::move(aug));
  RatVector x = RatVector::Zero(A.cols());
  for (int r = 0; r < ef.rank; ++r) {
    const int c = ef.pivot_cols[(std::size_t)r];
    if (c == (int)A.cols()) return std::nullopt;  // pivot in the rhs column
    x(c) = ef.mat(r, A.cols());
  }
  return x;
}

std::vector<RatVector> nullspace_ff(const RatMatrix& A) {
  EchelonForm ef = reduced_echelon(A);
  const int cols = (int)A.cols();
  std::vector<bool> is_pivot((std::size_t)cols, false);
  for (int c : ef.pivot_cols) is_pivot[(std::size_t)c] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[(std::size_t)f]) continue;
    RatVector v = RatVector::Zero(cols);
    v(f) = Rational(1);
    for (int r = 0; r < ef.rank; ++r)
      v(ef.pivot_cols[(std::size_t)r]) = -ef.mat(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace polyharm
