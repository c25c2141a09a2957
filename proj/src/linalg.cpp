#include "latwidth/linalg.hpp"

namespace latwidth {

Int det_int(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_int: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Int gram_det(const IntMat& p) {
  IntMat g = p * p.transpose();
  return det_int(g);
}

RatMat inverse_rational(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse_rational: matrix not square");
  const Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (a(i, k) != 0) { piv = i; break; }
    if (piv < 0) throw std::domain_error("inverse_rational: singular matrix");
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      inv.row(k).swap(inv.row(piv));
    }
    Rat d = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMat inverse_rational(const IntMat& m) { return inverse_rational(to_rat(m)); }

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  const Eigen::Index m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_rational: dimension mismatch");
  RatMat aug(m, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m; ++i)
      if (aug(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) aug.row(row).swap(aug.row(piv));
    Rat d = aug(row, col);
    for (Eigen::Index j = col; j <= n; ++j) aug(row, j) /= d;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      Rat f = aug(i, col);
      for (Eigen::Index j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (Eigen::Index i = row; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;
  RatVec x = RatVec::Zero(n);
  for (Eigen::Index i = 0; i < row; ++i) x(pivot_col[i]) = aug(i, n);
  return x;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s(1), s(0), old_t(0), t(1);
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine for the Bezout recurrence
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

Int gcd_vec(const IntVec& v) {
  Int g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

}  // namespace latwidth
