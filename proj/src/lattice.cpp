#include "latwidth/lattice.hpp"

#include <sstream>

namespace latwidth {

GSO gram_schmidt(const IntMat& b) {
  const Eigen::Index n = b.cols();
  GSO g;
  g.bstar.reserve(n);
  g.mu = RatMat::Zero(n, n);
  g.norms2.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    RatVec v = to_rat(IntVec(b.col(i)));
    for (Eigen::Index j = 0; j < i; ++j) {
      Rat m = to_rat(IntVec(b.col(i))).dot(g.bstar[j]) / g.norms2[j];
      g.mu(i, j) = m;
      v -= m * g.bstar[j];
    }
    Rat n2 = norm_sq(v);
    if (n2 == 0) {
      std::ostringstream os;
      os << "gram_schmidt: column " << i << " depends on the previous columns";
      throw std::domain_error(os.str());
    }
    g.bstar.push_back(std::move(v));
    g.norms2.push_back(std::move(n2));
  }
  return g;
}

LllCheck is_lll_reduced(const IntMat& b) {
  GSO g = gram_schmidt(b);
  const Eigen::Index n = b.cols();
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (abs(g.mu(i, j)) > Rat(1, 2)) {
        std::ostringstream os;
        os << "size condition violated: |mu(" << i << "," << j
           << ")| = " << g.mu(i, j);
        return {false, os.str()};
      }
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (g.norms2[i] > 2 * g.norms2[i + 1]) {
      std::ostringstream os;
      os << "exchange condition violated at index " << i;
      return {false, os.str()};
    }
  return {true, {}};
}

ReductionResult lll_reduce(const IntMat& b_in) {
  const Eigen::Index n = b_in.cols();
  IntMat b = b_in;
  IntMat u = IntMat::Identity(n, n);
  IntMat uinv = IntMat::Identity(n, n);

  // column op b_i -= t b_j tracks as U <- U E and U_inv <- E^{-1} U_inv
  auto shear = [&](Eigen::Index i, Eigen::Index j, const Int& t) {
    b.col(i) -= t * b.col(j);
    u.col(i) -= t * u.col(j);
    uinv.row(j) += t * uinv.row(i);
  };

  for (;;) {
    GSO g = gram_schmidt(b);
    // size-reduce every column; mu bookkeeping: subtracting t*b_j from b_i
    // changes only row i of mu (bstar is untouched)
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = i - 1; j >= 0; --j) {
        Int t = floor_rat(g.mu(i, j) + Rat(1, 2));
        if (t == 0) continue;
        shear(i, j, t);
        for (Eigen::Index l = 0; l < j; ++l) g.mu(i, l) -= Rat(t) * g.mu(j, l);
        g.mu(i, j) -= Rat(t);
      }
    Eigen::Index swap_at = -1;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (g.norms2[i] > 2 * g.norms2[i + 1]) { swap_at = i; break; }
    if (swap_at < 0) break;
    b.col(swap_at).swap(b.col(swap_at + 1));
    u.col(swap_at).swap(u.col(swap_at + 1));
    uinv.row(swap_at).swap(uinv.row(swap_at + 1));
  }
  return {b, u, uinv};
}

namespace {

// unimodular W with a^T W = (g, 0, ..., 0), g = gcd(a); gcd chain on columns
std::pair<IntMat, Int> gcd_reduce_row(const IntVec& a) {
  const Eigen::Index n = a.size();
  IntMat w = IntMat::Identity(n, n);
  IntVec g = a;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (g(i) == 0) continue;
    ExtGcd e = ext_gcd(g(0), g(i));
    Int x = g(0) / e.g, y = g(i) / e.g;
    // [[s, -y],[t, x]] has determinant s*x + t*y = 1
    IntVec c0 = e.s * w.col(0) + e.t * w.col(i);
    IntVec ci = -y * w.col(0) + x * w.col(i);
    w.col(0) = c0;
    w.col(i) = ci;
    g(0) = e.g;
    g(i) = 0;
  }
  if (g(0) < 0) { w.col(0) = -w.col(0); g(0) = -g(0); }
  return {w, g(0)};
}

}  // namespace

IntMat nullspace_basis(const IntVec& a) {
  const Eigen::Index n = a.size();
  if (n < 1) throw std::invalid_argument("nullspace_basis: empty vector");
  auto [w, g] = gcd_reduce_row(a);
  if (g != 1) throw std::domain_error("nullspace_basis: weights not coprime");
  return w.rightCols(n - 1);
}

IntVec coeff_vector(const IntVec& a, const Int& target) {
  auto [w, g] = gcd_reduce_row(a);
  if (g == 0) {
    if (target != 0) throw std::domain_error("coeff_vector: divisibility fails");
    return IntVec::Zero(a.size());
  }
  if (target % g != 0) throw std::domain_error("coeff_vector: divisibility fails");
  return IntVec((target / g) * w.col(0));
}

IntVec size_reduce_against(const IntVec& x, const IntMat& v) {
  if (v.cols() == 0) return x;
  GSO g = gram_schmidt(v);
  IntVec y = x;
  for (Eigen::Index j = v.cols() - 1; j >= 0; --j) {
    Rat c = to_rat(y).dot(g.bstar[j]) / g.norms2[j];
    Int t = round_half_away(c);
    if (t != 0) y -= t * v.col(j);
  }
  return y;
}

Certificate completeness_certificate(const IntMat& v) {
  const Eigen::Index n = v.rows(), k = v.cols();
  IntMat a = v;
  IntMat z = IntMat::Identity(n, n);
  for (Eigen::Index col = 0; col < k; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw std::domain_error("completeness_certificate: dependent columns");
    if (piv != col) { a.row(col).swap(a.row(piv)); z.row(col).swap(z.row(piv)); }
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      ExtGcd e = ext_gcd(a(col, col), a(i, col));
      Int x = a(col, col) / e.g, y = a(i, col) / e.g;
      Eigen::RowVectorX<Int> top = e.s * a.row(col) + e.t * a.row(i);
      Eigen::RowVectorX<Int> bot = -y * a.row(col) + x * a.row(i);
      a.row(col) = top;
      a.row(i) = bot;
      top = e.s * z.row(col) + e.t * z.row(i);
      bot = -y * z.row(col) + x * z.row(i);
      z.row(col) = top;
      z.row(i) = bot;
    }
    if (a(col, col) < 0) { a.row(col) = -a.row(col); z.row(col) = -z.row(col); }
  }
  // a is now [T; 0] with T upper triangular, positive diagonal
  Int dt(1);
  for (Eigen::Index i = 0; i < k; ++i) dt *= a(i, i);
  Certificate cert;
  cert.Z = z;
  if (dt != 1) return cert;  // lattice not complete
  // clear the strict upper triangle (diagonal is all ones)
  for (Eigen::Index col = k - 1; col >= 1; --col)
    for (Eigen::Index i = 0; i < col; ++i) {
      Int t = a(i, col);
      if (t == 0) continue;
      a.row(i) -= t * a.row(col);
      z.row(i) -= t * z.row(col);
    }
  cert.Z = z;
  IntMat zv = z * v;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (zv(i, j) != ((i == j) ? Int(1) : Int(0)))
        throw std::logic_error("completeness_certificate: Z*V != [I; 0]");
  // Lemma 1(2): the last n-k rows of Z are a basis of L_perp and
  // det L_perp must equal det L
  IntMat zbot = z.bottomRows(n - k);
  cert.ok = gram_det(zbot) == gram_det(IntMat(v.transpose()));
  return cert;
}

bool sublattice_det_check(const ReductionResult& r, Eigen::Index l) {
  const Eigen::Index n = r.basis.cols();
  if (l < 1 || l > n) throw std::invalid_argument("sublattice_det_check: bad index");
  IntMat bl = r.basis.leftCols(l);
  Int dl2 = gram_det(IntMat(bl.transpose()));          // (det L_l)^2
  Int d2 = gram_det(IntMat(r.basis.transpose()));      // (det L)^2
  // (det L_l)^{4n} <= 2^{l(n-l)n} (det L)^{4l}, all integers
  Int lhs = ipow(dl2, static_cast<unsigned long>(2 * n));
  Int rhs = pow2(static_cast<unsigned long>(l * (n - l) * n)) *
            ipow(d2, static_cast<unsigned long>(2 * l));
  return lhs <= rhs;
}

}  // namespace latwidth
