#include "latwidth/radical.hpp"

#include <algorithm>
#include <gmp.h>
#include <sstream>

namespace latwidth {

std::string decimal6(const Rat& q) {
  using F = boost::multiprecision::number<boost::multiprecision::gmp_float<50>>;
  F f(q);
  return f.str(6);
}

std::string decimal6_sqrt(const Rat& q_squared) {
  using F = boost::multiprecision::number<boost::multiprecision::gmp_float<50>>;
  F f(q_squared);
  F r = sqrt(f);
  return r.str(6);
}

std::optional<Rat> exact_root(const Rat& base, unsigned long root) {
  if (base <= 0) throw std::domain_error("exact_root: base must be positive");
  if (root == 1) return base;
  // (p/q)^(1/r) is rational iff p and q are both perfect r-th powers
  Int p = numerator(base), q = denominator(base);
  Int rp = iroot(p, root), rq = iroot(q, root);
  if (ipow(rp, root) == p && ipow(rq, root) == q) return Rat(rp, rq);
  return std::nullopt;
}

std::pair<Rat, Rat> root_enclosure(const Rat& base, unsigned long root,
                                   unsigned long prec_bits) {
  if (base <= 0) throw std::domain_error("root_enclosure: base must be positive");
  if (auto ex = exact_root(base, root)) return {*ex, *ex};
  // N = floor((P * 2^(root*k) / Q)^(1/root)) gives N/2^k <= base^(1/root)
  Int scaled = numerator(base) * pow2(root * prec_bits) / denominator(base);
  Int n = iroot(scaled, root);
  Rat lo(n, pow2(prec_bits));
  Rat hi(n + 2, pow2(prec_bits));  // n+1 can still undershoot by the division floor
  return {lo, hi};
}

int cmp_roots(const Rat& x, unsigned long p, const Rat& y, unsigned long q) {
  if (x <= 0 || y <= 0) throw std::domain_error("cmp_roots: arguments must be positive");
  Rat lhs = rpow(x, static_cast<long>(q));
  Rat rhs = rpow(y, static_cast<long>(p));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

void RadicalExpr::add_term(const Rat& coeff, const Rat& base, unsigned long root) {
  if (coeff == 0) return;
  if (root == 0) throw std::domain_error("RadicalExpr: root must be >= 1");
  if (base <= 0) throw std::domain_error("RadicalExpr: base must be positive");
  if (auto ex = exact_root(base, root)) {
    rational_ += coeff * *ex;
    return;
  }
  terms_.push_back({coeff, base, root});
}

std::pair<Rat, Rat> RadicalExpr::enclosure(unsigned long prec_bits) const {
  Rat lo = rational_, hi = rational_;
  for (const auto& t : terms_) {
    auto [rlo, rhi] = root_enclosure(t.base, t.root, prec_bits);
    if (t.coeff >= 0) {
      lo += t.coeff * rlo;
      hi += t.coeff * rhi;
    } else {
      lo += t.coeff * rhi;
      hi += t.coeff * rlo;
    }
  }
  return {lo, hi};
}

namespace {

// sign of coeff*base^(1/root) - c, decided exactly by cross-powering
int cmp_term_vs_rational(const RadicalTerm& t, const Rat& c) {
  int ts = t.coeff > 0 ? 1 : (t.coeff < 0 ? -1 : 0);
  int cs = c > 0 ? 1 : (c < 0 ? -1 : 0);
  if (ts != cs) return ts < cs ? -1 : (ts > cs ? 1 : 0);
  if (ts == 0) return 0;
  // same sign, compare magnitudes: |coeff|^root * base vs |c|^root
  Rat lhs = rpow(abs(t.coeff), static_cast<long>(t.root)) * t.base;
  Rat rhs = rpow(abs(c), static_cast<long>(t.root));
  int mag = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  return ts > 0 ? mag : -mag;
}

}  // namespace

Int floor_radical(const RadicalExpr& e) {
  if (e.terms().empty()) return floor_rat(e.rational_part());
  for (unsigned long prec = 64; prec <= (1ul << 14); prec *= 2) {
    auto [lo, hi] = e.enclosure(prec);
    Int flo = floor_rat(lo), fhi = floor_rat(hi);
    if (flo == fhi) return flo;
    if (e.terms().size() == 1 && prec >= 256) {
      // the interval straddles fhi; decide value vs fhi exactly
      int c = cmp_term_vs_rational(e.terms()[0], Rat(fhi) - e.rational_part());
      if (c == 0) return fhi;   // value is exactly the integer fhi
      return c < 0 ? flo : fhi; // strict side resolved symbolically
    }
  }
  throw std::runtime_error(
      "floor_radical: interval narrowing could not separate a multi-radical "
      "sum from an integer");
}

}  // namespace latwidth
