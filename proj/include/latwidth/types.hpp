#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace latwidth {

// Exact scalars. Rationals are kept canonical (lowest terms, positive
// denominator) by the GMP backend; no implicit rounding anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n % d != 0 && n < 0) --t;
  return t;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

// round-half-away-from-zero, the paper's round() at .5 ties
inline Int round_half_away(const Rat& q) {
  if (q >= 0) return floor_rat(q + Rat(1, 2));
  return ceil_rat(q - Rat(1, 2));
}

inline Int ipow(const Int& b, unsigned long e) {
  return boost::multiprecision::pow(b, e);
}

inline Rat rpow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat r(ipow(numerator(q), a), ipow(denominator(q), a));
  if (e < 0) {
    if (q == 0) throw std::domain_error("rpow: zero to a negative power");
    r = Rat(1) / r;
  }
  return r;
}

inline Int pow2(unsigned long e) { return Int(1) << e; }

// floor of the n-th root of a nonnegative integer
inline Int iroot(const Int& x, unsigned long n) {
  if (x < 0) throw std::domain_error("iroot: negative radicand");
  Int r;
  mpz_root(r.backend().data(), x.backend().data(), n);
  return r;
}

inline Int norm_sq(const IntVec& v) { return v.dot(v); }
inline Rat norm_sq(const RatVec& v) { return v.dot(v); }

inline RatVec to_rat(const IntVec& v) { return v.cast<Rat>(); }
inline RatMat to_rat(const IntMat& m) { return m.cast<Rat>(); }

// display-only rendering, 6 significant digits
std::string decimal6(const Rat& q);
std::string decimal6_sqrt(const Rat& q_squared);  // sqrt(q_squared), display only

}  // namespace latwidth
