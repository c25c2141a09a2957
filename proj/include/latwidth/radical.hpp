#pragma once

#include <optional>
#include <vector>

#include "latwidth/types.hpp"

namespace latwidth {

// One summand: coeff * base^(1/root), base > 0 rational, root >= 1.
struct RadicalTerm {
  Rat coeff;
  Rat base;
  unsigned long root = 1;
};

// A sum of radical terms plus a folded rational part. Terms whose radical
// resolves to a rational are folded on insertion, so terms() holds only
// genuinely irrational summands.
class RadicalExpr {
 public:
  RadicalExpr() = default;
  explicit RadicalExpr(const Rat& r) : rational_(r) {}

  void add_rational(const Rat& r) { rational_ += r; }
  void add_term(const Rat& coeff, const Rat& base, unsigned long root);

  const Rat& rational_part() const { return rational_; }
  const std::vector<RadicalTerm>& terms() const { return terms_; }

  // certified rational enclosure [lo, hi] of the value, width <= 2^-prec_bits per term
  std::pair<Rat, Rat> enclosure(unsigned long prec_bits) const;

 private:
  Rat rational_;
  std::vector<RadicalTerm> terms_;
};

// exact rational value of base^(1/root) when one exists
std::optional<Rat> exact_root(const Rat& base, unsigned long root);

// certified enclosure of base^(1/root) for base > 0
std::pair<Rat, Rat> root_enclosure(const Rat& base, unsigned long root,
                                   unsigned long prec_bits);

// order of x^(1/p) versus y^(1/q) for positive rationals, by cross-powering
// x^q against y^p; returns -1, 0, or +1
int cmp_roots(const Rat& x, unsigned long p, const Rat& y, unsigned long q);

// exact floor via adaptive interval narrowing; resolves values that are
// provably rational directly and falls back to an exact boundary test for
// single-radical expressions
Int floor_radical(const RadicalExpr& e);

}  // namespace latwidth
