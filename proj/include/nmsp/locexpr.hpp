#ifndef NMSP_LOCEXPR_HPP
#define NMSP_LOCEXPR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nmsp/poly.hpp"

namespace nmsp {

// A product of unknown correlator symbols, by registry id, sorted. The empty
// product is the known (symbol-free) part of an expression.
using UnknownMono = std::vector<int>;

UnknownMono mono_mul(const UnknownMono& a, const UnknownMono& b);

// Localization expression: a linear combination of unknown-symbol products
// with exact rational-function coefficients. Coefficients never contain
// unknowns themselves.
class LocExpr {
 public:
  LocExpr() = default;
  LocExpr(VS vs, std::shared_ptr<const CycloField> f)
      : vs_(std::move(vs)), f_(std::move(f)) {}
  explicit LocExpr(RatFun known);

  static LocExpr constant(const VS& vs, const std::shared_ptr<const CycloField>& f,
                          const Cyclo& c);
  static LocExpr from_rat(const VS& vs, const std::shared_ptr<const CycloField>& f,
                          const Rat& r);
  static LocExpr symbol(const VS& vs, const std::shared_ptr<const CycloField>& f,
                        int atom_id);

  const VS& space() const { return vs_; }
  const std::shared_ptr<const CycloField>& field() const { return f_; }
  const std::map<UnknownMono, RatFun>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_known() const;  // no unknown symbols
  const RatFun* known_part() const;  // nullptr if absent

  void add_term(const UnknownMono& m, const RatFun& c);

  LocExpr operator-() const;
  LocExpr operator+(const LocExpr& o) const;
  LocExpr operator-(const LocExpr& o) const;
  LocExpr operator*(const LocExpr& o) const;
  LocExpr operator*(const RatFun& c) const;
  LocExpr operator*(const Rat& r) const;

  bool same_value(const LocExpr& o) const;

  LocExpr specialize_t(const VS& target) const;

  std::string str() const;

 private:
  VS vs_;
  std::shared_ptr<const CycloField> f_;
  std::map<UnknownMono, RatFun> terms_;
};

// Exact finite geometric expansion of 1/(w + nil), where w is free of the
// nilpotent variables and invertible, and nil is a polynomial supported on
// nilpotent extras. Terminates because nil is nilpotent.
RatFun truncated_inverse(const RatFun& w, const MultiPoly& nil);

// Splits a polynomial into (part free of nilpotent extras, rest) and expands;
// convenience form matching a 1/(x + h)-style call.
RatFun truncated_inverse(const MultiPoly& denom);

// After specialization the only denominators are powers of t; a value is a
// t-monomial when the numerator is a single term. Returns (coefficient,
// exponent); zero reports exponent INT_MIN.
std::optional<std::pair<Cyclo, int>> as_t_monomial(const RatFun& f);

struct TMonomialVerdict {
  bool is_monomial = false;
  int exponent = 0;  // INT_MIN for the zero value
  Cyclo coeff;
};
TMonomialVerdict is_t_monomial(const RatFun& specialized);

}  // namespace nmsp

#endif
