#ifndef NMSP_POLY_HPP
#define NMSP_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nmsp/cyclo.hpp"

namespace nmsp {

// Variable space: the equivariant parameters t_1..t_N first, then optional
// named extras (h for the ambient hyperplane class with h^5 = 0, or a free
// variable for identity checks). Extras with trunc > 0 are nilpotent:
// monomials reaching the truncation order are dropped on multiplication.
struct VarSpace {
  int nt = 0;
  struct Extra {
    std::string name;
    int trunc = 0;  // 0 = no truncation
  };
  std::vector<Extra> extras;

  int count() const { return nt + static_cast<int>(extras.size()); }
  int var_t(int alpha) const;            // alpha in [1, nt]
  int var_extra(const std::string&) const;
  std::string var_name(int idx) const;
  int trunc_of(int idx) const {
    return idx < nt ? 0 : extras[idx - nt].trunc;
  }

  static std::shared_ptr<const VarSpace> make(int nt,
                                              std::vector<Extra> extras = {});
};

using VS = std::shared_ptr<const VarSpace>;

using Expv = std::vector<int>;  // exponent vector, length vs->count()

// Sparse multivariate polynomial over Q(zeta).
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(VS vs, std::shared_ptr<const CycloField> f)
      : vs_(std::move(vs)), f_(std::move(f)) {}

  static MultiPoly constant(const VS& vs,
                            const std::shared_ptr<const CycloField>& f,
                            const Cyclo& c);
  static MultiPoly variable(const VS& vs,
                            const std::shared_ptr<const CycloField>& f,
                            int idx);

  const VS& space() const { return vs_; }
  const std::shared_ptr<const CycloField>& field() const { return f_; }
  const std::map<Expv, Cyclo>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclo constant_value() const;  // requires no variables present

  void add_term(const Expv& e, const Cyclo& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Cyclo& c) const;
  MultiPoly pow(int e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  int cmp(const MultiPoly& o) const;

  int degree(int var) const;
  int total_degree() const;
  bool depends_on(int var) const { return degree(var) > 0; }
  // homogeneous total degree in the t-variables only, or nullopt
  std::optional<int> t_homogeneous_degree() const;

  // coefficient of var^k, as a polynomial in the remaining variables
  MultiPoly coeff_of(int var, int k) const;

  // exact division; returns nullopt when not divisible
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  // substitute t_alpha -> -zeta_N^alpha * t into a polynomial, mapping into
  // a 1-t space with the same extras (the Convention of the theory).
  MultiPoly specialize_t(const VS& target) const;

  // substitute an extra variable by a polynomial (used for tests)
  MultiPoly substitute(int var, const MultiPoly& value) const;

  std::string str() const;

 private:
  void truncate();
  VS vs_;
  std::shared_ptr<const CycloField> f_;
  std::map<Expv, Cyclo> terms_;
};

// A normalized linear form sum_i c_i * v_i (no constant term: everything in
// the engine is homogeneous). Normalization: first nonzero coefficient is 1;
// the stripped scale is returned separately.
struct LinForm {
  std::vector<std::pair<int, Cyclo>> coeffs;  // sorted by var index
  bool operator==(const LinForm& o) const;
  bool operator<(const LinForm& o) const;
  MultiPoly to_poly(const VS& vs, const std::shared_ptr<const CycloField>& f) const;
  bool depends_only_on_t(int nt) const;
  std::string str(const VS& vs) const;
};

// Attempts to read a polynomial as scale * linear form.
std::optional<std::pair<Cyclo, LinForm>> as_linear(const MultiPoly& p);

// Rational function num / (scale * prod lf_i^m_i), with the denominator kept
// in factored form; every denominator arising in the localization formulas is
// a product of linear forms in the t-variables.
class RatFun {
 public:
  RatFun() = default;
  RatFun(VS vs, std::shared_ptr<const CycloField> f);
  explicit RatFun(MultiPoly num);

  static RatFun constant(const VS& vs, const std::shared_ptr<const CycloField>& f,
                         const Cyclo& c);
  static RatFun from_rat(const VS& vs, const std::shared_ptr<const CycloField>& f,
                         const Rat& r);
  static RatFun t_var(const VS& vs, const std::shared_ptr<const CycloField>& f,
                      int alpha);

  const VS& space() const { return vs_; }
  const std::shared_ptr<const CycloField>& field() const { return f_; }
  const MultiPoly& num() const { return num_; }
  const Cyclo& den_scale() const { return den_scale_; }
  const std::vector<std::pair<LinForm, int>>& den_factors() const {
    return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator*(const Cyclo& c) const;
  RatFun operator*(const Rat& r) const;
  // divide by scale*linform (the only inverses the engine needs); a general
  // inverse exists for polynomial numerators that factor as a single term
  RatFun div_linear(const Cyclo& scale, const LinForm& lf, int mult = 1) const;
  RatFun inverse() const;  // requires num to be scale * prod of linear forms
  RatFun pow(int e) const;

  bool same_value(const RatFun& o) const;  // exact equality as functions
  bool is_constant() const;
  Cyclo constant_value() const;

  // homogeneity degree in t-variables (num assumed homogeneous; throws
  // otherwise); denominator factors are all homogeneous of degree 1
  std::optional<int> t_homogeneous_degree() const;

  RatFun specialize_t(const VS& target) const;

  std::string str() const;

 private:
  void reduce();
  VS vs_;
  std::shared_ptr<const CycloField> f_;
  MultiPoly num_;
  Cyclo den_scale_;
  std::vector<std::pair<LinForm, int>> den_;  // sorted by LinForm order
};

}  // namespace nmsp

#endif
