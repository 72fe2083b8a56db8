#ifndef NMSP_CYCLO_HPP
#define NMSP_CYCLO_HPP

#include <memory>
#include <string>
#include <vector>

#include "nmsp/rational.hpp"

namespace nmsp {

// The cyclotomic field Q(zeta_N), elements written in the power basis
// 1, x, ..., x^(phi(N)-1) of Q[x]/Phi_N(x). Exact cancellation tests
// (zero-testing sums of roots of unity) are the whole point, so the
// representation is the quotient ring, never complex approximations.
class CycloField {
 public:
  // Shared, cached context per order N.
  static std::shared_ptr<const CycloField> get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const std::vector<Rat>& minpoly() const { return phi_; }

  // Reduces an arbitrary-degree coefficient vector mod Phi_N in place.
  void reduce(std::vector<Rat>& c) const;

 private:
  explicit CycloField(int order);
  int order_;
  int degree_;
  std::vector<Rat> phi_;  // monic, length degree_+1
  // x^(degree_+k) mod Phi_N for k = 0 .. degree_-2
  std::vector<std::vector<Rat>> powtab_;
};

// Computes Phi_N by the recursion  x^N - 1 = prod_{d | N} Phi_d.
std::vector<Rat> cyclotomic_polynomial(int order);

class Cyclo {
 public:
  Cyclo() : f_(CycloField::get(1)), c_(1, Rat(0)) {}
  explicit Cyclo(std::shared_ptr<const CycloField> f)
      : f_(std::move(f)), c_(f_->degree(), Rat(0)) {}
  Cyclo(std::shared_ptr<const CycloField> f, Rat r)
      : f_(std::move(f)), c_(f_->degree(), Rat(0)) {
    c_[0] = std::move(r);
  }

  static Cyclo from_rat(const std::shared_ptr<const CycloField>& f, const Rat& r) {
    return Cyclo(f, r);
  }
  // zeta_N^k
  static Cyclo zeta(const std::shared_ptr<const CycloField>& f, long k);

  const std::shared_ptr<const CycloField>& field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;         // lies in Q
  Rat rational_part() const;        // requires is_rational()

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const Rat& r) const;
  Cyclo inverse() const;  // throws SingularValue on zero
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }
  Cyclo pow(long e) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // total order for canonical container keys
  int cmp(const Cyclo& o) const;

  std::string str() const;  // e.g. "2/3+1/5*z^2"

 private:
  void check_same_field(const Cyclo& o) const;
  std::shared_ptr<const CycloField> f_;
  std::vector<Rat> c_;
};

inline Cyclo operator*(const Rat& r, const Cyclo& c) { return c * r; }

}  // namespace nmsp

#endif
