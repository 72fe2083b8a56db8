#include "nmsp/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace nmsp {

namespace {

// Euler phi
int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// dense univariate arithmetic over Q, little-endian coefficients
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

// exact division, throws if remainder nonzero
UPoly udiv_exact(UPoly a, const UPoly& b) {
  utrim(a);
  if (b.empty()) throw Error("division by zero polynomial");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    utrim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) utrim(a);
  }
  if (!a.empty()) throw Error("inexact polynomial division");
  return q;
}

// divides with remainder: a = q*b + r
void udivmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  utrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  while (a.size() >= b.size() && !b.empty()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    utrim(a);
  }
  r = a;
  utrim(q);
}

}  // namespace

std::vector<Rat> cyclotomic_polynomial(int order) {
  if (order < 1) throw SpecError("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  UPoly num(order + 1, Rat(0));
  num[0] = Rat(-1);
  num[order] = Rat(1);
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) {
      UPoly phid = cyclotomic_polynomial(d);
      num = udiv_exact(num, phid);
    }
  }
  return num;
}

CycloField::CycloField(int order) : order_(order) {
  phi_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(phi_.size()) - 1;
  if (degree_ != euler_phi(order)) throw Error("cyclotomic degree mismatch");
  // powtab_[k] = x^(degree_+k) reduced, for k in [0, degree_-2]
  if (degree_ >= 1) {
    std::vector<Rat> cur(degree_, Rat(0));
    // start with x^degree_ = -(phi_ minus leading term)
    for (int i = 0; i < degree_; ++i) cur[i] = -phi_[i];
    powtab_.push_back(cur);
    for (int k = 1; k + 1 <= degree_ - 1; ++k) {
      // multiply by x
      std::vector<Rat> nxt(degree_, Rat(0));
      Rat top = cur[degree_ - 1];
      for (int i = degree_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      nxt[0] = Rat(0);
      if (top != 0)
        for (int i = 0; i < degree_; ++i) nxt[i] += top * powtab_[0][i];
      powtab_.push_back(nxt);
      cur = nxt;
    }
  }
}

std::shared_ptr<const CycloField> CycloField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const CycloField>(new CycloField(order));
  cache[order] = f;
  return f;
}

void CycloField::reduce(std::vector<Rat>& c) const {
  for (size_t k = c.size(); k-- > static_cast<size_t>(degree_);) {
    Rat top = c[k];
    if (top == 0) continue;
    c[k] = 0;
    const auto& rep = powtab_[k - degree_];
    for (int i = 0; i < degree_; ++i) c[i] += top * rep[i];
  }
  c.resize(degree_);
}

Cyclo Cyclo::zeta(const std::shared_ptr<const CycloField>& f, long k) {
  long n = f->order();
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
  c[k] = Rat(1);
  if (static_cast<int>(c.size()) > f->degree())
    f->reduce(c);
  else
    c.resize(f->degree(), Rat(0));
  Cyclo z(f);
  z.c_ = std::move(c);
  return z;
}

void Cyclo::check_same_field(const Cyclo& o) const {
  if (f_->order() != o.f_->order()) throw Error("cyclotomic order mismatch");
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_part() const {
  if (!is_rational()) throw Error("value not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::operator-() const {
  Cyclo r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_same_field(o);
  Cyclo r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  check_same_field(o);
  Cyclo r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_same_field(o);
  size_t n = c_.size();
  if (n == 0) return *this;
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  f_->reduce(prod);
  Cyclo r(f_);
  r.c_ = std::move(prod);
  return r;
}

Cyclo Cyclo::operator*(const Rat& x) const {
  Cyclo r(*this);
  for (auto& v : r.c_) v *= x;
  return r;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw SingularValue("inverse of zero in cyclotomic field");
  // extended Euclid in Q[x] for gcd(self, Phi_N) = 1
  UPoly r0 = f_->minpoly();
  UPoly r1 = c_;
  utrim(r1);
  UPoly s0 = {};          // coefficient of self in r0 = Phi
  UPoly s1 = {Rat(1)};    // coefficient of self in r1 = self
  while (true) {
    utrim(r1);
    if (r1.size() == 1) {
      // r1 = constant = s1 * self mod Phi
      Rat inv_c = Rat(1) / r1[0];
      std::vector<Rat> res(s1.size(), Rat(0));
      for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] * inv_c;
      f_->reduce(res);
      Cyclo out(f_);
      out.c_ = std::move(res);
      return out;
    }
    UPoly q, rem;
    udivmod(r0, r1, q, rem);
    UPoly qs = umul(q, s1);
    UPoly s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    utrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo base = *this;
  Cyclo acc(f_, Rat(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

int Cyclo::cmp(const Cyclo& o) const {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = ::cmp(c_[i], o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? "+" : "");
    first = false;
    if (i == 0) {
      os << c_[i].get_str();
    } else {
      if (c_[i] == 1) {
      } else if (c_[i] == -1) {
        os << "-";
      } else {
        os << c_[i].get_str() << "*";
      }
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nmsp
