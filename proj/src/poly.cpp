#include "nmsp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nmsp {

int VarSpace::var_t(int alpha) const {
  if (alpha < 1 || alpha > nt) throw Error("t-variable index out of range");
  return alpha - 1;
}

int VarSpace::var_extra(const std::string& name) const {
  for (size_t i = 0; i < extras.size(); ++i)
    if (extras[i].name == name) return nt + static_cast<int>(i);
  throw Error("unknown variable: " + name);
}

std::string VarSpace::var_name(int idx) const {
  if (idx < nt) return "t" + std::to_string(idx + 1);
  return extras[idx - nt].name;
}

std::shared_ptr<const VarSpace> VarSpace::make(int nt,
                                               std::vector<Extra> extras) {
  auto vs = std::make_shared<VarSpace>();
  vs->nt = nt;
  vs->extras = std::move(extras);
  return vs;
}

MultiPoly MultiPoly::constant(const VS& vs,
                              const std::shared_ptr<const CycloField>& f,
                              const Cyclo& c) {
  MultiPoly p(vs, f);
  if (!c.is_zero()) p.terms_[Expv(vs->count(), 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(const VS& vs,
                              const std::shared_ptr<const CycloField>& f,
                              int idx) {
  MultiPoly p(vs, f);
  Expv e(vs->count(), 0);
  e[idx] = 1;
  p.terms_[e] = Cyclo(f, Rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expv& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Cyclo MultiPoly::constant_value() const {
  if (terms_.empty()) return Cyclo(f_, Rat(0));
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Expv& e, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::truncate() {
  int n = vs_->count();
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool drop = false;
    for (int v = vs_->nt; v < n; ++v) {
      int tr = vs_->trunc_of(v);
      if (tr > 0 && it->first[v] >= tr) {
        drop = true;
        break;
      }
    }
    it = drop ? terms_.erase(it) : std::next(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(vs_, f_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expv e(e1);
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  r.truncate();
  return r;
}

MultiPoly MultiPoly::operator*(const Cyclo& c) const {
  if (c.is_zero()) return MultiPoly(vs_, f_);
  MultiPoly r(*this);
  for (auto& [e, v] : r.terms_) v = v * c;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly acc = constant(vs_, f_, Cyclo(f_, Rat(1)));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

int MultiPoly::cmp(const MultiPoly& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    int c = a->second.cmp(b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

int MultiPoly::degree(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

std::optional<int> MultiPoly::t_homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < vs_->nt; ++i) s += e[i];
    if (!d)
      d = s;
    else if (*d != s)
      return std::nullopt;
  }
  return d ? d : std::optional<int>(0);
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly r(vs_, f_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Expv e2(e);
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw Error("division by zero polynomial");
  MultiPoly rem(*this);
  MultiPoly quot(vs_, f_);
  const auto& lead = *d.terms_.rbegin();  // largest monomial in map order
  while (!rem.terms_.empty()) {
    const auto& rl = *rem.terms_.rbegin();
    Expv e(rl.first);
    bool ok = true;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] -= lead.first[i];
      if (e[i] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) return std::nullopt;
    Cyclo c = rl.second / lead.second;
    quot.add_term(e, c);
    MultiPoly m(vs_, f_);
    m.terms_[e] = c;
    rem = rem - m * d;
  }
  return quot;
}

MultiPoly MultiPoly::specialize_t(const VS& target) const {
  // target has nt == 1 and the same extras
  if (target->nt != 1) throw Error("specialize target must have one t");
  int n = vs_->nt;
  auto f = f_;
  MultiPoly out(target, f);
  for (const auto& [e, c] : terms_) {
    int tdeg = 0;
    Cyclo coef = c;
    for (int a = 1; a <= n; ++a) {
      int k = e[a - 1];
      if (k == 0) continue;
      tdeg += k;
      // t_alpha = -zeta^alpha t
      Cyclo w = (-Cyclo::zeta(f, a)).pow(k);
      coef = coef * w;
    }
    Expv e2(target->count(), 0);
    e2[0] = tdeg;
    for (size_t i = 0; i < vs_->extras.size(); ++i) e2[1 + i] = e[n + i];
    out.add_term(e2, coef);
  }
  return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  MultiPoly out(vs_, f_);
  for (const auto& [e, c] : terms_) {
    Expv e2(e);
    int k = e2[var];
    e2[var] = 0;
    MultiPoly m(vs_, f_);
    m.add_term(e2, c);
    out = out + m * value.pow(k);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vs_->var_name(static_cast<int>(i));
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool LinForm::operator==(const LinForm& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].first != o.coeffs[i].first) return false;
    if (coeffs[i].second != o.coeffs[i].second) return false;
  }
  return true;
}

bool LinForm::operator<(const LinForm& o) const {
  size_t n = std::min(coeffs.size(), o.coeffs.size());
  for (size_t i = 0; i < n; ++i) {
    if (coeffs[i].first != o.coeffs[i].first)
      return coeffs[i].first < o.coeffs[i].first;
    int c = coeffs[i].second.cmp(o.coeffs[i].second);
    if (c != 0) return c < 0;
  }
  return coeffs.size() < o.coeffs.size();
}

MultiPoly LinForm::to_poly(const VS& vs,
                           const std::shared_ptr<const CycloField>& f) const {
  MultiPoly p(vs, f);
  for (const auto& [v, c] : coeffs) {
    Expv e(vs->count(), 0);
    e[v] = 1;
    p.add_term(e, c);
  }
  return p;
}

bool LinForm::depends_only_on_t(int nt) const {
  for (const auto& [v, c] : coeffs)
    if (v >= nt) return false;
  return true;
}

std::string LinForm::str(const VS& vs) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (!first) os << "+";
    first = false;
    os << "(" << c.str() << ")" << vs->var_name(v);
  }
  return os.str();
}

std::optional<std::pair<Cyclo, LinForm>> as_linear(const MultiPoly& p) {
  if (p.is_zero()) return std::nullopt;
  LinForm lf;
  for (const auto& [e, c] : p.terms()) {
    int var = -1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] > 1 || var >= 0) return std::nullopt;
      var = static_cast<int>(i);
    }
    if (var < 0) return std::nullopt;  // constant term present
    lf.coeffs.emplace_back(var, c);
  }
  std::sort(lf.coeffs.begin(), lf.coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Cyclo scale = lf.coeffs.front().second;
  Cyclo inv = scale.inverse();
  for (auto& [v, c] : lf.coeffs) c = c * inv;
  return std::make_pair(scale, lf);
}

RatFun::RatFun(VS vs, std::shared_ptr<const CycloField> f)
    : vs_(std::move(vs)), f_(std::move(f)), num_(vs_, f_), den_scale_(f_, Rat(1)) {}

RatFun::RatFun(MultiPoly num)
    : vs_(num.space()), f_(num.field()), num_(std::move(num)),
      den_scale_(f_, Rat(1)) {}

RatFun RatFun::constant(const VS& vs, const std::shared_ptr<const CycloField>& f,
                        const Cyclo& c) {
  return RatFun(MultiPoly::constant(vs, f, c));
}

RatFun RatFun::from_rat(const VS& vs, const std::shared_ptr<const CycloField>& f,
                        const Rat& r) {
  return constant(vs, f, Cyclo(f, r));
}

RatFun RatFun::t_var(const VS& vs, const std::shared_ptr<const CycloField>& f,
                     int alpha) {
  return RatFun(MultiPoly::variable(vs, f, vs->var_t(alpha)));
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    den_scale_ = Cyclo(f_, Rat(1));
    return;
  }
  for (auto& [lf, mult] : den_) {
    MultiPoly p = lf.to_poly(vs_, f_);
    while (mult > 0) {
      auto q = num_.divide_exact(p);
      if (!q) break;
      num_ = std::move(*q);
      --mult;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(),
                            [](const auto& fm) { return fm.second == 0; }),
             den_.end());
  std::sort(den_.begin(), den_.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  RatFun r(vs_, f_);
  // common denominator
  r.den_ = den_;
  MultiPoly lhs = num_;
  MultiPoly rhs = o.num_;
  // multiply lhs by the factors o has in excess, rhs by ours
  for (const auto& [lf, m2] : o.den_) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](const auto& fm) { return fm.first == lf; });
    int m1 = (it == r.den_.end()) ? 0 : it->second;
    int mx = std::max(m1, m2);
    if (it == r.den_.end())
      r.den_.emplace_back(lf, mx);
    else
      it->second = mx;
    if (mx > m1) {
      MultiPoly p = lf.to_poly(vs_, f_).pow(mx - m1);
      lhs = lhs * p;
    }
    if (mx > m2) {
      MultiPoly p = lf.to_poly(vs_, f_).pow(mx - m2);
      rhs = rhs * p;
    }
  }
  for (const auto& [lf, m1] : den_) {
    bool in_o = std::any_of(o.den_.begin(), o.den_.end(),
                            [&](const auto& fm) { return fm.first == lf; });
    if (!in_o) rhs = rhs * lf.to_poly(vs_, f_).pow(m1);
  }
  // scales: lhs/den_scale_ + rhs/o.den_scale_
  r.num_ = lhs * o.den_scale_ + rhs * den_scale_;
  r.den_scale_ = den_scale_ * o.den_scale_;
  r.reduce();
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  RatFun r(vs_, f_);
  r.num_ = num_ * o.num_;
  r.den_scale_ = den_scale_ * o.den_scale_;
  r.den_ = den_;
  for (const auto& [lf, m] : o.den_) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](const auto& fm) { return fm.first == lf; });
    if (it == r.den_.end())
      r.den_.emplace_back(lf, m);
    else
      it->second += m;
  }
  r.reduce();
  return r;
}

RatFun RatFun::operator*(const Cyclo& c) const {
  RatFun r(*this);
  r.num_ = r.num_ * c;
  return r;
}

RatFun RatFun::operator*(const Rat& x) const {
  return *this * Cyclo(f_, x);
}

RatFun RatFun::div_linear(const Cyclo& scale, const LinForm& lf, int mult) const {
  if (scale.is_zero()) throw SingularValue("vanishing localization weight");
  RatFun r(*this);
  r.den_scale_ = r.den_scale_ * scale.pow(mult);
  auto it = std::find_if(r.den_.begin(), r.den_.end(),
                         [&](const auto& fm) { return fm.first == lf; });
  if (it == r.den_.end())
    r.den_.emplace_back(lf, mult);
  else
    it->second += mult;
  r.reduce();
  return r;
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw SingularValue("inverse of zero rational function");
  // numerator must factor as scale * monomial-of-linear-forms; handle the
  // linear and constant cases, which is all the engine produces
  RatFun r(vs_, f_);
  r.num_ = MultiPoly::constant(vs_, f_, den_scale_);
  for (const auto& [lf, m] : den_) r.num_ = r.num_ * lf.to_poly(vs_, f_).pow(m);
  if (num_.is_constant()) {
    r.den_scale_ = num_.constant_value();
    if (r.den_scale_.is_zero()) throw SingularValue("inverse of zero");
    r.num_ = r.num_ * r.den_scale_.inverse();
    r.den_scale_ = Cyclo(f_, Rat(1));
    return r;
  }
  auto lin = as_linear(num_);
  if (!lin) throw Error("inverse of non-linear numerator unsupported: " + num_.str());
  return r.div_linear(lin->first, lin->second);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun acc = constant(vs_, f_, Cyclo(f_, Rat(1)));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool RatFun::same_value(const RatFun& o) const {
  return (*this - o).is_zero();
}

bool RatFun::is_constant() const {
  return den_.empty() && num_.is_constant();
}

Cyclo RatFun::constant_value() const {
  if (!den_.empty()) throw Error("rational function is not constant");
  return num_.constant_value() * den_scale_.inverse();
}

std::optional<int> RatFun::t_homogeneous_degree() const {
  auto nd = num_.t_homogeneous_degree();
  if (!nd) return std::nullopt;
  int d = *nd;
  for (const auto& [lf, m] : den_) {
    if (!lf.depends_only_on_t(vs_->nt)) return std::nullopt;
    d -= m;
  }
  return d;
}

RatFun RatFun::specialize_t(const VS& target) const {
  RatFun r(target, f_);
  r.num_ = num_.specialize_t(target);
  r.den_scale_ = den_scale_;
  for (const auto& [lf, m] : den_) {
    MultiPoly p = lf.to_poly(vs_, f_).specialize_t(target);
    auto lin = as_linear(p);
    if (!lin) {
      if (p.is_zero())
        throw SingularValue("denominator vanishes under t-substitution: " +
                            lf.str(vs_));
      throw Error("specialized denominator not linear");
    }
    r.den_scale_ = r.den_scale_ * lin->first.pow(m);
    auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](const auto& fm) {
      return fm.first == lin->second;
    });
    if (it == r.den_.end())
      r.den_.emplace_back(lin->second, m);
    else
      it->second += m;
  }
  r.reduce();
  return r;
}

std::string RatFun::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  if (!den_.empty() || !(den_scale_ == Cyclo(f_, Rat(1)))) {
    os << " / [(" << den_scale_.str() << ")";
    for (const auto& [lf, m] : den_) {
      os << "*(" << lf.str(vs_) << ")";
      if (m > 1) os << "^" << m;
    }
    os << "]";
  }
  return os.str();
}

}  // namespace nmsp
