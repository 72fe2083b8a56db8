#include "nmsp/locexpr.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace nmsp {

UnknownMono mono_mul(const UnknownMono& a, const UnknownMono& b) {
  UnknownMono r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

LocExpr::LocExpr(RatFun known)
    : vs_(known.space()), f_(known.field()) {
  if (!known.is_zero()) terms_[{}] = std::move(known);
}

LocExpr LocExpr::constant(const VS& vs, const std::shared_ptr<const CycloField>& f,
                          const Cyclo& c) {
  return LocExpr(RatFun::constant(vs, f, c));
}

LocExpr LocExpr::from_rat(const VS& vs, const std::shared_ptr<const CycloField>& f,
                          const Rat& r) {
  return LocExpr(RatFun::from_rat(vs, f, r));
}

LocExpr LocExpr::symbol(const VS& vs, const std::shared_ptr<const CycloField>& f,
                        int atom_id) {
  LocExpr e(vs, f);
  e.terms_[{atom_id}] = RatFun::constant(vs, f, Cyclo(f, Rat(1)));
  return e;
}

bool LocExpr::is_known() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const RatFun* LocExpr::known_part() const {
  auto it = terms_.find({});
  return it == terms_.end() ? nullptr : &it->second;
}

void LocExpr::add_term(const UnknownMono& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LocExpr LocExpr::operator-() const {
  LocExpr r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LocExpr LocExpr::operator+(const LocExpr& o) const {
  LocExpr r(*this);
  if (r.terms_.empty()) {
    r.vs_ = o.vs_;
    r.f_ = o.f_;
  }
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

LocExpr LocExpr::operator-(const LocExpr& o) const { return *this + (-o); }

LocExpr LocExpr::operator*(const LocExpr& o) const {
  LocExpr r(vs_ ? vs_ : o.vs_, f_ ? f_ : o.f_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

LocExpr LocExpr::operator*(const RatFun& c) const {
  LocExpr r(vs_, f_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

LocExpr LocExpr::operator*(const Rat& x) const {
  LocExpr r(*this);
  for (auto& [m, v] : r.terms_) v = v * x;
  return r;
}

bool LocExpr::same_value(const LocExpr& o) const {
  return (*this - o).is_zero();
}

LocExpr LocExpr::specialize_t(const VS& target) const {
  LocExpr r(target, f_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.specialize_t(target));
  return r;
}

std::string LocExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!m.empty()) {
      os << "U[";
      for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << "]*";
    }
    os << c.str();
  }
  return os.str();
}

RatFun truncated_inverse(const RatFun& w, const MultiPoly& nil) {
  if (w.is_zero()) throw SingularValue("vanishing localization weight");
  // check nil is supported on nilpotent extras only
  const VS& vs = w.space();
  for (const auto& [e, c] : nil.terms()) {
    bool has_nilpotent = false;
    for (int v = vs->nt; v < vs->count(); ++v)
      if (e[v] > 0 && vs->trunc_of(v) > 0) has_nilpotent = true;
    if (!has_nilpotent)
      throw Error("truncated_inverse: non-nilpotent correction term");
  }
  RatFun winv = w.inverse();
  RatFun acc = winv;
  RatFun pw = winv;
  MultiPoly npow = nil;
  // 1/(w+n) = sum_k (-n)^k / w^(k+1)
  int guard = 0;
  while (!npow.is_zero()) {
    if (++guard > 64) throw Error("truncated_inverse failed to terminate");
    pw = pw * winv;
    RatFun term = pw * RatFun(npow);
    if (guard % 2 == 1) term = -term;
    acc = acc + term;
    npow = npow * nil;
  }
  return acc;
}

RatFun truncated_inverse(const MultiPoly& denom) {
  const VS& vs = denom.space();
  MultiPoly base(vs, denom.field());
  MultiPoly nil(vs, denom.field());
  for (const auto& [e, c] : denom.terms()) {
    bool has_nilpotent = false;
    for (int v = vs->nt; v < vs->count(); ++v)
      if (e[v] > 0 && vs->trunc_of(v) > 0) has_nilpotent = true;
    MultiPoly t(vs, denom.field());
    t.add_term(e, c);
    if (has_nilpotent)
      nil = nil + t;
    else
      base = base + t;
  }
  return truncated_inverse(RatFun(base), nil);
}

std::optional<std::pair<Cyclo, int>> as_t_monomial(const RatFun& f) {
  if (f.space()->nt != 1) return std::nullopt;
  if (f.is_zero())
    return std::make_pair(Cyclo(f.field(), Rat(0)), INT_MIN);
  if (f.num().terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *f.num().terms().begin();
  for (int v = 1; v < f.space()->count(); ++v)
    if (e[v] != 0) return std::nullopt;
  int expnum = e[0];
  int expden = 0;
  for (const auto& [lf, m] : f.den_factors()) {
    if (lf.coeffs.size() != 1 || lf.coeffs[0].first != 0) return std::nullopt;
    expden += m;
  }
  return std::make_pair(c * f.den_scale().inverse(), expnum - expden);
}

TMonomialVerdict is_t_monomial(const RatFun& specialized) {
  TMonomialVerdict v;
  auto m = as_t_monomial(specialized);
  if (!m) return v;
  v.is_monomial = true;
  v.coeff = m->first;
  v.exponent = m->second;
  return v;
}

}  // namespace nmsp
