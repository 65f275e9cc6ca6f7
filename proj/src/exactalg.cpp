#include "clustercones/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace cc {

// ---------------------------------------------------------------------------
// VarId

VarId var_A(int i, int j) { return VarId{VarKind::A, i, j}; }
VarId var_X(int i, int j) { return VarId{VarKind::X, i, j}; }
VarId var_t(int l) { return VarId{VarKind::T, l, 0}; }
VarId var_tau(int j, int k) { return VarId{VarKind::Tau, j, k}; }
VarId var_m(int r, int c) { return VarId{VarKind::Matrix, r, c}; }

std::string to_string(const VarId& v) {
  std::ostringstream os;
  switch (v.kind) {
    case VarKind::A:
      os << "A[" << v.a << ";" << v.b << "]";
      break;
    case VarKind::X:
      os << "X[" << v.a << ";" << v.b << "]";
      break;
    case VarKind::T:
      os << "t[" << v.a << "]";
      break;
    case VarKind::Tau:
      os << "tau[" << v.a << ";" << v.b << "]";
      break;
    case VarKind::Matrix:
      os << "m[" << v.a << "," << v.b << "]";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exponent vectors

ExpVec expvec_mul(const ExpVec& a, const ExpVec& b) {
  ExpVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

static long long total_degree(const ExpVec& e) {
  long long d = 0;
  for (const auto& [v, k] : e) d += k;
  return d;
}

std::strong_ordering expvec_order(const ExpVec& a, const ExpVec& b) {
  long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da <=> db;
  // Lex on ascending VarId; a *larger* exponent on the earliest differing
  // variable ranks higher.  Missing variable = exponent 0.
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && (j == b.size() || a[i].first < b[j].first)) {
      if (a[i].second != 0) return a[i].second <=> 0;
      ++i;
    } else if (j < b.size() && (i == a.size() || b[j].first < a[i].first)) {
      if (b[j].second != 0) return 0 <=> b[j].second;
      ++j;
    } else {
      if (a[i].second != b[j].second) return a[i].second <=> b[j].second;
      ++i, ++j;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Int constant) {
  if (constant != 0) terms_.push_back(Monomial{std::move(constant), {}});
}

LaurentPoly LaurentPoly::variable(const VarId& v, int exp) {
  LaurentPoly p;
  if (exp == 0) return LaurentPoly(Int(1));
  p.terms_.push_back(Monomial{Int(1), ExpVec{{v, exp}}});
  return p;
}

LaurentPoly LaurentPoly::monomial(Int coeff, ExpVec exps) {
  return from_terms({Monomial{std::move(coeff), std::move(exps)}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Monomial> terms) {
  // Sort descending, merge equal exponent vectors, drop zeros.
  std::sort(terms.begin(), terms.end(), [](const Monomial& x, const Monomial& y) {
    return expvec_order(x.exps, y.exps) == std::strong_ordering::greater;
  });
  LaurentPoly p;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() &&
        expvec_order(p.terms_.back().exps, t.exps) == std::strong_ordering::equal) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.empty());
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  // Merge two sorted term lists.
  std::vector<Monomial> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto ord = expvec_order(a.terms_[i].exps, b.terms_[j].exps);
    if (ord == std::strong_ordering::greater) {
      out.push_back(a.terms_[i++]);
    } else if (ord == std::strong_ordering::less) {
      out.push_back(b.terms_[j++]);
    } else {
      Int c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.push_back(Monomial{std::move(c), a.terms_[i].exps});
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Monomial> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      prods.push_back(Monomial{ta.coeff * tb.coeff, expvec_mul(ta.exps, tb.exps)});
  return LaurentPoly::from_terms(std::move(prods));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (a.terms_[i].exps != b.terms_[i].exps) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc(Int(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

std::set<VarId> LaurentPoly::vars() const {
  std::set<VarId> out;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.exps) out.insert(v);
  return out;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

std::map<VarId, int> LaurentPoly::min_exponents() const {
  std::map<VarId, int> mins;
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      for (const auto& [v, e] : t.exps) mins[v] = e;
      first = false;
      continue;
    }
    // A variable absent from a term has exponent 0 there.
    for (auto it = mins.begin(); it != mins.end();) {
      auto found = std::find_if(t.exps.begin(), t.exps.end(),
                                [&](const auto& p) { return p.first == it->first; });
      int e = (found == t.exps.end()) ? 0 : found->second;
      it->second = std::min(it->second, e);
      ++it;
    }
    for (const auto& [v, e] : t.exps) {
      if (!mins.count(v)) mins[v] = std::min(0, e);
    }
  }
  for (auto it = mins.begin(); it != mins.end();) {
    if (it->second == 0)
      it = mins.erase(it);
    else
      ++it;
  }
  return mins;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& delta) const {
  if (delta.empty()) return *this;
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    p.terms_.push_back(Monomial{t.coeff, expvec_mul(t.exps, delta)});
  // A monomial shift preserves the term order.
  return p;
}

LaurentPoly LaurentPoly::divided_by_int(const Int& c) const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Monomial{t.coeff / c, t.exps});
  return p;
}

// Strip per-variable minimum exponents so the result is an honest polynomial
// with at least one term not divisible by each variable.
static LaurentPoly strip_min_exps(const LaurentPoly& f, ExpVec* stripped) {
  auto mins = f.min_exponents();
  stripped->clear();
  if (mins.empty()) return f;
  ExpVec inv;
  for (const auto& [v, e] : mins) {
    stripped->emplace_back(v, e);
    inv.emplace_back(v, -e);
  }
  return f.shifted(inv);
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& g) const {
  if (g.is_zero()) throw DivisionByZero("exact division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // Reduce to honest-polynomial division: f/g = x^(mf-mg) * fhat/ghat where
  // fhat, ghat have all per-variable min exponents stripped.  fhat/ghat is
  // then an ordinary multivariate division whose quotient, if exact, has no
  // negative exponents, so the lead-term loop below terminates.
  ExpVec mf, mg;
  LaurentPoly fhat = strip_min_exps(*this, &mf);
  LaurentPoly ghat = strip_min_exps(g, &mg);
  std::vector<Monomial> quot;
  LaurentPoly rem = fhat;
  const Monomial& glead = ghat.terms_.front();
  while (!rem.is_zero()) {
    const Monomial& rlead = rem.terms_.front();
    if (rlead.coeff % glead.coeff != 0) return std::nullopt;
    // Quotient monomial exponents must be nonnegative across the board.
    ExpVec q = expvec_mul(rlead.exps, [&] {
      ExpVec neg = glead.exps;
      for (auto& [v, e] : neg) e = -e;
      return neg;
    }());
    for (const auto& [v, e] : q)
      if (e < 0) return std::nullopt;
    Monomial qm{rlead.coeff / glead.coeff, q};
    quot.push_back(qm);
    LaurentPoly qp;
    qp.terms_.push_back(qm);
    rem = rem - qp * ghat;
  }
  LaurentPoly q = LaurentPoly::from_terms(std::move(quot));
  // Reapply the monomial part: mf - mg.
  ExpVec shift = mf;
  for (auto& [v, e] : mg) shift = expvec_mul(shift, ExpVec{{v, -e}});
  return q.shifted(shift);
}

Rat LaurentPoly::evaluate(const std::map<VarId, Rat>& point) const {
  Rat acc = 0;
  for (const auto& t : terms_) {
    Rat m(t.coeff);
    for (const auto& [v, e] : t.exps) {
      auto it = point.find(v);
      if (it == point.end()) throw UnboundVariable("unbound variable " + to_string(v));
      if (it->second == 0 && e < 0)
        throw DivisionByZero("negative power of zero at " + to_string(v));
      Rat base = it->second;
      int k = e < 0 ? -e : e;
      Rat pw = 1;
      while (k) {
        if (k & 1) pw *= base;
        base *= base;
        k >>= 1;
      }
      if (e < 0) {
        if (pw == 0) throw DivisionByZero("negative power of zero at " + to_string(v));
        pw = Rat(1) / pw;
      }
      m *= pw;
    }
    acc += m;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Int c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed_coeff = false;
    if (c != 1 || t.exps.empty()) {
      os << c;
      printed_coeff = true;
    }
    for (size_t k = 0; k < t.exps.size(); ++k) {
      if (printed_coeff || k > 0) os << "*";
      os << to_string(t.exps[k].first);
      if (t.exps[k].second != 1) os << "^" << t.exps[k].second;
    }
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_arith(LpOp op, const LaurentPoly& a, const LaurentPoly& b) {
  switch (op) {
    case LpOp::add:
      return a + b;
    case LpOp::sub:
      return a - b;
    case LpOp::mul:
      return a * b;
  }
  throw Error("unreachable");
}

LaurentPoly rename_vars(const LaurentPoly& p, const std::map<VarId, VarId>& sub) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size());
  for (const auto& m : p.terms()) {
    std::map<VarId, int> acc;
    for (const auto& [v, e] : m.exps) {
      auto it = sub.find(v);
      acc[it == sub.end() ? v : it->second] += e;
    }
    ExpVec exps;
    for (const auto& [v, e] : acc)
      if (e != 0) exps.emplace_back(v, e);
    terms.push_back({m.coeff, std::move(exps)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(Int(1));
    return;
  }
  // Shift both parts by -min(min_num, min_den) per variable (a part that
  // does not attain a nonzero minimum contributes 0).  This simultaneously
  // clears negative exponents and cancels the common monomial factor,
  // leaving honest polynomials that share no variable factor.
  auto mn = num.min_exponents();
  auto md = den.min_exponents();
  ExpVec shift;
  {
    std::map<VarId, int> combined;
    for (const auto& [v, e] : mn) combined[v] = std::min(e, 0);
    for (const auto& [v, e] : md) {
      auto it = combined.find(v);
      int other = mn.count(v) ? mn.at(v) : 0;
      int c = std::min(other, e);
      if (it == combined.end())
        combined[v] = c;
      else
        it->second = c;
    }
    for (const auto& [v, e] : combined)
      if (e != 0) shift.emplace_back(v, -e);
  }
  num = num.shifted(shift);
  den = den.shifted(shift);
  // Integer content.
  Int cn = num.content(), cd = den.content();
  Int g = boost::multiprecision::gcd(cn, cd);
  if (g > 1) {
    num = num.divided_by_int(g);
    den = den.divided_by_int(g);
  }
  // Attempt exact division only when the denominator is not a monomial; the
  // single-term case is kept as-is (callers can ask for the Laurent form).
  if (den.size() >= 2) {
    if (auto q = num.divided_exactly_by(den)) {
      num = *q;
      den = LaurentPoly(Int(1));
      // The quotient can have negative exponents; re-normalize into
      // honest-poly / monomial form.
      auto mq = num.min_exponents();
      ExpVec up, dn;
      for (const auto& [v, e] : mq) {
        if (e < 0) {
          up.emplace_back(v, -e);
          dn.emplace_back(v, -e);
        }
      }
      if (!up.empty()) {
        num = num.shifted(up);
        den = den.shifted(dn);
      }
    }
  }
  // Positive leading coefficient in the denominator.
  if (den.terms().front().coeff < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFn::str() const {
  if (den_ == LaurentPoly(Int(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn rf_divide(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DivisionByZero("rational division by zero");
  return RationalFn(a.num() * b.den(), a.den() * b.num());
}

Rat evaluate(const RationalFn& f, const std::map<VarId, Rat>& point) {
  Rat d = f.den().evaluate(point);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  return f.num().evaluate(point) / d;
}

std::optional<LaurentPoly> monomial_denominator(const RationalFn& f) {
  if (f.num().is_zero()) return LaurentPoly();
  if (f.den().size() != 1) return std::nullopt;
  const Monomial& d = f.den().terms().front();
  if (d.coeff != 1) {
    for (const auto& t : f.num().terms())
      if (t.coeff % d.coeff != 0) return std::nullopt;
  }
  ExpVec inv = d.exps;
  for (auto& [v, e] : inv) e = -e;
  LaurentPoly out = f.num().shifted(inv);
  if (d.coeff != 1) out = out.divided_by_int(d.coeff);
  return out;
}

}  // namespace cc
