#pragma once

// Exact multivariate Laurent-polynomial and rational-function arithmetic over
// the integers.  Everything here is immutable after construction and safe to
// share across threads.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clustercones/errors.hpp"

namespace cc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Variables

enum class VarKind : int { A = 0, X = 1, T = 2, Tau = 3, Matrix = 4 };

struct VarId {
  VarKind kind{VarKind::A};
  int a{0};  // first index (i, or l for t-vars, or row for matrix entries)
  int b{0};  // second index (j, or 0 for t-vars, or column for matrix entries)

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

VarId var_A(int i, int j);
VarId var_X(int i, int j);
VarId var_t(int l);
VarId var_tau(int j, int k);
VarId var_m(int r, int c);
std::string to_string(const VarId& v);

// ---------------------------------------------------------------------------
// Monomials and Laurent polynomials

// Sorted by VarId, no zero exponents.
using ExpVec = std::vector<std::pair<VarId, int>>;

struct Monomial {
  Int coeff{0};
  ExpVec exps;
};

ExpVec expvec_mul(const ExpVec& a, const ExpVec& b);
// Total order used for canonical term ordering: by total degree, then
// lexicographically on exponents in ascending VarId order (larger exponent
// first).  Multiplicative, hence usable for exact-division bookkeeping.
std::strong_ordering expvec_order(const ExpVec& a, const ExpVec& b);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  static LaurentPoly variable(const VarId& v, int exp = 1);
  static LaurentPoly monomial(Int coeff, ExpVec exps);
  static LaurentPoly from_terms(std::vector<Monomial> terms);  // normalizes

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;

  std::set<VarId> vars() const;
  // Integer content (gcd of coefficients); 0 for the zero polynomial.
  Int content() const;
  // Per-variable minimum exponent across all terms (only vars that appear).
  std::map<VarId, int> min_exponents() const;
  // Multiply by the monomial with the given exponents.
  LaurentPoly shifted(const ExpVec& delta) const;
  LaurentPoly divided_by_int(const Int& c) const;  // must divide exactly

  // Exact division in the Laurent ring; nullopt when not divisible.
  std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& g) const;

  Rat evaluate(const std::map<VarId, Rat>& point) const;

  std::string str() const;  // human-readable, deterministic

 private:
  // Terms in strictly descending expvec_order; no zero coefficients.
  std::vector<Monomial> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

enum class LpOp { add, sub, mul };
LaurentPoly lp_arith(LpOp op, const LaurentPoly& a, const LaurentPoly& b);

// Rename variables throughout; ids absent from the map are kept.  Renames
// may identify previously distinct variables (exponents then add up).
LaurentPoly rename_vars(const LaurentPoly& p, const std::map<VarId, VarId>& sub);

// ---------------------------------------------------------------------------
// Rational functions

// Canonical form: numerator and denominator are honest polynomials (no
// negative exponents) with no common variable factor and coprime integer
// contents; denominator's leading coefficient is positive; when the
// denominator has more than one term an exact division is attempted and
// applied if it succeeds.  Single-term denominators are kept in place.
class RationalFn {
 public:
  RationalFn() : num_(Int(0)), den_(Int(1)) {}
  explicit RationalFn(Int constant) : num_(std::move(constant)), den_(Int(1)) {}
  explicit RationalFn(LaurentPoly p) : RationalFn(std::move(p), LaurentPoly(Int(1))) {}
  RationalFn(LaurentPoly num, LaurentPoly den);  // normalizes
  static RationalFn variable(const VarId& v) {
    return RationalFn(LaurentPoly::variable(v), LaurentPoly(Int(1)));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  // Semantic equality (cross multiplication), not representation equality.
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

RationalFn rf_divide(const RationalFn& a, const RationalFn& b);
Rat evaluate(const RationalFn& f, const std::map<VarId, Rat>& point);
// Laurent-polynomial form of f when the denominator is a single term whose
// coefficient divides the numerator's content; absent otherwise.
std::optional<LaurentPoly> monomial_denominator(const RationalFn& f);

}  // namespace cc
