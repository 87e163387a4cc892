#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

#include "clusterscope/numeric.hpp"

namespace clusterscope {

/// Exponent vector; entry i is the power of x_{i+1}.
using Exponent = boost::container::small_vector<std::int64_t, 8>;

/// Graded lexicographic order, larger first: higher total degree wins, then
/// the larger exponent of the earliest differing variable.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Element of Z[x_1^{+-1}, ..., x_n^{+-1}] with arbitrary-precision
/// coefficients. Zero coefficients are never stored; terms iterate leading
/// term first.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLexGreater>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const BigInt& c);
  /// x_{i+1}^power.
  static LaurentPoly variable(std::size_t nvars, std::size_t i, std::int64_t power = 1);
  static LaurentPoly monomial(Exponent e, const BigInt& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const LaurentPoly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// r with r * q == p, or nullopt when q does not divide p in the Laurent
/// ring. Throws std::domain_error if q is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// `3 * x1^2 * x2^-1 - x3 + 1`, leading term first; "0" for zero.
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string. Variables above `nvars` are rejected. Throws
/// ParseError.
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars);

/// Exact value at a point; throws std::domain_error when a variable with a
/// negative exponent is zero.
BigRational evaluate(const LaurentPoly& p, std::span<const BigRational> values);

/// Quotient of Laurent polynomials, compared by cross-multiplication.
struct RationalFn {
  LaurentPoly numerator;
  LaurentPoly denominator;

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

}  // namespace clusterscope
