#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dcr {

using Rational = mpq_class;

/// Arithmetic used for every probability carried by an instance.
enum class Mode { Float, Rational, Poly };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Univariate polynomial in the formal reliability symbol `p`, exact
/// rational coefficients stored lowest degree first. Trailing zero
/// coefficients are never stored, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial symbol();

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_constant(const Rational& c) const;

  Rational evaluate(const Rational& at) const;
  double evaluate(double at) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const = default;

  /// Human-readable form such as `p^2+p^5-p^6`; parseable by parse_polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Parses sums of terms `[c*]p[^k]` or constants (`c` integer, decimal or
/// num/den). Throws std::invalid_argument with an offset on malformed text.
Polynomial parse_polynomial(std::string_view text);

/// Parses `1`, `0`, `0.25`, `3/4` or `1e-3` exactly.
Rational parse_rational(std::string_view text);

/// A probability under one of the three arithmetic modes. Binary operations
/// require both operands to share a mode.
class Prob {
 public:
  Prob() : value_(0.0) {}
  explicit Prob(double v) : value_(v) {}
  explicit Prob(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }
  explicit Prob(Polynomial v) : value_(std::move(v)) {}

  static Prob zero(Mode mode);
  static Prob one(Mode mode);
  /// Converts an exact rational into the given mode.
  static Prob from_rational(const Rational& value, Mode mode);

  Mode mode() const;
  bool is_zero() const;
  bool is_one() const;
  /// Strictly between 0 and 1 (for polynomials: neither constant 0 nor 1).
  bool is_imperfect() const { return !is_zero() && !is_one(); }

  double as_double() const;
  const Rational& as_rational() const;
  const Polynomial& as_polynomial() const;

  Prob operator+(const Prob& other) const;
  Prob operator-(const Prob& other) const;
  Prob operator*(const Prob& other) const;
  Prob& operator+=(const Prob& other) { return *this = *this + other; }
  Prob& operator*=(const Prob& other) { return *this = *this * other; }
  /// 1 - this
  Prob complement() const;

  /// Exact equality in rational/poly modes; bitwise value equality in float.
  bool operator==(const Prob& other) const;

  /// Substitutes p = at in polynomial mode; rationals pass through.
  Prob evaluate_at(const Rational& at) const;

  /// `0.26562500000000000`, `17/64`, or `p^2+p^5-p^6`.
  std::string to_string() const;

 private:
  std::variant<double, Rational, Polynomial> value_;
};

/// 17 significant digits, enough to round-trip a binary64.
std::string format_double(double value);

}  // namespace dcr
