#include "dcr/value.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dcr/error.hpp"

namespace dcr {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Float:
      return "float";
    case Mode::Rational:
      return "rational";
    case Mode::Poly:
      return "poly";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "float") return Mode::Float;
  if (text == "rational") return Mode::Rational;
  if (text == "poly") return Mode::Poly;
  throw InvalidArgument("unknown arithmetic mode '" + std::string(text) + "'");
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) : coefficients_{std::move(constant)} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::symbol() { return Polynomial(std::vector<Rational>{0, 1}); }

void Polynomial::trim() {
  for (auto& c : coefficients_) c.canonicalize();
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

bool Polynomial::is_constant(const Rational& c) const {
  if (c == 0) return coefficients_.empty();
  return coefficients_.size() == 1 && coefficients_[0] == c;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double Polynomial::evaluate(double at) const {
  double acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * at + it->get_d();
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] += other.coefficients_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] -= other.coefficients_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coefficients_.empty() || other.coefficients_.empty()) return {};
  std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      out[i + j] += coefficients_[i] * other.coefficients_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += 'p';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed number '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '/' || ch == 'e' ||
          ch == 'E' || ch == '-' || ch == '+'))
      fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational out = num / den;
    out.canonicalize();
    return out;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string exp_text(text.substr(e + 1));
    if (exp_text.empty()) fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != exp_text.size()) fail();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_dot = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_dot) fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      if (seen_dot) ++fraction_digits;
    } else {
      fail();
    }
  }
  if (digits.empty()) fail();
  Rational out(mpz_class(digits, 10));
  long shift = exponent - fraction_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    out *= scale;
  else
    out /= scale;
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw std::invalid_argument("empty polynomial");

  Polynomial out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') {
      // exponent signs inside a decimal like 1e-3 belong to the number
      if ((compact[end] == 'e' || compact[end] == 'E') && end + 1 < compact.size() &&
          (compact[end + 1] == '-' || compact[end + 1] == '+'))
        ++end;
      ++end;
    }
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("empty term at offset " + std::to_string(pos));

    Rational coefficient = 1;
    std::size_t power = 0;
    auto p_at = term.find('p');
    if (p_at == std::string_view::npos) {
      coefficient = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, p_at);
      std::string_view tail = term.substr(p_at + 1);
      if (!head.empty()) {
        if (head.back() != '*')
          throw std::invalid_argument("expected '*' before p at offset " + std::to_string(pos));
        coefficient = parse_rational(head.substr(0, head.size() - 1));
      }
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2)
          throw std::invalid_argument("expected '^k' after p at offset " + std::to_string(pos));
        for (char ch : tail.substr(1))
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad exponent at offset " + std::to_string(pos));
        power = std::stoul(std::string(tail.substr(1)));
      }
    }
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = sign * coefficient;
    out = out + Polynomial(std::move(coeffs));
    pos = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prob

Prob Prob::zero(Mode mode) { return from_rational(0, mode); }
Prob Prob::one(Mode mode) { return from_rational(1, mode); }

Prob Prob::from_rational(const Rational& value, Mode mode) {
  switch (mode) {
    case Mode::Float:
      return Prob(value.get_d());
    case Mode::Rational:
      return Prob(value);
    case Mode::Poly:
      return Prob(Polynomial(value));
  }
  throw InternalError("unreachable mode");
}

Mode Prob::mode() const { return static_cast<Mode>(value_.index()); }

bool Prob::is_zero() const {
  switch (mode()) {
    case Mode::Float:
      return std::get<double>(value_) == 0.0;
    case Mode::Rational:
      return std::get<Rational>(value_) == 0;
    case Mode::Poly:
      return std::get<Polynomial>(value_).is_constant(0);
  }
  return false;
}

bool Prob::is_one() const {
  switch (mode()) {
    case Mode::Float:
      return std::get<double>(value_) == 1.0;
    case Mode::Rational:
      return std::get<Rational>(value_) == 1;
    case Mode::Poly:
      return std::get<Polynomial>(value_).is_constant(1);
  }
  return false;
}

double Prob::as_double() const {
  switch (mode()) {
    case Mode::Float:
      return std::get<double>(value_);
    case Mode::Rational:
      return std::get<Rational>(value_).get_d();
    case Mode::Poly:
      break;
  }
  throw InvalidArgument("a polynomial has no numeric value without a value for p");
}

const Rational& Prob::as_rational() const {
  if (mode() != Mode::Rational) throw InvalidArgument("value is not in rational mode");
  return std::get<Rational>(value_);
}

const Polynomial& Prob::as_polynomial() const {
  if (mode() != Mode::Poly) throw InvalidArgument("value is not in polynomial mode");
  return std::get<Polynomial>(value_);
}

namespace {

void require_same_mode(const Prob& a, const Prob& b) {
  if (a.mode() != b.mode())
    throw InvalidArgument("mixed arithmetic modes: " + std::string(to_string(a.mode())) +
                          " and " + std::string(to_string(b.mode())));
}

template <typename Op>
Prob combine(const Prob& a, const Prob& b, Op op) {
  require_same_mode(a, b);
  switch (a.mode()) {
    case Mode::Float:
      return Prob(op(a.as_double(), b.as_double()));
    case Mode::Rational:
      return Prob(Rational(op(a.as_rational(), b.as_rational())));
    case Mode::Poly:
      return Prob(op(a.as_polynomial(), b.as_polynomial()));
  }
  throw InternalError("unreachable mode");
}

}  // namespace

Prob Prob::operator+(const Prob& other) const {
  return combine(*this, other, [](const auto& x, const auto& y) { return x + y; });
}

Prob Prob::operator-(const Prob& other) const {
  return combine(*this, other, [](const auto& x, const auto& y) { return x - y; });
}

Prob Prob::operator*(const Prob& other) const {
  return combine(*this, other, [](const auto& x, const auto& y) { return x * y; });
}

Prob Prob::complement() const { return one(mode()) - *this; }

bool Prob::operator==(const Prob& other) const {
  if (mode() != other.mode()) return false;
  return value_ == other.value_;
}

Prob Prob::evaluate_at(const Rational& at) const {
  if (mode() != Mode::Poly) return *this;
  return Prob(as_polynomial().evaluate(at));
}

std::string Prob::to_string() const {
  switch (mode()) {
    case Mode::Float:
      return format_double(as_double());
    case Mode::Rational:
      return as_rational().get_str();
    case Mode::Poly:
      return as_polynomial().to_string();
  }
  return {};
}

}  // namespace dcr
