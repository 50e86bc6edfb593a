#include "commsplit/polynomial.hpp"

#include <sstream>

#include "commsplit/errors.hpp"

namespace commsplit {

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, Rational coefficient) {
  Polynomial p;
  if (coefficient != 0) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = std::move(coefficient);
  }
  return p;
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s == 0) throw DomainError("polynomial division by zero scalar");
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("polynomial pow with negative exponent");
  Polynomial acc = one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return k >= 0 ? *this : Polynomial();
  if (k < 0) throw DomainError("negative shift would leave polynomial ring");
  std::vector<Rational> out(coeffs_.size() + k, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!is_integral(c)) return false;
  return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

bool Polynomial::dominated_by(const Polynomial& o) const {
  int top = std::max(degree(), o.degree());
  for (int k = 0; k <= top; ++k)
    if (coeff(k) > o.coeff(k)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den,
                        const std::string& context) {
  if (den.is_zero()) throw DomainError("exact division by zero: " + context);
  if (num.is_zero()) return Polynomial();
  if (num.degree() < den.degree())
    throw ConsistencyError("exact division failed (degree drop): " + context);
  std::vector<Rational> rem = num.coefficients();
  const int dq = num.degree() - den.degree();
  std::vector<Rational> quot(dq + 1, Rational(0));
  const Rational& lead = den.coefficients().back();
  for (int k = dq; k >= 0; --k) {
    Rational q = rem[k + den.degree()] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[k + j] -= q * den.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0)
      throw ConsistencyError("exact division left a remainder: " + context);
  return Polynomial(std::move(quot));
}

}  // namespace commsplit
