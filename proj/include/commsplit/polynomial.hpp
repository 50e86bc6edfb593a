#pragma once

#include <string>
#include <vector>

#include "commsplit/numeric.hpp"

namespace commsplit {

/// Univariate polynomial in t with exact rational coefficients, stored
/// densely by degree. Every Poincaré-type series in the toolkit is one of
/// these; no floating point enters any arithmetic path.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial monomial(int degree, Rational coefficient = Rational(1));

  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int e) const;
  /// Multiply by t^k.
  Polynomial shifted(int k) const;

  Rational evaluate(const Rational& x) const;
  Rational sum_of_coefficients() const { return evaluate(Rational(1)); }

  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  /// Coefficientwise <=; both polynomials compared as infinite sequences.
  bool dominated_by(const Polynomial& o) const;

  /// Renders like "1 + 2*t + 5*t^4"; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact quotient num/den. Throws ConsistencyError mentioning `context`
/// if the division leaves a remainder.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den,
                        const std::string& context);

}  // namespace commsplit
