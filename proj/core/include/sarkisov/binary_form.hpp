// Homogeneous binary forms over Q: exact arithmetic, squarefree structure,
// odd part, and root statistics over the algebraic closure (no factorization
// into irreducibles).
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarkisov {

class form_error : public std::runtime_error {
 public:
  explicit form_error(const std::string& what) : std::runtime_error(what) {}
};

// Dense coefficient list c_0..c_d of sum c_i * u0^(d-i) * u1^i.
// The zero form has an empty coefficient list and no degree.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<mpq_class> coeffs);

  static BinaryForm zero() { return BinaryForm(); }
  static BinaryForm constant(const mpq_class& c);
  // q*u0 - p*u1, the linear form vanishing at [p:q].
  static BinaryForm linear(const mpq_class& u0_coeff, const mpq_class& u1_coeff);
  static BinaryForm monomial(const mpq_class& c, int deg_u0, int deg_u1);

  bool is_zero() const { return c_.empty(); }
  // Degree as a homogeneous form; throws on the zero form.
  int degree() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }

  bool is_constant() const { return !is_zero() && degree() == 0; }

  // Integer coefficients with gcd 1 and positive first nonzero coefficient.
  BinaryForm primitive() const;

  BinaryForm operator*(const BinaryForm& other) const;
  BinaryForm pow(int e) const;
  bool operator==(const BinaryForm& other) const { return c_ == other.c_; }

  std::string str() const;

 private:
  std::vector<mpq_class> c_;
};

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);
// Exact division; throws form_error if g does not divide f.
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& g, const BinaryForm& f);

// Squarefree layers (g_i, i) with g = prod g_i^i up to a positive rational
// scalar; the g_i are squarefree, pairwise coprime, primitive-normalized, and
// listed in increasing multiplicity with deg g_i >= 1. Yun's algorithm on the
// dehomogenization g(t,1), with the power of u1 tracked separately.
struct SquarefreeLayer {
  BinaryForm factor;
  int multiplicity;
};
std::vector<SquarefreeLayer> squarefree_decomposition(const BinaryForm& g);

// Product of the odd-multiplicity layers, primitive-normalized.
BinaryForm odd_part(const BinaryForm& g);
bool is_square(const BinaryForm& g);

struct RootStats {
  int degree = 0;
  int distinct_roots = 0;   // distinct roots over the algebraic closure
  int odd_mult_roots = 0;   // roots of odd multiplicity
  int repeated_roots = 0;   // distinct roots of multiplicity >= 2
};
RootStats root_stats(const BinaryForm& g);

// Rational roots [p:q] of a squarefree primitive form, as primitive linear
// forms q*u0 - p*u1 (the root [1:0] corresponds to the form u1).
std::vector<BinaryForm> rational_linear_factors(const BinaryForm& squarefree);

// Text grammar: sum of signed monomials coef*u0^i*u1^j with integer or p/q
// coefficients; '*' and exponent 1 optional. Throws form_error with position
// info on bad syntax or an inhomogeneous sum.
BinaryForm parse_form(const std::string& text);

}  // namespace sarkisov
