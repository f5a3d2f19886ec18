#include "sarkisov/binary_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sarkisov {

namespace {

// Dense univariate polynomial over Q, coefficients low-to-high in t.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Euclidean division; remainder returned, quotient optional.
Poly divmod(const Poly& a, const Poly& b, Poly* quot) {
  Poly r = a;
  Poly q(a.size(), mpq_class(0));
  while (!r.empty() && r.size() >= b.size()) {
    mpq_class c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  if (quot) {
    trim(q);
    *quot = q;
  }
  return r;
}

Poly make_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Monic gcd in Q[t].
Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly exact_quot(const Poly& a, const Poly& b) {
  Poly q;
  Poly r = divmod(a, b, &q);
  if (!r.empty()) throw form_error("non-exact polynomial division");
  return q;
}

// Yun's squarefree decomposition of a nonconstant polynomial over Q.
// Returns monic factors h_i with multiplicity i (empty factors skipped).
std::vector<std::pair<Poly, int>> yun(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly fp = derivative(f);
  Poly u = poly_gcd(f, fp);
  Poly v = exact_quot(f, u);
  Poly w = exact_quot(fp, u);
  int i = 1;
  while (deg(v) > 0) {
    Poly z = sub(w, derivative(v));
    Poly h = poly_gcd(v, z);
    if (deg(h) > 0) out.emplace_back(h, i);
    v = exact_quot(v, h);
    w = exact_quot(z, h);
    ++i;
  }
  return out;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g = gcd(a, b);
  return a / g * b;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  bool all_zero = true;
  for (const auto& q : c_)
    if (q != 0) all_zero = false;
  if (all_zero) c_.clear();
}

BinaryForm BinaryForm::constant(const mpq_class& c) {
  return BinaryForm(std::vector<mpq_class>{c});
}

BinaryForm BinaryForm::linear(const mpq_class& u0_coeff, const mpq_class& u1_coeff) {
  return BinaryForm(std::vector<mpq_class>{u0_coeff, u1_coeff});
}

BinaryForm BinaryForm::monomial(const mpq_class& c, int deg_u0, int deg_u1) {
  std::vector<mpq_class> v(static_cast<size_t>(deg_u0 + deg_u1) + 1, mpq_class(0));
  v[static_cast<size_t>(deg_u1)] = c;
  return BinaryForm(std::move(v));
}

int BinaryForm::degree() const {
  if (is_zero()) throw form_error("zero form has no degree");
  return static_cast<int>(c_.size()) - 1;
}

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  mpz_class den(1);
  for (const auto& q : c_) den = lcm_z(den, q.get_den());
  std::vector<mpz_class> ints;
  ints.reserve(c_.size());
  for (const auto& q : c_) ints.push_back(q.get_num() * (den / q.get_den()));
  mpz_class g(0);
  for (const auto& z : ints) g = gcd(g, z);
  int sign = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  }
  if (sign < 0) g = -g;
  std::vector<mpq_class> out;
  out.reserve(ints.size());
  for (const auto& z : ints) out.emplace_back(z / g);
  return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::operator*(const BinaryForm& other) const {
  if (is_zero() || other.is_zero()) return zero();
  std::vector<mpq_class> r(c_.size() + other.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < other.c_.size(); ++j) r[i + j] += c_[i] * other.c_[j];
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw form_error("negative exponent");
  BinaryForm r = constant(1);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) { return f * g; }

bool divides(const BinaryForm& g, const BinaryForm& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  if (f.degree() < g.degree()) return false;
  try {
    divide_exact(f, g);
    return true;
  } catch (const form_error&) {
    return false;
  }
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw form_error("division by the zero form");
  if (f.is_zero()) return BinaryForm::zero();
  if (f.degree() < g.degree()) throw form_error("non-exact division: degree");
  // Coefficients of f as a polynomial in u1 with u0-degree implied; dividing
  // dense coefficient lists is ordinary univariate division in u1 with the
  // homogeneous degree fixed.
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  size_t qsize = a.size() - b.size() + 1;
  std::vector<mpq_class> rem(a.begin(), a.end());
  std::vector<mpq_class> q(qsize, mpq_class(0));
  // Find leading (lowest u1-index) nonzero of g.
  size_t lead = 0;
  while (lead < b.size() && b[lead] == 0) ++lead;
  for (size_t i = 0; i < qsize; ++i) {
    mpq_class c = rem[i + lead] / b[lead];
    q[i] = c;
    for (size_t j = lead; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw form_error("non-exact division");
  return BinaryForm(std::move(q));
}

std::vector<SquarefreeLayer> squarefree_decomposition(const BinaryForm& g) {
  if (g.is_zero()) throw form_error("squarefree decomposition of the zero form");
  int d = g.degree();
  // Dehomogenize at u1 = 1: h(t) = g(t, 1); the lost degree is the
  // multiplicity of the linear form u1.
  Poly h;
  const auto& c = g.coeffs();
  for (int i = d; i >= 0; --i) h.push_back(c[static_cast<size_t>(i)]);
  trim(h);
  int u1_mult = d - deg(h);

  std::vector<SquarefreeLayer> layers;
  if (deg(h) > 0) {
    for (auto& [factor_t, mult] : yun(h)) {
      // Homogenize to its own degree.
      int fd = deg(factor_t);
      std::vector<mpq_class> coeffs(static_cast<size_t>(fd) + 1);
      for (int i = 0; i <= fd; ++i)
        coeffs[static_cast<size_t>(i)] = factor_t[static_cast<size_t>(fd - i)];
      layers.push_back({BinaryForm(std::move(coeffs)).primitive(), mult});
    }
  }
  if (u1_mult > 0) {
    BinaryForm u1 = BinaryForm::linear(0, 1);
    bool merged = false;
    for (auto& layer : layers) {
      if (layer.multiplicity == u1_mult) {
        layer.factor = (layer.factor * u1).primitive();
        merged = true;
        break;
      }
    }
    if (!merged) layers.push_back({u1, u1_mult});
  }
  std::sort(layers.begin(), layers.end(),
            [](const SquarefreeLayer& a, const SquarefreeLayer& b) {
              return a.multiplicity < b.multiplicity;
            });
  return layers;
}

BinaryForm odd_part(const BinaryForm& g) {
  BinaryForm r = BinaryForm::constant(1);
  for (const auto& layer : squarefree_decomposition(g))
    if (layer.multiplicity % 2 == 1) r = r * layer.factor;
  return r.primitive();
}

bool is_square(const BinaryForm& g) { return odd_part(g).is_constant(); }

RootStats root_stats(const BinaryForm& g) {
  RootStats s;
  s.degree = g.degree();
  for (const auto& layer : squarefree_decomposition(g)) {
    int d = layer.factor.degree();
    s.distinct_roots += d;
    if (layer.multiplicity % 2 == 1) s.odd_mult_roots += d;
    if (layer.multiplicity >= 2) s.repeated_roots += d;
  }
  return s;
}

std::vector<BinaryForm> rational_linear_factors(const BinaryForm& squarefree) {
  std::vector<BinaryForm> out;
  BinaryForm f = squarefree.primitive();
  if (f.is_zero() || f.is_constant()) return out;
  const auto& c = f.coeffs();
  int d = f.degree();
  int i_min = 0, i_max = d;
  while (c[static_cast<size_t>(i_min)] == 0) ++i_min;
  while (c[static_cast<size_t>(i_max)] == 0) --i_max;
  // Roots at [1:0] and [0:1] show up as vanishing extreme coefficients.
  if (i_min > 0) out.push_back(BinaryForm::linear(0, 1));   // u1 | f
  if (i_max < d) out.push_back(BinaryForm::linear(1, 0));   // u0 | f
  // Finite nonzero rational roots p/q of the stripped dehomogenization:
  // p divides the trailing coefficient, q the leading one.
  mpz_class lead = c[static_cast<size_t>(i_min)].get_num();
  mpz_class constant = c[static_cast<size_t>(i_max)].get_num();
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    mpz_class a = abs(n);
    for (mpz_class i = 1; i * i <= a; ++i) {
      if (a % i == 0) {
        ds.push_back(i);
        if (i * i != a) ds.push_back(a / i);
      }
    }
    return ds;
  };
  auto eval_zero = [&](const mpz_class& p, const mpz_class& q) {
    mpq_class acc(0);
    for (int i = 0; i <= d; ++i) {
      mpq_class term = c[static_cast<size_t>(i)];
      for (int k = 0; k < d - i; ++k) term *= p;
      for (int k = 0; k < i; ++k) term *= q;
      acc += term;
    }
    return acc == 0;
  };
  for (const auto& p : divisors(constant)) {
    for (const auto& q : divisors(lead)) {
      if (gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        mpz_class pp = sign * p;
        if (eval_zero(pp, q)) {
          BinaryForm l = BinaryForm::linear(q, -pp).primitive();
          if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BinaryForm& a, const BinaryForm& b) {
    return a.str() < b.str();
  });
  return out;
}

std::string BinaryForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  int d = degree();
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const mpq_class& q = c_[static_cast<size_t>(i)];
    if (q == 0) continue;
    mpq_class a = q;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    int e0 = d - i, e1 = i;
    bool coeff_one = (a == 1);
    bool has_vars = (e0 > 0 || e1 > 0);
    if (!coeff_one || !has_vars) {
      os << a;
      if (has_vars) os << "*";
    }
    if (e0 > 0) {
      os << "u0";
      if (e0 > 1) os << "^" << e0;
      if (e1 > 0) os << "*";
    }
    if (e1 > 0) {
      os << "u1";
      if (e1 > 1) os << "^" << e1;
    }
  }
  return os.str();
}

namespace {

struct FormParser {
  const std::string& s;
  size_t pos = 0;

  explicit FormParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw form_error(msg + " at position " + std::to_string(pos));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  // monomial := [coef] [u0[^e]] [u1[^e]] with optional '*' separators.
  struct Mono {
    mpq_class coeff{1};
    int e0 = 0, e1 = 0;
    bool any = false;
  };

  int exponent() {
    if (eat('^')) {
      mpz_class e = integer();
      if (e < 0 || e > 1000) fail("exponent out of range");
      return static_cast<int>(e.get_si());
    }
    return 1;
  }

  Mono monomial() {
    Mono m;
    skip_ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class num = integer();
      if (eat('/')) {
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        m.coeff = mpq_class(num, den);
        m.coeff.canonicalize();
      } else {
        m.coeff = num;
      }
      m.any = true;
      eat('*');
    }
    skip_ws();
    while (pos + 1 < s.size() && s[pos] == 'u' && (s[pos + 1] == '0' || s[pos + 1] == '1')) {
      char var = s[pos + 1];
      pos += 2;
      int e = exponent();
      if (var == '0') m.e0 += e;
      else m.e1 += e;
      m.any = true;
      eat('*');
      skip_ws();
    }
    if (!m.any) fail("expected monomial");
    return m;
  }
};

}  // namespace

BinaryForm parse_form(const std::string& text) {
  FormParser p(text);
  std::vector<FormParser::Mono> monos;
  p.skip_ws();
  bool neg = false;
  if (p.eat('-')) neg = true;
  else p.eat('+');
  for (;;) {
    auto m = p.monomial();
    if (neg) m.coeff = -m.coeff;
    monos.push_back(m);
    p.skip_ws();
    if (p.eat('+')) neg = false;
    else if (p.eat('-')) neg = true;
    else break;
  }
  p.skip_ws();
  if (p.pos != p.s.size()) p.fail("trailing input");

  int d = -1;
  for (const auto& m : monos) {
    int total = m.e0 + m.e1;
    if (d < 0) d = total;
    else if (total != d) throw form_error("inhomogeneous form");
  }
  std::vector<mpq_class> coeffs(static_cast<size_t>(d) + 1, mpq_class(0));
  for (const auto& m : monos) coeffs[static_cast<size_t>(m.e1)] += m.coeff;
  return BinaryForm(std::move(coeffs));
}

}  // namespace sarkisov
