#include "symdig/finfield.hpp"

#include <algorithm>
#include <sstream>

namespace symdig {

namespace {

// Polynomials over Z_p as coefficient vectors, lowest degree first.
// Trailing zeros are allowed; poly_degree ignores them.

int poly_degree(const std::vector<std::int64_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f mod g, g monic of positive degree.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> f,
                                   const std::vector<std::int64_t>& g,
                                   std::int64_t p) {
  const int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; i = poly_degree(f)) {
    const std::int64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::int64_t& x = f[i - dg + j];
      x = (x - c * g[j]) % p;
      if (x < 0) x += p;
    }
  }
  f.resize(std::max(dg, 1));
  return f;
}

bool poly_is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int k = poly_degree(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> g(d + 1, 0);
      std::int64_t rest = code;
      for (int i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (poly_degree(poly_rem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField FiniteField::make(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw Error("field_make: p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field_make: degree k must be >= 1");

  std::int64_t q = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxDomain) throw Error("field_make: p^k exceeds the 2^20 size guard");
  }

  std::vector<std::int64_t> modulus;
  if (k == 1) {
    modulus = {0, 1};  // the polynomial x
  } else {
    // Least monic irreducible of degree k, candidates ordered by the
    // base-p encoding of their non-leading coefficients.
    for (std::int64_t code = 0; code < q; ++code) {
      std::vector<std::int64_t> f(k + 1, 0);
      std::int64_t rest = code;
      for (std::int64_t i = 0; i < k; ++i) {
        f[i] = rest % p;
        rest /= p;
      }
      f[k] = 1;
      if (poly_is_irreducible(f, p)) {
        modulus = f;
        break;
      }
    }
    if (modulus.empty())
      throw Error("field_make: no irreducible polynomial found");  // unreachable for valid input
  }

  return FiniteField(p, k, q, std::move(modulus));
}

FiniteField::FiniteField(std::int64_t p, std::int64_t k, std::int64_t q,
                         std::vector<std::int64_t> modulus)
    : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {
  const auto factors = prime_factors(q_ - 1);
  for (std::int64_t g = 1; g < q_; ++g) {
    bool generates = true;
    for (std::int64_t f : factors) {
      if (pow(g, (q_ - 1) / f) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_root_ = g;
      break;
    }
  }
}

void FiniteField::check_code(std::int64_t a) const {
  if (a < 0 || a >= q_)
    throw Error("field element code " + std::to_string(a) + " out of range [0," +
                std::to_string(q_) + ")");
}

std::vector<std::int64_t> FiniteField::decode(std::int64_t a) const {
  std::vector<std::int64_t> digits(k_);
  for (std::int64_t i = 0; i < k_; ++i) {
    digits[i] = a % p_;
    a /= p_;
  }
  return digits;
}

std::int64_t FiniteField::encode(const std::vector<std::int64_t>& digits) const {
  std::int64_t a = 0;
  for (std::int64_t i = k_ - 1; i >= 0; --i) a = a * p_ + digits[i];
  return a;
}

std::int64_t FiniteField::add(std::int64_t a, std::int64_t b) const {
  check_code(a);
  check_code(b);
  if (k_ == 1) return (a + b) % p_;
  auto da = decode(a);
  const auto db = decode(b);
  for (std::int64_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

std::int64_t FiniteField::neg(std::int64_t a) const {
  check_code(a);
  if (k_ == 1) return (p_ - a) % p_;
  auto da = decode(a);
  for (auto& d : da) d = (p_ - d) % p_;
  return encode(da);
}

std::int64_t FiniteField::sub(std::int64_t a, std::int64_t b) const {
  return add(a, neg(b));
}

std::int64_t FiniteField::mul(std::int64_t a, std::int64_t b) const {
  check_code(a);
  check_code(b);
  if (k_ == 1) return (a * b) % p_;
  const auto da = decode(a);
  const auto db = decode(b);
  std::vector<std::int64_t> prod(2 * k_ - 1, 0);
  for (std::int64_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (std::int64_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // Reduce mod the monic modulus.
  for (std::int64_t i = 2 * k_ - 2; i >= k_; --i) {
    const std::int64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::int64_t j = 0; j < k_; ++j) {
      std::int64_t& x = prod[i - k_ + j];
      x = (x - c * modulus_[j]) % p_;
      if (x < 0) x += p_;
    }
  }
  prod.resize(k_);
  return encode(prod);
}

std::int64_t FiniteField::inv(std::int64_t a) const {
  check_code(a);
  if (a == 0) throw Error("field inversion of zero");
  return pow(a, q_ - 2);
}

std::int64_t FiniteField::div(std::int64_t a, std::int64_t b) const {
  return mul(a, inv(b));
}

std::int64_t FiniteField::pow(std::int64_t a, std::int64_t e) const {
  check_code(a);
  if (e < 0) return pow(inv(a), -e);
  std::int64_t result = 1;
  std::int64_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool FiniteField::is_square(std::int64_t a) const {
  check_code(a);
  if (a == 0) throw Error("is_square: zero rejected (squares range over the nonzero scalars)");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::vector<std::int64_t> FiniteField::additive_basis() const {
  std::vector<std::int64_t> basis(k_);
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < k_; ++i) {
    basis[i] = power;
    power *= p_;
  }
  return basis;
}

std::string FiniteField::element_str(std::int64_t a) const {
  check_code(a);
  return std::to_string(a);
}

FieldElement::FieldElement(const FiniteField& field, std::int64_t code)
    : field_(&field), code_(code) {
  if (code < 0 || code >= field.order())
    throw Error("FieldElement code out of range");
}

const FiniteField* FieldElement::owner(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw Error("field mismatch between operands");
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {*owner(o), field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {*owner(o), field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {*owner(o), field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {*owner(o), field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {*field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {*field_, field_->pow(code_, e)}; }
bool FieldElement::is_square() const { return field_->is_square(code_); }

bool FieldElement::operator==(const FieldElement& o) const {
  return code_ == o.code_ && (field_ == o.field_ || *field_ == *o.field_);
}

}  // namespace symdig
