#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdig/base.hpp"

namespace symdig {

/// Exact arithmetic in GF(p^k).
///
/// Elements are encoded as integers in [0, q): the element with polynomial
/// coefficients (c_0, ..., c_{k-1}) over Z_p is the integer sum c_i * p^i.
/// This encoding fixes the enumeration order of every structure built on
/// top of the field, so exports are reproducible across runs.
///
/// The extension modulus is the least monic irreducible polynomial of
/// degree k over Z_p, comparing candidates by the base-p encoding of their
/// non-leading coefficients. For k = 1 the modulus is the polynomial x.
///
/// Fields are immutable after construction and safe to share between
/// threads; all operations are pure.
class FiniteField {
 public:
  /// Builds GF(p^k). Requires p prime, k >= 1 and p^k <= 2^20.
  static FiniteField make(std::int64_t p, std::int64_t k);

  std::int64_t characteristic() const { return p_; }
  std::int64_t degree() const { return k_; }
  std::int64_t order() const { return q_; }

  /// Modulus coefficients c_0 .. c_k (monic, c_k = 1), lowest degree first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return 1; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  /// Multiplicative inverse; rejects zero.
  std::int64_t inv(std::int64_t a) const;
  std::int64_t div(std::int64_t a, std::int64_t b) const;
  /// a^e for any integer e (negative exponents invert first).
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  /// Euler criterion a^((q-1)/2) = 1 for odd q; rejects zero.
  /// For characteristic 2 every nonzero element is a square.
  bool is_square(std::int64_t a) const;

  /// Least-encoded generator of the multiplicative group.
  std::int64_t primitive_root() const { return primitive_root_; }

  /// A fixed additive basis of the field over Z_p: the powers
  /// 1, x, ..., x^{k-1} of the modulus root (codes p^0 .. p^{k-1}).
  std::vector<std::int64_t> additive_basis() const;

  std::string element_str(std::int64_t a) const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField(std::int64_t p, std::int64_t k, std::int64_t q,
              std::vector<std::int64_t> modulus);

  void check_code(std::int64_t a) const;
  std::vector<std::int64_t> decode(std::int64_t a) const;
  std::int64_t encode(const std::vector<std::int64_t>& digits) const;

  std::int64_t p_, k_, q_;
  std::vector<std::int64_t> modulus_;
  std::int64_t primitive_root_ = 0;
};

/// A field element tied to its owning field. Arithmetic between elements
/// of structurally different fields is rejected.
class FieldElement {
 public:
  FieldElement(const FiniteField& field, std::int64_t code);

  std::int64_t code() const { return code_; }
  const FiniteField& field() const { return *field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;
  bool is_square() const;

  bool operator==(const FieldElement& o) const;

 private:
  const FiniteField* owner(const FieldElement& o) const;

  const FiniteField* field_;
  std::int64_t code_;
};

bool is_prime(std::int64_t n);

}  // namespace symdig
