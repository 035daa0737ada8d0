#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace mub {

/// GF(p^alpha) presented as GF(p)[x] / (modulus).
class FieldSpec {
 public:
  /// modulus: alpha + 1 coefficients, ascending, leading one equal to 1.
  /// Throws InvalidField unless p is prime (p < 2^31) and modulus is monic
  /// and irreducible over GF(p).
  FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus);

  /// Shipped modulus for p^alpha <= 64 (Conway polynomials; any monic
  /// irreducible for the prime fields above 7).
  static std::shared_ptr<const FieldSpec> standard(std::uint64_t p, unsigned alpha);
  static std::shared_ptr<const FieldSpec> make(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p() const noexcept { return p_; }
  unsigned alpha() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
  /// p^alpha
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t order_;
};

/// An element of GF(p^alpha) in polynomial-basis coordinates.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint64_t> coeffs);

  static FieldElement zero(std::shared_ptr<const FieldSpec> spec);
  static FieldElement one(std::shared_ptr<const FieldSpec> spec);
  /// Coefficients are the base-p digits of index, least significant first.
  static FieldElement from_index(std::shared_ptr<const FieldSpec> spec, std::uint64_t index);

  const FieldSpec& spec() const noexcept { return *spec_; }
  const std::shared_ptr<const FieldSpec>& spec_ptr() const noexcept { return spec_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::uint64_t index() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  bool operator==(const FieldElement& b) const;

 private:
  void require_same_field(const FieldElement& b) const;

  std::shared_ptr<const FieldSpec> spec_;
  std::vector<std::uint64_t> coeffs_;
};

/// Absolute trace a + a^p + ... + a^(p^(alpha-1)), an element of GF(p).
std::uint64_t gf_trace(const FieldElement& a);

bool is_prime(std::uint64_t n);
/// n = p^alpha with p prime, or nothing.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

/// Rabin's irreducibility test for a monic polynomial over GF(p).
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic);

}  // namespace mub
