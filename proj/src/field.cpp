#include "mub/field.hpp"

#include <string>

#include "mub/error.hpp"

namespace mub {
namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// a = q * b + r with deg r < deg b; b non-zero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = invmod(b.back(), p);
  Poly q(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return divmod(mul(a, b, p), f, p).second;
}

Poly powmod_poly(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if (e & 1) r = mulmod_poly(r, base, f, p);
    base = mulmod_poly(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by k successive p-th powers.
Poly frobenius_of_x(std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly r = divmod(Poly{0, 1}, f, p).second;
  for (std::uint64_t i = 0; i < k; ++i) r = powmod_poly(r, p, f, p);
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto q : factors) primitive = primitive && powmod(g, (p - 1) / q, p) != 1;
    if (primitive) return g;
  }
  return 1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto divs = prime_divisors(n);
  if (divs.size() != 1) return std::nullopt;
  unsigned alpha = 0;
  while (n > 1) {
    n /= divs[0];
    ++alpha;
  }
  return std::make_pair(divs[0], alpha);
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic) {
  Poly f = monic;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint64_t n = f.size() - 1;
  if (n == 1) return true;
  const Poly x{0, 1};
  if (sub(frobenius_of_x(n, f, p), x, p) != Poly{}) return false;
  for (auto r : prime_divisors(n)) {
    const Poly h = sub(frobenius_of_x(n / r, f, p), x, p);
    if (gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)), order_(1) {
  if (p_ >= (1ULL << 31) || !is_prime(p_))
    throw Error(ErrorCode::InvalidField, std::to_string(p_) + " is not a prime below 2^31");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw Error(ErrorCode::InvalidField, "modulus must be monic of degree >= 1");
  for (auto c : modulus_)
    if (c >= p_) throw Error(ErrorCode::InvalidField, "modulus coefficient not reduced mod p");
  for (unsigned i = 0; i < alpha(); ++i) {
    if (order_ > (1ULL << 62) / p_) throw Error(ErrorCode::InvalidField, "field order too large");
    order_ *= p_;
  }
  if (!is_irreducible(p_, modulus_))
    throw Error(ErrorCode::InvalidField, "modulus is reducible over GF(" + std::to_string(p_) + ")");
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint64_t p,
                                                 std::vector<std::uint64_t> modulus) {
  return std::make_shared<const FieldSpec>(p, std::move(modulus));
}

std::shared_ptr<const FieldSpec> FieldSpec::standard(std::uint64_t p, unsigned alpha) {
  struct Entry {
    std::uint64_t p;
    unsigned alpha;
    std::vector<std::uint64_t> modulus;
  };
  // Conway polynomials, coefficients ascending.
  static const std::vector<Entry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.alpha == alpha) return make(p, e.modulus);
  if (alpha == 1 && is_prime(p)) return make(p, {(p - smallest_primitive_root(p)) % p, 1});
  throw Error(ErrorCode::Unsupported, "no shipped modulus for GF(" + std::to_string(p) + "^" +
                                          std::to_string(alpha) + ")");
}

FieldElement::FieldElement(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (!spec_) throw Error(ErrorCode::InvalidField, "element without a field");
  if (coeffs_.size() > spec_->alpha())
    throw Error(ErrorCode::InvalidField, "element has more than alpha coefficients");
  coeffs_.resize(spec_->alpha(), 0);
  for (auto& c : coeffs_) c %= spec_->p();
}

FieldElement FieldElement::zero(std::shared_ptr<const FieldSpec> spec) {
  return FieldElement(std::move(spec), {});
}

FieldElement FieldElement::one(std::shared_ptr<const FieldSpec> spec) {
  return FieldElement(std::move(spec), {1});
}

FieldElement FieldElement::from_index(std::shared_ptr<const FieldSpec> spec, std::uint64_t index) {
  std::vector<std::uint64_t> c(spec->alpha());
  for (auto& digit : c) {
    digit = index % spec->p();
    index /= spec->p();
  }
  return FieldElement(std::move(spec), std::move(c));
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) idx = idx * spec_->p() + *it;
  return idx;
}

bool FieldElement::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void FieldElement::require_same_field(const FieldElement& b) const {
  if (spec_ != b.spec_ && !(*spec_ == *b.spec_))
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  require_same_field(b);
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeffs_[i] + b.coeffs_[i]) % spec_->p();
  return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  require_same_field(b);
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (coeffs_[i] + spec_->p() - b.coeffs_[i]) % spec_->p();
  return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-() const { return zero(spec_) - *this; }

FieldElement FieldElement::operator*(const FieldElement& b) const {
  require_same_field(b);
  Poly r = mulmod_poly(coeffs_, b.coeffs_, spec_->modulus(), spec_->p());
  return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
  const std::uint64_t p = spec_->p();
  // Extended Euclid: track s with s * a == r (mod f).
  Poly r0 = spec_->modulus(), r1 = coeffs_;
  trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a non-zero constant since the modulus is irreducible.
  const std::uint64_t scale = invmod(r0.front(), p);
  for (auto& c : s0) c = mulmod(c, scale, p);
  return FieldElement(spec_, divmod(s0, spec_->modulus(), p).second);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(spec_, powmod_poly(coeffs_, exponent, spec_->modulus(), spec_->p()));
}

bool FieldElement::operator==(const FieldElement& b) const {
  require_same_field(b);
  return coeffs_ == b.coeffs_;
}

std::uint64_t gf_trace(const FieldElement& a) {
  FieldElement sum = a;
  FieldElement conj = a;
  for (unsigned k = 1; k < a.spec().alpha(); ++k) {
    conj = conj.pow(a.spec().p());
    sum = sum + conj;
  }
  for (std::size_t i = 1; i < sum.coeffs().size(); ++i)
    if (sum.coeffs()[i] != 0)
      throw Error(ErrorCode::InvalidField, "trace left the prime subfield; modulus is not a field");
  return sum.coeffs().front();
}

}  // namespace mub
