#include "mpcodes/gf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mpcodes {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned mod_pow(unsigned base, unsigned e, unsigned mod) {
  std::uint64_t acc = 1, b = base % mod;
  while (e) {
    if (e & 1) acc = acc * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return static_cast<unsigned>(acc);
}

unsigned mod_inv(unsigned a, unsigned p) { return mod_pow(a % p, p - 2, p); }

// Dense polynomial over GF(l), coefficients low-to-high.
using Poly = std::vector<unsigned>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f modulo g (g monic-normalizable, deg g >= 0).
Poly poly_rem(Poly f, const Poly& g, unsigned l) {
  const int dg = poly_deg(g);
  const unsigned lead_inv = mod_inv(g[dg], l);
  for (int i = poly_deg(f); i >= dg; i = poly_deg(f)) {
    const unsigned c = static_cast<unsigned>(static_cast<std::uint64_t>(f[i]) * lead_inv % l);
    for (int j = 0; j <= dg; ++j) {
      const unsigned sub = static_cast<unsigned>(static_cast<std::uint64_t>(c) * g[j] % l);
      f[i - dg + j] = (f[i - dg + j] + l - sub) % l;
    }
  }
  return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, unsigned l) {
  const int df = poly_deg(f);
  if (df < 1) return false;
  for (int d = 1; 2 * d <= df; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= l;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly g(d + 1, 0);
      std::uint64_t e = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(e % l);
        e /= l;
      }
      g[d] = 1;
      if (poly_is_zero(poly_rem(f, g, l))) return false;
    }
  }
  return true;
}

std::vector<unsigned> prime_factors(std::uint32_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Standard primitive polynomials over GF(2), packed with bit i = coeff of x^i.
// Verified (irreducible + x primitive) at construction.
constexpr std::uint32_t kBinaryModulus[17] = {
    0,
    0b11,                 // x+1
    0b111,                // x^2+x+1
    0b1011,               // x^3+x+1
    0b10011,              // x^4+x+1
    0b100101,             // x^5+x^2+1
    0b1000011,            // x^6+x+1
    0b10000011,           // x^7+x+1
    0b100011101,          // x^8+x^4+x^3+x^2+1
    0b1000010001,         // x^9+x^4+1
    0b10000001001,        // x^10+x^3+1
    0b100000000101,       // x^11+x^2+1
    0b1000001010011,      // x^12+x^6+x^4+x+1
    0b10000000011011,     // x^13+x^4+x^3+x+1
    0b100010001000011,    // x^14+x^10+x^6+x+1
    0b1000000000000011,   // x^15+x+1
    0b10001000000001011,  // x^16+x^12+x^3+x+1
};

}  // namespace

FieldCtx::FieldCtx(unsigned l, unsigned m) : l_(l), m_(m) {
  if (!is_prime(l)) throw UsageError("FieldCtx: characteristic must be prime");
  if (m == 0) throw UsageError("FieldCtx: extension degree must be positive");
  double qd = std::pow(static_cast<double>(l), static_cast<double>(m));
  if (qd > static_cast<double>(kMaxFieldSize))
    throw ResourceError("FieldCtx: field size exceeds the 2^20 budget");
  q_ = 1;
  for (unsigned i = 0; i < m; ++i) q_ *= l;

  if (l == 2 && m <= 16) {
    modulus_.assign(m + 1, 0);
    for (unsigned i = 0; i <= m; ++i) modulus_[i] = (kBinaryModulus[m] >> i) & 1u;
    init();
    if (!x_primitive_)
      throw NumericalError("FieldCtx: built-in modulus failed the primitivity check");
    return;
  }

  // Search monic polynomials in packed order; take the first irreducible one
  // whose root generates the multiplicative group.
  for (std::uint32_t low = 0; low < q_; ++low) {
    Poly f(m + 1, 0);
    std::uint32_t e = low;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = e % l;
      e /= l;
    }
    f[m] = 1;
    if (!poly_irreducible(f, l)) continue;
    modulus_ = f;
    init();
    if (x_primitive_) return;
  }
  throw NumericalError("FieldCtx: no primitive modulus found");  // unreachable for valid (l, m)
}

FieldCtx::FieldCtx(unsigned l, unsigned m, const std::vector<unsigned>& modulus_coeffs)
    : l_(l), m_(m), modulus_(modulus_coeffs) {
  if (!is_prime(l)) throw UsageError("FieldCtx: characteristic must be prime");
  if (m == 0) throw UsageError("FieldCtx: extension degree must be positive");
  double qd = std::pow(static_cast<double>(l), static_cast<double>(m));
  if (qd > static_cast<double>(kMaxFieldSize))
    throw ResourceError("FieldCtx: field size exceeds the 2^20 budget");
  q_ = 1;
  for (unsigned i = 0; i < m; ++i) q_ *= l;
  if (modulus_.size() != m + 1) throw UsageError("FieldCtx: modulus must have degree m");
  for (unsigned c : modulus_)
    if (c >= l) throw UsageError("FieldCtx: modulus coefficient out of range");
  if (modulus_[m] != 1) throw UsageError("FieldCtx: modulus must be monic");
  if (!poly_irreducible(modulus_, l)) throw UsageError("FieldCtx: modulus is reducible");
  init();
}

void FieldCtx::init() {
  if (l_ == 2) {
    modulus_bits_ = 0;
    for (unsigned i = 0; i <= m_; ++i)
      if (modulus_[i]) modulus_bits_ |= 1ull << i;
  }

  // x^{m+j} mod f for j = 0..m-2, by repeated shift-and-reduce.
  xpow_digits_.clear();
  if (m_ >= 2) {
    Poly cur(m_, 0);  // x^m mod f = -(f - x^m)
    for (unsigned i = 0; i < m_; ++i) cur[i] = (l_ - modulus_[i]) % l_;
    xpow_digits_.push_back(cur);
    for (unsigned j = 1; j + 1 < m_; ++j) {
      Poly next(m_, 0);
      for (unsigned i = 0; i + 1 < m_; ++i) next[i + 1] = cur[i];
      const unsigned top = cur[m_ - 1];
      if (top) {
        for (unsigned i = 0; i < m_; ++i) {
          const unsigned add = static_cast<unsigned>(
              static_cast<std::uint64_t>(top) * ((l_ - modulus_[i]) % l_) % l_);
          next[i] = (next[i] + add) % l_;
        }
      }
      xpow_digits_.push_back(next);
      cur = next;
    }
  }

  build_tables();
}

void FieldCtx::build_tables() {
  // Trace of each basis element; trace(v) is then the GF(l)-linear fold.
  basis_trace_.assign(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    FieldValue xi = 1;
    for (unsigned j = 0; j < i; ++j) xi = mul(xi, m_ >= 2 ? static_cast<FieldValue>(l_) : 1);
    // For m == 1 the basis is {1}; the loop above keeps xi = 1.
    FieldValue acc = 0, t = xi;
    for (unsigned j = 0; j < m_; ++j) {
      acc = add(acc, t);
      t = pow(t, l_);
    }
    for (unsigned j = 1; j < m_; ++j)
      if (coeff(acc, j) != 0)
        throw NumericalError("FieldCtx: trace left the prime field");
    basis_trace_[i] = coeff(acc, 0);
  }

  unity_.resize(l_);
  for (unsigned j = 0; j < l_; ++j)
    unity_[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / l_);
  unity_[0] = {1.0, 0.0};
  if (l_ == 2) unity_[1] = {-1.0, 0.0};  // exact, so binary embeddings are bit-stable

  generator_ = m_ >= 2 ? static_cast<FieldValue>(l_)
                       : static_cast<FieldValue>((l_ - modulus_[0] % l_) % l_);

  x_primitive_ = false;
  if (generator_ != 0) {
    x_primitive_ = true;
    for (unsigned p : prime_factors(q_ - 1)) {
      if (pow(generator_, (q_ - 1) / p) == 1) {
        x_primitive_ = false;
        break;
      }
    }
    if (q_ == 2) x_primitive_ = (generator_ == 1);
  }
}

FieldValue FieldCtx::add(FieldValue a, FieldValue b) const {
  if (l_ == 2) return a ^ b;
  FieldValue out = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += (a % l_ + b % l_) % l_ * mult;
    a /= l_;
    b /= l_;
    mult *= l_;
  }
  return out;
}

FieldValue FieldCtx::neg(FieldValue a) const {
  if (l_ == 2) return a;
  FieldValue out = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += (l_ - a % l_) % l_ * mult;
    a /= l_;
    mult *= l_;
  }
  return out;
}

FieldValue FieldCtx::sub(FieldValue a, FieldValue b) const {
  return l_ == 2 ? a ^ b : add(a, neg(b));
}

FieldValue FieldCtx::mul(FieldValue a, FieldValue b) const {
  if (l_ == 2) {
    std::uint64_t prod = 0, aa = a;
    for (std::uint64_t bb = b; bb; bb >>= 1, aa <<= 1)
      if (bb & 1) prod ^= aa;
    for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit)
      if ((prod >> bit) & 1) prod ^= modulus_bits_ << (bit - m_);
    return static_cast<FieldValue>(prod);
  }
  if (m_ == 1)
    return static_cast<FieldValue>(static_cast<std::uint64_t>(a) * b % l_);

  std::vector<unsigned> ad(m_), bd(m_);
  for (unsigned i = 0; i < m_; ++i, a /= l_) ad[i] = a % l_;
  for (unsigned i = 0; i < m_; ++i, b /= l_) bd[i] = b % l_;
  std::vector<unsigned> conv(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (!ad[i]) continue;
    for (unsigned j = 0; j < m_; ++j)
      conv[i + j] = static_cast<unsigned>(
          (conv[i + j] + static_cast<std::uint64_t>(ad[i]) * bd[j]) % l_);
  }
  std::vector<unsigned> res(conv.begin(), conv.begin() + m_);
  for (unsigned j = 0; j + m_ < conv.size() + 0; ++j) {
    const unsigned c = conv[m_ + j];
    if (!c) continue;
    const auto& red = xpow_digits_[j];
    for (unsigned i = 0; i < m_; ++i)
      res[i] = static_cast<unsigned>((res[i] + static_cast<std::uint64_t>(c) * red[i]) % l_);
  }
  FieldValue out = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += res[i] * mult;
    mult *= l_;
  }
  return out;
}

FieldValue FieldCtx::pow(FieldValue a, std::uint64_t e) const {
  FieldValue acc = 1, b = a;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    b = mul(b, b);
    e >>= 1;
  }
  return acc;
}

FieldValue FieldCtx::inv(FieldValue a) const {
  if (a == 0) throw DomainError("FieldCtx::inv: zero has no inverse");
  return pow(a, q_ - 2);
}

unsigned FieldCtx::coeff(FieldValue v, unsigned i) const {
  if (i >= m_) throw UsageError("FieldCtx::coeff: index out of range");
  for (unsigned j = 0; j < i; ++j) v /= l_;
  return v % l_;
}

FieldValue FieldCtx::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != m_) throw UsageError("FieldCtx::from_coeffs: need exactly m coefficients");
  FieldValue out = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (coeffs[i] >= l_) throw UsageError("FieldCtx::from_coeffs: coefficient out of range");
    out += coeffs[i] * mult;
    mult *= l_;
  }
  return out;
}

unsigned FieldCtx::trace(FieldValue v) const {
  if (l_ == 2) {
    unsigned acc = 0;
    for (unsigned i = 0; i < m_; ++i)
      acc ^= ((v >> i) & 1u) & basis_trace_[i];
    return acc;
  }
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < m_; ++i, v /= l_) acc += static_cast<std::uint64_t>(v % l_) * basis_trace_[i];
  return static_cast<unsigned>(acc % l_);
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return l_ == other.l_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << l_;
  if (m_ > 1) os << "^" << m_;
  os << "), modulus";
  bool first = true;
  for (int i = static_cast<int>(m_); i >= 0; --i) {
    if (!modulus_[i]) continue;
    os << (first ? " " : "+");
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FieldElement::FieldElement(const FieldCtx& ctx, FieldValue v) : ctx_(&ctx), v_(v) {
  if (v >= ctx.size()) throw UsageError("FieldElement: value out of range");
}

namespace {
const FieldCtx& require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx().same_field(b.ctx()))
    throw UsageError("FieldElement: mismatched field contexts");
  return a.ctx();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldCtx& f = require_same(a, b);
  return {f, f.add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldCtx& f = require_same(a, b);
  return {f, f.sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldCtx& f = require_same(a, b);
  return {f, f.mul(a.value(), b.value())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const FieldCtx& f = require_same(a, b);
  return {f, f.mul(a.value(), f.inv(b.value()))};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.ctx().same_field(b.ctx()) && a.value() == b.value();
}

std::complex<double> additive_character(const FieldCtx& ctx, FieldValue v) {
  return ctx.character(v);
}

}  // namespace mpcodes
