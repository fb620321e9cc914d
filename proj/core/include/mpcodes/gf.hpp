#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpcodes/errors.hpp"

namespace mpcodes {

/// Element of GF(l^m) in the polynomial basis, packed as sum_i c_i * l^i.
/// Value 0 is the zero element; for m >= 2 the value l encodes the basis
/// element x.
using FieldValue = std::uint32_t;

/// Immutable description of GF(q), q = l^m, with packed-value arithmetic.
///
/// Elements are vectors of m residues mod l over the basis 1, x, ..., x^{m-1},
/// reduced modulo a monic irreducible modulus polynomial. Irreducibility is
/// checked by trial division at construction. For l = 2 a built-in table of
/// standard primitive polynomials covers m <= 16; for other characteristics
/// the default modulus is the first monic polynomial (in packed order) that is
/// irreducible with x primitive. A user-supplied modulus may be any monic
/// irreducible polynomial.
class FieldCtx {
 public:
  /// Enumeration-based operations cap the field size here.
  static constexpr std::uint32_t kMaxFieldSize = 1u << 20;

  FieldCtx(unsigned l, unsigned m);
  FieldCtx(unsigned l, unsigned m, const std::vector<unsigned>& modulus_coeffs);

  unsigned characteristic() const { return l_; }
  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }

  /// Modulus coefficients c_0..c_m (monic: c_m = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  /// True when the class of x (or, for m = 1, the root of the modulus)
  /// generates the multiplicative group.
  bool has_primitive_generator() const { return x_primitive_; }
  FieldValue generator() const { return generator_; }

  FieldValue add(FieldValue a, FieldValue b) const;
  FieldValue sub(FieldValue a, FieldValue b) const;
  FieldValue neg(FieldValue a) const;
  FieldValue mul(FieldValue a, FieldValue b) const;
  FieldValue inv(FieldValue a) const;  ///< DomainError on zero
  FieldValue pow(FieldValue a, std::uint64_t e) const;

  unsigned coeff(FieldValue v, unsigned i) const;
  FieldValue from_coeffs(std::span<const unsigned> coeffs) const;

  /// Trace into the prime field, returned as a residue in [0, l).
  unsigned trace(FieldValue v) const;

  /// Standard additive character: the trace-indexed l-th root of unity.
  std::complex<double> character(FieldValue v) const { return unity_[trace(v)]; }
  std::span<const std::complex<double>> roots_of_unity() const { return unity_; }

  /// Same (l, m, modulus); such contexts are interchangeable.
  bool same_field(const FieldCtx& other) const;

  std::string describe() const;

 private:
  void init();
  void build_tables();

  unsigned l_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::uint64_t modulus_bits_ = 0;                  // l == 2: packed modulus
  std::vector<std::vector<unsigned>> xpow_digits_;  // x^{m+j} mod f, unpacked
  std::vector<unsigned> basis_trace_;               // trace of x^i
  std::vector<std::complex<double>> unity_;
  FieldValue generator_ = 0;
  bool x_primitive_ = false;
};

/// Convenience value type pairing an element with its context.
class FieldElement {
 public:
  FieldElement(const FieldCtx& ctx, FieldValue v);

  FieldValue value() const { return v_; }
  const FieldCtx& ctx() const { return *ctx_; }
  unsigned coeff(unsigned i) const { return ctx_->coeff(v_, i); }

  FieldElement inverse() const { return {*ctx_, ctx_->inv(v_)}; }
  unsigned trace() const { return ctx_->trace(v_); }
  std::complex<double> character() const { return ctx_->character(v_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const FieldCtx* ctx_;
  FieldValue v_;
};

std::complex<double> additive_character(const FieldCtx& ctx, FieldValue v);

}  // namespace mpcodes
