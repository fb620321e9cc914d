#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "mpcodes/codes.hpp"
#include "mpcodes/rng.hpp"

namespace mpcodes {

/// Component-wise additive character of a word; the zero word maps to the
/// all-ones vector.
Eigen::VectorXcd embed(const FieldCtx& ctx, std::span<const FieldValue> word);

/// p x n matrix whose rows are embedded codewords drawn i.i.d.-uniformly
/// (with replacement) from the code. Row i is RNG stream i of `seed`, so the
/// matrix is a pure function of (code, p, seed).
///
/// For binary fields the entries are exact +-1 and held in real storage; the
/// semantic type stays "complex unit".
class SampledMatrix {
 public:
  unsigned rows() const { return p_; }
  unsigned cols() const { return n_; }
  double aspect_ratio() const { return y_; }  ///< y = p/n
  std::uint64_t seed() const { return seed_; }
  const std::string& code_id() const { return code_id_; }

  bool is_real() const { return std::holds_alternative<Eigen::MatrixXd>(data_); }
  const Eigen::MatrixXd& real_data() const { return std::get<Eigen::MatrixXd>(data_); }
  const Eigen::MatrixXcd& complex_data() const { return std::get<Eigen::MatrixXcd>(data_); }
  std::complex<double> entry(unsigned i, unsigned j) const;

  /// Row-major CSV; complex entries occupy two adjacent fields (re, im).
  void write_csv(std::ostream& os) const;

 private:
  friend SampledMatrix sample_matrix(const LinearCode&, unsigned, std::uint64_t);
  SampledMatrix() = default;

  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> data_;
  unsigned p_ = 0, n_ = 0;
  double y_ = 0.0;
  std::uint64_t seed_ = 0;
  std::string code_id_;
};

/// Draw p codewords (1 <= p < n) and embed them. Deterministic in
/// (code, p, seed); rows may be regenerated independently.
SampledMatrix sample_matrix(const LinearCode& code, unsigned p, std::uint64_t seed);

/// Normalized Gram matrix G = (1/n) Phi Phi*: Hermitian, PSD, unit diagonal.
class GramMatrix {
 public:
  unsigned size() const { return p_; }
  unsigned sample_length() const { return n_; }
  double aspect_ratio() const { return y_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& code_id() const { return code_id_; }

  bool is_real() const { return std::holds_alternative<Eigen::MatrixXd>(data_); }
  const Eigen::MatrixXd& real_data() const { return std::get<Eigen::MatrixXd>(data_); }
  const Eigen::MatrixXcd& complex_data() const { return std::get<Eigen::MatrixXcd>(data_); }
  std::complex<double> entry(unsigned i, unsigned j) const;

 private:
  friend GramMatrix gram(const SampledMatrix&);
  GramMatrix() = default;

  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> data_;
  unsigned p_ = 0, n_ = 0;
  double y_ = 0.0;
  std::uint64_t seed_ = 0;
  std::string code_id_;
};

GramMatrix gram(const SampledMatrix& mat);

}  // namespace mpcodes
