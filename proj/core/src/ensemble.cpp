#include "mpcodes/ensemble.hpp"

#include <ostream>
#include <vector>

namespace mpcodes {

Eigen::VectorXcd embed(const FieldCtx& ctx, std::span<const FieldValue> word) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(word.size()));
  for (std::size_t i = 0; i < word.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = ctx.character(word[i]);
  return out;
}

SampledMatrix sample_matrix(const LinearCode& code, unsigned p, std::uint64_t seed) {
  const unsigned n = code.length();
  if (p < 1 || p >= n)
    throw UsageError("sample_matrix: requires 1 <= p < n");
  const FieldCtx& f = code.field();
  const unsigned q = f.size();
  const unsigned k = code.dimension();

  SampledMatrix out;
  out.p_ = p;
  out.n_ = n;
  out.y_ = static_cast<double>(p) / n;
  out.seed_ = seed;
  out.code_id_ = code.name();

  std::vector<FieldValue> x(k), cw(n);
  if (f.characteristic() == 2) {
    Eigen::MatrixXd mat(p, n);
    for (unsigned i = 0; i < p; ++i) {
      CounterRng rng = CounterRng::stream(seed, i);
      for (unsigned j = 0; j < k; ++j) x[j] = rng.next_below(q);
      code.codeword(x, cw);
      for (unsigned t = 0; t < n; ++t) mat(i, t) = cw[t] ? -1.0 : 1.0;
    }
    out.data_ = std::move(mat);
  } else {
    Eigen::MatrixXcd mat(p, n);
    for (unsigned i = 0; i < p; ++i) {
      CounterRng rng = CounterRng::stream(seed, i);
      for (unsigned j = 0; j < k; ++j) x[j] = rng.next_below(q);
      code.codeword(x, cw);
      for (unsigned t = 0; t < n; ++t) mat(i, t) = f.character(cw[t]);
    }
    out.data_ = std::move(mat);
  }
  return out;
}

std::complex<double> SampledMatrix::entry(unsigned i, unsigned j) const {
  if (is_real()) return {real_data()(i, j), 0.0};
  return complex_data()(i, j);
}

void SampledMatrix::write_csv(std::ostream& os) const {
  char buf[64];
  for (unsigned i = 0; i < p_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (j) os << ',';
      if (is_real()) {
        std::snprintf(buf, sizeof buf, "%.17g", real_data()(i, j));
        os << buf;
      } else {
        const auto z = complex_data()(i, j);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
        os << buf;
      }
    }
    os << '\n';
  }
}

GramMatrix gram(const SampledMatrix& mat) {
  GramMatrix out;
  out.p_ = mat.rows();
  out.n_ = mat.cols();
  out.y_ = mat.aspect_ratio();
  out.seed_ = mat.seed();
  out.code_id_ = mat.code_id();

  const double n = static_cast<double>(mat.cols());
  if (mat.is_real()) {
    Eigen::MatrixXd g = (mat.real_data() * mat.real_data().transpose()) / n;
    g.diagonal().setOnes();  // unit-modulus rows: exactly 1
    out.data_ = std::move(g);
  } else {
    Eigen::MatrixXcd g = (mat.complex_data() * mat.complex_data().adjoint()) / n;
    g.diagonal().setOnes();
    out.data_ = std::move(g);
  }
  return out;
}

std::complex<double> GramMatrix::entry(unsigned i, unsigned j) const {
  if (is_real()) return {real_data()(i, j), 0.0};
  return complex_data()(i, j);
}

}  // namespace mpcodes
