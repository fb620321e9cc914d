#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mpcodes/gf.hpp"

namespace mpcodes {

using Integer = mpz_class;

/// Weight enumerator of the dual code, computed exactly from the code's own
/// enumerator via Krawtchouk transforms. `weights` must hold counts A_0..A_n
/// with A_0 = 1 and sum q^k; non-integral or negative output means the input
/// was not a weight enumerator and raises UsageError.
std::vector<Integer> macwilliams_transform(const std::vector<Integer>& weights, unsigned n,
                                           unsigned k, unsigned q);

/// First wmax+1 entries of the transform (direct Krawtchouk sums).
std::vector<Integer> macwilliams_prefix(const std::vector<Integer>& weights, unsigned n,
                                        unsigned k, unsigned q, unsigned wmax);

/// Exact weight histogram of the span of `gens` (each a length-n word over
/// ctx). Budget: 2^26 combinations for binary fields, 2^24 otherwise.
std::vector<Integer> span_weight_histogram(const FieldCtx& ctx,
                                           const std::vector<std::vector<FieldValue>>& gens,
                                           unsigned n);

/// Linear [n, k] block code over GF(q), held as an n x k generator matrix H
/// whose rows h_t are the per-coordinate functionals: codewords are
/// c(x) = H x^T for x in GF(q)^k.
///
/// Weight data (enumerators, distances, the weight-4 dual count) is cached
/// lazily and computed exactly; requests whose exact computation would exceed
/// the enumeration budgets raise ResourceError rather than estimating.
class LinearCode {
 public:
  /// Streaming enumeration budget (q^k).
  static constexpr double kEnumerationBudget = 1 << 24;

  LinearCode(FieldCtx ctx, const std::vector<std::vector<FieldValue>>& rows,
             std::string name = "");

  /// Text format: header "q n k", then n rows of k entries in [0, q).
  /// Rows may be whitespace-separated integers or, for q <= 10, contiguous
  /// digit strings. Entries are packed polynomial-basis values.
  static LinearCode from_file(const std::filesystem::path& path);

  static LinearCode repetition(const FieldCtx& ctx, unsigned n);

  /// Binary [2^m-1, 2m] code spanned by the preferred pair (u, u[3]) of
  /// m-sequences, m odd, 3 <= m <= 13. Row t pairs (a, b) with
  /// tr(a alpha^t) + tr(b alpha^{3t}) for the primitive element alpha.
  /// Construction verifies rank 2m and dual distance >= 5.
  static LinearCode gold(unsigned m);

  /// [2^m-1, m] code whose rows are all distinct nonzero vectors, 2 <= m <= 16.
  static LinearCode simplex(unsigned m);

  /// Dual of the simplex code: [2^m-1, 2^m-1-m], 2 <= m <= 16.
  static LinearCode hamming(unsigned m);

  const FieldCtx& field() const { return *ctx_; }
  unsigned length() const { return n_; }
  unsigned dimension() const { return k_; }
  const std::string& name() const { return name_; }
  Integer codeword_count() const;

  std::span<const FieldValue> row(unsigned t) const;
  bool rows_distinct() const { return rows_distinct_; }
  bool rows_nonzero() const { return rows_nonzero_; }
  /// Set when construction saw duplicate rows (the solution-count dichotomy
  /// assumes distinct rows; counting operations still work).
  bool duplicate_row_warning() const { return !rows_distinct_; }

  void codeword(std::span<const FieldValue> x, std::span<FieldValue> out) const;
  std::vector<FieldValue> codeword(std::span<const FieldValue> x) const;

  /// Yields all q^k codewords, lexicographic in x (leftmost digit most
  /// significant). ResourceError beyond the 2^24 streaming budget.
  void enumerate_codewords(const std::function<void(std::span<const FieldValue>)>& fn) const;

  const std::vector<Integer>& weight_distribution() const;
  const std::vector<Integer>& dual_weight_distribution() const;
  unsigned min_distance() const;
  unsigned dual_distance() const;
  /// Number of weight-4 codewords of the dual code.
  const Integer& weight4_dual_count() const;

 private:
  struct Caches {
    std::optional<std::vector<Integer>> weights;
    std::optional<std::vector<Integer>> dual_weights;
    std::optional<unsigned> d;
    std::optional<unsigned> d_dual;
    std::optional<Integer> a4_dual;
  };
  struct CacheBox {
    std::mutex mu;
    Caches c;
  };

  const std::vector<Integer>& weight_distribution_locked() const;
  void dual_prefix_locked() const;  // fills d_dual and a4_dual

  std::shared_ptr<const FieldCtx> ctx_;
  unsigned n_ = 0, k_ = 0;
  std::string name_;
  std::vector<FieldValue> values_;       // n x k row-major
  std::vector<std::uint64_t> row_bits_;  // binary fields: n x words packed rows
  unsigned words_per_row_ = 0;
  bool rows_distinct_ = false;
  bool rows_nonzero_ = false;

  mutable std::unique_ptr<CacheBox> cache_;
};

/// Deterministic basis of the right kernel {x : M x = 0} of a rows x cols
/// matrix over ctx (row-major), via reduced row echelon form.
std::vector<std::vector<FieldValue>> gf_kernel_basis(const FieldCtx& ctx,
                                                     std::vector<FieldValue> mat, unsigned rows,
                                                     unsigned cols);

/// Rank of a rows x cols matrix over ctx (row-major; destroys its copy).
unsigned gf_rank(const FieldCtx& ctx, std::vector<FieldValue> mat, unsigned rows, unsigned cols);

}  // namespace mpcodes
