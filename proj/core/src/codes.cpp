#include "mpcodes/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mpcodes {

namespace {

Integer integer_pow(unsigned base, unsigned exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  if (k > n) return Integer(0);
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void validate_enumerator(const std::vector<Integer>& weights, unsigned n, unsigned k,
                         unsigned q) {
  if (weights.size() != n + 1)
    throw UsageError("macwilliams: weight vector must have length n+1");
  Integer sum = 0;
  for (const Integer& w : weights) {
    if (w < 0) throw UsageError("macwilliams: weights must be nonnegative");
    sum += w;
  }
  if (sum != integer_pow(q, k))
    throw UsageError("macwilliams: weights must sum to q^k");
}

std::vector<Integer> divide_by_qk(std::vector<Integer> raw, unsigned k, unsigned q) {
  const Integer qk = integer_pow(q, k);
  for (Integer& v : raw) {
    if (v < 0 || !mpz_divisible_p(v.get_mpz_t(), qk.get_mpz_t()))
      throw UsageError("macwilliams: non-integral or negative output; input was not a weight enumerator");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), qk.get_mpz_t());
  }
  return raw;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<unsigned> gf_rref(const FieldCtx& f, std::vector<FieldValue>& mat, unsigned rows,
                              unsigned cols) {
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned c = 0; c < cols && r < rows; ++c) {
    unsigned pivot = rows;
    for (unsigned i = r; i < rows; ++i) {
      if (mat[i * cols + c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != r)
      for (unsigned j = 0; j < cols; ++j) std::swap(mat[pivot * cols + j], mat[r * cols + j]);
    const FieldValue scale = f.inv(mat[r * cols + c]);
    for (unsigned j = 0; j < cols; ++j) mat[r * cols + j] = f.mul(mat[r * cols + j], scale);
    for (unsigned i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FieldValue factor = mat[i * cols + c];
      if (factor == 0) continue;
      for (unsigned j = 0; j < cols; ++j)
        mat[i * cols + j] = f.sub(mat[i * cols + j], f.mul(factor, mat[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

unsigned gf_rank(const FieldCtx& ctx, std::vector<FieldValue> mat, unsigned rows, unsigned cols) {
  return static_cast<unsigned>(gf_rref(ctx, mat, rows, cols).size());
}

std::vector<std::vector<FieldValue>> gf_kernel_basis(const FieldCtx& ctx,
                                                     std::vector<FieldValue> mat, unsigned rows,
                                                     unsigned cols) {
  const std::vector<unsigned> pivots = gf_rref(ctx, mat, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (unsigned c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldValue>> basis;
  for (unsigned fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<FieldValue> x(cols, 0);
    x[fcol] = 1;
    for (unsigned pr = 0; pr < pivots.size(); ++pr)
      x[pivots[pr]] = ctx.neg(mat[pr * cols + fcol]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Integer> span_weight_histogram(const FieldCtx& ctx,
                                           const std::vector<std::vector<FieldValue>>& gens,
                                           unsigned n) {
  const unsigned g = static_cast<unsigned>(gens.size());
  for (const auto& gen : gens)
    if (gen.size() != n) throw UsageError("span_weight_histogram: generator length mismatch");

  std::vector<std::uint64_t> hist(n + 1, 0);

  if (ctx.characteristic() == 2) {
    if (g > 26) throw ResourceError("span_weight_histogram: span exceeds the 2^26 budget");
    const unsigned words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(g) * words, 0);
    for (unsigned j = 0; j < g; ++j)
      for (unsigned t = 0; t < n; ++t)
        if (gens[j][t]) bits[static_cast<std::size_t>(j) * words + t / 64] |= 1ull << (t % 64);

    std::vector<std::uint64_t> acc(words, 0);
    hist[0] = 1;
    const std::uint64_t total = 1ull << g;
    for (std::uint64_t i = 1; i < total; ++i) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(i));  // Gray step
      unsigned wt = 0;
      const std::uint64_t* row = bits.data() + static_cast<std::size_t>(j) * words;
      for (unsigned w = 0; w < words; ++w) {
        acc[w] ^= row[w];
        wt += static_cast<unsigned>(std::popcount(acc[w]));
      }
      ++hist[wt];
    }
  } else {
    const unsigned q = ctx.size();
    if (std::pow(static_cast<double>(q), static_cast<double>(g)) >
        static_cast<double>(1u << 24))
      throw ResourceError("span_weight_histogram: span exceeds the 2^24 budget");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < g; ++i) total *= q;

    std::vector<unsigned> digits(g, 0);
    std::vector<FieldValue> acc(n, 0);
    hist[0] = 1;
    for (std::uint64_t i = 1; i < total; ++i) {
      unsigned pos = 0;
      for (;;) {
        const auto& gen = gens[pos];
        for (unsigned t = 0; t < n; ++t) acc[t] = ctx.add(acc[t], gen[t]);
        if (++digits[pos] < q) break;
        digits[pos] = 0;
        ++pos;
      }
      unsigned wt = 0;
      for (unsigned t = 0; t < n; ++t) wt += acc[t] != 0;
      ++hist[wt];
    }
  }

  std::vector<Integer> out(n + 1);
  for (unsigned w = 0; w <= n; ++w) out[w] = Integer(static_cast<unsigned long>(hist[w]));
  return out;
}

std::vector<Integer> macwilliams_transform(const std::vector<Integer>& weights, unsigned n,
                                           unsigned k, unsigned q) {
  validate_enumerator(weights, n, k, q);
  // Output entries carry ~k log2(q) bits each; refuse absurd materializations.
  const double est_bytes =
      (n + 1.0) * (static_cast<double>(k) * std::log2(static_cast<double>(q)) / 8.0 + 32.0);
  if (est_bytes > 256.0 * 1024.0 * 1024.0)
    throw ResourceError("macwilliams: full transform output exceeds the memory budget");

  std::vector<Integer> raw(n + 1, Integer(0));
  for (unsigned w = 0; w <= n; ++w) {
    if (weights[w] == 0) continue;
    // Krawtchouk column K_j(w) by the exact three-term recurrence.
    Integer k_prev = 1;
    raw[0] += weights[w];
    if (n == 0) continue;
    Integer k_cur = Integer(static_cast<long>(q - 1) * static_cast<long>(n - w)) -
                    Integer(static_cast<long>(w));
    raw[1] += weights[w] * k_cur;
    for (unsigned j = 1; j < n; ++j) {
      Integer coeff_cur = Integer(static_cast<long>(j) +
                                  static_cast<long>(q - 1) * static_cast<long>(n - j)) -
                          Integer(static_cast<long>(q) * static_cast<long>(w));
      Integer next = coeff_cur * k_cur -
                     Integer(static_cast<long>(q - 1) * (static_cast<long>(n) - j + 1)) * k_prev;
      const Integer div(static_cast<long>(j) + 1);
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), div.get_mpz_t());
      raw[j + 1] += weights[w] * next;
      k_prev = k_cur;
      k_cur = next;
    }
  }
  return divide_by_qk(std::move(raw), k, q);
}

std::vector<Integer> macwilliams_prefix(const std::vector<Integer>& weights, unsigned n,
                                        unsigned k, unsigned q, unsigned wmax) {
  validate_enumerator(weights, n, k, q);
  if (wmax > n) wmax = n;
  std::vector<Integer> raw(wmax + 1, Integer(0));
  for (unsigned w = 0; w <= n; ++w) {
    if (weights[w] == 0) continue;
    for (unsigned j = 0; j <= wmax; ++j) {
      Integer kj = 0;
      const unsigned imax = std::min(j, w);
      for (unsigned i = 0; i <= imax; ++i) {
        Integer term = binomial(w, i) * binomial(n - w, j - i) *
                       integer_pow(q - 1, j - i);
        if (i & 1)
          kj -= term;
        else
          kj += term;
      }
      raw[j] += weights[w] * kj;
    }
  }
  return divide_by_qk(std::move(raw), k, q);
}

LinearCode::LinearCode(FieldCtx ctx, const std::vector<std::vector<FieldValue>>& rows,
                       std::string name)
    : ctx_(std::make_shared<const FieldCtx>(std::move(ctx))),
      name_(std::move(name)),
      cache_(std::make_unique<CacheBox>()) {
  n_ = static_cast<unsigned>(rows.size());
  if (n_ == 0) throw UsageError("LinearCode: empty generator matrix");
  k_ = static_cast<unsigned>(rows[0].size());
  if (k_ < 1) throw UsageError("LinearCode: dimension must be >= 1");
  if (n_ <= k_) throw UsageError("LinearCode: requires n > k");

  values_.resize(static_cast<std::size_t>(n_) * k_);
  for (unsigned t = 0; t < n_; ++t) {
    if (rows[t].size() != k_) throw UsageError("LinearCode: ragged generator matrix");
    for (unsigned j = 0; j < k_; ++j) {
      if (rows[t][j] >= ctx_->size()) throw UsageError("LinearCode: entry out of field range");
      values_[static_cast<std::size_t>(t) * k_ + j] = rows[t][j];
    }
  }

  if (gf_rank(*ctx_, values_, n_, k_) != k_)
    throw UsageError("LinearCode: rank-deficient generator matrix (dimension would be < k)");

  rows_nonzero_ = true;
  for (unsigned t = 0; t < n_ && rows_nonzero_; ++t) {
    bool any = false;
    for (unsigned j = 0; j < k_; ++j) any |= values_[static_cast<std::size_t>(t) * k_ + j] != 0;
    rows_nonzero_ = any;
  }
  {
    std::vector<std::vector<FieldValue>> sorted(rows.begin(), rows.end());
    std::sort(sorted.begin(), sorted.end());
    rows_distinct_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  if (ctx_->characteristic() == 2) {
    words_per_row_ = (k_ + 63) / 64;
    row_bits_.assign(static_cast<std::size_t>(n_) * words_per_row_, 0);
    for (unsigned t = 0; t < n_; ++t)
      for (unsigned j = 0; j < k_; ++j)
        if (values_[static_cast<std::size_t>(t) * k_ + j])
          row_bits_[static_cast<std::size_t>(t) * words_per_row_ + j / 64] |= 1ull << (j % 64);
  }

  if (name_.empty()) {
    std::ostringstream os;
    os << "[" << n_ << "," << k_ << "] over " << ctx_->describe();
    name_ = os.str();
  }
}

Integer LinearCode::codeword_count() const { return integer_pow(ctx_->size(), k_); }

std::span<const FieldValue> LinearCode::row(unsigned t) const {
  if (t >= n_) throw UsageError("LinearCode::row: index out of range");
  return {values_.data() + static_cast<std::size_t>(t) * k_, k_};
}

void LinearCode::codeword(std::span<const FieldValue> x, std::span<FieldValue> out) const {
  if (x.size() != k_ || out.size() != n_)
    throw UsageError("LinearCode::codeword: size mismatch");
  if (!row_bits_.empty()) {
    std::uint64_t xw[16];
    std::vector<std::uint64_t> xw_heap;
    std::uint64_t* packed = xw;
    if (words_per_row_ > 16) {
      xw_heap.assign(words_per_row_, 0);
      packed = xw_heap.data();
    } else {
      std::fill(xw, xw + words_per_row_, 0);
    }
    for (unsigned j = 0; j < k_; ++j)
      if (x[j]) packed[j / 64] |= 1ull << (j % 64);
    for (unsigned t = 0; t < n_; ++t) {
      unsigned par = 0;
      const std::uint64_t* rb = row_bits_.data() + static_cast<std::size_t>(t) * words_per_row_;
      for (unsigned w = 0; w < words_per_row_; ++w)
        par ^= static_cast<unsigned>(std::popcount(rb[w] & packed[w]));
      out[t] = par & 1u;
    }
    return;
  }
  const FieldCtx& f = *ctx_;
  for (unsigned t = 0; t < n_; ++t) {
    FieldValue acc = 0;
    const FieldValue* r = values_.data() + static_cast<std::size_t>(t) * k_;
    for (unsigned j = 0; j < k_; ++j)
      if (r[j] && x[j]) acc = f.add(acc, f.mul(r[j], x[j]));
    out[t] = acc;
  }
}

std::vector<FieldValue> LinearCode::codeword(std::span<const FieldValue> x) const {
  std::vector<FieldValue> out(n_);
  codeword(x, out);
  return out;
}

void LinearCode::enumerate_codewords(
    const std::function<void(std::span<const FieldValue>)>& fn) const {
  const unsigned q = ctx_->size();
  if (std::pow(static_cast<double>(q), static_cast<double>(k_)) > kEnumerationBudget)
    throw ResourceError(
        "enumerate_codewords: q^k exceeds the 2^24 streaming budget; use sampling instead");
  std::vector<FieldValue> x(k_, 0), cw(n_);
  for (;;) {
    codeword(x, cw);
    fn(cw);
    // lexicographic in x: rightmost digit fastest
    int pos = static_cast<int>(k_) - 1;
    while (pos >= 0 && x[pos] == q - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
}

namespace {
bool span_enumerable(const FieldCtx& f, unsigned g) {
  if (f.characteristic() == 2) return g <= 26;
  return std::pow(static_cast<double>(f.size()), static_cast<double>(g)) <=
         static_cast<double>(1u << 24);
}
}  // namespace

const std::vector<Integer>& LinearCode::weight_distribution() const {
  std::scoped_lock lk(cache_->mu);
  return weight_distribution_locked();
}

const std::vector<Integer>& LinearCode::weight_distribution_locked() const {
  Caches& c = cache_->c;
  if (c.weights) return *c.weights;
  if (span_enumerable(*ctx_, k_)) {
    std::vector<std::vector<FieldValue>> cols(k_, std::vector<FieldValue>(n_));
    for (unsigned j = 0; j < k_; ++j)
      for (unsigned t = 0; t < n_; ++t)
        cols[j][t] = values_[static_cast<std::size_t>(t) * k_ + j];
    c.weights = span_weight_histogram(*ctx_, cols, n_);
    return *c.weights;
  }
  if (span_enumerable(*ctx_, n_ - k_)) {
    if (!c.dual_weights) {
      std::vector<FieldValue> ht(static_cast<std::size_t>(k_) * n_);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned t = 0; t < n_; ++t)
          ht[static_cast<std::size_t>(i) * n_ + t] = values_[static_cast<std::size_t>(t) * k_ + i];
      c.dual_weights = span_weight_histogram(*ctx_, gf_kernel_basis(*ctx_, ht, k_, n_), n_);
    }
    c.weights = macwilliams_transform(*c.dual_weights, n_, n_ - k_, ctx_->size());
    return *c.weights;
  }
  throw ResourceError(
      "weight distribution unavailable: both the code and its dual exceed the enumeration "
      "budget");
}

const std::vector<Integer>& LinearCode::dual_weight_distribution() const {
  std::scoped_lock lk(cache_->mu);
  Caches& c = cache_->c;
  if (c.dual_weights) return *c.dual_weights;
  if (span_enumerable(*ctx_, n_ - k_)) {
    std::vector<FieldValue> ht(static_cast<std::size_t>(k_) * n_);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned t = 0; t < n_; ++t)
        ht[static_cast<std::size_t>(i) * n_ + t] = values_[static_cast<std::size_t>(t) * k_ + i];
    c.dual_weights = span_weight_histogram(*ctx_, gf_kernel_basis(*ctx_, ht, k_, n_), n_);
    return *c.dual_weights;
  }
  c.dual_weights = macwilliams_transform(weight_distribution_locked(), n_, k_, ctx_->size());
  return *c.dual_weights;
}

void LinearCode::dual_prefix_locked() const {
  Caches& c = cache_->c;
  if (c.d_dual && c.a4_dual) return;

  auto read_from = [&](const std::vector<Integer>& dual) {
    unsigned dd = 0;
    for (unsigned w = 1; w <= n_; ++w)
      if (dual[w] > 0) {
        dd = w;
        break;
      }
    c.d_dual = dd;
    c.a4_dual = n_ >= 4 ? dual[4] : Integer(0);
  };

  if (c.dual_weights) {
    read_from(*c.dual_weights);
    return;
  }
  if (span_enumerable(*ctx_, k_)) {
    const auto& w = weight_distribution_locked();
    unsigned wmax = std::min(n_, 8u);
    for (;;) {
      const auto prefix = macwilliams_prefix(w, n_, k_, ctx_->size(), wmax);
      unsigned dd = 0;
      for (unsigned j = 1; j < prefix.size(); ++j)
        if (prefix[j] > 0) {
          dd = j;
          break;
        }
      if (dd != 0 || wmax == n_) {
        c.d_dual = dd;
        c.a4_dual = n_ >= 4 && prefix.size() > 4 ? prefix[4]
                    : n_ >= 4 ? macwilliams_prefix(w, n_, k_, ctx_->size(), 4)[4]
                              : Integer(0);
        return;
      }
      wmax = std::min(n_, wmax * 2);
    }
  }
  if (span_enumerable(*ctx_, n_ - k_)) {
    read_from(dual_weight_distribution());
    return;
  }
  throw ResourceError("dual distance unavailable: enumeration budgets exceeded");
}

unsigned LinearCode::min_distance() const {
  std::scoped_lock lk(cache_->mu);
  Caches& c = cache_->c;
  if (!c.d) {
    const auto& w = weight_distribution_locked();
    unsigned d = 0;
    for (unsigned i = 1; i <= n_; ++i)
      if (w[i] > 0) {
        d = i;
        break;
      }
    c.d = d;
  }
  return *c.d;
}

unsigned LinearCode::dual_distance() const {
  std::scoped_lock lk(cache_->mu);
  dual_prefix_locked();
  return *cache_->c.d_dual;
}

const Integer& LinearCode::weight4_dual_count() const {
  std::scoped_lock lk(cache_->mu);
  dual_prefix_locked();
  return *cache_->c.a4_dual;
}

LinearCode LinearCode::repetition(const FieldCtx& ctx, unsigned n) {
  if (n < 2) throw UsageError("repetition: length must be >= 2");
  std::vector<std::vector<FieldValue>> rows(n, std::vector<FieldValue>{1});
  std::ostringstream os;
  os << "repetition(n=" << n << ",q=" << ctx.size() << ")";
  return LinearCode(ctx, rows, os.str());
}

LinearCode LinearCode::gold(unsigned m) {
  if (m % 2 == 0) throw UsageError("gold: m must be odd (preferred pair existence)");
  if (m < 3 || m > 13) throw UsageError("gold: m out of the supported range [3, 13]");
  FieldCtx f(2, m);
  const unsigned n = (1u << m) - 1;
  const unsigned k = 2 * m;
  const FieldValue alpha = f.generator();
  std::vector<std::vector<FieldValue>> rows(n, std::vector<FieldValue>(k));
  FieldValue at = 1;
  for (unsigned t = 0; t < n; ++t) {
    const FieldValue bt = f.mul(at, f.mul(at, at));  // alpha^{3t}
    for (unsigned j = 0; j < m; ++j) {
      const FieldValue xj = static_cast<FieldValue>(1u << j);
      rows[t][j] = f.trace(f.mul(xj, at));
      rows[t][m + j] = f.trace(f.mul(xj, bt));
    }
    at = f.mul(at, alpha);
  }
  LinearCode code(FieldCtx(2, 1), rows, "gold(m=" + std::to_string(m) + ")");
  const unsigned dd = code.dual_distance();
  if (dd < 5)
    throw UsageError("gold: constructed code has dual distance " + std::to_string(dd) +
                     " < 5; primitive polynomial unsuitable");
  return code;
}

LinearCode LinearCode::simplex(unsigned m) {
  if (m < 2 || m > 16) throw UsageError("simplex: m out of the supported range [2, 16]");
  const unsigned n = (1u << m) - 1;
  std::vector<std::vector<FieldValue>> rows(n, std::vector<FieldValue>(m));
  for (unsigned t = 1; t <= n; ++t)
    for (unsigned j = 0; j < m; ++j) rows[t - 1][j] = (t >> j) & 1u;
  return LinearCode(FieldCtx(2, 1), rows, "simplex(m=" + std::to_string(m) + ")");
}

LinearCode LinearCode::hamming(unsigned m) {
  if (m < 2 || m > 16) throw UsageError("hamming: m out of the supported range [2, 16]");
  const unsigned n = (1u << m) - 1;
  FieldCtx f(2, 1);
  // Kernel of the simplex generator's transpose: m equations in n unknowns.
  std::vector<FieldValue> mt(static_cast<std::size_t>(m) * n);
  for (unsigned t = 1; t <= n; ++t)
    for (unsigned j = 0; j < m; ++j)
      mt[static_cast<std::size_t>(j) * n + (t - 1)] = (t >> j) & 1u;
  const auto basis = gf_kernel_basis(f, mt, m, n);
  const unsigned k = static_cast<unsigned>(basis.size());
  std::vector<std::vector<FieldValue>> rows(n, std::vector<FieldValue>(k));
  for (unsigned t = 0; t < n; ++t)
    for (unsigned j = 0; j < k; ++j) rows[t][j] = basis[j][t];
  return LinearCode(std::move(f), rows, "hamming(m=" + std::to_string(m) + ")");
}

LinearCode LinearCode::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open generator matrix file: " + path.string());
  unsigned q = 0, n = 0, k = 0;
  if (!(in >> q >> n >> k)) throw UsageError("matrix file: expected header \"q n k\"");
  if (q < 2) throw UsageError("matrix file: q must be >= 2");

  unsigned l = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      l = d;
      break;
    }
  unsigned m = 0;
  {
    unsigned tmp = q;
    while (tmp % l == 0) {
      tmp /= l;
      ++m;
    }
    if (tmp != 1) throw UsageError("matrix file: q must be a prime power");
  }

  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  std::vector<std::vector<FieldValue>> rows(n, std::vector<FieldValue>(k));
  if (tokens.size() == static_cast<std::size_t>(n) * k) {
    for (unsigned t = 0; t < n; ++t)
      for (unsigned j = 0; j < k; ++j) {
        const long v = std::stol(tokens[static_cast<std::size_t>(t) * k + j]);
        if (v < 0 || v >= static_cast<long>(q))
          throw UsageError("matrix file: entry out of range");
        rows[t][j] = static_cast<FieldValue>(v);
      }
  } else if (tokens.size() == n && q <= 10) {
    for (unsigned t = 0; t < n; ++t) {
      if (tokens[t].size() != k) throw UsageError("matrix file: row has wrong length");
      for (unsigned j = 0; j < k; ++j) {
        const char ch = tokens[t][j];
        if (ch < '0' || ch >= static_cast<char>('0' + q))
          throw UsageError("matrix file: digit out of range");
        rows[t][j] = static_cast<FieldValue>(ch - '0');
      }
    }
  } else {
    throw UsageError("matrix file: expected n*k entries or n digit rows");
  }

  return LinearCode(FieldCtx(l, m), rows, "matrix(" + path.filename().string() + ")");
}

}  // namespace mpcodes
