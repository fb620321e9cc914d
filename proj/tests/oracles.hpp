#pragma once

// Test-side oracles, kept independent of the library paths they check:
// exhaustive map-space moment averages via direct matrix powers, and a
// self-contained binary dual enumeration for cross-checking transforms.

#include <complex>
#include <cstdint>
#include <vector>

#include "mpcodes/codes.hpp"

namespace oracles {

using mpcodes::FieldValue;
using mpcodes::LinearCode;

// All q^k codewords in the library's enumeration order.
inline std::vector<std::vector<FieldValue>> all_codewords(const LinearCode& code) {
  std::vector<std::vector<FieldValue>> out;
  code.enumerate_codewords(
      [&](std::span<const FieldValue> cw) { out.emplace_back(cw.begin(), cw.end()); });
  return out;
}

// Average of A_l(s) = (1/p) tr(G(s)^l) over every map s: [1,p] -> codewords,
// computed with plain complex arithmetic and explicit matrix powers (no
// eigensolver, no library Gram path).
inline double exhaustive_map_moment(const LinearCode& code, unsigned p, unsigned l) {
  const auto& f = code.field();
  const unsigned n = code.length();
  const auto words = all_codewords(code);
  const std::size_t N = words.size();

  // Pairwise inner products <c_i, c_j>/n.
  std::vector<std::complex<double>> ip(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      std::complex<double> acc = 0.0;
      for (unsigned t = 0; t < n; ++t)
        acc += f.character(words[i][t]) * std::conj(f.character(words[j][t]));
      ip[i * N + j] = acc / static_cast<double>(n);
    }

  std::vector<std::size_t> s(p, 0);
  std::vector<std::complex<double>> g(p * p), acc(p * p), tmp(p * p);
  double total = 0.0;
  std::uint64_t maps = 0;
  for (;;) {
    for (unsigned i = 0; i < p; ++i)
      for (unsigned j = 0; j < p; ++j) g[i * p + j] = ip[s[i] * N + s[j]];
    acc = g;
    for (unsigned e = 1; e < l; ++e) {
      for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
          std::complex<double> x = 0.0;
          for (unsigned r = 0; r < p; ++r) x += acc[i * p + r] * g[r * p + j];
          tmp[i * p + j] = x;
        }
      acc.swap(tmp);
    }
    std::complex<double> tr = 0.0;
    for (unsigned i = 0; i < p; ++i) tr += acc[i * p + i];
    total += tr.real() / p;
    ++maps;

    int pos = static_cast<int>(p) - 1;
    while (pos >= 0 && s[pos] == N - 1) s[pos--] = 0;
    if (pos < 0) break;
    ++s[pos];
  }
  return total / static_cast<double>(maps);
}

// Self-contained GF(2) dual enumeration: Gaussian elimination over bit
// vectors, then a full walk of the dual span. Entries of `rows` are the
// generator matrix rows (n x k).
inline std::vector<std::uint64_t> binary_dual_weights(
    const std::vector<std::vector<unsigned>>& rows) {
  const unsigned n = static_cast<unsigned>(rows.size());
  const unsigned k = static_cast<unsigned>(rows[0].size());
  // H^T as k rows of n bits.
  std::vector<std::vector<unsigned>> m(k, std::vector<unsigned>(n));
  for (unsigned t = 0; t < n; ++t)
    for (unsigned j = 0; j < k; ++j) m[j][t] = rows[t][j];

  // Row reduce.
  std::vector<int> pivot_of_row;
  unsigned r = 0;
  for (unsigned c = 0; c < n && r < k; ++c) {
    unsigned sel = k;
    for (unsigned i = r; i < k; ++i)
      if (m[i][c]) {
        sel = i;
        break;
      }
    if (sel == k) continue;
    std::swap(m[sel], m[r]);
    for (unsigned i = 0; i < k; ++i)
      if (i != r && m[i][c])
        for (unsigned t = 0; t < n; ++t) m[i][t] ^= m[r][t];
    pivot_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_of_row) is_pivot[static_cast<unsigned>(c)] = true;

  std::vector<std::vector<unsigned>> basis;
  for (unsigned fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<unsigned> x(n, 0);
    x[fcol] = 1;
    for (unsigned pr = 0; pr < pivot_of_row.size(); ++pr)
      x[static_cast<unsigned>(pivot_of_row[pr])] = m[pr][fcol];
    basis.push_back(std::move(x));
  }

  std::vector<std::uint64_t> hist(n + 1, 0);
  const std::size_t g = basis.size();
  std::vector<unsigned> acc(n, 0);
  hist[0] = 1;
  for (std::uint64_t i = 1; i < (1ull << g); ++i) {
    unsigned j = 0;
    while (!((i >> j) & 1)) ++j;  // Gray step
    for (unsigned t = 0; t < n; ++t) acc[t] ^= basis[j][t];
    unsigned wt = 0;
    for (unsigned t = 0; t < n; ++t) wt += acc[t];
    ++hist[wt];
  }
  return hist;
}

}  // namespace oracles
