#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "mpcodes/ensemble.hpp"
#include "mpcodes/spectra.hpp"

using namespace mpcodes;

TEST_CASE("embed: frozen examples") {
  FieldCtx f2(2, 1);
  const auto ones = embed(f2, std::vector<FieldValue>{0, 0, 0});
  CHECK(ones[0] == std::complex<double>(1, 0));
  CHECK(ones[1] == std::complex<double>(1, 0));
  CHECK(ones[2] == std::complex<double>(1, 0));

  const auto pm = embed(f2, std::vector<FieldValue>{1, 0, 1});
  CHECK(pm[0] == std::complex<double>(-1, 0));
  CHECK(pm[1] == std::complex<double>(1, 0));
  CHECK(pm[2] == std::complex<double>(-1, 0));

  FieldCtx f3(3, 1);
  const auto w = embed(f3, std::vector<FieldValue>{1, 2});
  CHECK(std::abs(w[0] - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-15);
  CHECK(std::abs(w[1] - std::polar(1.0, 4.0 * std::numbers::pi / 3.0)) < 1e-15);
}

TEST_CASE("sample_matrix: shape, determinism, entry values") {
  LinearCode gold5 = LinearCode::gold(5);
  const SampledMatrix a = sample_matrix(gold5, 15, 42);
  const SampledMatrix b = sample_matrix(gold5, 15, 42);
  const SampledMatrix c = sample_matrix(gold5, 15, 43);

  CHECK(a.rows() == 15);
  CHECK(a.cols() == 31);
  CHECK(a.aspect_ratio() == doctest::Approx(15.0 / 31.0));
  CHECK(a.is_real());
  CHECK(a.real_data() == b.real_data());  // bitwise
  CHECK(a.real_data() != c.real_data());
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j)
      CHECK(std::abs(std::abs(a.real_data()(i, j)) - 1.0) == 0.0);

  CHECK_THROWS_AS(sample_matrix(gold5, 31, 1), UsageError);
  CHECK_THROWS_AS(sample_matrix(gold5, 0, 1), UsageError);
}

TEST_CASE("sample_matrix: two-codeword code row distribution (chi-square)") {
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);
  unsigned pos = 0, neg = 0;
  for (unsigned s = 0; s < 5000; ++s) {
    const SampledMatrix m = sample_matrix(rep, 2, 0x1234u + s);
    for (unsigned i = 0; i < 2; ++i) {
      REQUIRE(std::abs(m.real_data()(i, 0) - m.real_data()(i, 1)) == 0.0);
      REQUIRE(std::abs(m.real_data()(i, 0) - m.real_data()(i, 2)) == 0.0);
      if (m.real_data()(i, 0) > 0)
        ++pos;
      else
        ++neg;
    }
  }
  const double total = pos + neg;
  const double expected = total / 2.0;
  const double chi2 = (pos - expected) * (pos - expected) / expected +
                      (neg - expected) * (neg - expected) / expected;
  CHECK(chi2 < 10.828);  // 1 dof at alpha = 0.001
}

TEST_CASE("sampling uniformity over codewords (4 sigma)") {
  LinearCode g3 = LinearCode::gold(3);  // 64 codewords
  std::map<std::vector<double>, unsigned> freq;
  const unsigned rows_total = 100000;
  const unsigned p = 4;
  for (unsigned s = 0; s < rows_total / p; ++s) {
    const SampledMatrix m = sample_matrix(g3, p, 0xfeedu + s);
    for (unsigned i = 0; i < p; ++i) {
      std::vector<double> row(7);
      for (unsigned t = 0; t < 7; ++t) row[t] = m.real_data()(i, t);
      ++freq[row];
    }
  }
  CHECK(freq.size() == 64);
  const double expect = rows_total / 64.0;
  const double sigma = std::sqrt(rows_total * (1.0 / 64) * (63.0 / 64));
  for (const auto& [row, count] : freq)
    CHECK(std::abs(count - expect) <= 4.0 * sigma);
}

TEST_CASE("gram: frozen small cases and invariants") {
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);

  // p = 1: the 1x1 identity.
  const GramMatrix g1 = gram(sample_matrix(rep, 1, 7));
  CHECK(g1.size() == 1);
  CHECK(g1.real_data()(0, 0) == 1.0);

  // Two identical rows: all-ones 2x2 with eigenvalues {0, 2}; two opposite
  // rows: +-1 off-diagonal with the same spectrum.
  for (unsigned seed = 0; seed < 8; ++seed) {
    const GramMatrix g = gram(sample_matrix(rep, 2, seed));
    CHECK(g.real_data()(0, 0) == 1.0);
    CHECK(g.real_data()(1, 1) == 1.0);
    CHECK(std::abs(std::abs(g.real_data()(0, 1)) - 1.0) < 1e-15);
    const SpectralSample s = eigenvalues(g);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("gram: trace equals p and PSD holds for sampled matrices") {
  LinearCode gold5 = LinearCode::gold(5);
  for (unsigned seed = 0; seed < 20; ++seed) {
    const GramMatrix g = gram(sample_matrix(gold5, 15, seed));
    double tr = 0.0;
    for (unsigned i = 0; i < g.size(); ++i) tr += g.real_data()(i, i);
    CHECK(tr == 15.0);  // diagonal pinned to exact ones
    const SpectralSample s = eigenvalues(g);
    CHECK(s.eigenvalues.front() >= 0.0);
    double sum = 0.0;
    for (double v : s.eigenvalues) sum += v;
    CHECK(sum == doctest::Approx(15.0).epsilon(1e-12));
    // Hermitian by construction.
    for (unsigned i = 0; i < g.size(); ++i)
      for (unsigned j = 0; j < g.size(); ++j)
        CHECK(std::abs(g.real_data()(i, j) - g.real_data()(j, i)) < 1e-12);
  }
}

TEST_CASE("complex field sampling path") {
  FieldCtx f3(3, 1);
  std::vector<std::vector<FieldValue>> rows{{1}, {2}, {1}, {0}};
  LinearCode code(f3, rows, "gf3-test");
  const SampledMatrix m = sample_matrix(code, 2, 5);
  CHECK_FALSE(m.is_real());
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 4; ++j)
      CHECK(std::abs(std::abs(m.complex_data()(i, j)) - 1.0) < 1e-15);
  const GramMatrix g = gram(m);
  CHECK(g.complex_data()(0, 0) == std::complex<double>(1, 0));
  CHECK(std::abs(g.complex_data()(0, 1) - std::conj(g.complex_data()(1, 0))) < 1e-12);
  const SpectralSample s = eigenvalues(g);
  CHECK(s.eigenvalues.front() >= 0.0);
}

TEST_CASE("csv export shape") {
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);
  const SampledMatrix m = sample_matrix(rep, 2, 1);
  std::ostringstream os;
  m.write_csv(os);
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(std::count(text.begin(), text.end(), ',') == 4);  // 3 fields per row

  FieldCtx f3(3, 1);
  LinearCode c3(f3, std::vector<std::vector<FieldValue>>{{1}, {2}, {0}}, "gf3");
  std::ostringstream os2;
  sample_matrix(c3, 2, 1).write_csv(os2);
  // complex: re,im pairs -> 6 fields per row
  const std::string t2 = os2.str();
  CHECK(std::count(t2.begin(), t2.end(), ',') == 10);
}
