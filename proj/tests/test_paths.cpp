#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mpcodes/moments.hpp"
#include "mpcodes/paths.hpp"
#include "oracles.hpp"

using namespace mpcodes;

namespace {

PathClass from_blocks(unsigned l, std::initializer_list<std::initializer_list<unsigned>> bs) {
  std::vector<std::vector<unsigned>> blocks;
  for (const auto& b : bs) blocks.emplace_back(b.begin(), b.end());
  return PathClass::from_blocks(l, blocks);
}

// W factor contributed by one reduction step.
unsigned step_exponent(const ReductionStep& s) {
  return s.kind == ReductionCase::kTransition ? 0u : 1u;
}

}  // namespace

TEST_CASE("enumeration: Bell numbers and canonical uniqueness") {
  const std::uint64_t bell[] = {0, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (unsigned l = 1; l <= 8; ++l) {
    const auto classes = enumerate_path_classes(l);
    CHECK(classes.size() == bell[l]);
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& c : classes) {
      CHECK(c.length() == l);
      CHECK(seen.insert(c.rgs()).second);
      CHECK(c.rgs()[0] == 0);  // restricted growth
    }
  }
  CHECK_THROWS_AS(enumerate_path_classes(11), ResourceError);
  CHECK_THROWS_AS(enumerate_path_classes(0), UsageError);
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(from_blocks(1, {{0}})));                    // trivial path
  CHECK(is_reduced(from_blocks(4, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_reduced(from_blocks(2, {{0}, {1}})));         // singleton blocks
  CHECK_FALSE(is_reduced(from_blocks(2, {{0, 1}})));           // consecutive
  CHECK_FALSE(is_reduced(from_blocks(4, {{0, 1}, {2, 3}})));   // consecutive inside blocks
  CHECK_FALSE(is_reduced(from_blocks(4, {{0, 3}, {1, 2}})));   // wrap pair 3,0
  CHECK(is_reduced(from_blocks(6, {{0, 2, 4}, {1, 3, 5}})));
}

TEST_CASE("reduce: the 9-index worked example") {
  const PathClass gamma = from_blocks(9, {{0, 1, 2, 7}, {3, 5, 8}, {4}, {6}});
  const ReductionTrace tr = reduce(gamma);
  CHECK(tr.case1 == 2);
  CHECK(tr.case2 == 1);
  CHECK(tr.case3 == 1);
  CHECK(tr.factor_exponent() == 3);  // W = n^3 W'
  CHECK(tr.final_kind == FinalKind::kReduced);
  REQUIRE(tr.final_path.has_value());
  CHECK(tr.final_path->length() == 4);
  CHECK(tr.final_path->block_count() == 2);
  CHECK(*tr.final_path == from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK_FALSE(tr.in_gamma());
}

TEST_CASE("reduce: degenerate small paths") {
  // l = 1: already reduced (trivial), zero steps.
  const ReductionTrace t1 = reduce(from_blocks(1, {{0}}));
  CHECK(t1.final_kind == FinalKind::kTrivial);
  CHECK(t1.steps.empty());
  CHECK(t1.in_gamma());

  // l = 2, two singletons: one leaf step to the empty path, factor n.
  const ReductionTrace t2 = reduce(from_blocks(2, {{0}, {1}}));
  CHECK(t2.final_kind == FinalKind::kEmpty);
  CHECK(t2.steps.size() == 1);
  CHECK(t2.case2 == 1);
  CHECK(t2.factor_exponent() == 1);
  CHECK(t2.in_gamma());

  // l = 2, one block: one consecutive step to the trivial path.
  const ReductionTrace t3 = reduce(from_blocks(2, {{0, 1}}));
  CHECK(t3.final_kind == FinalKind::kTrivial);
  CHECK(t3.case1 == 1);
  CHECK(t3.in_gamma());
}

TEST_CASE("reduce: bookkeeping invariants over all classes, l <= 6") {
  for (unsigned l = 1; l <= 6; ++l) {
    for_each_path_class(l, [&](const PathClass& cls) {
      const ReductionTrace tr = reduce(cls);
      const unsigned l_final = tr.final_kind == FinalKind::kEmpty ? 0 : tr.final_path->length();
      CHECK(l_final == cls.length() - tr.case1 - 2 * tr.case2 - tr.case3);
      if (tr.final_kind != FinalKind::kEmpty) {
        CHECK(tr.final_path->block_count() ==
              cls.block_count() - tr.case2 - tr.case3);
      } else {
        // The leaf's partner block vanishes with it in the l = 2 collapse.
        CHECK(cls.block_count() - tr.case2 - tr.case3 == 1);
      }
      if (tr.final_kind == FinalKind::kReduced) {
        CHECK(is_reduced(*tr.final_path));
        CHECK(tr.final_path->block_count() >= 2);
      }
    });
  }
}

TEST_CASE("reduce: confluence under randomized move order") {
  // Gamma membership, the reduced final shape, and the total W factor are
  // order-independent. At the bottom of Gamma the trivial and empty finals
  // are interchangeable conventions: W = n^e * W(final) with W(trivial) = n,
  // W(empty) = 1, so the normalized exponent e + [final trivial] is the
  // invariant quantity.
  auto total_exponent = [](const ReductionTrace& tr) {
    return tr.factor_exponent() + (tr.final_kind == FinalKind::kTrivial ? 1u : 0u);
  };
  std::mt19937 gen(2024);
  for (unsigned l = 1; l <= 7; ++l) {
    for_each_path_class(l, [&](const PathClass& cls) {
      const ReductionTrace pinned = reduce(cls);
      const unsigned shuffles = l <= 5 ? 20 : 5;
      for (unsigned rep = 0; rep < shuffles; ++rep) {
        const ReductionTrace rnd = reduce(
            cls,
            [&](std::span<const ReductionStep> moves) {
              return std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(gen);
            });
        CHECK(rnd.in_gamma() == pinned.in_gamma());
        if (pinned.final_kind == FinalKind::kReduced) {
          CHECK(rnd.final_kind == FinalKind::kReduced);
          CHECK(rnd.factor_exponent() == pinned.factor_exponent());
          CHECK(rnd.final_path->length() == pinned.final_path->length());
          CHECK(rnd.final_path->block_count() == pinned.final_path->block_count());
        } else {
          CHECK(total_exponent(rnd) == total_exponent(pinned));
          CHECK(total_exponent(rnd) == cls.length() - cls.block_count() + 1);
        }
      }
    });
  }
}

TEST_CASE("in_gamma: examples") {
  CHECK(in_gamma(from_blocks(1, {{0}})));
  CHECK(in_gamma(from_blocks(2, {{0}, {1}})));
  CHECK(in_gamma(from_blocks(2, {{0, 1}})));
  CHECK_FALSE(in_gamma(from_blocks(4, {{0, 2}, {1, 3}})));
}

TEST_CASE("narayana counts and Catalan row sums") {
  CHECK(narayana_count(2, 1) == 1);
  CHECK(narayana_count(2, 2) == 1);
  CHECK(narayana_count(4, 2) == 6);
  const std::uint64_t catalan[] = {1,    1,    2,    5,    14,   42,
                                   132,  429,  1430, 4862, 16796};
  for (unsigned l = 1; l <= 10; ++l) {
    std::uint64_t row = 0;
    for (unsigned v = 1; v <= l; ++v) row += narayana_count(l, v);
    CHECK(row == catalan[l]);
    CHECK(catalan_number(l) == Integer(static_cast<unsigned long>(catalan[l])));
  }
  CHECK_THROWS_AS(narayana_count(3, 0), UsageError);
  CHECK_THROWS_AS(narayana_count(3, 4), UsageError);
}

TEST_CASE("counting identity: exhaustive reduction counts match the formula") {
  for (unsigned l = 1; l <= 7; ++l) {
    std::vector<std::uint64_t> counts(l + 1, 0);
    for_each_path_class(l, [&](const PathClass& cls) {
      if (in_gamma(cls)) ++counts[cls.block_count()];
    });
    for (unsigned v = 1; v <= l; ++v) CHECK(counts[v] == narayana_count(l, v));
  }
}

TEST_CASE("count_path_solutions: closed forms on distinct-row codes") {
  LinearCode g3 = LinearCode::gold(3);        // n = 7, distinct rows
  LinearCode s4 = LinearCode::simplex(4);     // n = 15, distinct rows
  for (const LinearCode* code : {&g3, &s4}) {
    const unsigned n = code->length();
    // l = 1: the single class has W = n.
    CHECK(count_path_solutions(from_blocks(1, {{0}}), *code) == n);
    // l = 2 singletons force t_0 = t_1.
    CHECK(count_path_solutions(from_blocks(2, {{0}, {1}}), *code) == n);
    // l = 2 joint block is free.
    CHECK(count_path_solutions(from_blocks(2, {{0, 1}}), *code) ==
          static_cast<std::uint64_t>(n) * n);
  }

  // Duplicate rows break the forced equality: every pair solves it.
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);
  CHECK(count_path_solutions(from_blocks(2, {{0}, {1}}), rep) == 9);

  // Budget guard.
  CHECK_THROWS_AS(count_path_solutions(from_blocks(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}), s4),
                  ResourceError);
}

TEST_CASE("solution-count dichotomy on gold(3) and simplex(4), l <= 4") {
  LinearCode g3 = LinearCode::gold(3);
  LinearCode s4 = LinearCode::simplex(4);
  for (const LinearCode* code : {&g3, &s4}) {
    const unsigned n = code->length();
    const double ca =
        moment_error_constant(code->weight4_dual_count().get_d(), code->field().size());
    for (unsigned l = 1; l <= 4; ++l) {
      for_each_path_class(l, [&](const PathClass& cls) {
        const std::uint64_t w = count_path_solutions(cls, *code);
        const unsigned v = cls.block_count();
        if (in_gamma(cls)) {
          std::uint64_t expect = 1;
          for (unsigned e = 0; e < l - v + 1; ++e) expect *= n;
          CHECK(w == expect);
        } else {
          double cap = ca;
          for (unsigned e = 0; e < l - v; ++e) cap *= n;
          CHECK(static_cast<double>(w) <= cap);
        }
      });
    }
  }
}

TEST_CASE("reduction bookkeeping matches brute-force counts step by step") {
  LinearCode g3 = LinearCode::gold(3);
  const unsigned n = g3.length();
  for (unsigned l = 2; l <= 4; ++l) {
    for_each_path_class(l, [&](const PathClass& cls) {
      const ReductionTrace tr = reduce(
          cls, [](std::span<const ReductionStep>) { return std::size_t{0}; }, true);
      std::uint64_t w_prev = count_path_solutions(cls, g3);
      for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const std::uint64_t w_next = i < tr.intermediates.size()
                                         ? count_path_solutions(tr.intermediates[i], g3)
                                         : 1;  // empty path
        std::uint64_t factor = 1;
        for (unsigned e = 0; e < step_exponent(tr.steps[i]); ++e) factor *= n;
        CHECK(w_prev == factor * w_next);
        w_prev = w_next;
      }
    });
  }
}

TEST_CASE("exact_expected_moment: first moment is always 1") {
  LinearCode g3 = LinearCode::gold(3);
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);
  for (unsigned p : {1u, 2u, 3u, 7u})
    CHECK(exact_expected_moment(g3, p, 1) == 1.0);
  CHECK(exact_expected_moment(rep, 2, 1) == 1.0);
  CHECK(exact_expected_moment(rep, 10, 1) == 1.0);
}

TEST_CASE("exact_expected_moment equals the exhaustive map average") {
  LinearCode rep = LinearCode::repetition(FieldCtx(2, 1), 3);
  for (unsigned p : {2u, 3u}) {
    for (unsigned l = 1; l <= 4; ++l) {
      const double exact = exact_expected_moment(rep, p, l);
      const double brute = oracles::exhaustive_map_moment(rep, p, l);
      CHECK(exact == doctest::Approx(brute).epsilon(1e-12));
    }
  }
  CHECK(exact_expected_moment(rep, 2, 2) == doctest::Approx(2.0).epsilon(1e-13));

  LinearCode g3 = LinearCode::gold(3);
  for (unsigned l = 1; l <= 3; ++l) {
    const double exact = exact_expected_moment(g3, 2, l);
    const double brute = oracles::exhaustive_map_moment(g3, 2, l);
    CHECK(exact == doctest::Approx(brute).epsilon(1e-11));
  }

  // Non-binary route: [4,1] over GF(3).
  FieldCtx f3(3, 1);
  LinearCode c3(f3, std::vector<std::vector<FieldValue>>{{1}, {2}, {1}, {2}}, "gf3-small");
  for (unsigned l = 1; l <= 3; ++l) {
    const double exact = exact_expected_moment(c3, 2, l);
    const double brute = oracles::exhaustive_map_moment(c3, 2, l);
    CHECK(exact == doctest::Approx(brute).epsilon(1e-11));
  }
}
