#include "mpcodes/paths.hpp"

#include <algorithm>
#include <cmath>

namespace mpcodes {

namespace {

std::vector<std::uint8_t> canonical_rgs(std::vector<std::uint8_t> labels) {
  // Label values may exceed the current length mid-reduction; index by value.
  std::vector<int> remap(256, -1);
  std::uint8_t next = 0;
  for (auto& v : labels) {
    if (remap[v] < 0) remap[v] = next++;
    v = static_cast<std::uint8_t>(remap[v]);
  }
  return labels;
}

unsigned label_count(const std::vector<std::uint8_t>& labels) {
  unsigned v = 0;
  for (auto x : labels) v = std::max<unsigned>(v, x + 1u);
  return v;
}

}  // namespace

PathClass::PathClass(std::vector<std::uint8_t> labels) {
  if (labels.empty()) throw UsageError("PathClass: length must be >= 1");
  if (labels.size() > 255) throw UsageError("PathClass: length out of range");
  rgs_ = canonical_rgs(std::move(labels));
  v_ = label_count(rgs_);
}

PathClass PathClass::from_blocks(unsigned l, const std::vector<std::vector<unsigned>>& blocks) {
  std::vector<std::uint8_t> labels(l, 255);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (unsigned idx : blocks[b]) {
      if (idx >= l || labels[idx] != 255)
        throw UsageError("PathClass::from_blocks: blocks must partition 0..l-1");
      labels[idx] = static_cast<std::uint8_t>(b);
    }
  for (auto v : labels)
    if (v == 255) throw UsageError("PathClass::from_blocks: blocks must cover 0..l-1");
  return PathClass(std::move(labels));
}

std::vector<std::vector<unsigned>> PathClass::blocks() const {
  std::vector<std::vector<unsigned>> out(v_);
  for (unsigned i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

void for_each_path_class(unsigned l, const std::function<void(const PathClass&)>& fn) {
  if (l < 1) throw UsageError("for_each_path_class: l must be >= 1");
  if (l > kMaxPathLength)
    throw ResourceError("for_each_path_class: l exceeds the Bell-number budget (l <= 10)");
  std::vector<std::uint8_t> rgs(l, 0);
  // Restricted growth strings in lexicographic order.
  for (;;) {
    fn(PathClass(rgs));
    int pos = static_cast<int>(l) - 1;
    for (; pos >= 1; --pos) {
      std::uint8_t maxp = 0;
      for (int i = 0; i < pos; ++i) maxp = std::max(maxp, rgs[i]);
      if (rgs[pos] <= maxp) break;
    }
    if (pos < 1) break;
    ++rgs[pos];
    std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
  }
}

std::vector<PathClass> enumerate_path_classes(unsigned l) {
  std::vector<PathClass> out;
  for_each_path_class(l, [&](const PathClass& c) { out.push_back(c); });
  return out;
}

bool is_reduced(const PathClass& path) {
  const unsigned l = path.length();
  const unsigned v = path.block_count();
  if (l == 1) return v == 1;
  if (v < 2) return false;
  std::vector<unsigned> sizes(v, 0);
  for (unsigned i = 0; i < l; ++i) {
    ++sizes[path.label(i)];
    if (path.label(i) == path.label((i + 1) % l)) return false;
  }
  return std::all_of(sizes.begin(), sizes.end(), [](unsigned s) { return s >= 2; });
}

namespace {

// Moves applicable to a working labeling, in the pinned order:
// Case 1 ascending, then Case 2 ascending, then Case 3 ascending.
std::vector<ReductionStep> applicable_moves(const std::vector<std::uint8_t>& lab) {
  const unsigned l = static_cast<unsigned>(lab.size());
  std::vector<ReductionStep> moves;
  if (l < 2) return moves;

  std::vector<unsigned> block_size(label_count(lab), 0);
  for (auto x : lab) ++block_size[x];

  for (unsigned i = 0; i < l; ++i)
    if (lab[i] == lab[(i + 1) % l]) moves.push_back({ReductionCase::kConsecutive, i});
  for (unsigned i = 0; i < l; ++i) {
    if (block_size[lab[i]] != 1) continue;
    const std::uint8_t left = lab[(i + l - 1) % l];
    const std::uint8_t right = lab[(i + 1) % l];
    if (left == right && left != lab[i]) moves.push_back({ReductionCase::kLeaf, i});
  }
  for (unsigned i = 0; i < l; ++i) {
    if (block_size[lab[i]] != 1) continue;
    const std::uint8_t left = lab[(i + l - 1) % l];
    const std::uint8_t right = lab[(i + 1) % l];
    if (left != right && left != lab[i] && right != lab[i])
      moves.push_back({ReductionCase::kTransition, i});
  }
  return moves;
}

void apply_move(std::vector<std::uint8_t>& lab, const ReductionStep& step) {
  const unsigned l = static_cast<unsigned>(lab.size());
  switch (step.kind) {
    case ReductionCase::kConsecutive:
    case ReductionCase::kTransition:
      lab.erase(lab.begin() + step.index);
      break;
    case ReductionCase::kLeaf: {
      // Drop the leaf and its left neighbor; erase the larger index first.
      const unsigned a = step.index;
      const unsigned b = (step.index + l - 1) % l;
      lab.erase(lab.begin() + std::max(a, b));
      lab.erase(lab.begin() + std::min(a, b));
      break;
    }
  }
}

}  // namespace

ReductionTrace reduce(const PathClass& path, const MovePicker& pick,
                      bool capture_intermediates) {
  ReductionTrace trace;
  std::vector<std::uint8_t> lab(path.rgs());

  for (;;) {
    if (lab.empty()) {
      trace.final_kind = FinalKind::kEmpty;
      return trace;
    }
    if (lab.size() == 1) {
      trace.final_kind = FinalKind::kTrivial;
      trace.final_path = PathClass(lab);
      return trace;
    }
    const PathClass current(lab);
    if (is_reduced(current)) {
      trace.final_kind = FinalKind::kReduced;
      trace.final_path = current;
      return trace;
    }
    const auto moves = applicable_moves(lab);
    if (moves.empty())
      throw NumericalError("reduce: non-reduced path with no applicable move");  // unreachable
    const std::size_t choice = pick(moves);
    if (choice >= moves.size()) throw UsageError("reduce: move picker out of range");
    const ReductionStep step = moves[choice];
    apply_move(lab, step);
    trace.steps.push_back(step);
    switch (step.kind) {
      case ReductionCase::kConsecutive: ++trace.case1; break;
      case ReductionCase::kLeaf: ++trace.case2; break;
      case ReductionCase::kTransition: ++trace.case3; break;
    }
    if (capture_intermediates && !lab.empty()) trace.intermediates.emplace_back(lab);
  }
}

ReductionTrace reduce(const PathClass& path) {
  return reduce(path, [](std::span<const ReductionStep>) { return std::size_t{0}; }, false);
}

bool in_gamma(const PathClass& path) { return reduce(path).in_gamma(); }

std::uint64_t narayana_count(unsigned l, unsigned v) {
  if (v < 1 || v > l) throw UsageError("narayana_count: requires 1 <= v <= l");
  Integer num;
  mpz_bin_uiui(num.get_mpz_t(), l, v - 1);
  Integer num2;
  mpz_bin_uiui(num2.get_mpz_t(), l - 1, v - 1);
  num *= num2;
  const Integer div(static_cast<unsigned long>(v));
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), div.get_mpz_t());
  if (!num.fits_ulong_p()) throw RangeError("narayana_count: result exceeds 64 bits");
  return static_cast<std::uint64_t>(num.get_ui());
}

Integer catalan_number(unsigned l) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), 2 * l, l);
  const Integer div(static_cast<unsigned long>(l) + 1);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), div.get_mpz_t());
  return out;
}

namespace {

// Shared DFS skeleton for the solution counter. Positions are assigned in
// order; equation e receives +row(t_u) for label(u) == e and -row(t_u) for
// label(u+1) == e, and is checked as soon as its last contributor is placed.
struct SolverPlan {
  unsigned l = 0, v = 0;
  std::vector<std::uint8_t> plus_eq;   // label(u)
  std::vector<std::uint8_t> minus_eq;  // label(u+1)
  std::vector<std::vector<unsigned>> complete_at;  // equations finalized at depth u
};

SolverPlan make_plan(const PathClass& path) {
  SolverPlan plan;
  plan.l = path.length();
  plan.v = path.block_count();
  plan.plus_eq.resize(plan.l);
  plan.minus_eq.resize(plan.l);
  std::vector<unsigned> last_touch(plan.v, 0);
  for (unsigned u = 0; u < plan.l; ++u) {
    plan.plus_eq[u] = path.label(u);
    plan.minus_eq[u] = path.label((u + 1) % plan.l);
    last_touch[plan.plus_eq[u]] = std::max(last_touch[plan.plus_eq[u]], u);
    last_touch[plan.minus_eq[u]] = std::max(last_touch[plan.minus_eq[u]], u);
  }
  plan.complete_at.resize(plan.l);
  for (unsigned e = 0; e < plan.v; ++e) plan.complete_at[last_touch[e]].push_back(e);
  return plan;
}

// Binary fields with k <= 64: rows and accumulators are single words.
std::uint64_t count_binary(const SolverPlan& plan, const std::vector<std::uint64_t>& rows,
                           unsigned n) {
  std::vector<std::uint64_t> acc(plan.v, 0);
  std::uint64_t count = 0;
  // Iterative DFS over t_0..t_{l-1}.
  std::vector<unsigned> t(plan.l, 0);
  unsigned depth = 0;
  while (true) {
    if (t[depth] < n) {
      const std::uint64_t r = rows[t[depth]];
      acc[plan.plus_eq[depth]] ^= r;
      acc[plan.minus_eq[depth]] ^= r;
      bool ok = true;
      for (unsigned e : plan.complete_at[depth])
        if (acc[e] != 0) {
          ok = false;
          break;
        }
      if (ok) {
        if (depth + 1 == plan.l) {
          ++count;
        } else {
          ++depth;
          t[depth] = 0;
          continue;
        }
      }
      acc[plan.plus_eq[depth]] ^= r;
      acc[plan.minus_eq[depth]] ^= r;
      ++t[depth];
      continue;
    }
    if (depth == 0) break;
    --depth;
    const std::uint64_t r = rows[t[depth]];
    acc[plan.plus_eq[depth]] ^= r;
    acc[plan.minus_eq[depth]] ^= r;
    ++t[depth];
  }
  return count;
}

std::uint64_t count_generic(const SolverPlan& plan, const LinearCode& code) {
  const FieldCtx& f = code.field();
  const unsigned n = code.length();
  const unsigned k = code.dimension();
  std::vector<std::vector<FieldValue>> acc(plan.v, std::vector<FieldValue>(k, 0));
  auto is_zero = [&](const std::vector<FieldValue>& vec) {
    return std::all_of(vec.begin(), vec.end(), [](FieldValue x) { return x == 0; });
  };
  std::uint64_t count = 0;
  std::vector<unsigned> t(plan.l, 0);
  auto add_row = [&](unsigned eq, unsigned row_idx, bool subtract) {
    const auto r = code.row(row_idx);
    auto& a = acc[eq];
    for (unsigned j = 0; j < k; ++j) a[j] = subtract ? f.sub(a[j], r[j]) : f.add(a[j], r[j]);
  };
  unsigned depth = 0;
  while (true) {
    if (t[depth] < n) {
      add_row(plan.plus_eq[depth], t[depth], false);
      add_row(plan.minus_eq[depth], t[depth], true);
      bool ok = true;
      for (unsigned e : plan.complete_at[depth])
        if (!is_zero(acc[e])) {
          ok = false;
          break;
        }
      if (ok) {
        if (depth + 1 == plan.l) {
          ++count;
        } else {
          ++depth;
          t[depth] = 0;
          continue;
        }
      }
      add_row(plan.plus_eq[depth], t[depth], true);
      add_row(plan.minus_eq[depth], t[depth], false);
      ++t[depth];
      continue;
    }
    if (depth == 0) break;
    --depth;
    add_row(plan.plus_eq[depth], t[depth], true);
    add_row(plan.minus_eq[depth], t[depth], false);
    ++t[depth];
  }
  return count;
}

}  // namespace

std::uint64_t count_path_solutions(const PathClass& path, const LinearCode& code) {
  const unsigned n = code.length();
  const unsigned l = path.length();
  if (std::pow(static_cast<double>(n), static_cast<double>(l)) > 1e8)
    throw ResourceError("count_path_solutions: n^l exceeds the 1e8 budget");

  const SolverPlan plan = make_plan(path);
  if (code.field().characteristic() == 2 && code.dimension() <= 64) {
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned t = 0; t < n; ++t) {
      const auto r = code.row(t);
      for (unsigned j = 0; j < code.dimension(); ++j)
        if (r[j]) rows[t] |= 1ull << j;
    }
    return count_binary(plan, rows, n);
  }
  return count_generic(plan, code);
}

double exact_expected_moment(const LinearCode& code, unsigned p, unsigned l) {
  if (p < 1) throw UsageError("exact_expected_moment: p must be >= 1");
  const unsigned n = code.length();

  mpq_class total = 0;
  for_each_path_class(l, [&](const PathClass& cls) {
    const unsigned v = cls.block_count();
    if (v > p) return;  // falling factorial vanishes
    Integer fall = 1;
    for (unsigned i = 0; i < v; ++i) fall *= static_cast<unsigned long>(p - i);
    const std::uint64_t w = count_path_solutions(cls, code);
    total += mpq_class(fall * Integer(static_cast<unsigned long>(w)));
  });

  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), n, l);
  denom *= static_cast<unsigned long>(p);
  mpq_class result = total / mpq_class(denom);
  result.canonicalize();
  return result.get_d();
}

}  // namespace mpcodes
