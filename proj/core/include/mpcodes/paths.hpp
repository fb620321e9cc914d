#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mpcodes/codes.hpp"

namespace mpcodes {

/// Equivalence class of closed paths gamma: [0,l] -> [1,p] under relabeling
/// of values; equivalently a set partition of the cyclic index set
/// {0,...,l-1}. Canonical form is the restricted-growth string (labels in
/// first-occurrence order).
class PathClass {
 public:
  /// Canonicalizes an arbitrary labeling of positions 0..l-1.
  explicit PathClass(std::vector<std::uint8_t> labels);
  static PathClass from_blocks(unsigned l, const std::vector<std::vector<unsigned>>& blocks);

  unsigned length() const { return static_cast<unsigned>(rgs_.size()); }  ///< l
  unsigned block_count() const { return v_; }                             ///< v
  std::uint8_t label(unsigned i) const { return rgs_[i]; }
  const std::vector<std::uint8_t>& rgs() const { return rgs_; }
  std::vector<std::vector<unsigned>> blocks() const;

  friend bool operator==(const PathClass&, const PathClass&) = default;

 private:
  std::vector<std::uint8_t> rgs_;
  unsigned v_ = 0;
};

/// Enumeration cap: Bell(10) = 115975 classes.
inline constexpr unsigned kMaxPathLength = 10;

/// All classes of length l in canonical order; ResourceError beyond the cap.
std::vector<PathClass> enumerate_path_classes(unsigned l);
void for_each_path_class(unsigned l, const std::function<void(const PathClass&)>& fn);

/// Reduced: v = l = 1, or v >= 2 with every block of size >= 2 and no block
/// containing cyclically consecutive indices.
bool is_reduced(const PathClass& path);

enum class ReductionCase : std::uint8_t {
  kConsecutive = 1,  ///< drop one of two equal cyclic neighbors; frees a variable
  kLeaf = 2,         ///< singleton with equal neighbors; drops it and its left neighbor
  kTransition = 3,   ///< singleton with distinct neighbors; substitution only
};

struct ReductionStep {
  ReductionCase kind;
  unsigned index;  ///< position in the path at the time of removal
};

enum class FinalKind : std::uint8_t { kReduced, kTrivial, kEmpty };

/// Full record of a reduction run.
///
/// Bookkeeping: l_final = l - u - 2v - w and v_final = v_initial - v - w for
/// u, v, w applications of the three cases, and the solution count satisfies
/// W(initial) = n^{u+v} W(final). The single exception is the empty final
/// state (reachable only from the l = 2 two-singleton class), where the
/// leaf's partner block vanishes with it and the true block count is 0, one
/// below the bookkeeping value; the l equation and the W factor still hold
/// with W(empty) = 1.
struct ReductionTrace {
  FinalKind final_kind = FinalKind::kReduced;
  std::optional<PathClass> final_path;  ///< set for kReduced and kTrivial
  std::vector<ReductionStep> steps;
  unsigned case1 = 0, case2 = 0, case3 = 0;
  std::vector<PathClass> intermediates;  ///< states after each step, if captured

  unsigned factor_exponent() const { return case1 + case2; }  ///< W = n^e * W(final)
  bool in_gamma() const { return final_kind != FinalKind::kReduced; }
};

/// Applies the reduction cases until none fires. The default policy scans
/// Case 1, then Case 2, then Case 3, lowest index first; the result
/// (final class and counts) is independent of the order, which the picker
/// overload exists to exercise.
ReductionTrace reduce(const PathClass& path);

using MovePicker = std::function<std::size_t(std::span<const ReductionStep>)>;
ReductionTrace reduce(const PathClass& path, const MovePicker& pick,
                      bool capture_intermediates = false);

/// True when the class reduces to the trivial or empty path; such classes
/// have solution count exactly n^{l-v+1}.
bool in_gamma(const PathClass& path);

/// Number of length-l classes with v blocks that reduce trivially:
/// the Narayana number (1/v) C(l, v-1) C(l-1, v-1).
std::uint64_t narayana_count(unsigned l, unsigned v);

Integer catalan_number(unsigned l);

/// Exact number of row-index tuples (t_0,...,t_{l-1}) in [1,n]^l whose
/// per-block alternating row sums vanish: for each block I_a,
/// sum_{u in I_a} (h_{t_u} - h_{t_{u-1}}) = 0, indices cyclic.
/// Depth-first search with completed-equation pruning; budget n^l <= 1e8.
std::uint64_t count_path_solutions(const PathClass& path, const LinearCode& code);

/// Exact l-th moment expectation as the weighted class sum
/// (1/(p n^l)) sum_gamma p!/(p-v)! W_gamma, evaluated in rational arithmetic.
/// Valid for any p >= 1 (classes with v > p contribute nothing).
double exact_expected_moment(const LinearCode& code, unsigned p, unsigned l);

}  // namespace mpcodes
