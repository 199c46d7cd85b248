#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bpdkit/bpd.hpp"
#include "bpdkit/common.hpp"
#include "bpdkit/pipedream.hpp"
#include "bpdkit/tableau.hpp"

namespace bpdkit {

struct PopResult {
  int row = 0;     // r
  int letter = 0;  // a
  BumplessPipeDream next;
};

/// One Gao-Huang step: pop(B) = (r;a) together with nabla B in BPD(s_a w).
/// Throws NoBlankTiles on a BPD of the identity.
PopResult pop_nabla(const BumplessPipeDream& b);

/// phi(B): the pops of B, nabla B, nabla^2 B, ... until no blanks remain.
CompatibleSequence phi(const BumplessPipeDream& b);

/// The unique B with phi(B) = c, found by matching against enumerate_bpd
/// (cached per permutation). The grid has the window size of c's permutation.
BumplessPipeDream phi_inverse(const CompatibleSequence& c);
BumplessPipeDream phi_inverse(const PipeDream& p);

/// Labels of the two wires meeting at letter m (0-based) of a word: the
/// values in positions a_m, a_m + 1 of the product of the earlier letters.
std::pair<int, int> wire_pair(const std::vector<int>& letters, int m);

/// One recorded move of a bump.
struct BumpStep {
  std::string kind;  // "increment", "bump", "min-droop", "cross-bump-swap", "cross"
  Cell at{};
  Cell to{};
  int index = -1;  // biword index for Little bumps

  friend bool operator==(const BumpStep&, const BumpStep&) = default;
};

struct BumpTrace {
  std::pair<int, int> transposition{};
  std::vector<BumpStep> steps;
  int grid_size = 0;  // grid used by a Huang bump after embedding
};

/// True when t_ij w (values i and j swapped) has length l(w) - 1.
bool bump_guard(const Permutation& w, int i, int j);

/// Upward Little bump L_ij. Rows stay fixed and one letter per step is
/// incremented. Throws GuardFailure unless bump_guard holds, IterationCap on
/// a runaway chain.
CompatibleSequence little_bump(const CompatibleSequence& c, int i, int j, BumpTrace* trace = nullptr);

/// Re-applies the increments recorded by little_bump.
CompatibleSequence replay_little(const CompatibleSequence& c, const BumpTrace& trace);

struct Grassmannianization {
  CompatibleSequence result;
  std::vector<std::pair<int, int>> transpositions;
};

/// Applies Little bumps until the permutation has at most one descent. Each
/// bump follows the Lascoux-Schutzenberger transition of the complemented
/// word (letters a -> m - a).
Grassmannianization grassmannianize(const CompatibleSequence& c);

/// Droops the pipe whose r-turn is at `cell` past the crosses directly below
/// and to the right of it. Throws NoLegalTarget when the target leaves the
/// grid or the reroute collides with another pipe.
AlmostBPD min_droop(const AlmostBPD& b, Cell cell, Cell* target = nullptr);

/// Exchanges the bump at `cell` with the crossing of the same two pipes.
/// Throws PipesDoNotCross when there is none.
AlmostBPD cross_bump_swap(const AlmostBPD& b, Cell cell);

/// Huang bump H_ij on pipes i < j, which must cross. The grid is enlarged by
/// one (then two) so the droops have room. Throws PipesDoNotCross,
/// GuardFailure when neither enlargement suffices, IterationCap on a runaway.
BumplessPipeDream huang_bump(const BumplessPipeDream& b, int i, int j, BumpTrace* trace = nullptr);

/// Re-applies a recorded Huang bump to b embedded in trace.grid_size.
BumplessPipeDream replay_huang(const BumplessPipeDream& b, const BumpTrace& trace);

struct LsRecording {
  std::vector<Permutation> chain;  // w^0, ..., w^k
  Tableau tableau;
};

/// Pushes B along the Huang bumps matching grassmannianize(phi(B)) and
/// returns gamma of the final Grassmannian BPD.
LsRecording ls_recording(const BumplessPipeDream& b);

}  // namespace bpdkit
