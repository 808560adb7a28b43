#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "buchitop/nba.hpp"

namespace buchitop {

/// Finite generator of a regular infinite binary tree: total label/left/right
/// functions on a finite state set, unfolded from the root state.
struct RegularTree {
  Alphabet alphabet;
  StateIndex root;
  std::vector<SymbolIndex> labels;
  std::vector<StateIndex> left;
  std::vector<StateIndex> right;

  RegularTree(Alphabet a, StateIndex root_, std::vector<SymbolIndex> labels_,
              std::vector<StateIndex> left_, std::vector<StateIndex> right_);

  StateIndex state_count() const { return static_cast<StateIndex>(labels.size()); }

  static RegularTree constant(const Alphabet& a, SymbolIndex label);

  bool operator==(const RegularTree&) const = default; // structural, not tree equality
};

/// Denoted-tree equality via product bisimulation on the generators.
bool tree_equal(const RegularTree& a, const RegularTree& b);

/// Pair two trees over the pair alphabet, node by node.
RegularTree zip_trees(const RegularTree& t, const RegularTree& s);

/// Complete labelling of {l,r}^{≤depth}, heap-indexed (children of node i
/// are 2i+1 and 2i+2).
struct FiniteTreePrefix {
  Alphabet alphabet;
  unsigned depth;
  std::vector<SymbolIndex> labels; // 2^{depth+1}-1 entries

  FiniteTreePrefix(Alphabet a, unsigned d, std::vector<SymbolIndex> ls);

  bool operator==(const FiniteTreePrefix&) const = default;
};

FiniteTreePrefix tree_prefix(const RegularTree& t, unsigned depth);

struct BtaTransition {
  StateIndex from;
  SymbolIndex symbol;
  StateIndex left;
  StateIndex right;

  auto operator<=>(const BtaTransition&) const = default;
};

/// Nondeterministic Büchi tree automaton; a run accepts when every path
/// visits final states infinitely often.
struct Bta {
  Alphabet alphabet;
  StateIndex state_count;
  StateIndex initial_state;
  std::vector<StateIndex> final_states;
  std::vector<BtaTransition> transitions;

  Bta(Alphabet a, StateIndex n, StateIndex init, std::vector<StateIndex> fin,
      std::vector<BtaTransition> trans);

  bool is_final(StateIndex q) const;

  bool operator==(const Bta&) const = default;
};

/// Büchi game on a finite graph: Eve wins a play iff it visits target
/// positions infinitely often. Every position must have an outgoing edge.
struct BuchiGame {
  std::vector<bool> eve;    // position owner
  std::vector<bool> target;
  std::vector<std::vector<std::uint32_t>> edges;

  std::size_t size() const { return edges.size(); }
};

struct BuchiGameResult {
  std::vector<bool> eve_wins;
  /// For Eve positions inside the winning region: index into edges[p] of a
  /// positional winning move (lowest-index witness, so deterministic).
  std::vector<std::int64_t> strategy;
};

/// Classical two-nested-fixpoint (recurrence/attractor) solver.
BuchiGameResult solve_buchi_game(const BuchiGame& g);

/// Membership: Eve picks transitions at (tree node state, automaton state),
/// Adam picks a direction. Choice is the Δ index picked per position.
struct TreeMembership {
  bool member;
  std::vector<std::int64_t> choice; // indexed by s·|Q|+q; -1 outside the strategy
};

TreeMembership bta_member_strategy(const Bta& a, const RegularTree& t);
bool bta_member(const Bta& a, const RegularTree& t);

/// Emptiness via the same game on Q alone; a nonempty language yields a
/// regular witness tree read off Eve's positional strategy.
struct TreeEmptiness {
  bool empty;
  std::optional<RegularTree> witness;
};

TreeEmptiness bta_empty_witness(const Bta& a);
bool bta_empty(const Bta& a);

/// Trees with at least one path whose label word lies in L(a).
Bta exists_path(const Nba& a);

/// Deterministic 2-state automaton for 𝕋_∞ (infinitely many 1s on every
/// path): reading 1 sends both children to the final state, 0 to the other.
Bta tinf_bta();

/// Tree run annotation: accepts {(t, χ_f(ρ)) : ρ accepting run on t} over
/// pair_alphabet(Σ, {0,1}), with the same state set.
Bta tree_lift(const Bta& a);

/// χ_f image of the run induced by the membership strategy; requires t ∈ L(a).
RegularTree tree_witness(const Bta& a, const RegularTree& t);

/// Every root-to-leaf path of the prefix carries ≥ level ones (then the
/// basic clopen N_p is contained in O_level).
bool o_level_check(const FiniteTreePrefix& p, unsigned level);

/// Least depth d such that o_level_check(tree_prefix(alpha, d), level)
/// holds; requires alpha ∈ 𝕋_∞.
unsigned min_depth_for_level(const RegularTree& alpha, unsigned level);

// Algebra used by the tree game.
Bta bta_intersection(const Bta& a, const Bta& b);
Bta bta_product(const Bta& a, const Bta& b);
Bta bta_projection(const Bta& a, int coordinate, const Alphabet& left, const Alphabet& right);
Bta clopen_bta(const FiniteTreePrefix& p);
Bta singleton_bta(const RegularTree& t);
Bta universal_bta(const Alphabet& alphabet);

/// Restrict to reachable states with nonempty residual tree language.
Bta bta_trim(const Bta& a);

} // namespace buchitop
