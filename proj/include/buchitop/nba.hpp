#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "buchitop/words.hpp"

namespace buchitop {

using StateIndex = std::uint32_t;

struct Transition {
  StateIndex from;
  SymbolIndex symbol;
  StateIndex to;

  auto operator<=>(const Transition&) const = default;
};

namespace detail {
/// Shared shape of word automata: validation sorts and deduplicates the
/// state and transition lists, so equal automata compare field-equal.
struct AutomatonBase {
  Alphabet alphabet;
  StateIndex state_count;
  std::vector<StateIndex> initial_states;
  std::vector<StateIndex> final_states;
  std::vector<Transition> transitions;

  AutomatonBase(Alphabet a, StateIndex n, std::vector<StateIndex> init,
                std::vector<StateIndex> fin, std::vector<Transition> trans);

  bool is_initial(StateIndex q) const;
  bool is_final(StateIndex q) const;

  bool operator==(const AutomatonBase&) const = default;
};
} // namespace detail

/// Nondeterministic Büchi automaton; a run accepts when it visits final
/// states infinitely often.
struct Nba : detail::AutomatonBase {
  using AutomatonBase::AutomatonBase;
};

/// The same shape read as a finite-word acceptor.
struct Nfa : detail::AutomatonBase {
  using AutomatonBase::AutomatonBase;
};

/// Accepting lasso: a stem run followed by a loop run through ≥1 final state.
struct LassoWitness {
  std::vector<StateIndex> stem_states; // q_0 .. q_m
  FiniteWord stem_word;                // length m
  std::vector<StateIndex> loop_states; // q_m .. q_m, length ≥ 2
  FiniteWord loop_word;                // one full number of periods

  UPWord word() const { return up_canonicalize(stem_word, loop_word); }
};

/// 2-state automaton for ℙ_∞ = binary words with infinitely many 1s; the
/// final state is entered exactly after reading a 1.
Nba pinf_nba();

/// All ω-words with prefix w: a |w|+1-state prefix chain into an accepting
/// universal sink. Empty w gives the full space.
Nba clopen_nba(const FiniteWord& w);

/// The singleton {x}.
Nba singleton_nba(const UPWord& x);

bool nba_member(const Nba& a, const UPWord& x);
std::optional<LassoWitness> nba_member_witness(const Nba& a, const UPWord& x);

bool nba_empty(const Nba& a);

/// Deterministic representative of a nonempty language: shortest stem, then
/// shortest loop, ties broken by state index and transition order.
UPWord find_up_word(const Nba& a);
LassoWitness find_up_lasso(const Nba& a);

bool nfa_member(const Nfa& n, const FiniteWord& w);

/// Accepted words of length ≤ max_len in length-lexicographic order,
/// capped at max_count results.
std::vector<FiniteWord> nfa_sample(const Nfa& n, std::size_t max_len,
                                   std::size_t max_count = SIZE_MAX);

} // namespace buchitop
