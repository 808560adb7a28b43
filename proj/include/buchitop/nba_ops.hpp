#pragma once

#include "buchitop/budget.hpp"
#include "buchitop/nba.hpp"

namespace buchitop {

/// Disjoint union (same alphabet).
Nba nba_union(const Nba& a, const Nba& b);

/// Two-copy final-flag product (same alphabet).
Nba nba_intersection(const Nba& a, const Nba& b);

/// Synchronous product over pair_alphabet(a.alphabet, b.alphabet),
/// accepting exactly L(a) × L(b) under the pairing identification.
Nba nba_product(const Nba& a, const Nba& b);

/// Projection of a language over pair_alphabet(left, right) onto one
/// coordinate (0 = left, 1 = right) by transition relabeling.
Nba nba_projection(const Nba& a, int coordinate, const Alphabet& left, const Alphabet& right);

/// Rank-based complementation (ranks bounded by 2·state_count). The result
/// is trimmed and simulation-reduced; raises BudgetExceeded past the cap.
Nba nba_complement(const Nba& a, const Budget& budget = {});

/// L(b) ⊆ L(a), via emptiness of b ∩ complement(a).
bool nba_contains(const Nba& a, const Nba& b, const Budget& budget = {});

bool nba_equivalent(const Nba& a, const Nba& b, const Budget& budget = {});

/// Automaton for the Cantor-topological closure of L(a): all words every
/// prefix of which extends into L(a).
Nba safety_closure(const Nba& a);

/// L(a) closed in the Cantor topology, decided by closure + equivalence.
bool nba_is_cantor_closed(const Nba& a, const Budget& budget = {});

/// Restrict to states that are reachable and have a nonempty residual
/// language. Preserves the language; result has ≥1 state.
Nba nba_trim(const Nba& a);

/// trim + direct-simulation quotient + little-brother transition removal,
/// iterated to a fixpoint. Preserves the language.
Nba nba_reduce(const Nba& a);

} // namespace buchitop
