#pragma once

#include "buchitop/nba.hpp"

namespace buchitop {

/// One (U_q, V_q) per final state q: U_q accepts words with a run from an
/// initial state to q, V_q the nonempty words with a run from q back to q,
/// so that L(A) = ⋃_q U_q · V_q^ω.
struct DecompositionPair {
  StateIndex final_state;
  Nfa stem_language; // U_q
  Nfa loop_language; // V_q
};

std::vector<DecompositionPair> buchi_decomposition(const Nba& a);

} // namespace buchitop
