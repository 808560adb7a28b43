#include "buchitop/decomposition.hpp"

namespace buchitop {

std::vector<DecompositionPair> buchi_decomposition(const Nba& a) {
  std::vector<DecompositionPair> out;
  for (StateIndex q : a.final_states) {
    Nfa stem(a.alphabet, a.state_count, a.initial_states, {q}, a.transitions);

    // V_q must reject ε: accept in a primed copy of q that duplicates its
    // incoming transitions.
    StateIndex primed = a.state_count;
    std::vector<Transition> loop_trans = a.transitions;
    for (const auto& t : a.transitions)
      if (t.to == q) loop_trans.push_back({t.from, t.symbol, primed});
    Nfa loop(a.alphabet, a.state_count + 1, {q}, {primed}, std::move(loop_trans));

    out.push_back({q, std::move(stem), std::move(loop)});
  }
  return out;
}

} // namespace buchitop
