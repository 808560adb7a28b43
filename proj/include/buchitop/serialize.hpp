#pragma once

#include <string>
#include <string_view>

#include "buchitop/nba.hpp"
#include "buchitop/trees.hpp"

namespace buchitop {

// UPWord text syntax: u(v)w, e.g. 01(10)w or (0)w. Symbols are matched
// greedily against the declared alphabet (single characters in the common
// case, "a,b" tokens for pair alphabets).
std::string format_up_word(const UPWord& x);
UPWord parse_up_word(const Alphabet& alphabet, std::string_view text);

std::string format_finite_word(const FiniteWord& w);
FiniteWord parse_finite_word(const Alphabet& alphabet, std::string_view text);

// Line-based automaton files (UTF-8, # comments):
//   nba | nfa | bta
//   alphabet 0 1
//   states 2
//   initial 0
//   final 1
//   trans 0 0 0        (word automata: from symbol to)
//   trans 0 0 0 1      (tree automata: from symbol left right)
std::string serialize_nba(const Nba& a);
std::string serialize_nfa(const Nfa& a);
std::string serialize_bta(const Bta& a);
Nba parse_nba(std::string_view text);
Nfa parse_nfa(std::string_view text);
Bta parse_bta(std::string_view text);

// Regular tree files:
//   tree
//   alphabet 0 1       (optional on input; inferred from labels if missing)
//   states 2
//   root 0
//   node 0 label 1 left 0 right 1
std::string serialize_tree(const RegularTree& t);
RegularTree parse_tree(std::string_view text);

} // namespace buchitop
