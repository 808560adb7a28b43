#include "buchitop/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace buchitop {

RegularTree::RegularTree(Alphabet a, StateIndex root_, std::vector<SymbolIndex> labels_,
                         std::vector<StateIndex> left_, std::vector<StateIndex> right_)
    : alphabet(std::move(a)),
      root(root_),
      labels(std::move(labels_)),
      left(std::move(left_)),
      right(std::move(right_)) {
  if (labels.empty()) throw std::invalid_argument("tree generator needs at least one state");
  if (left.size() != labels.size() || right.size() != labels.size())
    throw std::invalid_argument("tree generator tables must have equal size");
  if (root >= labels.size()) throw std::invalid_argument("root state out of range");
  for (SymbolIndex l : labels)
    if (l >= alphabet.size()) throw std::invalid_argument("tree label out of range");
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (left[i] >= labels.size() || right[i] >= labels.size())
      throw std::invalid_argument("tree child state out of range");
}

RegularTree RegularTree::constant(const Alphabet& a, SymbolIndex label) {
  return RegularTree(a, 0, {label}, {0}, {0});
}

bool tree_equal(const RegularTree& a, const RegularTree& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
  std::set<std::pair<StateIndex, StateIndex>> seen;
  std::deque<std::pair<StateIndex, StateIndex>> queue{{a.root, b.root}};
  seen.insert({a.root, b.root});
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    if (a.labels[sa] != b.labels[sb]) return false;
    for (auto next : {std::pair{a.left[sa], b.left[sb]}, std::pair{a.right[sa], b.right[sb]}})
      if (seen.insert(next).second) queue.push_back(next);
  }
  return true;
}

RegularTree zip_trees(const RegularTree& t, const RegularTree& s) {
  Alphabet alphabet = pair_alphabet(t.alphabet, s.alphabet);
  std::map<std::pair<StateIndex, StateIndex>, StateIndex> ids;
  std::vector<std::pair<StateIndex, StateIndex>> states;
  std::deque<StateIndex> queue;
  auto intern = [&](StateIndex a, StateIndex b) {
    auto [it, fresh] = ids.try_emplace({a, b}, static_cast<StateIndex>(states.size()));
    if (fresh) {
      states.push_back({a, b});
      queue.push_back(it->second);
    }
    return it->second;
  };
  StateIndex root = intern(t.root, s.root);
  std::vector<SymbolIndex> labels;
  std::vector<StateIndex> left, right;
  while (!queue.empty()) {
    StateIndex id = queue.front();
    queue.pop_front();
    auto [a, b] = states[id];
    labels.push_back(pair_index(s.alphabet, t.labels[a], s.labels[b]));
    left.push_back(intern(t.left[a], s.left[b]));
    right.push_back(intern(t.right[a], s.right[b]));
  }
  return RegularTree(std::move(alphabet), root, std::move(labels), std::move(left),
                     std::move(right));
}

FiniteTreePrefix::FiniteTreePrefix(Alphabet a, unsigned d, std::vector<SymbolIndex> ls)
    : alphabet(std::move(a)), depth(d), labels(std::move(ls)) {
  if (labels.size() != (std::size_t{1} << (depth + 1)) - 1)
    throw std::invalid_argument("prefix labelling must cover {l,r}^{<=depth}");
  for (SymbolIndex l : labels)
    if (l >= alphabet.size()) throw std::invalid_argument("prefix label out of range");
}

FiniteTreePrefix tree_prefix(const RegularTree& t, unsigned depth) {
  if (depth > 25) throw std::invalid_argument("tree prefix depth too large");
  std::size_t count = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<StateIndex> state(count);
  std::vector<SymbolIndex> labels(count);
  state[0] = t.root;
  for (std::size_t i = 0; i < count; ++i) {
    labels[i] = t.labels[state[i]];
    if (2 * i + 2 < count) {
      state[2 * i + 1] = t.left[state[i]];
      state[2 * i + 2] = t.right[state[i]];
    }
  }
  return FiniteTreePrefix(t.alphabet, depth, std::move(labels));
}

Bta::Bta(Alphabet a, StateIndex n, StateIndex init, std::vector<StateIndex> fin,
         std::vector<BtaTransition> trans)
    : alphabet(std::move(a)),
      state_count(n),
      initial_state(init),
      final_states(std::move(fin)),
      transitions(std::move(trans)) {
  if (state_count == 0) throw std::invalid_argument("automaton needs at least one state");
  if (initial_state >= state_count) throw std::invalid_argument("initial state out of range");
  std::sort(final_states.begin(), final_states.end());
  final_states.erase(std::unique(final_states.begin(), final_states.end()), final_states.end());
  if (!final_states.empty() && final_states.back() >= state_count)
    throw std::invalid_argument("final state out of range");
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  for (const auto& t : transitions) {
    if (t.from >= state_count || t.left >= state_count || t.right >= state_count)
      throw std::invalid_argument("transition state out of range");
    if (t.symbol >= alphabet.size())
      throw std::invalid_argument("transition symbol out of range");
  }
}

bool Bta::is_final(StateIndex q) const {
  return std::binary_search(final_states.begin(), final_states.end(), q);
}

// --- Büchi game solver -------------------------------------------------------

namespace {

struct AttractorResult {
  std::vector<bool> in;
  std::vector<std::int64_t> strat; // Eve positions added by the sweep
};

AttractorResult attractor(const BuchiGame& g, const std::vector<bool>& base) {
  std::size_t n = g.size();
  AttractorResult r{base, std::vector<std::int64_t>(n, -1)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (r.in[p]) continue;
      if (g.eve[p]) {
        for (std::size_t e = 0; e < g.edges[p].size(); ++e)
          if (r.in[g.edges[p][e]]) {
            r.in[p] = true;
            r.strat[p] = static_cast<std::int64_t>(e);
            grew = true;
            break;
          }
      } else {
        bool all = true;
        for (std::uint32_t q : g.edges[p])
          if (!r.in[q]) {
            all = false;
            break;
          }
        if (all) {
          r.in[p] = true;
          grew = true;
        }
      }
    }
  }
  return r;
}

bool cpre_holds(const BuchiGame& g, std::size_t p, const std::vector<bool>& x) {
  if (g.eve[p]) {
    for (std::uint32_t q : g.edges[p])
      if (x[q]) return true;
    return false;
  }
  for (std::uint32_t q : g.edges[p])
    if (!x[q]) return false;
  return true;
}

} // namespace

BuchiGameResult solve_buchi_game(const BuchiGame& g) {
  std::size_t n = g.size();
  if (g.eve.size() != n || g.target.size() != n)
    throw std::invalid_argument("inconsistent game tables");
  for (std::size_t p = 0; p < n; ++p)
    if (g.edges[p].empty()) throw std::invalid_argument("game position without moves");

  std::vector<bool> recur = g.target;
  while (true) {
    AttractorResult attr = attractor(g, recur);
    std::vector<bool> keep(n, false);
    bool shrunk = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (!recur[p]) continue;
      if (cpre_holds(g, p, attr.in))
        keep[p] = true;
      else
        shrunk = true;
    }
    if (!shrunk) {
      BuchiGameResult res{attr.in, std::vector<std::int64_t>(n, -1)};
      for (std::size_t p = 0; p < n; ++p) {
        if (!attr.in[p] || !g.eve[p]) continue;
        if (recur[p]) {
          for (std::size_t e = 0; e < g.edges[p].size(); ++e)
            if (attr.in[g.edges[p][e]]) {
              res.strategy[p] = static_cast<std::int64_t>(e);
              break;
            }
        } else {
          res.strategy[p] = attr.strat[p];
        }
      }
      return res;
    }
    recur = keep;
  }
}

// --- membership and emptiness -----------------------------------------------

namespace {

// Δ indices grouped by (from state, symbol), in transition order.
std::vector<std::vector<std::uint32_t>> transitions_by_state_symbol(const Bta& a) {
  std::vector<std::vector<std::uint32_t>> table(a.state_count * a.alphabet.size());
  for (std::uint32_t i = 0; i < a.transitions.size(); ++i) {
    const auto& t = a.transitions[i];
    table[t.from * a.alphabet.size() + t.symbol].push_back(i);
  }
  return table;
}

} // namespace

TreeMembership bta_member_strategy(const Bta& a, const RegularTree& t) {
  if (a.alphabet != t.alphabet) throw std::invalid_argument("alphabet mismatch");
  auto by_qs = transitions_by_state_symbol(a);

  std::size_t eve_count = static_cast<std::size_t>(t.state_count()) * a.state_count;
  auto eve_id = [&](StateIndex s, StateIndex q) { return std::size_t{s} * a.state_count + q; };

  // Adam positions, one per applicable (s, q, Δ-index).
  struct AdamPos {
    StateIndex s;
    std::uint32_t ti;
  };
  std::vector<AdamPos> adams;
  std::vector<std::vector<std::uint32_t>> eve_moves(eve_count);
  for (StateIndex s = 0; s < t.state_count(); ++s)
    for (StateIndex q = 0; q < a.state_count; ++q)
      for (std::uint32_t ti : by_qs[q * a.alphabet.size() + t.labels[s]]) {
        eve_moves[eve_id(s, q)].push_back(static_cast<std::uint32_t>(adams.size()));
        adams.push_back({s, ti});
      }

  std::size_t sink = eve_count + adams.size();
  BuchiGame g;
  g.eve.assign(sink + 1, false);
  g.target.assign(sink + 1, false);
  g.edges.assign(sink + 1, {});
  for (StateIndex s = 0; s < t.state_count(); ++s)
    for (StateIndex q = 0; q < a.state_count; ++q) {
      std::size_t p = eve_id(s, q);
      g.eve[p] = true;
      g.target[p] = a.is_final(q);
      for (std::uint32_t am : eve_moves[p])
        g.edges[p].push_back(static_cast<std::uint32_t>(eve_count + am));
      if (g.edges[p].empty()) g.edges[p].push_back(static_cast<std::uint32_t>(sink));
    }
  for (std::size_t i = 0; i < adams.size(); ++i) {
    const auto& [s, ti] = adams[i];
    const auto& tr = a.transitions[ti];
    g.edges[eve_count + i].push_back(static_cast<std::uint32_t>(eve_id(t.left[s], tr.left)));
    g.edges[eve_count + i].push_back(static_cast<std::uint32_t>(eve_id(t.right[s], tr.right)));
  }
  g.edges[sink].push_back(static_cast<std::uint32_t>(sink));

  auto res = solve_buchi_game(g);
  TreeMembership out{res.eve_wins[eve_id(t.root, a.initial_state)],
                     std::vector<std::int64_t>(eve_count, -1)};
  if (out.member)
    for (std::size_t p = 0; p < eve_count; ++p)
      if (res.eve_wins[p] && res.strategy[p] >= 0) {
        std::uint32_t am = eve_moves[p][static_cast<std::size_t>(res.strategy[p])] -
                           0; // edge order equals move order
        // edges[p][e] = eve_count + eve_moves[p][e]
        out.choice[p] = adams[am].ti;
      }
  return out;
}

bool bta_member(const Bta& a, const RegularTree& t) { return bta_member_strategy(a, t).member; }

TreeEmptiness bta_empty_witness(const Bta& a) {
  std::size_t eve_count = a.state_count;
  std::vector<std::vector<std::uint32_t>> eve_moves(eve_count);
  for (std::uint32_t i = 0; i < a.transitions.size(); ++i)
    eve_moves[a.transitions[i].from].push_back(i);

  std::size_t adam_base = eve_count;
  std::size_t adam_count = a.transitions.size();
  std::size_t sink = adam_base + adam_count;
  BuchiGame g;
  g.eve.assign(sink + 1, false);
  g.target.assign(sink + 1, false);
  g.edges.assign(sink + 1, {});
  for (StateIndex q = 0; q < a.state_count; ++q) {
    g.eve[q] = true;
    g.target[q] = a.is_final(q);
    for (std::uint32_t ti : eve_moves[q])
      g.edges[q].push_back(static_cast<std::uint32_t>(adam_base + ti));
    if (g.edges[q].empty()) g.edges[q].push_back(static_cast<std::uint32_t>(sink));
  }
  for (std::uint32_t ti = 0; ti < adam_count; ++ti) {
    g.edges[adam_base + ti].push_back(a.transitions[ti].left);
    g.edges[adam_base + ti].push_back(a.transitions[ti].right);
  }
  g.edges[sink].push_back(static_cast<std::uint32_t>(sink));

  auto res = solve_buchi_game(g);
  if (!res.eve_wins[a.initial_state]) return {true, std::nullopt};

  // Read the witness generator off the strategy, restricted to reached states.
  std::vector<std::int64_t> renum(a.state_count, -1);
  std::vector<StateIndex> order;
  std::deque<StateIndex> queue{a.initial_state};
  renum[a.initial_state] = 0;
  order.push_back(a.initial_state);
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    std::uint32_t ti = eve_moves[q][static_cast<std::size_t>(res.strategy[q])];
    for (StateIndex child : {a.transitions[ti].left, a.transitions[ti].right})
      if (renum[child] < 0) {
        renum[child] = static_cast<std::int64_t>(order.size());
        order.push_back(child);
        queue.push_back(child);
      }
  }
  std::vector<SymbolIndex> labels;
  std::vector<StateIndex> left, right;
  for (StateIndex q : order) {
    std::uint32_t ti = eve_moves[q][static_cast<std::size_t>(res.strategy[q])];
    labels.push_back(a.transitions[ti].symbol);
    left.push_back(static_cast<StateIndex>(renum[a.transitions[ti].left]));
    right.push_back(static_cast<StateIndex>(renum[a.transitions[ti].right]));
  }
  return {false, RegularTree(a.alphabet, 0, std::move(labels), std::move(left), std::move(right))};
}

bool bta_empty(const Bta& a) { return bta_empty_witness(a).empty; }

// --- constructions ------------------------------------------------------------

Bta exists_path(const Nba& a) {
  if (a.initial_states.empty()) return Bta(a.alphabet, 1, 0, {}, {});
  StateIndex top = a.state_count;
  bool fresh_init = a.initial_states.size() > 1;
  StateIndex n = a.state_count + 1 + (fresh_init ? 1 : 0);
  StateIndex init = fresh_init ? top + 1 : a.initial_states.front();

  std::vector<BtaTransition> trans;
  for (const auto& t : a.transitions) {
    trans.push_back({t.from, t.symbol, t.to, top});
    trans.push_back({t.from, t.symbol, top, t.to});
  }
  for (SymbolIndex c = 0; c < a.alphabet.size(); ++c) trans.push_back({top, c, top, top});
  if (fresh_init)
    for (StateIndex q0 : a.initial_states)
      for (const auto& t : a.transitions)
        if (t.from == q0) {
          trans.push_back({init, t.symbol, t.to, top});
          trans.push_back({init, t.symbol, top, t.to});
        }
  std::vector<StateIndex> final_states = a.final_states;
  final_states.push_back(top);
  return Bta(a.alphabet, n, init, std::move(final_states), std::move(trans));
}

Bta tinf_bta() {
  std::vector<BtaTransition> trans;
  for (StateIndex q : {0u, 1u}) {
    trans.push_back({q, 0, 0, 0});
    trans.push_back({q, 1, 1, 1});
  }
  return Bta(Alphabet::binary(), 2, 0, {1}, std::move(trans));
}

Bta tree_lift(const Bta& a) {
  Alphabet lifted = pair_alphabet(a.alphabet, Alphabet::binary());
  std::vector<BtaTransition> trans;
  trans.reserve(a.transitions.size());
  for (const auto& t : a.transitions) {
    SymbolIndex bit = a.is_final(t.from) ? 1 : 0;
    trans.push_back({t.from, pair_index(Alphabet::binary(), t.symbol, bit), t.left, t.right});
  }
  return Bta(std::move(lifted), a.state_count, a.initial_state, a.final_states, std::move(trans));
}

RegularTree tree_witness(const Bta& a, const RegularTree& t) {
  TreeMembership ms = bta_member_strategy(a, t);
  if (!ms.member) throw std::invalid_argument("tree is not accepted");

  auto eve_id = [&](StateIndex s, StateIndex q) { return std::size_t{s} * a.state_count + q; };
  std::map<std::pair<StateIndex, StateIndex>, StateIndex> ids;
  std::vector<std::pair<StateIndex, StateIndex>> states;
  std::deque<StateIndex> queue;
  auto intern = [&](StateIndex s, StateIndex q) {
    auto [it, fresh] = ids.try_emplace({s, q}, static_cast<StateIndex>(states.size()));
    if (fresh) {
      states.push_back({s, q});
      queue.push_back(it->second);
    }
    return it->second;
  };
  StateIndex root = intern(t.root, a.initial_state);
  std::vector<SymbolIndex> labels;
  std::vector<StateIndex> left, right;
  while (!queue.empty()) {
    StateIndex id = queue.front();
    queue.pop_front();
    auto [s, q] = states[id];
    std::int64_t ti = ms.choice[eve_id(s, q)];
    if (ti < 0) throw std::logic_error("winning strategy missing a reached position");
    const auto& tr = a.transitions[static_cast<std::size_t>(ti)];
    labels.push_back(a.is_final(q) ? 1 : 0);
    left.push_back(intern(t.left[s], tr.left));
    right.push_back(intern(t.right[s], tr.right));
  }
  return RegularTree(Alphabet::binary(), root, std::move(labels), std::move(left),
                     std::move(right));
}

bool o_level_check(const FiniteTreePrefix& p, unsigned level) {
  if (p.alphabet != Alphabet::binary()) throw std::invalid_argument("alphabet is not {0,1}");
  // Minimum count of 1s over root-to-leaf paths.
  std::size_t first_leaf = (std::size_t{1} << p.depth) - 1;
  std::vector<unsigned> ones(p.labels.size(), 0);
  unsigned best = UINT32_MAX;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    unsigned here = (i == 0 ? 0 : ones[(i - 1) / 2]) + (p.labels[i] == 1 ? 1 : 0);
    ones[i] = here;
    if (i >= first_leaf) best = std::min(best, here);
  }
  return best >= level;
}

unsigned min_depth_for_level(const RegularTree& alpha, unsigned level) {
  if (!bta_member(tinf_bta(), alpha))
    throw std::invalid_argument("tree has a path with finitely many 1s");
  unsigned cap = level * (alpha.state_count() + 1) + 1;
  for (unsigned d = 0; d <= cap; ++d)
    if (o_level_check(tree_prefix(alpha, d), level)) return d;
  throw std::logic_error("depth cap reached despite membership in the target set");
}

// --- algebra -------------------------------------------------------------------

namespace {

Bta flagged_tree_product(const Bta& a, const Bta& b, bool paired) {
  Alphabet alphabet = paired ? pair_alphabet(a.alphabet, b.alphabet) : a.alphabet;
  if (!paired && a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");

  auto by_a = transitions_by_state_symbol(a);
  auto by_b = transitions_by_state_symbol(b);

  auto key = [&](StateIndex qa, StateIndex qb, int flag) {
    return (static_cast<std::uint64_t>(qa) * b.state_count + qb) * 2 + flag;
  };
  std::unordered_map<std::uint64_t, StateIndex> ids;
  std::vector<std::tuple<StateIndex, StateIndex, int>> states;
  std::deque<StateIndex> queue;
  auto intern = [&](StateIndex qa, StateIndex qb, int flag) {
    auto [it, fresh] = ids.try_emplace(key(qa, qb, flag), static_cast<StateIndex>(states.size()));
    if (fresh) {
      states.emplace_back(qa, qb, flag);
      queue.push_back(it->second);
    }
    return it->second;
  };

  StateIndex init = intern(a.initial_state, b.initial_state, 0);
  std::vector<BtaTransition> trans;
  std::vector<StateIndex> final_states;
  while (!queue.empty()) {
    StateIndex id = queue.front();
    queue.pop_front();
    auto [qa, qb, flag] = states[id];
    if (flag == 0 && a.is_final(qa)) final_states.push_back(id);
    int next_flag = flag == 0 ? (a.is_final(qa) ? 1 : 0) : (b.is_final(qb) ? 0 : 1);
    for (SymbolIndex ca = 0; ca < a.alphabet.size(); ++ca)
      for (SymbolIndex cb = paired ? 0 : ca; cb < (paired ? b.alphabet.size() : ca + 1); ++cb) {
        SymbolIndex sym = paired ? pair_index(b.alphabet, ca, cb) : ca;
        for (std::uint32_t ia : by_a[qa * a.alphabet.size() + ca])
          for (std::uint32_t ib : by_b[qb * b.alphabet.size() + cb]) {
            const auto& ta = a.transitions[ia];
            const auto& tb = b.transitions[ib];
            trans.push_back({id, sym, intern(ta.left, tb.left, next_flag),
                             intern(ta.right, tb.right, next_flag)});
          }
      }
  }
  return Bta(alphabet, static_cast<StateIndex>(states.size()), init, std::move(final_states),
             std::move(trans));
}

} // namespace

Bta bta_intersection(const Bta& a, const Bta& b) { return flagged_tree_product(a, b, false); }

Bta bta_product(const Bta& a, const Bta& b) { return flagged_tree_product(a, b, true); }

Bta bta_projection(const Bta& a, int coordinate, const Alphabet& left, const Alphabet& right) {
  if (coordinate != 0 && coordinate != 1) throw std::invalid_argument("coordinate must be 0 or 1");
  if (a.alphabet != pair_alphabet(left, right))
    throw std::invalid_argument("automaton alphabet is not the given pair alphabet");
  SymbolIndex rs = static_cast<SymbolIndex>(right.size());
  std::vector<BtaTransition> trans;
  trans.reserve(a.transitions.size());
  for (const auto& t : a.transitions)
    trans.push_back({t.from, coordinate == 0 ? t.symbol / rs : t.symbol % rs, t.left, t.right});
  return Bta(coordinate == 0 ? left : right, a.state_count, a.initial_state, a.final_states,
             std::move(trans));
}

Bta clopen_bta(const FiniteTreePrefix& p) {
  StateIndex m = static_cast<StateIndex>(p.labels.size()); // node i per prefix node, m = sink
  std::size_t first_leaf = (std::size_t{1} << p.depth) - 1;
  std::vector<BtaTransition> trans;
  for (StateIndex i = 0; i < m; ++i) {
    if (i < first_leaf)
      trans.push_back({i, p.labels[i], 2 * i + 1, 2 * i + 2});
    else
      trans.push_back({i, p.labels[i], m, m});
  }
  for (SymbolIndex c = 0; c < p.alphabet.size(); ++c) trans.push_back({m, c, m, m});
  return Bta(p.alphabet, m + 1, 0, {m}, std::move(trans));
}

Bta singleton_bta(const RegularTree& t) {
  std::vector<BtaTransition> trans;
  std::vector<StateIndex> final_states;
  for (StateIndex s = 0; s < t.state_count(); ++s) {
    trans.push_back({s, t.labels[s], t.left[s], t.right[s]});
    final_states.push_back(s);
  }
  return Bta(t.alphabet, t.state_count(), t.root, std::move(final_states), std::move(trans));
}

Bta universal_bta(const Alphabet& alphabet) {
  std::vector<BtaTransition> trans;
  for (SymbolIndex c = 0; c < alphabet.size(); ++c) trans.push_back({0, c, 0, 0});
  return Bta(alphabet, 1, 0, {0}, std::move(trans));
}

Bta bta_trim(const Bta& a) {
  // Nonempty-residual states are Eve's winning region in the emptiness game.
  std::size_t eve_count = a.state_count;
  std::vector<std::vector<std::uint32_t>> eve_moves(eve_count);
  for (std::uint32_t i = 0; i < a.transitions.size(); ++i)
    eve_moves[a.transitions[i].from].push_back(i);
  std::size_t adam_base = eve_count;
  std::size_t sink = adam_base + a.transitions.size();
  BuchiGame g;
  g.eve.assign(sink + 1, false);
  g.target.assign(sink + 1, false);
  g.edges.assign(sink + 1, {});
  for (StateIndex q = 0; q < a.state_count; ++q) {
    g.eve[q] = true;
    g.target[q] = a.is_final(q);
    for (std::uint32_t ti : eve_moves[q])
      g.edges[q].push_back(static_cast<std::uint32_t>(adam_base + ti));
    if (g.edges[q].empty()) g.edges[q].push_back(static_cast<std::uint32_t>(sink));
  }
  for (std::uint32_t ti = 0; ti < a.transitions.size(); ++ti) {
    g.edges[adam_base + ti].push_back(a.transitions[ti].left);
    g.edges[adam_base + ti].push_back(a.transitions[ti].right);
  }
  g.edges[sink].push_back(static_cast<std::uint32_t>(sink));
  auto res = solve_buchi_game(g);

  if (!res.eve_wins[a.initial_state]) return Bta(a.alphabet, 1, 0, {}, {});

  std::vector<bool> keep(a.state_count, false);
  std::deque<StateIndex> queue{a.initial_state};
  keep[a.initial_state] = true;
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (std::uint32_t ti : eve_moves[q]) {
      const auto& t = a.transitions[ti];
      if (!res.eve_wins[t.left] || !res.eve_wins[t.right]) continue;
      for (StateIndex child : {t.left, t.right})
        if (!keep[child]) {
          keep[child] = true;
          queue.push_back(child);
        }
    }
  }
  std::vector<StateIndex> renum(a.state_count, 0);
  StateIndex next = 0;
  for (StateIndex q = 0; q < a.state_count; ++q)
    if (keep[q]) renum[q] = next++;
  std::vector<StateIndex> final_states;
  for (StateIndex q : a.final_states)
    if (keep[q]) final_states.push_back(renum[q]);
  std::vector<BtaTransition> trans;
  for (const auto& t : a.transitions)
    if (keep[t.from] && keep[t.left] && keep[t.right] && res.eve_wins[t.left] &&
        res.eve_wins[t.right])
      trans.push_back({renum[t.from], t.symbol, renum[t.left], renum[t.right]});
  return Bta(a.alphabet, next, renum[a.initial_state], std::move(final_states), std::move(trans));
}

} // namespace buchitop
