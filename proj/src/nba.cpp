#include "buchitop/nba.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace buchitop {

namespace detail {

AutomatonBase::AutomatonBase(Alphabet a, StateIndex n, std::vector<StateIndex> init,
                             std::vector<StateIndex> fin, std::vector<Transition> trans)
    : alphabet(std::move(a)),
      state_count(n),
      initial_states(std::move(init)),
      final_states(std::move(fin)),
      transitions(std::move(trans)) {
  if (state_count == 0) throw std::invalid_argument("automaton needs at least one state");
  auto norm = [n](std::vector<StateIndex>& v, const char* what) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.back() >= n)
      throw std::invalid_argument(std::string(what) + " state out of range");
  };
  norm(initial_states, "initial");
  norm(final_states, "final");
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  for (const auto& t : transitions) {
    if (t.from >= state_count || t.to >= state_count)
      throw std::invalid_argument("transition state out of range");
    if (t.symbol >= alphabet.size())
      throw std::invalid_argument("transition symbol out of range");
  }
}

bool AutomatonBase::is_initial(StateIndex q) const {
  return std::binary_search(initial_states.begin(), initial_states.end(), q);
}

bool AutomatonBase::is_final(StateIndex q) const {
  return std::binary_search(final_states.begin(), final_states.end(), q);
}

} // namespace detail

Nba pinf_nba() {
  return Nba(Alphabet::binary(), 2, {0}, {1},
             {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}});
}

Nba clopen_nba(const FiniteWord& w) {
  StateIndex n = static_cast<StateIndex>(w.size()) + 1;
  std::vector<Transition> trans;
  for (StateIndex i = 0; i < w.size(); ++i) trans.push_back({i, w.letters[i], i + 1});
  for (SymbolIndex s = 0; s < w.alphabet.size(); ++s) trans.push_back({n - 1, s, n - 1});
  return Nba(w.alphabet, n, {0}, {n - 1}, std::move(trans));
}

Nba singleton_nba(const UPWord& x) {
  StateIndex pre = static_cast<StateIndex>(x.preperiod().size());
  StateIndex per = static_cast<StateIndex>(x.period().size());
  StateIndex n = pre + per;
  std::vector<Transition> trans;
  for (StateIndex i = 0; i < pre; ++i) trans.push_back({i, x.preperiod()[i], i + 1});
  for (StateIndex i = 0; i < per; ++i)
    trans.push_back({pre + i, x.period()[i], i + 1 == per ? pre : pre + i + 1});
  return Nba(x.alphabet(), n, {0}, {pre}, std::move(trans));
}

namespace {

// The lasso graph of u·v^ω: positions 0..P-1 with P = |u|+|v|; the last
// position loops back to |u|. Product nodes are position*n+state.
struct LassoFrame {
  std::vector<SymbolIndex> letters;
  std::size_t loop_start;

  explicit LassoFrame(const UPWord& x) {
    letters.insert(letters.end(), x.preperiod().begin(), x.preperiod().end());
    letters.insert(letters.end(), x.period().begin(), x.period().end());
    loop_start = x.preperiod().size();
  }
  std::size_t positions() const { return letters.size(); }
  std::size_t next(std::size_t p) const { return p + 1 < letters.size() ? p + 1 : loop_start; }
};

struct ProductGraph {
  const Nba& a;
  LassoFrame frame;
  std::size_t n;

  // adjacency indexed by (state, symbol)
  std::vector<std::vector<StateIndex>> succ;

  ProductGraph(const Nba& a_, const UPWord& x) : a(a_), frame(x), n(a_.state_count) {
    if (a.alphabet != x.alphabet()) throw std::invalid_argument("alphabet mismatch");
    succ.resize(n * a.alphabet.size());
    for (const auto& t : a.transitions) succ[t.from * a.alphabet.size() + t.symbol].push_back(t.to);
  }

  std::size_t node(std::size_t pos, StateIndex q) const { return pos * n + q; }
  std::size_t size() const { return frame.positions() * n; }

  template <typename F>
  void for_successors(std::size_t v, F&& f) const {
    std::size_t pos = v / n;
    StateIndex q = static_cast<StateIndex>(v % n);
    std::size_t np = frame.next(pos);
    for (StateIndex q2 : succ[q * a.alphabet.size() + frame.letters[pos]]) f(node(np, q2));
  }

  std::vector<bool> reachable_from_initial() const {
    std::vector<bool> seen(size(), false);
    std::deque<std::size_t> queue;
    for (StateIndex q : a.initial_states) {
      seen[node(0, q)] = true;
      queue.push_back(node(0, q));
    }
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for_successors(v, [&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      });
    }
    return seen;
  }

  // Is there a cycle through v (within the allowed mask)?
  bool on_cycle(std::size_t v, const std::vector<bool>& allowed) const {
    std::vector<bool> seen(size(), false);
    std::deque<std::size_t> queue;
    for_successors(v, [&](std::size_t w) {
      if (allowed[w] && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    });
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (u == v) return true;
      for_successors(u, [&](std::size_t w) {
        if (allowed[w] && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      });
    }
    return false;
  }
};

} // namespace

bool nba_member(const Nba& a, const UPWord& x) {
  ProductGraph g(a, x);
  auto reach = g.reachable_from_initial();
  for (std::size_t pos = g.frame.loop_start; pos < g.frame.positions(); ++pos)
    for (StateIndex f : a.final_states) {
      std::size_t v = g.node(pos, f);
      if (reach[v] && g.on_cycle(v, reach)) return true;
    }
  return false;
}

std::optional<LassoWitness> nba_member_witness(const Nba& a, const UPWord& x) {
  ProductGraph g(a, x);

  // BFS with parents, seeding initial states in index order.
  std::vector<std::int64_t> parent(g.size(), -2); // -2 unseen, -1 root
  std::deque<std::size_t> queue;
  for (StateIndex q : a.initial_states) {
    if (parent[g.node(0, q)] == -2) {
      parent[g.node(0, q)] = -1;
      queue.push_back(g.node(0, q));
    }
  }
  std::vector<std::size_t> bfs_order;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    bfs_order.push_back(v);
    g.for_successors(v, [&](std::size_t w) {
      if (parent[w] == -2) {
        parent[w] = static_cast<std::int64_t>(v);
        queue.push_back(w);
      }
    });
  }

  std::vector<bool> reach(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) reach[v] = parent[v] != -2;

  // First final node in BFS order that lies on a cycle.
  for (std::size_t v : bfs_order) {
    StateIndex q = static_cast<StateIndex>(v % g.n);
    std::size_t pos = v / g.n;
    if (pos < g.frame.loop_start || !a.is_final(q)) continue;
    if (!g.on_cycle(v, reach)) continue;

    // Stem from parents.
    std::vector<std::size_t> stem_nodes;
    for (std::int64_t c = static_cast<std::int64_t>(v); c != -1; c = parent[c])
      stem_nodes.push_back(static_cast<std::size_t>(c));
    std::reverse(stem_nodes.begin(), stem_nodes.end());

    // Shortest loop v -> v by BFS.
    std::vector<std::int64_t> lparent(g.size(), -2);
    std::deque<std::size_t> lq;
    g.for_successors(v, [&](std::size_t w) {
      if (reach[w] && lparent[w] == -2) {
        lparent[w] = static_cast<std::int64_t>(v);
        lq.push_back(w);
      }
    });
    bool closed = false;
    if (lparent[v] != -2) closed = true; // self-loop
    while (!closed && !lq.empty()) {
      std::size_t u = lq.front();
      lq.pop_front();
      if (u == v) break;
      g.for_successors(u, [&](std::size_t w) {
        if (reach[w] && lparent[w] == -2) {
          lparent[w] = static_cast<std::int64_t>(u);
          lq.push_back(w);
        }
      });
    }
    std::vector<std::size_t> loop_nodes;
    loop_nodes.push_back(v);
    for (std::int64_t c = lparent[v]; c != static_cast<std::int64_t>(v); c = lparent[c])
      loop_nodes.push_back(static_cast<std::size_t>(c));
    loop_nodes.push_back(v);
    std::reverse(loop_nodes.begin() + 1, loop_nodes.end() - 1);

    auto node_state = [&](std::size_t nd) { return static_cast<StateIndex>(nd % g.n); };
    auto node_pos = [&](std::size_t nd) { return nd / g.n; };
    LassoWitness w{
        {},
        FiniteWord(a.alphabet, {}),
        {},
        FiniteWord(a.alphabet, {}),
    };
    for (std::size_t nd : stem_nodes) w.stem_states.push_back(node_state(nd));
    for (std::size_t i = 0; i + 1 < stem_nodes.size(); ++i)
      w.stem_word.letters.push_back(g.frame.letters[node_pos(stem_nodes[i])]);
    for (std::size_t nd : loop_nodes) w.loop_states.push_back(node_state(nd));
    for (std::size_t i = 0; i + 1 < loop_nodes.size(); ++i)
      w.loop_word.letters.push_back(g.frame.letters[node_pos(loop_nodes[i])]);
    return w;
  }
  return std::nullopt;
}

namespace {

struct Adjacency {
  std::size_t n, s;
  std::vector<std::vector<StateIndex>> by_state_symbol; // sorted target lists

  explicit Adjacency(const detail::AutomatonBase& a)
      : n(a.state_count), s(a.alphabet.size()), by_state_symbol(n * s) {
    for (const auto& t : a.transitions) by_state_symbol[t.from * s + t.symbol].push_back(t.to);
  }
  const std::vector<StateIndex>& succ(StateIndex q, SymbolIndex a_) const {
    return by_state_symbol[q * s + a_];
  }
};

std::vector<bool> reachable_states(const detail::AutomatonBase& a) {
  Adjacency adj(a);
  std::vector<bool> seen(a.state_count, false);
  std::deque<StateIndex> queue(a.initial_states.begin(), a.initial_states.end());
  for (StateIndex q : a.initial_states) seen[q] = true;
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (SymbolIndex c = 0; c < a.alphabet.size(); ++c)
      for (StateIndex r : adj.succ(q, c))
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
  }
  return seen;
}

// Shortest loop q->q (≥1 step) within `allowed`; returns (states, letters) or
// nullopt. Deterministic: BFS over transitions in sorted order.
std::optional<std::pair<std::vector<StateIndex>, std::vector<SymbolIndex>>> shortest_loop(
    const detail::AutomatonBase& a, StateIndex q, const std::vector<bool>& allowed) {
  Adjacency adj(a);
  std::vector<std::int64_t> parent(a.state_count, -2);
  std::vector<SymbolIndex> via(a.state_count, 0);
  std::deque<StateIndex> queue;
  std::optional<SymbolIndex> self_close;
  for (SymbolIndex c = 0; c < a.alphabet.size() && !self_close; ++c)
    for (StateIndex r : adj.succ(q, c)) {
      if (!allowed[r]) continue;
      if (r == q) {
        self_close = c;
        break;
      }
      if (parent[r] == -2) {
        parent[r] = -1;
        via[r] = c;
        queue.push_back(r);
      }
    }
  if (self_close) return std::make_pair(std::vector<StateIndex>{q, q},
                                        std::vector<SymbolIndex>{*self_close});
  while (!queue.empty()) {
    StateIndex u = queue.front();
    queue.pop_front();
    for (SymbolIndex c = 0; c < a.alphabet.size(); ++c)
      for (StateIndex r : adj.succ(u, c)) {
        if (!allowed[r]) continue;
        if (r == q) {
          std::vector<StateIndex> states{q};
          std::vector<SymbolIndex> letters{c};
          for (std::int64_t cur = u; cur != -1; cur = parent[cur]) {
            states.push_back(static_cast<StateIndex>(cur));
            letters.push_back(via[cur]);
          }
          states.push_back(q);
          std::reverse(states.begin() + 1, states.end() - 1);
          std::reverse(letters.begin(), letters.end());
          return std::make_pair(std::move(states), std::move(letters));
        }
        if (parent[r] == -2) {
          parent[r] = static_cast<std::int64_t>(u);
          via[r] = c;
          queue.push_back(r);
        }
      }
  }
  return std::nullopt;
}

} // namespace

bool nba_empty(const Nba& a) {
  auto reach = reachable_states(a);
  for (StateIndex f : a.final_states)
    if (reach[f] && shortest_loop(a, f, reach)) return false;
  return true;
}

LassoWitness find_up_lasso(const Nba& a) {
  Adjacency adj(a);
  // BFS from initial states for shortest stems.
  std::vector<std::int64_t> parent(a.state_count, -2);
  std::vector<SymbolIndex> via(a.state_count, 0);
  std::vector<std::uint32_t> dist(a.state_count, 0);
  std::deque<StateIndex> queue;
  for (StateIndex q : a.initial_states) {
    parent[q] = -1;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (SymbolIndex c = 0; c < a.alphabet.size(); ++c)
      for (StateIndex r : adj.succ(q, c))
        if (parent[r] == -2) {
          parent[r] = static_cast<std::int64_t>(q);
          via[r] = c;
          dist[r] = dist[q] + 1;
          queue.push_back(r);
        }
  }
  std::vector<bool> reach(a.state_count, false);
  for (StateIndex q = 0; q < a.state_count; ++q) reach[q] = parent[q] != -2;

  // Shortest stem first, then state index; loop found per candidate.
  std::optional<StateIndex> best;
  for (StateIndex f : a.final_states) {
    if (!reach[f] || !shortest_loop(a, f, reach)) continue;
    if (!best || dist[f] < dist[*best] || (dist[f] == dist[*best] && f < *best)) best = f;
  }
  if (!best) throw std::invalid_argument("empty language has no witness word");

  std::vector<StateIndex> stem_states;
  std::vector<SymbolIndex> stem_letters;
  for (std::int64_t cur = *best; cur != -1; cur = parent[cur]) {
    stem_states.push_back(static_cast<StateIndex>(cur));
    if (parent[cur] != -1) stem_letters.push_back(via[cur]);
  }
  std::reverse(stem_states.begin(), stem_states.end());
  std::reverse(stem_letters.begin(), stem_letters.end());

  auto loop = shortest_loop(a, *best, reach);
  return LassoWitness{std::move(stem_states), FiniteWord(a.alphabet, std::move(stem_letters)),
                      std::move(loop->first), FiniteWord(a.alphabet, std::move(loop->second))};
}

UPWord find_up_word(const Nba& a) { return find_up_lasso(a).word(); }

bool nfa_member(const Nfa& n, const FiniteWord& w) {
  if (n.alphabet != w.alphabet) throw std::invalid_argument("alphabet mismatch");
  Adjacency adj(n);
  std::vector<bool> current(n.state_count, false);
  for (StateIndex q : n.initial_states) current[q] = true;
  for (SymbolIndex c : w.letters) {
    std::vector<bool> next(n.state_count, false);
    for (StateIndex q = 0; q < n.state_count; ++q)
      if (current[q])
        for (StateIndex r : adj.succ(q, c)) next[r] = true;
    current = std::move(next);
  }
  for (StateIndex q : n.final_states)
    if (current[q]) return true;
  return false;
}

std::vector<FiniteWord> nfa_sample(const Nfa& n, std::size_t max_len, std::size_t max_count) {
  Adjacency adj(n);
  std::vector<FiniteWord> out;

  struct Item {
    std::vector<SymbolIndex> word;
    std::vector<bool> states;
  };
  auto accepts = [&](const std::vector<bool>& states) {
    for (StateIndex q : n.final_states)
      if (states[q]) return true;
    return false;
  };
  std::vector<bool> init(n.state_count, false);
  for (StateIndex q : n.initial_states) init[q] = true;

  std::vector<Item> layer{{{}, init}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& item : layer) {
      if (accepts(item.states)) {
        out.emplace_back(n.alphabet, item.word);
        if (out.size() >= max_count) return out;
      }
    }
    if (len == max_len) break;
    std::vector<Item> next_layer;
    for (const auto& item : layer)
      for (SymbolIndex c = 0; c < n.alphabet.size(); ++c) {
        std::vector<bool> next(n.state_count, false);
        bool any = false;
        for (StateIndex q = 0; q < n.state_count; ++q)
          if (item.states[q])
            for (StateIndex r : adj.succ(q, c)) {
              next[r] = true;
              any = true;
            }
        if (!any) continue; // dead prefix
        auto word = item.word;
        word.push_back(c);
        next_layer.push_back({std::move(word), std::move(next)});
      }
    layer = std::move(next_layer);
  }
  return out;
}

} // namespace buchitop
