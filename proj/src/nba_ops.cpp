#include "buchitop/nba_ops.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace buchitop {

namespace {

struct Adjacency {
  std::size_t s;
  std::vector<std::vector<StateIndex>> table;

  explicit Adjacency(const detail::AutomatonBase& a)
      : s(a.alphabet.size()), table(a.state_count * s) {
    for (const auto& t : a.transitions) table[t.from * s + t.symbol].push_back(t.to);
  }
  const std::vector<StateIndex>& succ(StateIndex q, SymbolIndex c) const {
    return table[q * s + c];
  }
};

// On-the-fly exploration of the flagged product. `paired` chooses between
// reading the same symbol in both factors (intersection) and reading a pair
// symbol componentwise (product over the pair alphabet).
Nba flagged_product(const Nba& a, const Nba& b, bool paired) {
  Alphabet alphabet = paired ? pair_alphabet(a.alphabet, b.alphabet) : a.alphabet;
  if (!paired && a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");

  Adjacency adj_a(a), adj_b(b);
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

  std::vector<StateIndex> initial;
  for (StateIndex qa : a.initial_states)
    for (StateIndex qb : b.initial_states) initial.push_back(intern(qa, qb, 0));

  std::vector<Transition> trans;
  std::vector<StateIndex> final_states;
  while (!queue.empty()) {
    StateIndex id = queue.front();
    queue.pop_front();
    auto [qa, qb, flag] = states[id];
    if (flag == 0 && a.is_final(qa)) final_states.push_back(id);
    int next_flag = flag == 0 ? (a.is_final(qa) ? 1 : 0) : (b.is_final(qb) ? 0 : 1);
    for (SymbolIndex ca = 0; ca < a.alphabet.size(); ++ca) {
      for (SymbolIndex cb = paired ? 0 : ca; cb < (paired ? b.alphabet.size() : ca + 1); ++cb) {
        SymbolIndex sym = paired ? pair_index(b.alphabet, ca, cb) : ca;
        for (StateIndex ra : adj_a.succ(qa, ca))
          for (StateIndex rb : adj_b.succ(qb, cb))
            trans.push_back({id, sym, intern(ra, rb, next_flag)});
      }
    }
  }
  if (states.empty()) return Nba(alphabet, 1, {}, {}, {});
  return Nba(alphabet, static_cast<StateIndex>(states.size()), std::move(initial),
             std::move(final_states), std::move(trans));
}

} // namespace

Nba nba_union(const Nba& a, const Nba& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
  StateIndex shift = a.state_count;
  std::vector<StateIndex> initial = a.initial_states;
  std::vector<StateIndex> final_states = a.final_states;
  std::vector<Transition> trans = a.transitions;
  for (StateIndex q : b.initial_states) initial.push_back(q + shift);
  for (StateIndex q : b.final_states) final_states.push_back(q + shift);
  for (const auto& t : b.transitions) trans.push_back({t.from + shift, t.symbol, t.to + shift});
  return Nba(a.alphabet, a.state_count + b.state_count, std::move(initial),
             std::move(final_states), std::move(trans));
}

Nba nba_intersection(const Nba& a, const Nba& b) { return flagged_product(a, b, false); }

Nba nba_product(const Nba& a, const Nba& b) { return flagged_product(a, b, true); }

Nba nba_projection(const Nba& a, int coordinate, const Alphabet& left, const Alphabet& right) {
  if (coordinate != 0 && coordinate != 1) throw std::invalid_argument("coordinate must be 0 or 1");
  if (a.alphabet != pair_alphabet(left, right))
    throw std::invalid_argument("automaton alphabet is not the given pair alphabet");
  SymbolIndex rs = static_cast<SymbolIndex>(right.size());
  std::vector<Transition> trans;
  trans.reserve(a.transitions.size());
  for (const auto& t : a.transitions)
    trans.push_back({t.from, coordinate == 0 ? t.symbol / rs : t.symbol % rs, t.to});
  return Nba(coordinate == 0 ? left : right, a.state_count, a.initial_states, a.final_states,
             std::move(trans));
}

// --- complementation -------------------------------------------------------

namespace {

// Level ranking: per state ⊥ or a rank ≤ 2n, even on final states. Packed
// into a uint64 (5 bits per state, ranks ≤ 20), which caps complementable
// inputs at 10 states; the budget fires long before that bound matters.
struct RankFrame {
  const Nba& a;
  Adjacency adj;
  unsigned n;
  unsigned max_rank;

  explicit RankFrame(const Nba& a_) : a(a_), adj(a_), n(a_.state_count), max_rank(2 * n) {
    if (n > 10)
      throw BudgetExceeded("complement: input too large for rank encoding (" +
                           std::to_string(n) + " states)");
  }

  static constexpr unsigned kBot = 31;

  unsigned get(std::uint64_t f, unsigned q) const { return (f >> (5 * q)) & 31u; }
  static std::uint64_t set(std::uint64_t f, unsigned q, unsigned r) {
    return (f & ~(std::uint64_t{31} << (5 * q))) | (std::uint64_t{r} << (5 * q));
  }
};

} // namespace

Nba nba_complement(const Nba& a, const Budget& budget) {
  RankFrame fr(a);
  const unsigned n = fr.n;

  std::uint64_t f0 = 0;
  for (unsigned q = 0; q < n; ++q) f0 = RankFrame::set(f0, q, RankFrame::kBot);
  for (StateIndex q : a.initial_states) f0 = RankFrame::set(f0, q, fr.max_rank);

  struct KV {
    std::uint64_t f;
    std::uint32_t owing;
  };
  // f uses 5n ≤ 50 bits, owing n ≤ 10 bits: the combined key is injective.
  auto key = [&](const KV& s) { return (s.f << n) | s.owing; };
  std::unordered_map<std::uint64_t, StateIndex> ids;
  std::vector<KV> states;
  std::deque<StateIndex> queue;
  auto intern = [&](const KV& s) {
    auto [it, fresh] = ids.try_emplace(key(s), static_cast<StateIndex>(states.size()));
    if (fresh) {
      states.push_back(s);
      queue.push_back(it->second);
      budget.charge(states.size(), "complement");
    }
    return it->second;
  };

  StateIndex init = intern({f0, 0});
  std::vector<Transition> trans;
  std::vector<StateIndex> final_states;

  while (!queue.empty()) {
    StateIndex id = queue.front();
    queue.pop_front();
    KV cur = states[id]; // copy: `states` may reallocate below
    if (cur.owing == 0) final_states.push_back(id);

    for (SymbolIndex c = 0; c < a.alphabet.size(); ++c) {
      // Successor domain and pointwise rank bounds.
      std::vector<unsigned> bound(n, RankFrame::kBot);
      std::uint32_t odelta = 0;
      for (unsigned q = 0; q < n; ++q) {
        unsigned r = fr.get(cur.f, q);
        if (r == RankFrame::kBot) continue;
        for (StateIndex q2 : fr.adj.succ(q, c)) {
          if (bound[q2] == RankFrame::kBot || r < bound[q2]) bound[q2] = r;
          if (cur.owing & (1u << q)) odelta |= 1u << q2;
        }
      }
      std::vector<unsigned> domain;
      for (unsigned q = 0; q < n; ++q)
        if (bound[q] != RankFrame::kBot) domain.push_back(q);

      // Enumerate all level rankings under the bounds (final states even).
      std::uint64_t fbase = 0;
      for (unsigned q = 0; q < n; ++q) fbase = RankFrame::set(fbase, q, RankFrame::kBot);
      auto emit = [&](std::uint64_t f2) {
        std::uint32_t evens = 0;
        for (unsigned q : domain)
          if (fr.get(f2, q) % 2 == 0) evens |= 1u << q;
        std::uint32_t owing2 = cur.owing == 0 ? evens : (odelta & evens);
        trans.push_back({id, c, intern({f2, owing2})});
      };
      std::size_t depth = 0;
      std::uint64_t f2 = fbase;
      if (domain.empty()) {
        emit(fbase);
        continue;
      }
      // Iterative product over per-state rank choices.
      std::vector<unsigned> pos(domain.size(), 0);
      while (true) {
        if (depth == domain.size()) {
          emit(f2);
          // unwind to last incrementable level
          while (depth > 0) {
            unsigned q = domain[depth - 1];
            unsigned step = a.is_final(q) ? 2 : 1;
            unsigned next = pos[depth - 1] + step;
            if (next <= bound[q]) {
              pos[depth - 1] = next;
              f2 = RankFrame::set(f2, q, next);
              break;
            }
            f2 = RankFrame::set(f2, q, RankFrame::kBot);
            --depth;
          }
          if (depth == 0) break;
          continue;
        }
        unsigned q = domain[depth];
        pos[depth] = 0;
        f2 = RankFrame::set(f2, q, 0);
        ++depth;
      }
    }
  }

  Nba raw(a.alphabet, static_cast<StateIndex>(states.size()), {init}, std::move(final_states),
          std::move(trans));
  return nba_reduce(raw);
}

// --- reductions -------------------------------------------------------------

namespace {

std::vector<bool> reachable_states(const detail::AutomatonBase& a) {
  Adjacency adj(a);
  std::vector<bool> seen(a.state_count, false);
  std::deque<StateIndex> queue;
  for (StateIndex q : a.initial_states) {
    seen[q] = true;
    queue.push_back(q);
  }
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

bool state_on_cycle(const detail::AutomatonBase& a, const Adjacency& adj, StateIndex q) {
  std::vector<bool> seen(a.state_count, false);
  std::deque<StateIndex> queue;
  for (SymbolIndex c = 0; c < a.alphabet.size(); ++c)
    for (StateIndex r : adj.succ(q, c)) {
      if (r == q) return true;
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  while (!queue.empty()) {
    StateIndex u = queue.front();
    queue.pop_front();
    for (SymbolIndex c = 0; c < a.alphabet.size(); ++c)
      for (StateIndex r : adj.succ(u, c)) {
        if (r == q) return true;
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
  }
  return false;
}

// States with a nonempty residual language: those that can reach a final
// state lying on a cycle.
std::vector<bool> live_states(const detail::AutomatonBase& a) {
  Adjacency adj(a);
  std::vector<bool> live(a.state_count, false);
  std::deque<StateIndex> queue;
  for (StateIndex f : a.final_states)
    if (state_on_cycle(a, adj, f)) {
      live[f] = true;
      queue.push_back(f);
    }
  // backward closure
  std::vector<std::vector<StateIndex>> preds(a.state_count);
  for (const auto& t : a.transitions) preds[t.to].push_back(t.from);
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (StateIndex p : preds[q])
      if (!live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
  }
  return live;
}

Nba restrict_to(const Nba& a, const std::vector<bool>& keep) {
  std::vector<StateIndex> renum(a.state_count, 0);
  StateIndex next = 0;
  for (StateIndex q = 0; q < a.state_count; ++q)
    if (keep[q]) renum[q] = next++;
  if (next == 0) return Nba(a.alphabet, 1, {}, {}, {});
  std::vector<StateIndex> initial, final_states;
  std::vector<Transition> trans;
  for (StateIndex q : a.initial_states)
    if (keep[q]) initial.push_back(renum[q]);
  for (StateIndex q : a.final_states)
    if (keep[q]) final_states.push_back(renum[q]);
  for (const auto& t : a.transitions)
    if (keep[t.from] && keep[t.to]) trans.push_back({renum[t.from], t.symbol, renum[t.to]});
  return Nba(a.alphabet, next, std::move(initial), std::move(final_states), std::move(trans));
}

// Greatest direct simulation preorder: q ≤ r requires q∈F ⇒ r∈F and every
// move of q matched by a move of r to a ≤-larger state.
std::vector<std::vector<bool>> direct_simulation(const Nba& a) {
  Adjacency adj(a);
  std::size_t n = a.state_count;
  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, true));
  for (StateIndex q = 0; q < n; ++q)
    for (StateIndex r = 0; r < n; ++r)
      if (a.is_final(q) && !a.is_final(r)) sim[q][r] = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateIndex q = 0; q < n; ++q)
      for (StateIndex r = 0; r < n; ++r) {
        if (!sim[q][r]) continue;
        bool ok = true;
        for (SymbolIndex c = 0; c < a.alphabet.size() && ok; ++c)
          for (StateIndex q2 : adj.succ(q, c)) {
            bool matched = false;
            for (StateIndex r2 : adj.succ(r, c))
              if (sim[q2][r2]) {
                matched = true;
                break;
              }
            if (!matched) {
              ok = false;
              break;
            }
          }
        if (!ok) {
          sim[q][r] = false;
          changed = true;
        }
      }
  }
  return sim;
}

Nba dsim_reduce(const Nba& a) {
  auto sim = direct_simulation(a);
  std::size_t n = a.state_count;

  // Quotient by simulation equivalence.
  std::vector<StateIndex> cls(n);
  StateIndex classes = 0;
  std::vector<StateIndex> rep;
  for (StateIndex q = 0; q < n; ++q) {
    bool found = false;
    for (StateIndex c = 0; c < classes && !found; ++c)
      if (sim[q][rep[c]] && sim[rep[c]][q]) {
        cls[q] = c;
        found = true;
      }
    if (!found) {
      cls[q] = classes++;
      rep.push_back(q);
    }
  }

  std::vector<StateIndex> initial, final_states;
  for (StateIndex q : a.initial_states) initial.push_back(cls[q]);
  for (StateIndex q : a.final_states) final_states.push_back(cls[q]);
  std::vector<Transition> trans;
  for (const auto& t : a.transitions) trans.push_back({cls[t.from], t.symbol, cls[t.to]});
  std::sort(trans.begin(), trans.end());
  trans.erase(std::unique(trans.begin(), trans.end()), trans.end());

  // Little brothers: drop (q,c,r) when some (q,c,r') strictly simulates r.
  auto class_sim = [&](StateIndex c1, StateIndex c2) { return sim[rep[c1]][rep[c2]]; };
  std::vector<Transition> kept;
  for (const auto& t : trans) {
    bool dominated = false;
    for (const auto& t2 : trans) {
      if (t2.from != t.from || t2.symbol != t.symbol || t2.to == t.to) continue;
      if (class_sim(t.to, t2.to) && !class_sim(t2.to, t.to)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(t);
  }
  return Nba(a.alphabet, classes == 0 ? 1 : classes, std::move(initial), std::move(final_states),
             std::move(kept));
}

} // namespace

Nba nba_trim(const Nba& a) {
  auto reach = reachable_states(a);
  auto live = live_states(a);
  std::vector<bool> keep(a.state_count, false);
  for (StateIndex q = 0; q < a.state_count; ++q) keep[q] = reach[q] && live[q];
  return restrict_to(a, keep);
}

Nba nba_reduce(const Nba& a) {
  Nba cur = nba_trim(a);
  while (true) {
    Nba next = nba_trim(dsim_reduce(cur));
    if (next.state_count == cur.state_count && next.transitions.size() == cur.transitions.size())
      return next;
    cur = std::move(next);
  }
}

// --- containment and closure ------------------------------------------------

bool nba_contains(const Nba& a, const Nba& b, const Budget& budget) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
  return nba_empty(nba_intersection(b, nba_complement(a, budget)));
}

bool nba_equivalent(const Nba& a, const Nba& b, const Budget& budget) {
  return nba_contains(a, b, budget) && nba_contains(b, a, budget);
}

Nba safety_closure(const Nba& a) {
  auto live = live_states(a);
  Nba res = restrict_to(a, live);
  if (res.initial_states.empty()) return res;
  std::vector<StateIndex> all(res.state_count);
  for (StateIndex q = 0; q < res.state_count; ++q) all[q] = q;
  return Nba(res.alphabet, res.state_count, res.initial_states, std::move(all), res.transitions);
}

bool nba_is_cantor_closed(const Nba& a, const Budget& budget) {
  return nba_equivalent(a, safety_closure(a), budget);
}

} // namespace buchitop
