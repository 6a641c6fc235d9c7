#include "revsc/order.hpp"

#include <algorithm>
#include <queue>

namespace revsc {

namespace {

std::string cycle_message(const Cycle& c) {
  std::string msg = "automaton is not partially ordered, cycle:";
  for (std::size_t i = 0; i < c.states.size(); ++i)
    msg += " " + std::to_string(c.states[i]);
  return msg;
}

// Throws when the automaton has a nontrivial cycle.
const Dfa& require_partial_order(const Dfa& dfa) {
  auto r = reachability_order(dfa);
  if (auto* cycle = std::get_if<Cycle>(&r))
    throw NotPartiallyOrdered(std::move(*cycle));
  return dfa;
}

// Vertices with no outgoing edge to a different vertex. Forward cones and
// weak components are closed under successors, so this is maximality inside
// any of their induced subgraphs.
StateSet maximal_vertices(const LetterGraph& g) {
  StateSet out(g.vertex_count);
  for (int p = 0; p < g.vertex_count; ++p) {
    StateSet others = g.out[p];
    if (p < others.width()) others.reset(p);
    if (others.empty()) out.set(p);
  }
  return out;
}

}  // namespace

NotPartiallyOrdered::NotPartiallyOrdered(Cycle cycle)
    : std::invalid_argument(cycle_message(cycle)), cycle_(std::move(cycle)) {}

std::variant<PartialOrderCert, Cycle> reachability_order(const Dfa& dfa) {
  const int n = dfa.state_count();
  const int k = dfa.alphabet_size();

  // Depth-first search over non-self edges; a back edge closes a cycle.
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> par_state(n, -1), par_letter(n, -1);
  std::vector<std::pair<int, int>> stack;  // state, next letter index
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [p, a] = stack.back();
      if (a == k) {
        color[p] = 2;
        stack.pop_back();
        continue;
      }
      int letter = a++;
      int t = dfa.next(p, letter);
      if (t == p) continue;
      if (color[t] == 0) {
        color[t] = 1;
        par_state[t] = p;
        par_letter[t] = letter;
        stack.emplace_back(t, 0);
      } else if (color[t] == 1) {
        // Walk parents from p back to t, then close with (p, letter).
        Cycle c;
        std::vector<int> back;
        for (int u = p; u != t; u = par_state[u]) back.push_back(u);
        back.push_back(t);
        std::reverse(back.begin(), back.end());
        c.states = back;
        for (std::size_t i = 0; i + 1 < back.size(); ++i)
          c.letters.push_back(par_letter[back[i + 1]]);
        c.letters.push_back(letter);
        return c;
      }
    }
  }

  // Topological numbering, smallest ready state first.
  std::vector<StateSet> out(n, StateSet(n));
  std::vector<int> indeg(n, 0);
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < k; ++a) {
      int t = dfa.next(p, a);
      if (t != p && !out[p].test(t)) {
        out[p].set(t);
        ++indeg[t];
      }
    }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) ready.push(p);
  PartialOrderCert cert;
  cert.number.assign(n, -1);
  cert.maximal = StateSet(n);
  int next_number = 0;
  while (!ready.empty()) {
    int p = ready.top();
    ready.pop();
    cert.number[p] = next_number++;
    for (int t : out[p].indices())
      if (--indeg[t] == 0) ready.push(t);
  }
  for (int p = 0; p < n; ++p)
    if (out[p].empty()) cert.maximal.set(p);
  return cert;
}

bool is_partially_ordered(const Dfa& dfa) {
  return std::holds_alternative<PartialOrderCert>(reachability_order(dfa));
}

LetterGraph letter_graph(const Dfa& dfa, LetterSet gamma) {
  const int n = dfa.state_count();
  const int k = dfa.alphabet_size();
  LetterGraph g{n, std::vector<StateSet>(n, StateSet(n))};
  for (int a = 0; a < k && a < 64; ++a) {
    if (!((gamma >> a) & 1u)) continue;
    for (int p = 0; p < n; ++p) g.out[p].set(dfa.next(p, a));
  }
  return g;
}

StateSet component_cone(const LetterGraph& g, int p) {
  StateSet seen(g.vertex_count);
  seen.set(p);
  std::vector<int> work{p};
  while (!work.empty()) {
    int q = work.back();
    work.pop_back();
    for (int t : g.out[q].indices())
      if (!seen.test(t)) {
        seen.set(t);
        work.push_back(t);
      }
  }
  return seen;
}

LetterSet self_loop_alphabet(const Dfa& dfa, int p) {
  LetterSet out = 0;
  for (int a = 0; a < dfa.alphabet_size() && a < 64; ++a)
    if (dfa.next(p, a) == p) out |= LetterSet{1} << a;
  return out;
}

namespace {

// Word-parallel helpers for automata with at most 64 states. The letter
// graph of gamma is kept as one successor mask per state.
struct MaskGraph {
  std::uint64_t out[kMaxBuildStates];
  std::uint64_t maximal = 0;

  MaskGraph(const Dfa& dfa, LetterSet gamma) {
    const int n = dfa.state_count();
    const int k = dfa.alphabet_size();
    for (int p = 0; p < n; ++p) out[p] = 0;
    for (int a = 0; a < k && a < 64; ++a) {
      if (!((gamma >> a) & 1u)) continue;
      for (int p = 0; p < n; ++p)
        out[p] |= std::uint64_t{1} << dfa.next(p, a);
    }
    for (int p = 0; p < n; ++p)
      if ((out[p] & ~(std::uint64_t{1} << p)) == 0)
        maximal |= std::uint64_t{1} << p;
  }

  std::uint64_t forward(std::uint64_t from) const {
    std::uint64_t seen = from;
    std::uint64_t frontier = from;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b;) {
        int q = std::countr_zero(b);
        b &= b - 1;
        next |= out[q];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }
};

}  // namespace

bool simon_condition(const Dfa& dfa) {
  require_partial_order(dfa);
  const int n = dfa.state_count();
  const int k = dfa.alphabet_size();
  if (n > kMaxBuildStates)
    throw std::invalid_argument("simon_condition supports at most 64 states");
  if (k > 16)
    throw std::invalid_argument("simon_condition supports at most 16 letters");
  for (LetterSet gamma = 0; gamma < (LetterSet{1} << k); ++gamma) {
    MaskGraph g(dfa, gamma);
    for (int p = 0; p < n; ++p) {
      std::uint64_t cone = g.forward(std::uint64_t{1} << p);
      if (std::popcount(cone & g.maximal) != 1) return false;
    }
  }
  return true;
}

bool trahtman_condition(const Dfa& dfa) {
  require_partial_order(dfa);
  const int n = dfa.state_count();
  if (n > kMaxBuildStates)
    throw std::invalid_argument(
        "trahtman_condition supports at most 64 states");
  for (int p = 0; p < n; ++p) {
    MaskGraph g(dfa, self_loop_alphabet(dfa, p));
    // Weakly connected component of p.
    std::uint64_t und[kMaxBuildStates];
    for (int q = 0; q < n; ++q) und[q] = g.out[q];
    for (int q = 0; q < n; ++q)
      for (std::uint64_t b = g.out[q]; b;) {
        int t = std::countr_zero(b);
        b &= b - 1;
        und[t] |= std::uint64_t{1} << q;
      }
    std::uint64_t seen = std::uint64_t{1} << p;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b;) {
        int q = std::countr_zero(b);
        b &= b - 1;
        next |= und[q];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (std::popcount(seen & g.maximal) != 1) return false;
  }
  return true;
}

bool is_r_trivial(const Dfa& dfa) {
  return is_partially_ordered(minimize(dfa));
}

bool is_j_trivial(const Dfa& dfa, JTrivialMethod method) {
  Dfa m = minimize(dfa);
  if (!is_partially_ordered(m)) return false;
  switch (method) {
    case JTrivialMethod::kReversePo:
      return is_partially_ordered(minimize(determinize(reverse(dfa)).dfa));
    case JTrivialMethod::kSimon:
      return simon_condition(m);
    case JTrivialMethod::kTrahtman:
      return trahtman_condition(m);
  }
  return false;
}

}  // namespace revsc
