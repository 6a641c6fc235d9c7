#include "revsc/automata.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace revsc {

Dfa::Dfa(int state_count, int alphabet_size, std::vector<int> delta,
         int initial, StateSet accepting)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      delta_(std::move(delta)),
      initial_(initial),
      accepting_(std::move(accepting)) {
  if (state_count_ < 1)
    throw std::invalid_argument("dfa needs at least one state");
  if (alphabet_size_ < 1)
    throw std::invalid_argument("dfa needs at least one letter");
  if (delta_.size() !=
      static_cast<std::size_t>(state_count_) * alphabet_size_)
    throw std::invalid_argument("transition table has the wrong size");
  for (int t : delta_)
    if (t < 0 || t >= state_count_)
      throw std::invalid_argument("transition target out of range");
  if (initial_ < 0 || initial_ >= state_count_)
    throw std::invalid_argument("initial state out of range");
  if (accepting_.width() != state_count_)
    throw std::invalid_argument("accepting set has the wrong width");
}

int Dfa::run(int from, std::span<const int> word) const {
  int q = from;
  for (int a : word) {
    if (a < 0 || a >= alphabet_size_)
      throw std::invalid_argument("letter out of range");
    q = next(q, a);
  }
  return q;
}

bool Dfa::accepts(std::span<const int> word) const {
  return accepting_.test(run(initial_, word));
}

Dfa build_dfa(int state_count, int alphabet_size,
              const std::vector<std::vector<int>>& delta_rows, int initial,
              const std::vector<int>& accepting) {
  if (state_count < 1 || state_count > kMaxBuildStates)
    throw std::invalid_argument("state count must be between 1 and 64");
  if (alphabet_size < 1 || alphabet_size > kMaxBuildLetters)
    throw std::invalid_argument("alphabet size must be between 1 and 64");
  if (delta_rows.size() != static_cast<std::size_t>(state_count))
    throw std::invalid_argument("expected one delta row per state");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(state_count) * alphabet_size);
  for (const auto& row : delta_rows) {
    if (row.size() != static_cast<std::size_t>(alphabet_size))
      throw std::invalid_argument("expected one delta entry per letter");
    for (int t : row) flat.push_back(t);
  }
  StateSet acc(state_count);
  for (int q : accepting) {
    if (q < 0 || q >= state_count)
      throw std::invalid_argument("accepting state out of range");
    acc.set(q);
  }
  return Dfa(state_count, alphabet_size, std::move(flat), initial,
             std::move(acc));
}

Nfa::Nfa(int state_count, int alphabet_size, std::vector<StateSet> delta,
         StateSet initials, StateSet accepting)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      delta_(std::move(delta)),
      initials_(std::move(initials)),
      accepting_(std::move(accepting)) {
  if (state_count_ < 1)
    throw std::invalid_argument("nfa needs at least one state");
  if (alphabet_size_ < 1)
    throw std::invalid_argument("nfa needs at least one letter");
  if (delta_.size() !=
      static_cast<std::size_t>(state_count_) * alphabet_size_)
    throw std::invalid_argument("transition table has the wrong size");
  for (const auto& row : delta_)
    if (row.width() != state_count_)
      throw std::invalid_argument("transition row has the wrong width");
  if (initials_.width() != state_count_ ||
      accepting_.width() != state_count_)
    throw std::invalid_argument("state set has the wrong width");
}

Nfa reverse(const Dfa& dfa) {
  const int n = dfa.state_count();
  const int k = dfa.alphabet_size();
  std::vector<StateSet> delta(static_cast<std::size_t>(n) * k, StateSet(n));
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < k; ++a)
      delta[static_cast<std::size_t>(dfa.next(p, a)) * k + a].set(p);
  return Nfa(n, k, std::move(delta), dfa.accepting(),
             StateSet::of(n, {dfa.initial()}));
}

SubsetAutomaton determinize(const Nfa& nfa) {
  const int n = nfa.state_count();
  const int k = nfa.alphabet_size();
  std::unordered_map<StateSet, int, StateSet::Hash> index;
  std::vector<StateSet> subsets;
  std::vector<int> delta;
  subsets.push_back(nfa.initials());
  index.emplace(nfa.initials(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      StateSet image(n);
      for (int q = 0; q < n; ++q)
        if (subsets[i].test(q)) image |= nfa.next(q, a);
      auto [it, inserted] =
          index.emplace(image, static_cast<int>(subsets.size()));
      if (inserted) subsets.push_back(std::move(image));
      delta.push_back(it->second);
    }
  }
  const int m = static_cast<int>(subsets.size());
  StateSet accepting(m);
  for (int i = 0; i < m; ++i)
    if (subsets[i].intersects(nfa.accepting())) accepting.set(i);
  return SubsetAutomaton{
      Dfa(m, k, std::move(delta), 0, std::move(accepting)),
      std::move(subsets)};
}

Dfa minimize(const Dfa& dfa) {
  const int n = dfa.state_count();
  const int k = dfa.alphabet_size();

  // Reachable states in breadth-first discovery order.
  std::vector<int> disc;
  std::vector<int> pos(n, -1);
  disc.push_back(dfa.initial());
  pos[dfa.initial()] = 0;
  for (std::size_t i = 0; i < disc.size(); ++i)
    for (int a = 0; a < k; ++a) {
      int t = dfa.next(disc[i], a);
      if (pos[t] < 0) {
        pos[t] = static_cast<int>(disc.size());
        disc.push_back(t);
      }
    }
  const int m = static_cast<int>(disc.size());

  // Partition refinement by acceptance, then by successor blocks.
  std::vector<int> block(m), nb(m);
  int blocks;
  {
    int acc_id = -1, rej_id = -1, next_id = 0;
    for (int i = 0; i < m; ++i) {
      int& id = dfa.is_accepting(disc[i]) ? acc_id : rej_id;
      if (id < 0) id = next_id++;
      block[i] = id;
    }
    blocks = next_id;
  }
  std::vector<int> sig(k + 1);
  while (true) {
    std::map<std::vector<int>, int> ids;
    for (int i = 0; i < m; ++i) {
      sig[0] = block[i];
      for (int a = 0; a < k; ++a) sig[a + 1] = block[pos[dfa.next(disc[i], a)]];
      auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
      nb[i] = it->second;
    }
    int count = static_cast<int>(ids.size());
    block.swap(nb);
    if (count == blocks) break;
    blocks = count;
  }

  // Quotient with canonical breadth-first numbering.
  std::vector<int> rep(blocks, -1);
  for (int i = 0; i < m; ++i)
    if (rep[block[i]] < 0) rep[block[i]] = disc[i];
  std::vector<int> num(blocks, -1);
  std::vector<int> order;
  num[block[0]] = 0;
  order.push_back(block[0]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      int tb = block[pos[dfa.next(rep[order[i]], a)]];
      if (num[tb] < 0) {
        num[tb] = static_cast<int>(order.size());
        order.push_back(tb);
      }
    }
  }
  std::vector<int> delta(static_cast<std::size_t>(blocks) * k);
  StateSet accepting(blocks);
  for (int b = 0; b < blocks; ++b) {
    int q = num[b];
    for (int a = 0; a < k; ++a)
      delta[static_cast<std::size_t>(q) * k + a] =
          num[block[pos[dfa.next(rep[b], a)]]];
    if (dfa.is_accepting(rep[b])) accepting.set(q);
  }
  return Dfa(blocks, k, std::move(delta), 0, std::move(accepting));
}

Dfa complement(const Dfa& dfa) {
  return Dfa(dfa.state_count(), dfa.alphabet_size(), dfa.table(),
             dfa.initial(), dfa.accepting().complemented());
}

StateSet dead_states(const Dfa& dfa) {
  const int n = dfa.state_count();
  StateSet out(n);
  for (int p = 0; p < n; ++p) {
    if (dfa.is_accepting(p)) continue;
    bool loops = true;
    for (int a = 0; a < dfa.alphabet_size() && loops; ++a)
      loops = dfa.next(p, a) == p;
    if (loops) out.set(p);
  }
  return out;
}

int state_complexity(const Dfa& dfa) { return minimize(dfa).state_count(); }

int reverse_state_complexity(const Dfa& dfa) {
  return determinize(reverse(minimize(dfa))).dfa.state_count();
}

}  // namespace revsc
