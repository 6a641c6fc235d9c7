#pragma once

#include <span>
#include <vector>

#include "revsc/state_set.hpp"

namespace revsc {

// Cap for externally built automata, so that every subset of their states
// fits in one machine word. Subset automata produced by determinize are only
// bounded by memory and may be larger.
inline constexpr int kMaxBuildStates = 64;
inline constexpr int kMaxBuildLetters = 64;

// Complete deterministic finite automaton over letters 0..alphabet_size-1.
// Immutable after construction. The transition table is dense, state-major
// and letter-minor.
class Dfa {
 public:
  Dfa(int state_count, int alphabet_size, std::vector<int> delta, int initial,
      StateSet accepting);

  int state_count() const { return state_count_; }
  int alphabet_size() const { return alphabet_size_; }
  int initial() const { return initial_; }
  const StateSet& accepting() const { return accepting_; }
  const std::vector<int>& table() const { return delta_; }

  int next(int state, int letter) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_size_ + letter];
  }
  bool is_accepting(int state) const { return accepting_.test(state); }

  int run(int from, std::span<const int> word) const;
  bool accepts(std::span<const int> word) const;

  bool operator==(const Dfa&) const = default;

 private:
  int state_count_ = 1;
  int alphabet_size_ = 1;
  std::vector<int> delta_;
  int initial_ = 0;
  StateSet accepting_;
};

// Validating front door for externally supplied automata. Rejects partial or
// out-of-range tables and anything beyond kMaxBuildStates states.
Dfa build_dfa(int state_count, int alphabet_size,
              const std::vector<std::vector<int>>& delta_rows, int initial,
              const std::vector<int>& accepting);

// Nondeterministic automaton with a set of initial states and no epsilon
// transitions. Rows are state-major, letter-minor. The initial set may be
// empty (the reverse of a DFA that accepts nothing).
class Nfa {
 public:
  Nfa(int state_count, int alphabet_size, std::vector<StateSet> delta,
      StateSet initials, StateSet accepting);

  int state_count() const { return state_count_; }
  int alphabet_size() const { return alphabet_size_; }
  const StateSet& initials() const { return initials_; }
  const StateSet& accepting() const { return accepting_; }

  const StateSet& next(int state, int letter) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_size_ + letter];
  }

 private:
  int state_count_ = 1;
  int alphabet_size_ = 1;
  std::vector<StateSet> delta_;
  StateSet initials_;
  StateSet accepting_;
};

// Result of the subset construction: the deterministic automaton plus the
// subset of source states each of its states stands for. State 0 is the
// initial subset; states appear in breadth-first discovery order with
// letters scanned in index order.
struct SubsetAutomaton {
  Dfa dfa;
  std::vector<StateSet> subsets;
};

// Transposes every edge and swaps the roles of initial and accepting states.
Nfa reverse(const Dfa& dfa);

// Breadth-first subset construction. The empty subset is an ordinary state
// when it is reachable.
SubsetAutomaton determinize(const Nfa& nfa);

// Minimal complete DFA for the same language: unreachable states dropped,
// equivalent states merged, states renumbered in breadth-first discovery
// order from the initial state with letters scanned in index order.
Dfa minimize(const Dfa& dfa);

// Same automaton with the acceptance set complemented.
Dfa complement(const Dfa& dfa);

// Non-accepting states that loop to themselves under every letter.
StateSet dead_states(const Dfa& dfa);

int state_complexity(const Dfa& dfa);

// Number of reachable subsets of determinize(reverse(minimize(dfa))), which
// equals the state complexity of the reversed language because those subsets
// are pairwise distinguishable.
int reverse_state_complexity(const Dfa& dfa);

}  // namespace revsc
