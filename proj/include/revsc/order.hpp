#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "revsc/automata.hpp"

namespace revsc {

// Bit i stands for letter i.
using LetterSet = std::uint64_t;

// Certificate that the reachability relation of a DFA is a partial order:
// number[p] <= number[q] whenever q is reachable from p, with equality only
// for p == q. maximal holds the states whose transitions are all self-loops.
struct PartialOrderCert {
  std::vector<int> number;
  StateSet maximal;
};

// Nontrivial transition cycle. Taking letters[i] from states[i] leads to
// states[(i+1) % size], so following all letters returns to states[0].
struct Cycle {
  std::vector<int> states;
  std::vector<int> letters;
};

class NotPartiallyOrdered : public std::invalid_argument {
 public:
  explicit NotPartiallyOrdered(Cycle cycle);
  const Cycle& cycle() const { return cycle_; }

 private:
  Cycle cycle_;
};

// Either a certificate or a witness cycle of length at least 2.
std::variant<PartialOrderCert, Cycle> reachability_order(const Dfa& dfa);

bool is_partially_ordered(const Dfa& dfa);

// Directed graph over the states of a DFA restricted to a letter subset.
struct LetterGraph {
  int vertex_count = 0;
  std::vector<StateSet> out;  // successors, self-loops included
};

// Edge (p, q) present iff some letter of gamma moves p to q. Bits of gamma
// beyond the alphabet are ignored.
LetterGraph letter_graph(const Dfa& dfa, LetterSet gamma);

// Forward closure of p in g, p included.
StateSet component_cone(const LetterGraph& g, int p);

// Letters under which p loops to itself.
LetterSet self_loop_alphabet(const Dfa& dfa, int p);

// Both conditions require a partially ordered input and throw
// NotPartiallyOrdered otherwise. Maximality is measured inside the induced
// subgraph, which for these closed vertex sets means having no outgoing edge
// to a different state.
//
// simon_condition checks that for every letter subset the forward cone of
// every state has a unique maximal state. The alphabet is capped at 16
// letters because every subset is enumerated.
bool simon_condition(const Dfa& dfa);

// trahtman_condition checks that for every state p the weakly connected
// component of p in the graph of p's self-loop letters has a unique maximal
// state. Quadratic in the automaton size.
bool trahtman_condition(const Dfa& dfa);

// True iff the minimal DFA of the language is partially ordered.
bool is_r_trivial(const Dfa& dfa);

enum class JTrivialMethod { kReversePo, kSimon, kTrahtman };

// True iff the language and its reverse both have partially ordered minimal
// DFAs. kReversePo tests exactly that; kSimon and kTrahtman decide the same
// class through the conditions above applied to minimize(dfa).
bool is_j_trivial(const Dfa& dfa, JTrivialMethod method);

}  // namespace revsc
