#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "revsc/automata.hpp"

namespace revsc {

// Binary n-state witness (n >= 3): an accepting sink, a dead state, and a
// chain feeding both. Its reverse needs exactly 2^(n-2) states, the largest
// value possible for binary inputs whose minimal DFA is partially ordered
// once n >= 8.
Dfa fig2_witness(int n);

// n-state witness over n-2 letters (n >= 3) whose reverse needs exactly
// 2^(n-1) - 1 states. Both the language and its reverse have partially
// ordered minimal DFAs.
Dfa fig5_witness(int n);

// Binary n-state witnesses for 2 <= n <= 7 maximizing the reverse state
// complexity when the minimal DFAs of the language and of its reverse are
// both partially ordered. Built from table1_expression(n).
Dfa table1_witness(int n);

// The defining regular expression of table1_witness(n), fully expanded.
std::string table1_expression(int n);

// Largest state complexity of the reverse over languages with a partially
// ordered minimal DFA with n states over k letters.
std::uint64_t r_trivial_reverse_bound(int n, int k);

// Binary upper bound (n >= 4) when the reverse's minimal DFA is partially
// ordered as well: 2^(n-3) + min(max(2n-3, (n-2)^2), 2^(n-3)) + (n-1).
std::uint64_t binary_j_trivial_reverse_bound(int n);

// Alphabet-dependent bound for the same class (n >= 3). Returns nullopt for
// 3 <= k <= n-3 where no closed form is known.
std::optional<std::uint64_t> j_trivial_alphabet_bound(int n, int k);

}  // namespace revsc
