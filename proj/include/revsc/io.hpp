#pragma once

#include <string>
#include <vector>

#include "revsc/automata.hpp"
#include "revsc/search.hpp"

namespace revsc {

// "a", "b" for up to two letters, "a1".."ak" beyond that.
std::vector<std::string> default_letter_names(int k);

// {"states": n, "alphabet": [...], "initial": q0, "accepting": [...],
//  "delta": [[one target per letter], ... one row per state]}
// Unknown keys are ignored on input; letters defaults to canonical names.
std::string dfa_to_json(const Dfa& dfa,
                        const std::vector<std::string>& letters = {});
Dfa dfa_from_json(const std::string& text,
                  std::vector<std::string>* letters_out = nullptr);

// Graphviz digraph: doublecircle for accepting states, an arrow from a
// hidden node into the initial state, one edge per (source, target) pair
// with coinciding letters merged onto its label, and the alphabet kept as a
// graph attribute so the file can be read back. The reader accepts exactly
// this dialect.
std::string dfa_to_dot(const Dfa& dfa,
                       const std::vector<std::string>& letters = {});
Dfa dfa_from_dot(const std::string& text,
                 std::vector<std::string>* letters_out = nullptr);

// Deterministic JSON rendering of a search record. Wall time and worker
// count are deliberately left out so equal searches emit equal bytes.
std::string search_record_json(const SearchRecord& record);

}  // namespace revsc
