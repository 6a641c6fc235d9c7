#include "revsc/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace revsc {

namespace {

using ordered_json = nlohmann::ordered_json;

bool plain_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> pick_letters(const Dfa& dfa,
                                      const std::vector<std::string>& given) {
  if (given.empty()) return default_letter_names(dfa.alphabet_size());
  if (static_cast<int>(given.size()) != dfa.alphabet_size())
    throw std::invalid_argument("letter name count must match the alphabet");
  return given;
}

ordered_json dfa_json_object(const Dfa& dfa,
                             const std::vector<std::string>& letters) {
  ordered_json j;
  j["states"] = dfa.state_count();
  j["alphabet"] = letters;
  j["initial"] = dfa.initial();
  j["accepting"] = dfa.accepting().indices();
  ordered_json rows = ordered_json::array();
  for (int p = 0; p < dfa.state_count(); ++p) {
    ordered_json row = ordered_json::array();
    for (int a = 0; a < dfa.alphabet_size(); ++a) row.push_back(dfa.next(p, a));
    rows.push_back(std::move(row));
  }
  j["delta"] = std::move(rows);
  return j;
}

}  // namespace

std::vector<std::string> default_letter_names(int k) {
  if (k < 1) throw std::invalid_argument("alphabet must not be empty");
  if (k == 1) return {"a"};
  if (k == 2) return {"a", "b"};
  std::vector<std::string> names;
  for (int a = 1; a <= k; ++a) names.push_back("a" + std::to_string(a));
  return names;
}

std::string dfa_to_json(const Dfa& dfa,
                        const std::vector<std::string>& letters) {
  return dfa_json_object(dfa, pick_letters(dfa, letters)).dump(2) + "\n";
}

Dfa dfa_from_json(const std::string& text,
                  std::vector<std::string>* letters_out) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (!j.contains("states") || !j.contains("initial") ||
        !j.contains("accepting") || !j.contains("delta"))
      throw std::invalid_argument(
          "automaton needs states, initial, accepting and delta");
    const int n = j.at("states").get<int>();
    std::vector<std::vector<int>> delta =
        j.at("delta").get<std::vector<std::vector<int>>>();
    std::vector<std::string> letters;
    if (j.contains("alphabet"))
      letters = j.at("alphabet").get<std::vector<std::string>>();
    else if (!delta.empty())
      letters = default_letter_names(static_cast<int>(delta[0].size()));
    const int k = static_cast<int>(letters.size());
    const Dfa dfa = build_dfa(n, k, delta, j.at("initial").get<int>(),
                              j.at("accepting").get<std::vector<int>>());
    if (letters_out) *letters_out = std::move(letters);
    return dfa;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed automaton: ") +
                                e.what());
  }
}

std::string dfa_to_dot(const Dfa& dfa,
                       const std::vector<std::string>& letters_in) {
  const std::vector<std::string> letters = pick_letters(dfa, letters_in);
  for (const std::string& name : letters)
    if (!plain_name(name))
      throw std::invalid_argument(
          "DOT output needs alphanumeric letter names");
  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  alphabet=\"";
  for (std::size_t a = 0; a < letters.size(); ++a) {
    if (a) out << ",";
    out << letters[a];
  }
  out << "\";\n";
  out << "  __start [shape=point];\n";
  for (int p = 0; p < dfa.state_count(); ++p)
    out << "  " << p << " [shape="
        << (dfa.is_accepting(p) ? "doublecircle" : "circle") << "];\n";
  out << "  __start -> " << dfa.initial() << ";\n";
  for (int p = 0; p < dfa.state_count(); ++p) {
    // One edge per target, letters merged onto the label in index order.
    std::map<int, std::string> by_target;
    for (int a = 0; a < dfa.alphabet_size(); ++a) {
      std::string& label = by_target[dfa.next(p, a)];
      if (!label.empty()) label += ",";
      label += letters[a];
    }
    for (const auto& [q, label] : by_target)
      out << "  " << p << " -> " << q << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string strip(std::string s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const auto to = s.find(sep, from);
    if (to == std::string::npos) {
      parts.push_back(s.substr(from));
      return parts;
    }
    parts.push_back(s.substr(from, to - from));
    from = to + 1;
  }
}

int parse_state_id(const std::string& token) {
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("DOT state names must be decimal numbers");
  return std::stoi(token);
}

// Extracts the first "..." group of the line.
std::string quoted_value(const std::string& line) {
  const auto open = line.find('"');
  if (open == std::string::npos)
    throw std::invalid_argument("expected a quoted value in DOT line");
  const auto close = line.find('"', open + 1);
  if (close == std::string::npos)
    throw std::invalid_argument("unterminated quote in DOT line");
  return line.substr(open + 1, close - open - 1);
}

}  // namespace

Dfa dfa_from_dot(const std::string& text,
                 std::vector<std::string>* letters_out) {
  std::vector<std::string> letters;
  std::vector<bool> accepting_flags;
  std::vector<int> declared;
  int initial = -1;
  struct Edge {
    int from;
    int to;
    std::string label;
  };
  std::vector<Edge> edges;
  bool in_graph = false;
  bool closed = false;
  std::istringstream lines(text);
  std::string raw;
  while (std::getline(lines, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (!in_graph) {
      if (line.rfind("digraph", 0) != 0 || line.back() != '{')
        throw std::invalid_argument("expected a digraph header");
      in_graph = true;
      continue;
    }
    if (line == "}") {
      closed = true;
      continue;
    }
    if (closed) throw std::invalid_argument("content after closing brace");
    if (!line.empty() && line.back() == ';') line.pop_back();
    line = strip(line);
    if (line.rfind("rankdir", 0) == 0) continue;
    if (line.rfind("alphabet=", 0) == 0) {
      for (std::string& name : split(quoted_value(line), ','))
        letters.push_back(strip(name));
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      const std::string from = strip(line.substr(0, arrow));
      std::string rest = strip(line.substr(arrow + 2));
      if (from == "__start") {
        if (initial >= 0)
          throw std::invalid_argument("more than one initial arrow");
        initial = parse_state_id(rest);
        continue;
      }
      const auto attr = rest.find('[');
      if (attr == std::string::npos)
        throw std::invalid_argument("transition edge needs a label");
      Edge e;
      e.from = parse_state_id(from);
      e.to = parse_state_id(strip(rest.substr(0, attr)));
      e.label = quoted_value(rest.substr(attr));
      edges.push_back(std::move(e));
      continue;
    }
    // Node declaration.
    const auto attr = line.find('[');
    const std::string name = strip(attr == std::string::npos
                                       ? line
                                       : line.substr(0, attr));
    if (name == "__start") continue;
    const int id = parse_state_id(name);
    const bool accepting =
        attr != std::string::npos &&
        line.find("doublecircle", attr) != std::string::npos;
    declared.push_back(id);
    accepting_flags.push_back(accepting);
  }
  if (!closed) throw std::invalid_argument("missing closing brace");
  const int n = static_cast<int>(declared.size());
  if (n == 0) throw std::invalid_argument("no states declared");
  std::vector<bool> seen(n, false);
  std::vector<int> accepting;
  for (int i = 0; i < n; ++i) {
    const int id = declared[i];
    if (id < 0 || id >= n || seen[id])
      throw std::invalid_argument("state declarations must cover 0..n-1");
    seen[id] = true;
    if (accepting_flags[i]) accepting.push_back(id);
  }
  if (letters.empty())
    throw std::invalid_argument("missing alphabet attribute");
  const int k = static_cast<int>(letters.size());
  std::map<std::string, int> letter_index;
  for (int a = 0; a < k; ++a)
    if (!letter_index.emplace(letters[a], a).second)
      throw std::invalid_argument("duplicate letter name");
  if (initial < 0) throw std::invalid_argument("missing initial arrow");
  std::vector<std::vector<int>> delta(n, std::vector<int>(k, -1));
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw std::invalid_argument("edge endpoint out of range");
    for (std::string& name : split(e.label, ',')) {
      const auto it = letter_index.find(strip(name));
      if (it == letter_index.end())
        throw std::invalid_argument("edge label uses an unknown letter");
      if (delta[e.from][it->second] != -1)
        throw std::invalid_argument("duplicate transition in DOT input");
      delta[e.from][it->second] = e.to;
    }
  }
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < k; ++a)
      if (delta[p][a] == -1)
        throw std::invalid_argument("transition table is incomplete");
  const Dfa dfa = build_dfa(n, k, delta, initial, accepting);
  if (letters_out) *letters_out = std::move(letters);
  return dfa;
}

std::string search_record_json(const SearchRecord& record) {
  ordered_json j;
  j["n"] = record.n;
  j["k"] = record.k;
  j["class"] =
      record.klass == ClassFilter::kRTrivial ? "r-trivial" : "j-trivial";
  switch (record.dead) {
    case DeadMode::kRequire: j["dead"] = "require"; break;
    case DeadMode::kForbid: j["dead"] = "forbid"; break;
    case DeadMode::kAny: j["dead"] = "any"; break;
  }
  j["symmetry"] = record.symmetry == Symmetry::kFull ? "full" : "none";
  j["max_reverse_sc"] = record.max_reverse_sc;
  j["candidates_scanned"] = record.candidates_scanned;
  j["minimal_count"] = record.minimal_count;
  if (record.witness.has_value()) {
    j["witness"] = dfa_json_object(
        *record.witness, default_letter_names(record.witness->alphabet_size()));
    j["witness_table"] = record.witness_table;
    j["witness_mask"] = record.witness_mask;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace revsc
