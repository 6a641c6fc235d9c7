#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revsc/automata.hpp"
#include "revsc/io.hpp"
#include "revsc/order.hpp"
#include "revsc/regex.hpp"
#include "revsc/search.hpp"
#include "revsc/witness.hpp"

namespace {

// Raised when a computed result fails its own re-verification; mapped to
// exit code 3 with the offending automaton dumped.
struct InternalViolation {
  std::string message;
  std::optional<revsc::Dfa> automaton;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string detect_format(const std::string& path, const std::string& forced,
                          const std::string& text) {
  if (!forced.empty()) return forced;
  if (ends_with(path, ".json")) return "json";
  if (ends_with(path, ".dot") || ends_with(path, ".gv")) return "dot";
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? "json" : "dot";
  }
  return "json";
}

revsc::Dfa load_dfa(const std::string& path, const std::string& forced,
                    std::vector<std::string>* letters) {
  const std::string text = read_input(path);
  if (detect_format(path, forced, text) == "json")
    return revsc::dfa_from_json(text, letters);
  return revsc::dfa_from_dot(text, letters);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const auto to = s.find(',', from);
    if (to == std::string::npos) {
      parts.push_back(s.substr(from));
      return parts;
    }
    parts.push_back(s.substr(from, to - from));
    from = to + 1;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Automaton JSON extended with computed complexity figures. convert ignores
// the extra keys, so the output still round-trips.
std::string annotated_json(const revsc::Dfa& dfa,
                           const std::vector<std::string>& letters,
                           const std::string& expression) {
  auto j = nlohmann::ordered_json::parse(revsc::dfa_to_json(dfa, letters));
  j["sc"] = revsc::state_complexity(dfa);
  j["reverse_sc"] = revsc::reverse_state_complexity(dfa);
  if (!expression.empty()) j["expression"] = expression;
  return j.dump(2) + "\n";
}

void emit_automaton(const revsc::Dfa& dfa,
                    const std::vector<std::string>& letters,
                    const std::string& expression, const std::string& format,
                    const std::string& out_path) {
  if (format == "dot") {
    write_output(out_path, revsc::dfa_to_dot(dfa, letters));
    std::cerr << "sc=" << revsc::state_complexity(dfa)
              << " reverse_sc=" << revsc::reverse_state_complexity(dfa)
              << "\n";
    return;
  }
  write_output(out_path, annotated_json(dfa, letters, expression));
}

int do_classify(const std::string& path, const std::string& forced) {
  std::vector<std::string> letters;
  const revsc::Dfa dfa = load_dfa(path, forced, &letters);
  const revsc::Dfa minimal = revsc::minimize(dfa);
  const bool j_rev = revsc::is_j_trivial(dfa, revsc::JTrivialMethod::kReversePo);
  const bool j_simon = revsc::is_j_trivial(dfa, revsc::JTrivialMethod::kSimon);
  const bool j_trah =
      revsc::is_j_trivial(dfa, revsc::JTrivialMethod::kTrahtman);
  if (j_rev != j_simon || j_rev != j_trah)
    throw InternalViolation{"three-way J-triviality disagreement", dfa};
  std::ostringstream out;
  out << "states: " << dfa.state_count() << "\n";
  out << "alphabet: ";
  for (std::size_t a = 0; a < letters.size(); ++a)
    out << (a ? "," : "") << letters[a];
  out << "\n";
  out << "sc: " << minimal.state_count() << "\n";
  out << "reverse_sc: " << revsc::reverse_state_complexity(dfa) << "\n";
  out << "partially_ordered: " << yes_no(revsc::is_partially_ordered(dfa))
      << "\n";
  out << "dead_states: " << revsc::dead_states(dfa).to_string() << "\n";
  out << "r_trivial: " << yes_no(revsc::is_r_trivial(dfa)) << "\n";
  out << "j_trivial: " << yes_no(j_rev) << "\n";
  out << "j_trivial_reverse_po: " << yes_no(j_rev) << "\n";
  out << "j_trivial_simon: " << yes_no(j_simon) << "\n";
  out << "j_trivial_trahtman: " << yes_no(j_trah) << "\n";
  std::cout << out.str();
  return 0;
}

int do_witness(const std::string& family, int n, const std::string& format,
               const std::string& out_path) {
  revsc::Dfa w = family == "fig2"   ? revsc::fig2_witness(n)
                 : family == "fig5" ? revsc::fig5_witness(n)
                                    : revsc::table1_witness(n);
  const std::string expression =
      family == "table1" ? revsc::table1_expression(n) : "";
  emit_automaton(w, revsc::default_letter_names(w.alphabet_size()), expression,
                 format, out_path);
  return 0;
}

int do_bound(const std::string& family, int n, int k) {
  if (family == "r") {
    std::cout << revsc::r_trivial_reverse_bound(n, k) << "\n";
  } else if (family == "j-binary") {
    std::cout << revsc::binary_j_trivial_reverse_bound(n) << "\n";
  } else {
    const auto bound = revsc::j_trivial_alphabet_bound(n, k);
    if (bound.has_value())
      std::cout << *bound << "\n";
    else
      std::cout << "unknown\n";
  }
  return 0;
}

int do_regex(const std::string& expr, const std::string& alphabet_csv,
             const std::string& format, const std::string& out_path) {
  const std::vector<std::string> letters = split_csv(alphabet_csv);
  const revsc::RegexPtr ast = revsc::parse_regex(expr, letters);
  const revsc::Dfa dfa = revsc::regex_to_min_dfa(expr, letters);
  emit_automaton(dfa, letters, revsc::to_string(*ast, letters), format,
                 out_path);
  return 0;
}

void verify_search_witness(const revsc::SearchRecord& rec,
                           revsc::ClassFilter klass, revsc::DeadMode dead) {
  if (!rec.witness.has_value()) {
    if (rec.max_reverse_sc != 0)
      throw InternalViolation{"maximum recorded without a witness", {}};
    return;
  }
  const revsc::Dfa& w = *rec.witness;
  if (revsc::state_complexity(w) != rec.n)
    throw InternalViolation{"search witness is not minimal", w};
  if (revsc::reverse_state_complexity(w) != rec.max_reverse_sc)
    throw InternalViolation{
        "search witness does not reproduce the recorded maximum", w};
  if (!revsc::is_partially_ordered(w))
    throw InternalViolation{"search witness is not partially ordered", w};
  const bool has_dead = revsc::dead_states(w).count() > 0;
  if (dead == revsc::DeadMode::kRequire && !has_dead)
    throw InternalViolation{"search witness lacks the required dead state", w};
  if (dead == revsc::DeadMode::kForbid && has_dead)
    throw InternalViolation{"search witness has a forbidden dead state", w};
  const bool j_rev = revsc::is_j_trivial(w, revsc::JTrivialMethod::kReversePo);
  const bool j_simon = revsc::is_j_trivial(w, revsc::JTrivialMethod::kSimon);
  const bool j_trah = revsc::is_j_trivial(w, revsc::JTrivialMethod::kTrahtman);
  if (j_rev != j_simon || j_rev != j_trah)
    throw InternalViolation{"three-way J-triviality disagreement", w};
  if (klass == revsc::ClassFilter::kJTrivial && !j_rev)
    throw InternalViolation{"search witness is not J-trivial", w};
  if (!revsc::is_r_trivial(w))
    throw InternalViolation{"search witness is not R-trivial", w};
}

std::string single_run_tsv_row(const revsc::SearchRecord& rec,
                               const std::string& witness_path) {
  std::string no_dead = "-";
  std::string with_dead = "-";
  const std::string value = std::to_string(rec.max_reverse_sc);
  switch (rec.dead) {
    case revsc::DeadMode::kForbid:
      no_dead = value;
      break;
    case revsc::DeadMode::kRequire:
      with_dead = value;
      break;
    case revsc::DeadMode::kAny: {
      const bool has_dead = rec.witness.has_value() &&
                            revsc::dead_states(*rec.witness).count() > 0;
      (has_dead ? with_dead : no_dead) = value;
      break;
    }
  }
  std::ostringstream out;
  out << rec.n << '\t' << no_dead << '\t' << with_dead << '\t';
  if (rec.n >= 2)
    out << ((std::uint64_t{1} << (rec.n - 2)) + rec.n - 1) << '\t'
        << (std::uint64_t{1} << (rec.n - 2));
  else
    out << "-\t-";
  out << '\t' << (witness_path.empty() ? "-" : witness_path) << '\n';
  return out.str();
}

int do_search(int n, int k, const std::string& klass_name,
              const std::string& dead_name, int jobs, bool no_symmetry,
              const std::string& out_path, const std::string& tsv_path) {
  const auto klass = klass_name == "j" ? revsc::ClassFilter::kJTrivial
                                       : revsc::ClassFilter::kRTrivial;
  const auto dead = dead_name == "require" ? revsc::DeadMode::kRequire
                    : dead_name == "forbid" ? revsc::DeadMode::kForbid
                                            : revsc::DeadMode::kAny;
  const auto symmetry =
      no_symmetry ? revsc::Symmetry::kNone : revsc::Symmetry::kFull;
  const revsc::SearchRecord rec =
      revsc::worst_case_reverse(n, k, klass, dead, symmetry, jobs);
  verify_search_witness(rec, klass, dead);
  write_output(out_path, revsc::search_record_json(rec));
  if (!tsv_path.empty()) {
    const bool fresh = !std::filesystem::exists(tsv_path);
    std::ofstream tsv(tsv_path, std::ios::app);
    if (!tsv) throw std::invalid_argument("cannot write " + tsv_path);
    if (fresh)
      tsv << "n\tworst_no_dead\tworst_with_dead\tupper_bound\tlower_bound"
          << "\twitness_path\n";
    tsv << single_run_tsv_row(
        rec, out_path == "-" ? std::string() : out_path);
  }
  return 0;
}

int do_convert(const std::string& in_path, const std::string& in_format,
               const std::string& to, const std::string& out_path) {
  std::vector<std::string> letters;
  const revsc::Dfa dfa = load_dfa(in_path, in_format, &letters);
  write_output(out_path, to == "dot" ? revsc::dfa_to_dot(dfa, letters)
                                     : revsc::dfa_to_json(dfa, letters));
  return 0;
}

int do_reproduce(int max_n, int jobs, const std::string& klass_name,
                 const std::string& witness_dir, const std::string& out_path) {
  const auto klass = klass_name == "j" ? revsc::ClassFilter::kJTrivial
                                       : revsc::ClassFilter::kRTrivial;
  const auto rows = revsc::reverse_complexity_table(max_n, jobs, klass);
  for (const revsc::TableRow& row : rows) {
    revsc::SearchRecord check;
    check.n = row.n;
    check.k = 2;
    check.max_reverse_sc = row.worst_no_dead;
    check.witness = row.witness_no_dead;
    verify_search_witness(check, klass, revsc::DeadMode::kForbid);
    check.max_reverse_sc = row.worst_with_dead;
    check.witness = row.witness_with_dead;
    verify_search_witness(check, klass, revsc::DeadMode::kRequire);
  }
  if (!witness_dir.empty()) {
    std::filesystem::create_directories(witness_dir);
    for (const revsc::TableRow& row : rows) {
      const auto write_witness = [&](const std::optional<revsc::Dfa>& w,
                                     const std::string& tag) {
        if (!w.has_value()) return;
        write_output(witness_dir + "/witness_n" + std::to_string(row.n) +
                         "_" + tag + ".json",
                     revsc::dfa_to_json(*w));
      };
      write_witness(row.witness_no_dead, "nodead");
      write_witness(row.witness_with_dead, "withdead");
    }
  }
  write_output(out_path, revsc::table_tsv(rows, witness_dir));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State complexity of the reverse of R-trivial and J-trivial "
               "regular languages"};
  app.require_subcommand(1);

  std::string in_path;
  std::string in_format;
  std::string out_path;
  std::string format = "json";
  std::string family;
  std::string klass = "r";
  std::string dead = "any";
  std::string alphabet = "a,b";
  std::string expr;
  std::string to;
  std::string tsv_path;
  std::string witness_dir;
  int n = 0;
  int k = 2;
  int jobs = 1;
  int max_n = 6;
  bool no_symmetry = false;

  auto* classify = app.add_subcommand(
      "classify", "Report complexity and class membership of an automaton");
  classify->add_option("input", in_path, "automaton file, - for stdin")
      ->required();
  classify->add_option("--format", in_format, "input format")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* witness = app.add_subcommand(
      "witness", "Emit a construction from one of the witness families");
  witness->add_option("--family", family, "witness family")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig5", "table1"}));
  witness->add_option("--n", n, "number of states")->required();
  witness->add_option("--output-format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  witness->add_option("--output", out_path, "output file, - for stdout");

  auto* bound = app.add_subcommand(
      "bound", "Evaluate a closed-form bound on the reverse's complexity");
  bound->add_option("--family", family, "bound family")
      ->required()
      ->check(CLI::IsMember({"r", "j", "j-binary"}));
  bound->add_option("--n", n, "number of states")->required();
  bound->add_option("--k", k, "alphabet size");

  auto* regex = app.add_subcommand(
      "regex", "Compile a regular expression to its minimal DFA");
  regex->add_option("expression", expr, "regular expression")->required();
  regex->add_option("--alphabet", alphabet, "comma-separated letter names");
  regex->add_option("--output-format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  regex->add_option("--output", out_path, "output file, - for stdout");

  auto* search = app.add_subcommand(
      "search", "Exhaustively maximize the reverse's complexity");
  search->add_option("--n", n, "number of states")->required();
  search->add_option("--k", k, "alphabet size");
  search->add_option("--class", klass, "language class filter")
      ->check(CLI::IsMember({"r", "j"}));
  search->add_option("--dead", dead, "dead-state mode")
      ->check(CLI::IsMember({"require", "forbid", "any"}));
  search->add_option("--jobs", jobs, "worker count");
  search->add_flag("--no-symmetry", no_symmetry,
                   "disable letter-permutation and complement pruning");
  search->add_option("--output", out_path, "record file, - for stdout");
  search->add_option("--tsv", tsv_path, "append a table row to this file");

  auto* convert = app.add_subcommand(
      "convert", "Transcode an automaton between JSON and DOT");
  convert->add_option("input", in_path, "automaton file, - for stdin")
      ->required();
  convert->add_option("--format", in_format, "input format")
      ->check(CLI::IsMember({"json", "dot"}));
  convert->add_option("--to", to, "output format")
      ->required()
      ->check(CLI::IsMember({"json", "dot"}));
  convert->add_option("--output", out_path, "output file, - for stdout");

  auto* reproduce = app.add_subcommand(
      "reproduce-table1", "Recompute the worst-case table by exhaustive scan");
  reproduce->add_option("--max-n", max_n, "largest state count");
  reproduce->add_option("--jobs", jobs, "worker count");
  reproduce->add_option("--class", klass, "language class filter")
      ->check(CLI::IsMember({"r", "j"}));
  reproduce->add_option("--witness-dir", witness_dir,
                        "directory for witness JSON files");
  reproduce->add_option("--output", out_path, "table file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify->parsed()) return do_classify(in_path, in_format);
    if (witness->parsed()) return do_witness(family, n, format, out_path);
    if (bound->parsed()) return do_bound(family, n, k);
    if (regex->parsed()) return do_regex(expr, alphabet, format, out_path);
    if (search->parsed())
      return do_search(n, k, klass, dead, jobs, no_symmetry, out_path,
                       tsv_path);
    if (convert->parsed()) return do_convert(in_path, in_format, to, out_path);
    if (reproduce->parsed())
      return do_reproduce(max_n, jobs, klass, witness_dir, out_path);
  } catch (const InternalViolation& violation) {
    std::cerr << "internal invariant violation: " << violation.message << "\n";
    if (violation.automaton.has_value())
      std::cerr << revsc::dfa_to_json(*violation.automaton);
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
