#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "revsc/automata.hpp"

namespace revsc {

// Enumeration limits for the exhaustive candidate scan.
inline constexpr int kMaxSearchStates = 12;
inline constexpr int kMaxSearchLetters = 4;

enum class ClassFilter { kRTrivial, kJTrivial };
enum class DeadMode { kRequire, kForbid, kAny };
enum class Symmetry { kFull, kNone };

// A slice of the candidate space: every monotone transition table extending
// prefix (the first prefix.size() digits in row-major order), crossed with
// every acceptance mask.
struct CandidateCursor {
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> prefix;
};

// Outcome of a candidate scan. Wall time is informational only and is never
// serialized, so runs with different worker counts emit identical bytes.
// candidates_scanned counts the (table, mask) candidates the scan covered;
// with symmetry pruning it shrinks because letter-permuted duplicate tables
// are skipped, so across symmetry settings only the maximum and the witness
// are comparable, while across worker counts whole records are equal.
struct SearchRecord {
  int n = 0;
  int k = 0;
  ClassFilter klass = ClassFilter::kRTrivial;
  DeadMode dead = DeadMode::kAny;
  Symmetry symmetry = Symmetry::kFull;
  int max_reverse_sc = 0;
  std::optional<Dfa> witness;
  std::uint64_t candidates_scanned = 0;
  std::uint64_t minimal_count = 0;  // candidates that survived every filter
  double wall_time_ms = 0.0;
  // Tie-break key of the witness: its table digits and acceptance mask.
  std::vector<std::uint8_t> witness_table;
  std::uint32_t witness_mask = 0;
};

// Enumerates every complete DFA over n states and k letters with a monotone
// transition table (next(i, a) >= i) and initial state 0. Such tables are
// exactly the partially ordered DFAs up to renumbering, and every partially
// ordered DFA with all states reachable appears (possibly more than once).
// Tables are visited in row-major lexicographic order; for_each_po_dfa
// additionally crosses each table with all 2^n acceptance masks in
// increasing integer order, state 0 in the least significant bit. The
// candidate count is the product over i of (n-i)^k, times 2^n.
void for_each_po_table(int n, int k, const std::function<void(const Dfa&)>& fn);
void for_each_po_dfa(int n, int k, const std::function<void(const Dfa&)>& fn);

// Splits the enumeration into per-prefix cursors fixing the smallest number
// of leading rows whose assignment count reaches parts. The cursors are
// disjoint, cover the full enumeration, and merging their scans reproduces
// the sequential result.
std::vector<CandidateCursor> partition_workload(int n, int k, int parts);

// Fast per-table candidate predicates shared by the scanner, the property
// suites and the differential tests. Acceptance masks use state 0 as the
// least significant bit; the table automaton's own acceptance set is
// ignored.
class CandidateOps {
 public:
  explicit CandidateOps(const Dfa& table_dfa);
  CandidateOps(int n, int k, const std::uint8_t* table);

  bool all_reachable() const { return reachable_; }
  std::uint32_t self_loop_rows() const { return self_rows_; }
  bool trahtman() const;
  bool minimal(std::uint32_t mask) const;
  // One transition of the reverse's subset automaton: the states the letter
  // maps into subset.
  std::uint32_t reverse_step(std::uint32_t subset, int letter) const;
  int reverse_subset_count(std::uint32_t mask) const;

 private:
  void init(const std::uint8_t* table);

  int n_ = 0;
  int k_ = 0;
  int initial_ = 0;
  std::uint8_t t_[kMaxSearchStates * kMaxSearchLetters] = {};
  std::uint32_t pre_[kMaxSearchLetters][kMaxSearchStates] = {};
  std::uint32_t succ_[kMaxSearchStates] = {};
  std::uint32_t self_rows_ = 0;
  bool reachable_ = false;
};

SearchRecord scan_cursor(const CandidateCursor& cursor, ClassFilter klass,
                         DeadMode dead, Symmetry symmetry);

// Commutative and associative: counters add, the larger maximum wins, and
// ties keep the lexicographically least (table, mask) encoding.
SearchRecord merge_records(SearchRecord a, const SearchRecord& b);

// Worst-case reverse state complexity over minimal partially ordered DFAs
// with n states and k letters, filtered by class and dead-state mode. The
// maximum and witness are identical for every jobs and symmetry setting.
SearchRecord worst_case_reverse(int n, int k, ClassFilter klass, DeadMode dead,
                                Symmetry symmetry = Symmetry::kFull,
                                int jobs = 1);

// One row of the worst-case table: the maxima with and without a dead state
// plus the closed-form bounds 2^(n-2) + n - 1 and 2^(n-2).
struct TableRow {
  int n = 0;
  int worst_no_dead = 0;
  int worst_with_dead = 0;
  std::uint64_t upper_bound = 0;
  std::uint64_t lower_bound = 0;
  std::optional<Dfa> witness_no_dead;
  std::optional<Dfa> witness_with_dead;
};

// Rows n = 2..max_n over the binary alphabet for the class picked by klass.
std::vector<TableRow> reverse_complexity_table(int max_n, int jobs,
                                               ClassFilter klass = ClassFilter::kRTrivial);

// Tab-separated rendering with a header. The witness column names the file
// witness_n<N>_nodead.json under witness_dir, or "-" when no witness exists.
std::string table_tsv(const std::vector<TableRow>& rows,
                      const std::string& witness_dir);

}  // namespace revsc
