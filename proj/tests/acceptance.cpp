// Acceptance gate: one line per criterion, nonzero exit count on failure.
// Criterion 2 is a long search and only runs with --stretch or
// REVSC_STRETCH=1. Criterion 7 reruns everything with a second worker
// configuration and demands byte-identical transcripts.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revsc/automata.hpp"
#include "revsc/io.hpp"
#include "revsc/order.hpp"
#include "revsc/search.hpp"
#include "revsc/witness.hpp"

namespace {

using namespace revsc;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

std::vector<std::vector<int>> table_rows(const Dfa& m) {
  std::vector<std::vector<int>> rows(m.state_count(),
                                     std::vector<int>(m.alphabet_size()));
  for (int p = 0; p < m.state_count(); ++p)
    for (int a = 0; a < m.alphabet_size(); ++a) rows[p][a] = m.next(p, a);
  return rows;
}

// One reverse subset step on a plain automaton, for states <= 32.
std::uint32_t rev_step_dfa(const Dfa& m, std::uint32_t subset, int letter) {
  std::uint32_t image = 0;
  for (int p = 0; p < m.state_count(); ++p)
    if (subset >> m.next(p, letter) & 1) image |= std::uint32_t{1} << p;
  return image;
}

Dfa restrict_letters(const Dfa& m, const std::vector<int>& keep) {
  std::vector<std::vector<int>> rows(m.state_count());
  for (int p = 0; p < m.state_count(); ++p)
    for (int a : keep) rows[p].push_back(m.next(p, a));
  return Dfa(m.state_count(), static_cast<int>(keep.size()),
             [&] {
               std::vector<int> flat;
               for (const auto& row : rows)
                 flat.insert(flat.end(), row.begin(), row.end());
               return flat;
             }(),
             m.initial(), m.accepting());
}

// Removing letters must preserve the unique-maximal property of every cone.
void check_simon_closure(const Dfa& m) {
  const int k = m.alphabet_size();
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << k) - 1; ++bits) {
    std::vector<int> keep;
    for (int a = 0; a < k; ++a)
      if (bits >> a & 1) keep.push_back(a);
    require(simon_condition(restrict_letters(m, keep)),
            "letter removal broke the unique-maximal property");
  }
}

// ---- criterion 1: the binary worst-case table up to n = 6

void verify_table_witness(const TableRow& row, bool with_dead) {
  const std::optional<Dfa>& w =
      with_dead ? row.witness_with_dead : row.witness_no_dead;
  require(w.has_value(),
          "row n=" + std::to_string(row.n) + " has no witness");
  require(state_complexity(*w) == row.n, "table witness is not minimal");
  require(is_partially_ordered(*w),
          "table witness is not partially ordered");
  require(dead_states(*w).empty() == !with_dead,
          "table witness has the wrong dead-state status");
  const int expect = with_dead ? row.worst_with_dead : row.worst_no_dead;
  require(reverse_state_complexity(*w) == expect,
          "table witness misses the recorded maximum");
}

std::string criterion_worst_case_table(int jobs) {
  const std::vector<TableRow> rows = reverse_complexity_table(6, jobs);
  require(rows.size() == 5, "expected rows n = 2..6");
  const int expected[7] = {0, 0, 2, 4, 7, 12, 21};
  for (const TableRow& row : rows) {
    require(2 <= row.n && row.n <= 6, "unexpected row");
    require(row.worst_no_dead == expected[row.n],
            "wrong no-dead maximum at n=" + std::to_string(row.n));
    require(row.worst_with_dead == expected[row.n],
            "wrong with-dead maximum at n=" + std::to_string(row.n));
    require(row.upper_bound ==
                (std::uint64_t{1} << (row.n - 2)) + row.n - 1,
            "upper bound column mismatch");
    require(row.lower_bound == std::uint64_t{1} << (row.n - 2),
            "lower bound column mismatch");
    verify_table_witness(row, false);
    verify_table_witness(row, true);
  }
  return table_tsv(rows, "");
}

// ---- criterion 2 (stretch): the n = 7 binary row

std::string criterion_row_seven(int jobs) {
  std::ostringstream out;
  for (const DeadMode mode : {DeadMode::kForbid, DeadMode::kRequire}) {
    const SearchRecord rec = worst_case_reverse(
        7, 2, ClassFilter::kRTrivial, mode, Symmetry::kFull, jobs);
    require(rec.max_reverse_sc == 34, "n=7 maximum should be 34");
    out << search_record_json(rec);
  }
  return out.str();
}

// ---- criterion 3: witness families

std::string criterion_witness_families() {
  std::ostringstream out;
  for (int n = 3; n <= 16; ++n) {
    const Dfa w = fig2_witness(n);
    const int sc = state_complexity(w);
    const std::int64_t rsc = reverse_state_complexity(w);
    out << "fig2 n=" << n << " sc=" << sc << " rsc=" << rsc << "\n";
    require(sc == n, "fig2 is not minimal");
    require(rsc >= std::int64_t{1} << (n - 2), "fig2 lower bound missed");
    if (n >= 8)
      require(rsc == std::int64_t{1} << (n - 2),
              "fig2 should be exact from n=8 on");
  }
  for (int n = 3; n <= 14; ++n) {
    const Dfa w = fig5_witness(n);
    const int sc = state_complexity(w);
    const std::int64_t rsc = reverse_state_complexity(w);
    const bool j = is_j_trivial(w, JTrivialMethod::kReversePo);
    out << "fig5 n=" << n << " sc=" << sc << " rsc=" << rsc
        << " j_trivial=" << (j ? "yes" : "no") << "\n";
    require(sc == n, "fig5 is not minimal");
    require(rsc == (std::int64_t{1} << (n - 1)) - 1, "fig5 value wrong");
    require(j, "fig5 should be j-trivial");
  }
  const int expected_rsc[8] = {0, 0, 2, 4, 7, 12, 21, 34};
  for (int n = 2; n <= 7; ++n) {
    const Dfa w = table1_witness(n);
    const int sc = state_complexity(w);
    const int rsc = reverse_state_complexity(w);
    const bool j = is_j_trivial(w, JTrivialMethod::kReversePo);
    out << "table1 n=" << n << " sc=" << sc << " rsc=" << rsc
        << " j_trivial=" << (j ? "yes" : "no") << "\n";
    require(sc == n, "table1 witness is not minimal");
    require(rsc == expected_rsc[n], "table1 witness value wrong");
    require(j, "table1 witness should be j-trivial");
  }
  return out.str();
}

// ---- criterion 4: j-trivial worst cases below 2^(n-1)

std::string criterion_j_maxima(int jobs) {
  std::ostringstream out;
  const auto run = [&](int n, int k) {
    const SearchRecord rec = worst_case_reverse(
        n, k, ClassFilter::kJTrivial, DeadMode::kAny, Symmetry::kFull, jobs);
    require(rec.max_reverse_sc == (1 << (n - 1)) - 1,
            "j-trivial maximum should be one below 2^(n-1)");
    require(rec.witness.has_value(), "search reported no witness");
    require(state_complexity(*rec.witness) == n, "witness is not minimal");
    require(is_j_trivial(*rec.witness, JTrivialMethod::kReversePo),
            "witness is not j-trivial");
    require(reverse_state_complexity(*rec.witness) == rec.max_reverse_sc,
            "witness misses the maximum");
    out << search_record_json(rec);
  };
  run(4, 2);
  run(5, 3);
  return out.str();
}

// ---- criterion 5: closed-form bounds

std::string criterion_bounds() {
  std::ostringstream out;
  const auto log_r = [&](int n, int k, std::uint64_t want) {
    const std::uint64_t got = r_trivial_reverse_bound(n, k);
    out << "r_bound(" << n << "," << k << ")=" << got << "\n";
    require(got == want, "r-trivial bound value wrong");
  };
  log_r(6, 2, 21);
  log_r(7, 2, 34);
  log_r(8, 2, 64);
  for (int n = 2; n <= 10; ++n)
    log_r(n, 3, std::uint64_t{1} << (n - 1));
  const std::uint64_t expected_binary[8] = {0, 0, 0, 0, 7, 12, 21, 38};
  for (int n = 4; n <= 7; ++n) {
    const std::uint64_t got = binary_j_trivial_reverse_bound(n);
    out << "j_binary_bound(" << n << ")=" << got << "\n";
    require(got == expected_binary[n], "binary j-trivial bound value wrong");
  }
  return out.str();
}

// ---- criterion 6: property suites over the full small enumeration

struct SweepStats {
  std::uint64_t tables = 0;
  std::uint64_t minimal = 0;
};

SweepStats sweep_space(int n, int k) {
  SweepStats stats;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> counts(std::size_t{1} << n);
  for_each_po_table(n, k, [&](const Dfa& table) {
    ++stats.tables;
    const CandidateOps ops(table);

    // Unary preimages stabilize after n-1 steps. The step is a union
    // homomorphism, so checking every singleton start covers every mask;
    // small spaces recheck each mask directly.
    for (int a = 0; a < k; ++a)
      for (int p = 0; p < n; ++p) {
        std::uint32_t u = std::uint32_t{1} << p;
        for (int i = 1; i < n; ++i) u = ops.reverse_step(u, a);
        require(ops.reverse_step(u, a) == u,
                "unary preimages kept moving past n-1 steps");
      }
    if (n <= 4)
      for (std::uint32_t mask = 0; mask <= full; ++mask)
        for (int a = 0; a < k; ++a) {
          std::uint32_t u = mask;
          for (int i = 1; i < n; ++i) u = ops.reverse_step(u, a);
          require(ops.reverse_step(u, a) == u,
                  "unary preimages kept moving past n-1 steps");
        }

    const bool simon_table = simon_condition(table);
    if (simon_table) check_simon_closure(table);

    // The reverse subset count never changes under complement.
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      counts[mask] = ops.reverse_subset_count(mask);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      require(counts[mask] == counts[full & ~mask],
              "complement changed the reverse subset count");

    if (!ops.all_reachable()) return;
    std::optional<bool> trahtman_table;
    const std::vector<std::vector<int>> rows = table_rows(table);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (!ops.minimal(mask)) continue;
      ++stats.minimal;
      std::vector<int> accepting;
      for (int q = 0; q < n; ++q)
        if (mask >> q & 1) accepting.push_back(q);
      const Dfa d = build_dfa(n, k, rows, 0, accepting);

      const SubsetAutomaton s = determinize(reverse(d));
      require(s.dfa.state_count() == counts[mask],
              "fast and library subset counts disagree");
      const Dfa sm = minimize(s.dfa);
      require(sm.state_count() == s.dfa.state_count(),
              "reachable reverse subsets were mergeable");

      const bool j_rev = is_partially_ordered(sm);
      if (!trahtman_table) trahtman_table = trahtman_condition(table);
      require(j_rev == simon_table && j_rev == *trahtman_table,
              "the three j-triviality criteria disagree");

      require(static_cast<std::uint64_t>(counts[mask]) <=
                  r_trivial_reverse_bound(n, k),
              "reverse complexity exceeded the class bound");
      if (j_rev && n >= 3) {
        const auto jb = j_trivial_alphabet_bound(n, k);
        if (jb.has_value())
          require(static_cast<std::uint64_t>(counts[mask]) <= *jb,
                  "reverse complexity exceeded the j-trivial bound");
      }
    }
  });
  return stats;
}

void check_witness_properties(const std::string& name, const Dfa& w,
                              std::ostringstream& out) {
  const Dfa m = minimize(w);
  const int n = m.state_count();
  const int k = m.alphabet_size();
  require(is_partially_ordered(m), name + ": not partially ordered");

  const SubsetAutomaton s = determinize(reverse(m));
  const Dfa sm = minimize(s.dfa);
  require(sm.state_count() == s.dfa.state_count(),
          name + ": reachable reverse subsets were mergeable");

  require(reverse_state_complexity(complement(w)) == s.dfa.state_count(),
          name + ": complement changed the reverse complexity");

  const bool j_rev = is_partially_ordered(sm);
  require(is_j_trivial(w, JTrivialMethod::kSimon) == j_rev,
          name + ": unique-maximal criterion disagrees");
  require(is_j_trivial(w, JTrivialMethod::kTrahtman) == j_rev,
          name + ": self-loop criterion disagrees");

  if (simon_condition(m)) check_simon_closure(m);

  for (int a = 0; a < k; ++a) {
    for (int p = 0; p < n; ++p) {
      std::uint32_t u = std::uint32_t{1} << p;
      for (int i = 1; i < n; ++i) u = rev_step_dfa(m, u, a);
      require(rev_step_dfa(m, u, a) == u,
              name + ": unary preimages kept moving past n-1 steps");
    }
    std::uint32_t u = 0;
    for (int q : m.accepting().indices()) u |= std::uint32_t{1} << q;
    for (int i = 1; i < n; ++i) u = rev_step_dfa(m, u, a);
    require(rev_step_dfa(m, u, a) == u,
            name + ": acceptance preimages kept moving past n-1 steps");
  }

  require(static_cast<std::uint64_t>(s.dfa.state_count()) <=
              r_trivial_reverse_bound(n, k),
          name + ": reverse complexity exceeded the class bound");
  if (j_rev && n >= 3) {
    const auto jb = j_trivial_alphabet_bound(n, k);
    if (jb.has_value())
      require(static_cast<std::uint64_t>(s.dfa.state_count()) <= *jb,
              name + ": reverse complexity exceeded the j-trivial bound");
  }
  out << "witness " << name << " ok\n";
}

std::string criterion_property_suites() {
  std::ostringstream out;
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      const SweepStats stats = sweep_space(n, k);
      out << "space n=" << n << " k=" << k << " tables=" << stats.tables
          << " minimal=" << stats.minimal << " violations=0\n";
    }
  for (int n = 3; n <= 16; ++n)
    check_witness_properties("fig2(" + std::to_string(n) + ")",
                             fig2_witness(n), out);
  for (int n = 3; n <= 14; ++n)
    check_witness_properties("fig5(" + std::to_string(n) + ")",
                             fig5_witness(n), out);
  for (int n = 2; n <= 7; ++n)
    check_witness_properties("table1(" + std::to_string(n) + ")",
                             table1_witness(n), out);
  return out.str();
}

struct Entry {
  int id;
  const char* name;
  std::function<std::string(int)> run;
  bool enabled;
};

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;
  if (const char* env = std::getenv("REVSC_STRETCH"))
    if (std::string(env) == "1") stretch = true;

  const std::vector<Entry> entries{
      {1, "worst-case table", criterion_worst_case_table, true},
      {2, "binary row n=7", criterion_row_seven, stretch},
      {3, "witness families",
       [](int) { return criterion_witness_families(); }, true},
      {4, "j-trivial maxima", criterion_j_maxima, true},
      {5, "bound functions", [](int) { return criterion_bounds(); }, true},
      {6, "property suites",
       [](int) { return criterion_property_suites(); }, true},
  };

  int failures = 0;
  std::vector<std::optional<std::string>> transcripts(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (!e.enabled) {
      std::cout << "criterion " << e.id << " (" << e.name
                << "): SKIP (enable with --stretch or REVSC_STRETCH=1)\n"
                << std::flush;
      continue;
    }
    const auto from = std::chrono::steady_clock::now();
    try {
      transcripts[i] = e.run(1);
      std::cout << "criterion " << e.id << " (" << e.name << "): PASS\n"
                << std::flush;
    } catch (const std::exception& ex) {
      ++failures;
      std::cout << "criterion " << e.id << " (" << e.name << "): FAIL ("
                << ex.what() << ")\n"
                << std::flush;
    }
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - from;
    std::cerr << "# criterion " << e.id << " took " << took.count() << " s\n";
  }

  if (failures > 0) {
    std::cout << "criterion 7 (determinism): FAIL (earlier criteria failed)\n";
    return failures + 1;
  }
  const auto from = std::chrono::steady_clock::now();
  try {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].enabled) continue;
      const std::string again = entries[i].run(2);
      require(again == *transcripts[i],
              std::string("criterion ") + std::to_string(entries[i].id) +
                  " transcript changed between runs");
    }
    std::cout << "criterion 7 (determinism): PASS\n";
  } catch (const std::exception& ex) {
    ++failures;
    std::cout << "criterion 7 (determinism): FAIL (" << ex.what() << ")\n";
  }
  const std::chrono::duration<double> took =
      std::chrono::steady_clock::now() - from;
  std::cerr << "# criterion 7 took " << took.count() << " s\n";
  return failures;
}
