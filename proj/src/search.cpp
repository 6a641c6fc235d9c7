#include "revsc/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace revsc {

namespace {

void check_limits(int n, int k) {
  if (n < 1 || n > kMaxSearchStates)
    throw std::invalid_argument("scan supports 1 to 12 states");
  if (k < 1 || k > kMaxSearchLetters)
    throw std::invalid_argument("scan supports 1 to 4 letters");
}

Dfa table_dfa(int n, int k, const std::uint8_t* t, std::uint32_t mask) {
  std::vector<int> delta(static_cast<std::size_t>(n) * k);
  for (std::size_t d = 0; d < delta.size(); ++d) delta[d] = t[d];
  StateSet accepting(n);
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) accepting.set(p);
  return Dfa(n, k, std::move(delta), 0, std::move(accepting));
}

// Advances digits from..total-1 to the next monotone table, where the digit
// at index d belongs to row d / k and ranges over d / k .. n-1. Returns
// false once the range rolls over.
bool advance(int n, int k, std::uint8_t* t, int from, int total) {
  for (int d = total - 1; d >= from; --d) {
    if (t[d] < n - 1) {
      ++t[d];
      for (int e = d + 1; e < total; ++e)
        t[e] = static_cast<std::uint8_t>(e / k);
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_po_table(int n, int k,
                       const std::function<void(const Dfa&)>& fn) {
  check_limits(n, k);
  const int total = n * k;
  std::uint8_t t[kMaxSearchStates * kMaxSearchLetters];
  for (int d = 0; d < total; ++d) t[d] = static_cast<std::uint8_t>(d / k);
  do {
    fn(table_dfa(n, k, t, 0));
  } while (advance(n, k, t, 0, total));
}

void for_each_po_dfa(int n, int k, const std::function<void(const Dfa&)>& fn) {
  check_limits(n, k);
  const int total = n * k;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint8_t t[kMaxSearchStates * kMaxSearchLetters];
  for (int d = 0; d < total; ++d) t[d] = static_cast<std::uint8_t>(d / k);
  do {
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      fn(table_dfa(n, k, t, mask));
  } while (advance(n, k, t, 0, total));
}

std::vector<CandidateCursor> partition_workload(int n, int k, int parts) {
  check_limits(n, k);
  if (parts < 1) throw std::invalid_argument("parts must be at least 1");
  int rows = 0;
  std::uint64_t count = 1;
  while (rows < n && count < static_cast<std::uint64_t>(parts)) {
    std::uint64_t choices = 1;
    for (int a = 0; a < k; ++a) choices *= static_cast<std::uint64_t>(n - rows);
    count *= choices;
    ++rows;
  }
  std::vector<CandidateCursor> out;
  const int pl = rows * k;
  if (pl == 0) {
    out.push_back({n, k, {}});
    return out;
  }
  std::vector<std::uint8_t> pre(pl);
  for (int d = 0; d < pl; ++d) pre[d] = static_cast<std::uint8_t>(d / k);
  while (true) {
    out.push_back({n, k, pre});
    if (!advance(n, k, pre.data(), 0, pl)) break;
  }
  return out;
}

CandidateOps::CandidateOps(const Dfa& table_dfa) {
  check_limits(table_dfa.state_count(), table_dfa.alphabet_size());
  n_ = table_dfa.state_count();
  k_ = table_dfa.alphabet_size();
  std::uint8_t t[kMaxSearchStates * kMaxSearchLetters];
  for (int d = 0; d < n_ * k_; ++d)
    t[d] = static_cast<std::uint8_t>(table_dfa.table()[d]);
  initial_ = table_dfa.initial();
  init(t);
}

CandidateOps::CandidateOps(int n, int k, const std::uint8_t* table) {
  check_limits(n, k);
  n_ = n;
  k_ = k;
  initial_ = 0;
  init(table);
}

void CandidateOps::init(const std::uint8_t* table) {
  std::copy(table, table + n_ * k_, t_);
  for (int a = 0; a < k_; ++a)
    for (int q = 0; q < n_; ++q) pre_[a][q] = 0;
  self_rows_ = 0;
  for (int p = 0; p < n_; ++p) {
    std::uint32_t succ = 0;
    bool loops = true;
    for (int a = 0; a < k_; ++a) {
      const int q = t_[p * k_ + a];
      succ |= std::uint32_t{1} << q;
      pre_[a][q] |= std::uint32_t{1} << p;
      loops = loops && q == p;
    }
    succ_[p] = succ;
    if (loops) self_rows_ |= std::uint32_t{1} << p;
  }
  const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
  std::uint32_t reach = std::uint32_t{1} << initial_;
  std::uint32_t frontier = reach;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t bits = frontier;
    while (bits) {
      const int q = std::countr_zero(bits);
      bits &= bits - 1;
      next |= succ_[q];
    }
    frontier = next & ~reach;
    reach |= frontier;
  }
  reachable_ = reach == full;
}

bool CandidateOps::trahtman() const {
  for (int p = 0; p < n_; ++p) {
    // Directed adjacency under the letters that loop at p.
    std::uint32_t out[kMaxSearchStates];
    std::uint32_t in[kMaxSearchStates];
    for (int q = 0; q < n_; ++q) out[q] = in[q] = 0;
    for (int a = 0; a < k_; ++a) {
      if (t_[p * k_ + a] != p) continue;
      for (int q = 0; q < n_; ++q) {
        const int r = t_[q * k_ + a];
        out[q] |= std::uint32_t{1} << r;
        in[r] |= std::uint32_t{1} << q;
      }
    }
    std::uint32_t maximal = 0;
    for (int q = 0; q < n_; ++q)
      if ((out[q] & ~(std::uint32_t{1} << q)) == 0)
        maximal |= std::uint32_t{1} << q;
    // Weakly connected component of p.
    std::uint32_t comp = std::uint32_t{1} << p;
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t bits = frontier;
      while (bits) {
        const int q = std::countr_zero(bits);
        bits &= bits - 1;
        next |= out[q] | in[q];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    if (std::popcount(comp & maximal) != 1) return false;
  }
  return true;
}

bool CandidateOps::minimal(std::uint32_t mask) const {
  if (!reachable_) return false;
  const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
  mask &= full;
  int block[kMaxSearchStates];
  for (int p = 0; p < n_; ++p) block[p] = mask >> p & 1;
  int count = (mask == 0 || mask == full) ? 1 : 2;
  while (true) {
    if (count == n_) return true;
    int nb[kMaxSearchStates];
    int next_count = 0;
    for (int p = 0; p < n_; ++p) {
      int id = -1;
      for (int q = 0; q < p; ++q) {
        if (block[q] != block[p]) continue;
        bool same = true;
        for (int a = 0; a < k_; ++a)
          if (block[t_[q * k_ + a]] != block[t_[p * k_ + a]]) {
            same = false;
            break;
          }
        if (same) {
          id = nb[q];
          break;
        }
      }
      nb[p] = id >= 0 ? id : next_count++;
    }
    if (next_count == count) return false;  // stable with merged states
    std::copy(nb, nb + n_, block);
    count = next_count;
  }
}

std::uint32_t CandidateOps::reverse_step(std::uint32_t subset,
                                         int letter) const {
  std::uint32_t image = 0;
  std::uint32_t bits = subset & ((std::uint32_t{1} << n_) - 1);
  while (bits) {
    const int q = std::countr_zero(bits);
    bits &= bits - 1;
    image |= pre_[letter][q];
  }
  return image;
}

int CandidateOps::reverse_subset_count(std::uint32_t mask) const {
  const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
  mask &= full;
  std::uint64_t visited[(std::size_t{1} << kMaxSearchStates) / 64] = {};
  std::uint16_t queue[std::size_t{1} << kMaxSearchStates];
  int head = 0;
  int tail = 0;
  auto push = [&](std::uint32_t s) {
    if (visited[s >> 6] >> (s & 63) & 1) return;
    visited[s >> 6] |= std::uint64_t{1} << (s & 63);
    queue[tail++] = static_cast<std::uint16_t>(s);
  };
  push(mask);
  while (head < tail) {
    const std::uint32_t s = queue[head++];
    for (int a = 0; a < k_; ++a) push(reverse_step(s, a));
  }
  return tail;
}

namespace {

// Letter permutations other than the identity, for canonicity pruning.
struct LetterPerms {
  int count = 0;
  std::array<std::array<std::uint8_t, kMaxSearchLetters>, 23> perm;

  explicit LetterPerms(int k) {
    std::array<std::uint8_t, kMaxSearchLetters> p{};
    std::iota(p.begin(), p.begin() + k, std::uint8_t{0});
    while (std::next_permutation(p.begin(), p.begin() + k)) perm[count++] = p;
  }
};

struct Scanner {
  int n;
  int k;
  int total;
  std::uint32_t full;
  ClassFilter klass;
  DeadMode dead;
  Symmetry symmetry;
  LetterPerms perms;
  SearchRecord rec;

  Scanner(int n_in, int k_in, ClassFilter klass_in, DeadMode dead_in,
          Symmetry symmetry_in)
      : n(n_in),
        k(k_in),
        total(n_in * k_in),
        full((std::uint32_t{1} << n_in) - 1),
        klass(klass_in),
        dead(dead_in),
        symmetry(symmetry_in),
        perms(k_in) {
    rec.n = n;
    rec.k = k;
    rec.klass = klass;
    rec.dead = dead;
    rec.symmetry = symmetry;
  }

  // True when no letter permutation of t is lexicographically smaller.
  bool canonical(const std::uint8_t* t) const {
    for (int pi = 0; pi < perms.count; ++pi) {
      const auto& pm = perms.perm[pi];
      for (int i = 0; i < n; ++i) {
        bool decided = false;
        for (int a = 0; a < k; ++a) {
          const std::uint8_t pv = t[i * k + pm[a]];
          const std::uint8_t tv = t[i * k + a];
          if (pv == tv) continue;
          if (pv < tv) return false;
          decided = true;
          break;
        }
        if (decided) break;
      }
    }
    return true;
  }

  void offer(const std::uint8_t* t, std::uint32_t mask, int rsc) {
    if (rsc < rec.max_reverse_sc) return;
    if (rsc > rec.max_reverse_sc) {
      rec.max_reverse_sc = rsc;
      rec.witness_table.assign(t, t + total);
      rec.witness_mask = mask;
      return;
    }
    const std::uint8_t* w = rec.witness_table.data();
    if (std::lexicographical_compare(t, t + total, w, w + total)) {
      rec.witness_table.assign(t, t + total);
      rec.witness_mask = mask;
    } else if (std::equal(t, t + total, w) && mask < rec.witness_mask) {
      rec.witness_mask = mask;
    }
  }

  bool dead_ok(std::uint32_t self_rows, std::uint32_t mask) const {
    if (dead == DeadMode::kAny) return true;
    const bool has_dead = (self_rows & ~mask & full) != 0;
    return (dead == DeadMode::kRequire) == has_dead;
  }

  void scan_table(const std::uint8_t* t) {
    if (symmetry == Symmetry::kFull && !canonical(t)) return;
    rec.candidates_scanned += std::uint64_t{1} << n;
    const CandidateOps ops(n, k, t);
    if (!ops.all_reachable()) return;
    if (klass == ClassFilter::kJTrivial && !ops.trahtman()) return;
    const std::uint32_t self_rows = ops.self_loop_rows();
    if (symmetry == Symmetry::kFull) {
      // Complementary masks share minimality and the reverse subset count,
      // so each pair is evaluated once.
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const std::uint32_t cmask = ~mask & full;
        if (mask > cmask) continue;
        const bool keep_lo = dead_ok(self_rows, mask);
        const bool keep_hi = dead_ok(self_rows, cmask);
        if (!keep_lo && !keep_hi) continue;
        if (!ops.minimal(mask)) continue;
        const int rsc = ops.reverse_subset_count(mask);
        if (keep_lo) {
          ++rec.minimal_count;
          offer(t, mask, rsc);
        }
        if (keep_hi) {
          ++rec.minimal_count;
          offer(t, cmask, rsc);
        }
      }
    } else {
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!dead_ok(self_rows, mask)) continue;
        if (!ops.minimal(mask)) continue;
        ++rec.minimal_count;
        offer(t, mask, ops.reverse_subset_count(mask));
      }
    }
  }
};

}  // namespace

SearchRecord scan_cursor(const CandidateCursor& cursor, ClassFilter klass,
                         DeadMode dead, Symmetry symmetry) {
  check_limits(cursor.n, cursor.k);
  const int n = cursor.n;
  const int k = cursor.k;
  const int total = n * k;
  const int from = static_cast<int>(cursor.prefix.size());
  if (from > total)
    throw std::invalid_argument("cursor prefix is longer than the table");
  for (int d = 0; d < from; ++d)
    if (cursor.prefix[d] < d / k || cursor.prefix[d] > n - 1)
      throw std::invalid_argument("cursor prefix digit out of range");
  const auto start = std::chrono::steady_clock::now();
  Scanner scan(n, k, klass, dead, symmetry);
  std::uint8_t t[kMaxSearchStates * kMaxSearchLetters];
  std::copy(cursor.prefix.begin(), cursor.prefix.end(), t);
  for (int d = from; d < total; ++d) t[d] = static_cast<std::uint8_t>(d / k);
  do {
    scan.scan_table(t);
  } while (advance(n, k, t, from, total));
  if (scan.rec.max_reverse_sc > 0)
    scan.rec.witness =
        table_dfa(n, k, scan.rec.witness_table.data(), scan.rec.witness_mask);
  scan.rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return scan.rec;
}

SearchRecord merge_records(SearchRecord a, const SearchRecord& b) {
  a.candidates_scanned += b.candidates_scanned;
  a.minimal_count += b.minimal_count;
  a.wall_time_ms = std::max(a.wall_time_ms, b.wall_time_ms);
  bool take = false;
  if (b.max_reverse_sc > a.max_reverse_sc) {
    take = true;
  } else if (b.max_reverse_sc == a.max_reverse_sc && b.witness.has_value()) {
    if (!a.witness.has_value()) {
      take = true;
    } else if (b.witness_table < a.witness_table) {
      take = true;
    } else if (b.witness_table == a.witness_table &&
               b.witness_mask < a.witness_mask) {
      take = true;
    }
  }
  if (take) {
    a.max_reverse_sc = b.max_reverse_sc;
    a.witness = b.witness;
    a.witness_table = b.witness_table;
    a.witness_mask = b.witness_mask;
  }
  return a;
}

SearchRecord worst_case_reverse(int n, int k, ClassFilter klass, DeadMode dead,
                                Symmetry symmetry, int jobs) {
  check_limits(n, k);
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec;
  if (jobs == 1) {
    rec = scan_cursor(CandidateCursor{n, k, {}}, klass, dead, symmetry);
  } else {
    const auto cursors = partition_workload(n, k, jobs * 4);
    std::vector<SearchRecord> parts(cursors.size());
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> workers;
      const int width = std::min<int>(jobs, static_cast<int>(cursors.size()));
      for (int w = 0; w < width; ++w)
        workers.emplace_back([&] {
          for (std::size_t c = next.fetch_add(1); c < cursors.size();
               c = next.fetch_add(1))
            parts[c] = scan_cursor(cursors[c], klass, dead, symmetry);
        });
    }
    rec = std::move(parts[0]);
    for (std::size_t c = 1; c < parts.size(); ++c)
      rec = merge_records(std::move(rec), parts[c]);
  }
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return rec;
}

std::vector<TableRow> reverse_complexity_table(int max_n, int jobs,
                                               ClassFilter klass) {
  if (max_n < 2) throw std::invalid_argument("the table starts at n = 2");
  check_limits(max_n, 2);
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    SearchRecord no_dead =
        worst_case_reverse(n, 2, klass, DeadMode::kForbid, Symmetry::kFull,
                           jobs);
    SearchRecord with_dead =
        worst_case_reverse(n, 2, klass, DeadMode::kRequire, Symmetry::kFull,
                           jobs);
    TableRow row;
    row.n = n;
    row.worst_no_dead = no_dead.max_reverse_sc;
    row.worst_with_dead = with_dead.max_reverse_sc;
    row.upper_bound = (std::uint64_t{1} << (n - 2)) + n - 1;
    row.lower_bound = std::uint64_t{1} << (n - 2);
    row.witness_no_dead = std::move(no_dead.witness);
    row.witness_with_dead = std::move(with_dead.witness);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows,
                      const std::string& witness_dir) {
  std::ostringstream out;
  out << "n\tworst_no_dead\tworst_with_dead\tupper_bound\tlower_bound"
      << "\twitness_path\n";
  for (const TableRow& row : rows) {
    out << row.n << '\t' << row.worst_no_dead << '\t' << row.worst_with_dead
        << '\t' << row.upper_bound << '\t' << row.lower_bound << '\t';
    if (row.witness_no_dead.has_value()) {
      if (!witness_dir.empty()) out << witness_dir << '/';
      out << "witness_n" << row.n << "_nodead.json";
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace revsc
