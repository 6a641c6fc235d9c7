#include <doctest.h>

#include <cstdint>
#include <vector>

#include "revsc/automata.hpp"
#include "revsc/order.hpp"
#include "revsc/regex.hpp"
#include "revsc/witness.hpp"

using namespace revsc;

TEST_CASE("fig2_witness lays out chain, accepting sink and dead sink") {
  const Dfa m3 = fig2_witness(3);
  CHECK(m3 == build_dfa(3, 2, {{0, 0}, {0, 2}, {2, 2}}, 1, {0}));
  const Dfa m4 = fig2_witness(4);
  CHECK(m4 == build_dfa(4, 2, {{0, 0}, {0, 3}, {1, 1}, {3, 3}}, 2, {0}));
  CHECK_THROWS_AS(fig2_witness(2), std::invalid_argument);
}

TEST_CASE("fig2_witness complexity profile") {
  for (int n = 3; n <= 14; ++n) {
    const Dfa m = fig2_witness(n);
    CHECK(state_complexity(m) == n);
    CHECK(reverse_state_complexity(m) == (std::int64_t{1} << (n - 2)));
    CHECK(dead_states(m) == StateSet::of(n, {n - 1}));
    CHECK(is_r_trivial(m));
    CHECK(!is_j_trivial(m, JTrivialMethod::kTrahtman));
    CHECK(reverse_state_complexity(complement(m)) ==
          reverse_state_complexity(m));
  }
  CHECK(!is_j_trivial(fig2_witness(8), JTrivialMethod::kReversePo));
}

TEST_CASE("fig5_witness uses n-2 letters to climb, reset and hold") {
  const Dfa m4 = fig5_witness(4);
  CHECK(m4 == build_dfa(4, 2, {{0, 0}, {2, 2}, {0, 3}, {3, 0}}, 1, {0}));
  const Dfa m5 = fig5_witness(5);
  CHECK(m5.alphabet_size() == 3);
  CHECK(m5.initial() == 1);
  CHECK(m5.accepting() == StateSet::of(5, {0}));
  CHECK(m5.next(1, 0) == 2);   // climb
  CHECK(m5.next(4, 2) == 0);   // reset
  CHECK(m5.next(4, 0) == 4);   // hold
  CHECK(m5.next(0, 1) == 0);   // absorbing accepting state
  CHECK_THROWS_AS(fig5_witness(2), std::invalid_argument);
}

TEST_CASE("fig5_witness complexity profile") {
  for (int n = 3; n <= 12; ++n) {
    const Dfa m = fig5_witness(n);
    CHECK(state_complexity(m) == n);
    CHECK(reverse_state_complexity(m) == (std::int64_t{1} << (n - 1)) - 1);
    CHECK(dead_states(m).empty());
    CHECK(is_j_trivial(m, JTrivialMethod::kSimon));
    CHECK(is_j_trivial(m, JTrivialMethod::kTrahtman));
  }
  for (int n = 3; n <= 9; ++n)
    CHECK(is_j_trivial(fig5_witness(n), JTrivialMethod::kReversePo));
}

TEST_CASE("table1_expression builds on the smaller languages") {
  CHECK(table1_expression(2) == "a*b(a+b)*");
  CHECK(table1_expression(3) == "b*+b*a(a*b(a+b)*)");
  const std::vector<std::string> ab{"a", "b"};
  for (int n = 2; n <= 7; ++n) CHECK_NOTHROW(parse_regex(table1_expression(n), ab));
  CHECK_THROWS_AS(table1_expression(1), std::invalid_argument);
  CHECK_THROWS_AS(table1_expression(8), std::invalid_argument);
}

TEST_CASE("table1_witness hits the recorded worst cases") {
  const int expected_rsc[8] = {0, 0, 2, 4, 7, 12, 21, 34};
  for (int n = 2; n <= 7; ++n) {
    const Dfa m = table1_witness(n);
    CHECK(m.alphabet_size() == 2);
    CHECK(state_complexity(m) == n);
    CHECK(m.state_count() == n);
    CHECK(reverse_state_complexity(m) == expected_rsc[n]);
    CHECK(is_j_trivial(m, JTrivialMethod::kReversePo));
    CHECK(is_j_trivial(m, JTrivialMethod::kSimon));
    CHECK(is_j_trivial(m, JTrivialMethod::kTrahtman));
    CHECK(dead_states(m).empty());
  }
  CHECK_THROWS_AS(table1_witness(1), std::invalid_argument);
  CHECK_THROWS_AS(table1_witness(8), std::invalid_argument);
}

TEST_CASE("r_trivial_reverse_bound covers every alphabet regime") {
  // One letter: reversal is free.
  CHECK(r_trivial_reverse_bound(1, 1) == 1);
  CHECK(r_trivial_reverse_bound(5, 1) == 5);
  // Two letters: 2^(n-2) + n - 1 up to n = 6, then the computed value 34,
  // then 2^(n-2).
  CHECK(r_trivial_reverse_bound(1, 2) == 1);
  CHECK(r_trivial_reverse_bound(2, 2) == 2);
  CHECK(r_trivial_reverse_bound(3, 2) == 4);
  CHECK(r_trivial_reverse_bound(4, 2) == 7);
  CHECK(r_trivial_reverse_bound(5, 2) == 12);
  CHECK(r_trivial_reverse_bound(6, 2) == 21);
  CHECK(r_trivial_reverse_bound(7, 2) == 34);
  CHECK(r_trivial_reverse_bound(8, 2) == 64);
  CHECK(r_trivial_reverse_bound(9, 2) == 128);
  // Three or more letters: 2^(n-1).
  CHECK(r_trivial_reverse_bound(5, 3) == 16);
  CHECK(r_trivial_reverse_bound(5, 7) == 16);
  CHECK(r_trivial_reverse_bound(8, 3) == 128);
  CHECK_THROWS_AS(r_trivial_reverse_bound(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(r_trivial_reverse_bound(3, 0), std::invalid_argument);
}

TEST_CASE("binary_j_trivial_reverse_bound evaluates its three-way minimum") {
  CHECK(binary_j_trivial_reverse_bound(4) == 7);
  CHECK(binary_j_trivial_reverse_bound(5) == 12);
  CHECK(binary_j_trivial_reverse_bound(6) == 21);
  CHECK(binary_j_trivial_reverse_bound(7) == 38);
  CHECK(binary_j_trivial_reverse_bound(8) == 71);
  CHECK(binary_j_trivial_reverse_bound(9) == 121);
  CHECK(binary_j_trivial_reverse_bound(10) == 201);
  CHECK_THROWS_AS(binary_j_trivial_reverse_bound(3), std::invalid_argument);
}

TEST_CASE("j_trivial_alphabet_bound picks the right clause") {
  CHECK(j_trivial_alphabet_bound(5, 4) == 16);   // k >= n-1
  CHECK(j_trivial_alphabet_bound(5, 6) == 16);
  CHECK(j_trivial_alphabet_bound(3, 2) == 4);    // k >= n-1 wins over k == 2
  CHECK(j_trivial_alphabet_bound(5, 3) == 15);   // k == n-2
  CHECK(j_trivial_alphabet_bound(3, 1) == 3);    // k == n-2 at one letter
  CHECK(j_trivial_alphabet_bound(6, 4) == 31);
  CHECK(j_trivial_alphabet_bound(4, 2) == 7);    // binary special case
  CHECK(j_trivial_alphabet_bound(8, 2) == 71);
  CHECK(j_trivial_alphabet_bound(5, 1) == 5);    // one letter
  CHECK(!j_trivial_alphabet_bound(6, 3).has_value());  // open regime
  CHECK(!j_trivial_alphabet_bound(7, 3).has_value());
  CHECK(!j_trivial_alphabet_bound(7, 4).has_value());
  CHECK_THROWS_AS(j_trivial_alphabet_bound(2, 2), std::invalid_argument);
}

TEST_CASE("witness families are tight against their bounds") {
  for (int n = 2; n <= 7; ++n)
    CHECK(static_cast<std::uint64_t>(reverse_state_complexity(
              table1_witness(n))) == r_trivial_reverse_bound(n, 2));
  for (int n = 8; n <= 12; ++n)
    CHECK(static_cast<std::uint64_t>(reverse_state_complexity(
              fig2_witness(n))) == r_trivial_reverse_bound(n, 2));
  for (int n = 3; n <= 12; ++n) {
    const Dfa m = fig5_witness(n);
    CHECK(static_cast<std::uint64_t>(reverse_state_complexity(m)) ==
          j_trivial_alphabet_bound(n, n - 2).value());
  }
}
