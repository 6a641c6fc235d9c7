#include "revsc/witness.hpp"

#include <stdexcept>
#include <vector>

#include "revsc/regex.hpp"

namespace revsc {

Dfa fig2_witness(int n) {
  if (n < 3) throw std::invalid_argument("fig2 witness needs n >= 3");
  std::vector<std::vector<int>> delta(n, std::vector<int>(2));
  delta[0] = {0, 0};
  delta[n - 1] = {n - 1, n - 1};
  delta[1] = {0, n - 1};
  for (int i = 2; i <= n - 2; ++i) delta[i] = {i - 1, i - 1};
  return build_dfa(n, 2, delta, n - 2, {0});
}

Dfa fig5_witness(int n) {
  if (n < 3) throw std::invalid_argument("fig5 witness needs n >= 3");
  const int k = n - 2;
  std::vector<std::vector<int>> delta(n, std::vector<int>(k));
  for (int a = 0; a < k; ++a) delta[0][a] = 0;
  for (int i = 1; i < n; ++i)
    for (int a = 0; a < k; ++a) {
      const int j = a + 1;
      if (i <= j) delta[i][a] = i + 1;
      else if (j == i - 1) delta[i][a] = 0;
      else delta[i][a] = i;
    }
  return build_dfa(n, k, delta, 1, {0});
}

std::string table1_expression(int n) {
  switch (n) {
    case 2: return "a*b(a+b)*";
    case 3: return "b*+b*a(a*b(a+b)*)";
    case 4: return "b*a(b*+b*a(a*b(a+b)*))";
    case 5: return "b*a(a(b*+b*a(a*b(a+b)*))+b(a*b(a+b)*))";
    case 6: return "b*a(b*a+b*a(a(b*+b*a(a*b(a+b)*))+b(a*b(a+b)*)))";
    case 7:
      return "b*ab*a(a+b)(eps+a(b*+b*a(a*b(a+b)*))+b(a*b(a+b)*))";
    default:
      throw std::invalid_argument("tight binary witnesses cover 2 <= n <= 7");
  }
}

Dfa table1_witness(int n) {
  static const std::vector<std::string> alphabet = {"a", "b"};
  return regex_to_min_dfa(table1_expression(n), alphabet);
}

std::uint64_t r_trivial_reverse_bound(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  if (k == 1) return static_cast<std::uint64_t>(n);
  if (k == 2) {
    if (n == 1) return 1;
    if (n <= 6) return (std::uint64_t{1} << (n - 2)) + n - 1;
    if (n == 7) return 34;
    return std::uint64_t{1} << (n - 2);
  }
  return std::uint64_t{1} << (n - 1);
}

std::uint64_t binary_j_trivial_reverse_bound(int n) {
  if (n < 4) throw std::invalid_argument("binary bound needs n >= 4");
  const std::uint64_t pow = std::uint64_t{1} << (n - 3);
  const std::uint64_t mid =
      std::max<std::uint64_t>(2 * n - 3, static_cast<std::uint64_t>(n - 2) *
                                             static_cast<std::uint64_t>(n - 2));
  return pow + std::min(mid, pow) + (n - 1);
}

std::optional<std::uint64_t> j_trivial_alphabet_bound(int n, int k) {
  if (n < 3 || k < 1) throw std::invalid_argument("need n >= 3 and k >= 1");
  if (k >= n - 1) return std::uint64_t{1} << (n - 1);
  if (k == n - 2) return (std::uint64_t{1} << (n - 1)) - 1;
  if (k == 2) return binary_j_trivial_reverse_bound(n);
  if (k == 1) return static_cast<std::uint64_t>(n);
  return std::nullopt;  // 3 <= k <= n-3: no closed form is known
}

}  // namespace revsc
