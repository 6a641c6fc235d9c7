#include "revsc/regex.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <vector>

namespace revsc {

namespace {

constexpr std::string_view kEpsilonUtf8 = "\xce\xb5";
constexpr std::string_view kEmptyUtf8 = "\xe2\x88\x85";

RegexPtr make(RegexAst::Kind kind) {
  auto node = std::make_unique<RegexAst>();
  node->kind = kind;
  return node;
}

}  // namespace

RegexPtr rx_empty() { return make(RegexAst::Kind::kEmpty); }

RegexPtr rx_epsilon() { return make(RegexAst::Kind::kEpsilon); }

RegexPtr rx_letter(int letter) {
  auto node = make(RegexAst::Kind::kLetter);
  node->letter = letter;
  return node;
}

RegexPtr rx_union(RegexPtr a, RegexPtr b) {
  auto node = make(RegexAst::Kind::kUnion);
  node->left = std::move(a);
  node->right = std::move(b);
  return node;
}

RegexPtr rx_concat(RegexPtr a, RegexPtr b) {
  auto node = make(RegexAst::Kind::kConcat);
  node->left = std::move(a);
  node->right = std::move(b);
  return node;
}

RegexPtr rx_star(RegexPtr a) {
  auto node = make(RegexAst::Kind::kStar);
  node->left = std::move(a);
  return node;
}

RegexPtr rx_clone(const RegexAst& ast) {
  auto node = make(ast.kind);
  node->letter = ast.letter;
  if (ast.left) node->left = rx_clone(*ast.left);
  if (ast.right) node->right = rx_clone(*ast.right);
  return node;
}

bool ast_equal(const RegexAst& a, const RegexAst& b) {
  if (a.kind != b.kind || a.letter != b.letter) return false;
  if (!a.left != !b.left || !a.right != !b.right) return false;
  if (a.left && !ast_equal(*a.left, *b.left)) return false;
  if (a.right && !ast_equal(*a.right, *b.right)) return false;
  return true;
}

RegexParseError::RegexParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  // Letter names with their indices, longest first.
  std::vector<std::pair<std::string_view, int>> names;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool starts_with(std::string_view s) const {
    return text.substr(pos).substr(0, s.size()) == s;
  }

  // True when the next token can begin an expression atom.
  bool at_atom() {
    skip_ws();
    if (pos >= text.size()) return false;
    if (text[pos] == '(') return true;
    if (starts_with("eps") || starts_with(kEpsilonUtf8) ||
        starts_with(kEmptyUtf8))
      return true;
    for (const auto& [name, idx] : names)
      if (starts_with(name)) return true;
    return false;
  }

  RegexPtr parse_union() {
    RegexPtr e = parse_concat();
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '+') return e;
      ++pos;
      e = rx_union(std::move(e), parse_concat());
    }
  }

  RegexPtr parse_concat() {
    RegexPtr e = parse_star();
    while (at_atom()) e = rx_concat(std::move(e), parse_star());
    return e;
  }

  RegexPtr parse_star() {
    RegexPtr e = parse_atom();
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') return e;
      ++pos;
      e = rx_star(std::move(e));
    }
  }

  RegexPtr parse_atom() {
    skip_ws();
    if (pos >= text.size())
      throw RegexParseError("expected an expression", pos);
    if (text[pos] == '(') {
      ++pos;
      RegexPtr e = parse_union();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw RegexParseError("expected )", pos);
      ++pos;
      return e;
    }
    if (starts_with(kEmptyUtf8)) {
      pos += kEmptyUtf8.size();
      return rx_empty();
    }
    // Longest byte match wins; a declared letter wins a tie with epsilon.
    std::size_t best_len = 0;
    int best_letter = -1;
    for (const auto& [name, idx] : names)
      if (starts_with(name) && name.size() > best_len) {
        best_len = name.size();
        best_letter = idx;
      }
    std::size_t eps_len = 0;
    if (starts_with("eps")) eps_len = 3;
    else if (starts_with(kEpsilonUtf8)) eps_len = kEpsilonUtf8.size();
    if (eps_len > best_len) {
      pos += eps_len;
      return rx_epsilon();
    }
    if (best_letter >= 0) {
      pos += best_len;
      return rx_letter(best_letter);
    }
    throw RegexParseError("unexpected character", pos);
  }
};

}  // namespace

RegexPtr parse_regex(std::string_view text,
                     std::span<const std::string> alphabet) {
  if (alphabet.empty())
    throw std::invalid_argument("alphabet must not be empty");
  Parser p;
  p.text = text;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i].empty())
      throw std::invalid_argument("letter names must not be empty");
    p.names.emplace_back(alphabet[i], static_cast<int>(i));
  }
  std::sort(p.names.begin(), p.names.end(), [](const auto& a, const auto& b) {
    return a.first.size() > b.first.size();
  });
  RegexPtr e = p.parse_union();
  p.skip_ws();
  if (p.pos < text.size())
    throw RegexParseError("unexpected trailing input", p.pos);
  return e;
}

namespace {

// union 0, concat 1, star 2, atoms 3
int precedence(const RegexAst& ast) {
  switch (ast.kind) {
    case RegexAst::Kind::kUnion: return 0;
    case RegexAst::Kind::kConcat: return 1;
    case RegexAst::Kind::kStar: return 2;
    default: return 3;
  }
}

void print_node(const RegexAst& ast, std::span<const std::string> alphabet,
                int min_prec, std::string& out) {
  const bool parens = precedence(ast) < min_prec;
  if (parens) out += "(";
  switch (ast.kind) {
    case RegexAst::Kind::kEmpty:
      out += kEmptyUtf8;
      break;
    case RegexAst::Kind::kEpsilon:
      out += "eps";
      break;
    case RegexAst::Kind::kLetter:
      if (ast.letter < 0 ||
          ast.letter >= static_cast<int>(alphabet.size()))
        throw std::invalid_argument("letter index outside the alphabet");
      out += alphabet[ast.letter];
      break;
    case RegexAst::Kind::kUnion:
      print_node(*ast.left, alphabet, 0, out);
      out += "+";
      print_node(*ast.right, alphabet, 1, out);
      break;
    case RegexAst::Kind::kConcat:
      print_node(*ast.left, alphabet, 1, out);
      print_node(*ast.right, alphabet, 2, out);
      break;
    case RegexAst::Kind::kStar:
      print_node(*ast.left, alphabet, 2, out);
      out += "*";
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const RegexAst& ast,
                      std::span<const std::string> alphabet) {
  std::string out;
  print_node(ast, alphabet, 0, out);
  return out;
}

namespace {

// Position sets for the automaton construction, bit p = letter occurrence p.
struct PosInfo {
  bool nullable = false;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

PosInfo positions(const RegexAst& ast, int alphabet_size,
                  std::vector<int>& pos_letter,
                  std::vector<std::uint64_t>& follow) {
  PosInfo info;
  switch (ast.kind) {
    case RegexAst::Kind::kEmpty:
      break;
    case RegexAst::Kind::kEpsilon:
      info.nullable = true;
      break;
    case RegexAst::Kind::kLetter: {
      if (ast.letter < 0 || ast.letter >= alphabet_size)
        throw std::invalid_argument("letter index outside the alphabet");
      if (pos_letter.size() >= 63)
        throw std::invalid_argument(
            "expression has too many letter occurrences");
      int p = static_cast<int>(pos_letter.size());
      pos_letter.push_back(ast.letter);
      follow.push_back(0);
      info.first = info.last = std::uint64_t{1} << p;
      break;
    }
    case RegexAst::Kind::kUnion: {
      PosInfo a = positions(*ast.left, alphabet_size, pos_letter, follow);
      PosInfo b = positions(*ast.right, alphabet_size, pos_letter, follow);
      info.nullable = a.nullable || b.nullable;
      info.first = a.first | b.first;
      info.last = a.last | b.last;
      break;
    }
    case RegexAst::Kind::kConcat: {
      PosInfo a = positions(*ast.left, alphabet_size, pos_letter, follow);
      PosInfo b = positions(*ast.right, alphabet_size, pos_letter, follow);
      info.nullable = a.nullable && b.nullable;
      info.first = a.first | (a.nullable ? b.first : 0);
      info.last = b.last | (b.nullable ? a.last : 0);
      for (std::uint64_t bits = a.last; bits;) {
        int p = std::countr_zero(bits);
        bits &= bits - 1;
        follow[p] |= b.first;
      }
      break;
    }
    case RegexAst::Kind::kStar: {
      PosInfo a = positions(*ast.left, alphabet_size, pos_letter, follow);
      info.nullable = true;
      info.first = a.first;
      info.last = a.last;
      for (std::uint64_t bits = a.last; bits;) {
        int p = std::countr_zero(bits);
        bits &= bits - 1;
        follow[p] |= a.first;
      }
      break;
    }
  }
  return info;
}

}  // namespace

Nfa regex_to_nfa(const RegexAst& ast, int alphabet_size) {
  if (alphabet_size < 1)
    throw std::invalid_argument("alphabet must not be empty");
  std::vector<int> pos_letter;
  std::vector<std::uint64_t> follow;
  PosInfo info = positions(ast, alphabet_size, pos_letter, follow);
  const int m = static_cast<int>(pos_letter.size());
  const int n = m + 1;  // state 0 is the start, state p+1 is position p
  std::vector<StateSet> delta(static_cast<std::size_t>(n) * alphabet_size,
                              StateSet(n));
  for (std::uint64_t bits = info.first; bits;) {
    int p = std::countr_zero(bits);
    bits &= bits - 1;
    delta[pos_letter[p]].set(p + 1);
  }
  for (int p = 0; p < m; ++p)
    for (std::uint64_t bits = follow[p]; bits;) {
      int q = std::countr_zero(bits);
      bits &= bits - 1;
      delta[static_cast<std::size_t>(p + 1) * alphabet_size + pos_letter[q]]
          .set(q + 1);
    }
  StateSet accepting(n);
  if (info.nullable) accepting.set(0);
  for (std::uint64_t bits = info.last; bits;) {
    int p = std::countr_zero(bits);
    bits &= bits - 1;
    accepting.set(p + 1);
  }
  return Nfa(n, alphabet_size, std::move(delta), StateSet::of(n, {0}),
             std::move(accepting));
}

Dfa regex_to_min_dfa(std::string_view text,
                     std::span<const std::string> alphabet) {
  RegexPtr ast = parse_regex(text, alphabet);
  return minimize(
      determinize(regex_to_nfa(*ast, static_cast<int>(alphabet.size()))).dfa);
}

}  // namespace revsc
