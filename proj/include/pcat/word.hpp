#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/ops.hpp"

namespace pcat {

// One symbol of a word in postfix order: either a generator (0-based index)
// or an operation.
class Token {
 public:
  static constexpr Token letter(std::uint32_t index) { return Token(static_cast<std::int32_t>(index)); }
  static constexpr Token op(OpSymbol g) { return Token(-1 - g.index()); }

  constexpr bool is_leaf() const { return code_ >= 0; }
  constexpr std::uint32_t letter_index() const { return static_cast<std::uint32_t>(code_); }
  constexpr OpSymbol op() const { return OpSymbol::from_index(-1 - code_); }

  friend constexpr bool operator==(Token, Token) = default;
  friend constexpr auto operator<=>(Token, Token) = default;

 private:
  constexpr explicit Token(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

using Tokens = std::vector<Token>;
using TokenSpan = std::span<const Token>;

// Checks that tokens form exactly one postfix tree.
bool is_well_formed(TokenSpan tokens);

// Index of the first token of the subtree whose root sits at `root`, for
// every position. tokens must be well formed.
void subtree_starts(TokenSpan tokens, std::vector<std::uint32_t>& starts);

// A full quasigroup word (any of the six operations at each node), stored in
// postfix order. Postfix makes every subtree a contiguous token range, so
// structural equality of subterms is range equality.
class FullWord {
 public:
  explicit FullWord(Tokens postfix);

  static FullWord leaf(std::uint32_t letter);
  static FullWord node(OpSymbol op, const FullWord& left, const FullWord& right);

  TokenSpan tokens() const { return tokens_; }
  std::size_t leaf_count() const { return (tokens_.size() + 1) / 2; }
  std::size_t node_count() const { return tokens_.size() / 2; }
  bool is_basic() const;
  bool is_leaf() const { return tokens_.size() == 1; }

  OpSymbol root_op() const;
  FullWord left() const;
  FullWord right() const;

  friend bool operator==(const FullWord&, const FullWord&) = default;
  friend auto operator<=>(const FullWord&, const FullWord&) = default;

 private:
  Tokens tokens_;
};

// A basic quasigroup word: every node carries *, / or \.
class Word {
 public:
  explicit Word(Tokens postfix);
  explicit Word(const FullWord& basic);

  static Word leaf(std::uint32_t letter);
  static Word node(OpSymbol op, const Word& left, const Word& right);

  TokenSpan tokens() const { return tokens_; }
  std::size_t leaf_count() const { return (tokens_.size() + 1) / 2; }
  std::size_t node_count() const { return tokens_.size() / 2; }

  FullWord as_full() const { return FullWord(tokens_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Tokens tokens_;
};

// Grammar (whitespace ignored):
//   word  := gen | '(' word op word ')'
//   gen   := [a-z] | 'a' [1-9][0-9]*        -- a..z are a1..a26
//   op    := '*' | '/' | '\'                -- basic
//          | 'o' | '//' | '\\'              -- opposite (full words only)
// max_generators, when given, rejects generators beyond a<s>.
Word parse_word(std::string_view text, std::optional<std::uint32_t> max_generators = std::nullopt);
FullWord parse_full_word(std::string_view text,
                         std::optional<std::uint32_t> max_generators = std::nullopt);

// Uses single letters when every generator is among a..z, else a1, a2, ...
std::string format_word(const Word& w);
std::string format_word(const FullWord& w);
std::string format_tokens(TokenSpan tokens);

// Postfix rendering with group names, e.g. "a b μ c μ^στσ".
std::string format_postfix(TokenSpan tokens);

}  // namespace pcat
