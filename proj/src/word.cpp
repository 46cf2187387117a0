#include "pcat/word.hpp"

#include <algorithm>
#include <cctype>

#include "pcat/errors.hpp"

namespace pcat {

bool is_well_formed(TokenSpan tokens) {
  std::size_t depth = 0;
  for (Token t : tokens) {
    if (t.is_leaf()) {
      ++depth;
    } else {
      if (depth < 2) return false;
      --depth;
    }
  }
  return depth == 1;
}

void subtree_starts(TokenSpan tokens, std::vector<std::uint32_t>& starts) {
  starts.resize(tokens.size());
  for (std::uint32_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_leaf()) {
      starts[i] = i;
    } else {
      const std::uint32_t right_start = starts[i - 1];
      starts[i] = starts[right_start - 1];
    }
  }
}

// ---------------------------------------------------------------------------

FullWord::FullWord(Tokens postfix) : tokens_(std::move(postfix)) {
  if (!is_well_formed(tokens_)) throw DomainError("token sequence is not a single postfix tree");
}

FullWord FullWord::leaf(std::uint32_t letter) { return FullWord(Tokens{Token::letter(letter)}); }

FullWord FullWord::node(OpSymbol op, const FullWord& left, const FullWord& right) {
  Tokens t;
  t.reserve(left.tokens_.size() + right.tokens_.size() + 1);
  t.insert(t.end(), left.tokens_.begin(), left.tokens_.end());
  t.insert(t.end(), right.tokens_.begin(), right.tokens_.end());
  t.push_back(Token::op(op));
  return FullWord(std::move(t));
}

bool FullWord::is_basic() const {
  return std::all_of(tokens_.begin(), tokens_.end(),
                     [](Token t) { return t.is_leaf() || t.op().is_basic(); });
}

OpSymbol FullWord::root_op() const {
  if (is_leaf()) throw DomainError("a generator has no root operation");
  return tokens_.back().op();
}

FullWord FullWord::left() const {
  if (is_leaf()) throw DomainError("a generator has no children");
  std::vector<std::uint32_t> starts;
  subtree_starts(tokens_, starts);
  const std::uint32_t right_start = starts[tokens_.size() - 2];
  return FullWord(Tokens(tokens_.begin(), tokens_.begin() + right_start));
}

FullWord FullWord::right() const {
  if (is_leaf()) throw DomainError("a generator has no children");
  std::vector<std::uint32_t> starts;
  subtree_starts(tokens_, starts);
  const std::uint32_t right_start = starts[tokens_.size() - 2];
  return FullWord(Tokens(tokens_.begin() + right_start, tokens_.end() - 1));
}

Word::Word(Tokens postfix) : tokens_(std::move(postfix)) {
  if (!is_well_formed(tokens_)) throw DomainError("token sequence is not a single postfix tree");
  for (Token t : tokens_) {
    if (!t.is_leaf() && !t.op().is_basic()) {
      throw DomainError("basic word contains opposite operation " + std::string(t.op().ascii()));
    }
  }
}

Word::Word(const FullWord& basic) : Word(Tokens(basic.tokens().begin(), basic.tokens().end())) {}

Word Word::leaf(std::uint32_t letter) { return Word(Tokens{Token::letter(letter)}); }

Word Word::node(OpSymbol op, const Word& left, const Word& right) {
  return Word(FullWord::node(op, left.as_full(), right.as_full()));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::uint32_t> max_generators, bool allow_opposite)
      : text_(text), max_generators_(max_generators), allow_opposite_(allow_opposite) {}

  Tokens parse() {
    Tokens out;
    word(out);
    skip_space();
    if (pos_ != text_.size()) fail("expected end of input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void word(Tokens& out) {
    skip_space();
    if (at_end()) fail("unexpected end of input, expected a word");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      word(out);
      skip_space();
      const OpSymbol op = operation();
      word(out);
      skip_space();
      if (at_end()) fail("missing ')'");
      if (text_[pos_] != ')') fail(std::string("expected ')', found '") + text_[pos_] + "'");
      ++pos_;
      out.push_back(Token::op(op));
    } else if (c >= 'a' && c <= 'z') {
      out.push_back(Token::letter(generator()));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::uint32_t generator() {
    const std::size_t start = pos_;
    const char c = text_[pos_++];
    std::uint32_t index = static_cast<std::uint32_t>(c - 'a');
    if (c == 'a' && !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '0') fail("generator index must start with 1..9");
      std::uint64_t v = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > 1'000'000'000ULL) fail("generator index too large");
        ++pos_;
      }
      index = static_cast<std::uint32_t>(v - 1);
    }
    if (max_generators_ && index >= *max_generators_) {
      pos_ = start;
      fail("unknown generator a" + std::to_string(index + 1) + " (only " +
           std::to_string(*max_generators_) + " generators)");
    }
    return index;
  }

  OpSymbol operation() {
    if (at_end()) fail("unexpected end of input, expected an operator");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    OpSymbol op;
    if (c == '*') {
      ++pos_;
      op = OpSymbol::multiply();
    } else if (c == '/') {
      ++pos_;
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        op = OpSymbol::opposite_right_divide();
      } else {
        op = OpSymbol::right_divide();
      }
    } else if (c == '\\') {
      ++pos_;
      if (!at_end() && text_[pos_] == '\\') {
        ++pos_;
        op = OpSymbol::opposite_left_divide();
      } else {
        op = OpSymbol::left_divide();
      }
    } else if (c == 'o') {
      ++pos_;
      op = OpSymbol::opposite_multiply();
    } else {
      fail(std::string("expected an operator, found '") + c + "'");
    }
    if (!allow_opposite_ && !op.is_basic()) {
      pos_ = start;
      fail("opposite operator '" + std::string(op.ascii()) + "' is not allowed in a basic word");
    }
    return op;
  }

  std::string_view text_;
  std::optional<std::uint32_t> max_generators_;
  bool allow_opposite_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::optional<std::uint32_t> max_generators) {
  return Word(Parser(text, max_generators, false).parse());
}

FullWord parse_full_word(std::string_view text, std::optional<std::uint32_t> max_generators) {
  return FullWord(Parser(text, max_generators, true).parse());
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_tokens(TokenSpan tokens) {
  const bool letters = std::all_of(tokens.begin(), tokens.end(),
                                   [](Token t) { return !t.is_leaf() || t.letter_index() < 26; });
  std::vector<std::string> stack;
  for (Token t : tokens) {
    if (t.is_leaf()) {
      stack.push_back(letters ? std::string(1, static_cast<char>('a' + t.letter_index()))
                              : "a" + std::to_string(t.letter_index() + 1));
      continue;
    }
    std::string right = std::move(stack.back());
    stack.pop_back();
    std::string left = std::move(stack.back());
    stack.pop_back();
    const OpSymbol op = t.op();
    // 'o' would run into neighbouring letters
    const std::string sym = op == OpSymbol::opposite_multiply() ? " o " : std::string(op.ascii());
    stack.push_back("(" + left + sym + right + ")");
  }
  return stack.empty() ? std::string() : stack.back();
}

std::string format_word(const Word& w) { return format_tokens(w.tokens()); }
std::string format_word(const FullWord& w) { return format_tokens(w.tokens()); }

std::string format_postfix(TokenSpan tokens) {
  const bool letters = std::all_of(tokens.begin(), tokens.end(),
                                   [](Token t) { return !t.is_leaf() || t.letter_index() < 26; });
  std::string out;
  for (Token t : tokens) {
    if (!out.empty()) out += ' ';
    if (t.is_leaf()) {
      out += letters ? std::string(1, static_cast<char>('a' + t.letter_index()))
                     : "a" + std::to_string(t.letter_index() + 1);
    } else if (t.op() == OpSymbol::multiply()) {
      out += "μ";
    } else {
      out += "μ^";
      out += t.op().group_name();
    }
  }
  return out;
}

}  // namespace pcat
