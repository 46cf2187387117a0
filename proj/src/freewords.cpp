#include "pcat/freewords.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "pcat/enumeration.hpp"
#include "pcat/errors.hpp"

namespace pcat {

void check_enumeration_budget(std::int64_t n, const BigCount& candidates,
                              const EnumerationLimits& limits) {
  if (n > limits.max_leaves) {
    throw ResourceGuardError("refusing exhaustive enumeration with n=" + std::to_string(n) +
                             " leaves (limit " + std::to_string(limits.max_leaves) + ")");
  }
  if (candidates > BigCount(limits.budget)) {
    throw ResourceGuardError("refusing to enumerate " + candidates.to_string() +
                             " trees (budget " + std::to_string(limits.budget) + ")");
  }
}

std::vector<std::vector<bool>> tree_shapes(std::int64_t n) {
  if (n < 1) throw DomainError("tree shapes need n >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::vector<bool>>> memo;
  std::lock_guard lock(mu);

  std::vector<std::vector<std::vector<bool>>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {{true}};
  for (std::int64_t m = 2; m <= n; ++m) {
    if (auto it = memo.find(m); it != memo.end()) {
      by_size[m] = it->second;
      continue;
    }
    auto& out = by_size[m];
    for (std::int64_t i = 1; i < m; ++i) {
      for (const auto& l : by_size[i]) {
        for (const auto& r : by_size[m - i]) {
          std::vector<bool> shape = l;
          shape.insert(shape.end(), r.begin(), r.end());
          shape.push_back(false);
          out.push_back(std::move(shape));
        }
      }
    }
    memo[m] = out;
  }
  return by_size[n];
}

void enumerate_basic_trees(std::int64_t s, std::int64_t n, const TreeVisitor& visit,
                           const EnumerationLimits& limits, Shard shard) {
  if (s < 1 || n < 1) throw DomainError("enumeration needs s >= 1 and n >= 1");
  if (shard.count == 0 || shard.index >= shard.count) throw DomainError("invalid shard");
  check_enumeration_budget(n, word_count_bound(s, n), limits);

  constexpr auto basic = OpSymbol::basic();
  const auto letters = static_cast<std::uint32_t>(s);
  const auto shapes = tree_shapes(n);

  Tokens tokens(static_cast<std::size_t>(2 * n - 1), Token::letter(0));
  std::vector<std::size_t> leaf_pos;
  std::vector<std::size_t> node_pos;  // excludes the root
  std::vector<std::uint32_t> leaf_digit;
  std::vector<std::uint8_t> op_digit;

  std::uint64_t unit = 0;
  for (const auto& shape : shapes) {
    leaf_pos.clear();
    node_pos.clear();
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (shape[i]) {
        leaf_pos.push_back(i);
      } else if (i + 1 < shape.size()) {
        node_pos.push_back(i);
      }
    }
    for (OpSymbol root : (n == 1 ? std::vector<OpSymbol>{OpSymbol()}
                                 : std::vector<OpSymbol>(basic.begin(), basic.end()))) {
      if (unit++ % shard.count != shard.index) continue;
      if (n > 1) tokens.back() = Token::op(root);

      op_digit.assign(node_pos.size(), 0);
      for (std::size_t i = 0; i < node_pos.size(); ++i) tokens[node_pos[i]] = Token::op(basic[0]);
      for (;;) {
        leaf_digit.assign(leaf_pos.size(), 0);
        for (std::size_t p : leaf_pos) tokens[p] = Token::letter(0);
        for (;;) {
          visit(tokens);
          std::size_t d = 0;
          while (d < leaf_digit.size() && ++leaf_digit[d] == letters) {
            leaf_digit[d] = 0;
            tokens[leaf_pos[d]] = Token::letter(0);
            ++d;
          }
          if (d == leaf_digit.size()) break;
          tokens[leaf_pos[d]] = Token::letter(leaf_digit[d]);
        }
        std::size_t d = 0;
        while (d < op_digit.size() && ++op_digit[d] == basic.size()) {
          op_digit[d] = 0;
          tokens[node_pos[d]] = Token::op(basic[0]);
          ++d;
        }
        if (d == op_digit.size()) break;
        tokens[node_pos[d]] = Token::op(basic[op_digit[d]]);
      }
    }
  }
}

std::vector<Word> basic_trees(std::int64_t s, std::int64_t n, const EnumerationLimits& limits) {
  std::vector<Word> out;
  enumerate_basic_trees(
      s, n, [&](TokenSpan t) { out.emplace_back(Tokens(t.begin(), t.end())); }, limits);
  return out;
}

// ---------------------------------------------------------------------------
// Reducedness

namespace {

struct Range {
  std::uint32_t begin;
  std::uint32_t end;
};

bool same(TokenSpan t, Range a, Range b) {
  return a.end - a.begin == b.end - b.begin &&
         std::equal(t.begin() + a.begin, t.begin() + a.end, t.begin() + b.begin);
}

std::vector<std::uint32_t>& starts_buffer() {
  thread_local std::vector<std::uint32_t> buf;
  return buf;
}

// Children of the internal node rooted at `root`.
struct Children {
  Range left;
  Range right;
};

Children children(const std::vector<std::uint32_t>& starts, std::uint32_t root) {
  const std::uint32_t right_start = starts[root - 1];
  const std::uint32_t left_start = starts[right_start - 1];
  return {{left_start, right_start}, {right_start, root}};
}

}  // namespace

bool is_reduced(TokenSpan t) {
  auto& starts = starts_buffer();
  subtree_starts(t, starts);
  const OpSymbol mul = OpSymbol::multiply();
  const OpSymbol ldiv = OpSymbol::left_divide();
  const OpSymbol rdiv = OpSymbol::right_divide();

  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t[i].is_leaf()) continue;
    const OpSymbol op = t[i].op();
    const auto [left, right] = children(starts, i);
    const std::uint32_t lroot = left.end - 1;
    const std::uint32_t rroot = right.end - 1;
    const bool left_node = !t[lroot].is_leaf();
    const bool right_node = !t[rroot].is_leaf();
    const OpSymbol lop = left_node ? t[lroot].op() : OpSymbol();
    const OpSymbol rop = right_node ? t[rroot].op() : OpSymbol();

    if (op == mul) {
      // A*(A\B)
      if (right_node && rop == ldiv && same(t, children(starts, rroot).left, left)) return false;
      // (B/A)*A
      if (left_node && lop == rdiv && same(t, children(starts, lroot).right, right)) return false;
    } else if (op == ldiv) {
      // A\(A*B)
      if (right_node && rop == mul && same(t, children(starts, rroot).left, left)) return false;
      // (A/B)\A
      if (left_node && lop == rdiv && same(t, children(starts, lroot).left, right)) return false;
    } else if (op == rdiv) {
      // (B*A)/A
      if (left_node && lop == mul && same(t, children(starts, lroot).right, right)) return false;
      // A/(B\A)
      if (right_node && rop == ldiv && same(t, children(starts, rroot).right, left)) return false;
    }
  }
  return true;
}

bool is_reduced(const Word& w) { return is_reduced(w.tokens()); }
bool is_reduced(const FullWord& w) { return is_reduced(normalize_full(w).tokens()); }

namespace {

// Identifier of each subtree's nodal class: equal ids iff the subtrees
// normalize to the same basic word.
std::vector<std::uint32_t> nodal_ids(TokenSpan t, const std::vector<std::uint32_t>& starts) {
  constexpr std::uint32_t kFirstNodeId = 0x80000000U;
  std::vector<std::uint32_t> ids(t.size());
  std::map<std::tuple<int, std::uint32_t, std::uint32_t>, std::uint32_t> nodes;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t[i].is_leaf()) {
      ids[i] = t[i].letter_index();
      continue;
    }
    const auto [left, right] = children(starts, i);
    const OpSymbol op = t[i].op();
    const auto key = op.is_basic()
                         ? std::make_tuple(op.index(), ids[left.end - 1], ids[right.end - 1])
                         : std::make_tuple(op.opposite().index(), ids[right.end - 1], ids[left.end - 1]);
    const auto [it, inserted] =
        nodes.try_emplace(key, kFirstNodeId + static_cast<std::uint32_t>(nodes.size()));
    ids[i] = it->second;
  }
  return ids;
}

}  // namespace

bool is_reduced_triality(TokenSpan t) {
  auto& starts = starts_buffer();
  subtree_starts(t, starts);
  const OpSymbol sigma = OpSymbol::Element::sigma;
  const OpSymbol tau = OpSymbol::Element::tau;

  const bool basic = std::all_of(t.begin(), t.end(),
                                 [](Token tok) { return tok.is_leaf() || tok.op().is_basic(); });
  std::vector<std::uint32_t> ids;
  if (!basic) ids = nodal_ids(t, starts);
  const auto equivalent = [&](Range a, Range b) {
    return basic ? same(t, a, b) : ids[a.end - 1] == ids[b.end - 1];
  };

  // Node represented as (X, Y, mu^h): does Y, in either nodal form, read
  // (X, Y', mu^{tau h})?
  const auto cancels = [&](Range x, Range y, OpSymbol h) {
    const std::uint32_t yroot = y.end - 1;
    if (t[yroot].is_leaf()) return false;
    const OpSymbol k = t[yroot].op();
    const auto [y1, y2] = children(starts, yroot);
    const OpSymbol want = tau * h;
    return (k == want && equivalent(y1, x)) || (sigma * k == want && equivalent(y2, x));
  };

  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t[i].is_leaf()) continue;
    const OpSymbol g = t[i].op();
    const auto [u, v] = children(starts, i);
    if (cancels(u, v, g) || cancels(v, u, sigma * g)) return false;
  }
  return true;
}

bool is_reduced_triality(const Word& w) { return is_reduced_triality(w.tokens()); }
bool is_reduced_triality(const FullWord& w) { return is_reduced_triality(w.tokens()); }

// ---------------------------------------------------------------------------
// Nodal equivalence

namespace {

// Re-emits the subtree rooted at `root`, swapping the nodes selected by
// `swap(position)`.
template <typename SwapPredicate>
void emit_swapped(TokenSpan t, const std::vector<std::uint32_t>& starts, std::uint32_t root,
                  const SwapPredicate& swap, Tokens& out) {
  if (t[root].is_leaf()) {
    out.push_back(t[root]);
    return;
  }
  const auto [left, right] = children(starts, root);
  const OpSymbol op = t[root].op();
  if (swap(root)) {
    emit_swapped(t, starts, right.end - 1, swap, out);
    emit_swapped(t, starts, left.end - 1, swap, out);
    out.push_back(Token::op(op.opposite()));
  } else {
    emit_swapped(t, starts, left.end - 1, swap, out);
    emit_swapped(t, starts, right.end - 1, swap, out);
    out.push_back(t[root]);
  }
}

}  // namespace

std::vector<FullWord> nodal_class(const Word& w, std::int64_t max_leaves) {
  const auto n = static_cast<std::int64_t>(w.leaf_count());
  if (n > max_leaves) {
    throw ResourceGuardError("nodal class of a " + std::to_string(n) + "-leaf word exceeds the " +
                             std::to_string(max_leaves) + "-leaf limit");
  }
  const TokenSpan t = w.tokens();
  std::vector<std::uint32_t> starts;
  subtree_starts(t, starts);
  std::vector<std::uint32_t> rank(t.size(), 0);
  std::uint32_t nodes = 0;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_leaf()) rank[i] = nodes++;
  }

  std::vector<FullWord> out;
  const std::uint64_t size = std::uint64_t{1} << nodes;
  out.reserve(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    Tokens tokens;
    tokens.reserve(t.size());
    emit_swapped(
        t, starts, static_cast<std::uint32_t>(t.size() - 1),
        [&](std::uint32_t pos) { return ((mask >> rank[pos]) & 1U) != 0; }, tokens);
    out.emplace_back(std::move(tokens));
  }
  return out;
}

Word normalize_full(const FullWord& f) {
  const TokenSpan t = f.tokens();
  std::vector<std::uint32_t> starts;
  subtree_starts(t, starts);
  Tokens tokens;
  tokens.reserve(t.size());
  emit_swapped(
      t, starts, static_cast<std::uint32_t>(t.size() - 1),
      [&](std::uint32_t pos) { return !t[pos].op().is_basic(); }, tokens);
  return Word(std::move(tokens));
}

// ---------------------------------------------------------------------------
// Brute-force counts

std::uint64_t count_reduced(std::int64_t s, std::int64_t n, const EnumerationLimits& limits,
                            unsigned threads) {
  if (s < 1 || n < 1) throw DomainError("count_reduced needs s >= 1 and n >= 1");
  check_enumeration_budget(n, word_count_bound(s, n), limits);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  std::vector<std::uint64_t> partial(threads, 0);
  const auto work = [&](std::uint32_t w) {
    std::uint64_t count = 0;
    enumerate_basic_trees(
        s, n, [&](TokenSpan t) { count += is_reduced(t) ? 1 : 0; }, limits, Shard{w, threads});
    partial[w] = count;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint32_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::uint64_t count_reduced_rooted(std::int64_t s, std::int64_t a, std::int64_t b, OpSymbol root,
                                   const EnumerationLimits& limits) {
  if (s < 1 || a < 1 || b < 1) throw DomainError("count_reduced_rooted needs s, a, b >= 1");
  check_enumeration_budget(a + b, word_count_bound(s, a) * word_count_bound(s, b), limits);

  const std::vector<Word> lefts = basic_trees(s, a, limits);
  std::uint64_t count = 0;
  Tokens buf;
  enumerate_basic_trees(
      s, b,
      [&](TokenSpan right) {
        for (const Word& left : lefts) {
          buf.assign(left.tokens().begin(), left.tokens().end());
          buf.insert(buf.end(), right.begin(), right.end());
          buf.push_back(Token::op(root));
          if (is_reduced(normalize_full(FullWord(buf)))) ++count;
        }
      },
      limits);
  return count;
}

}  // namespace pcat
