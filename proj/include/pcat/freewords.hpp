#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pcat/bigcount.hpp"
#include "pcat/ops.hpp"
#include "pcat/word.hpp"

namespace pcat {

// Exhaustive enumeration is exponential; these guard it.
struct EnumerationLimits {
  std::int64_t max_leaves = 8;
  // Largest number of candidate trees a single request may visit.
  std::uint64_t budget = 50'000'000;
};

// Throws ResourceGuardError when n exceeds the leaf limit or candidates
// exceeds the budget.
void check_enumeration_budget(std::int64_t n, const BigCount& candidates,
                              const EnumerationLimits& limits);

// Deterministic partition of the tree stream. A unit of work is one
// (shape, root operation) pair; shard w of c takes units u with u % c == w.
struct Shard {
  std::uint32_t index = 0;
  std::uint32_t count = 1;
};

// Binary tree shapes with n leaves, postfix skeleton (true = leaf), ordered
// by Segner split (left leaf count ascending, then left shape, then right).
std::vector<std::vector<bool>> tree_shapes(std::int64_t n);

using TreeVisitor = std::function<void(TokenSpan)>;

// Visits every basic parsing tree with n leaves on s generators exactly once:
// shapes in tree_shapes() order, then the root operation, then the other
// operations (odometer over nodes in postfix order), then letters (odometer
// over leaves).
// The span passed to the visitor is only valid during the call.
void enumerate_basic_trees(std::int64_t s, std::int64_t n, const TreeVisitor& visit,
                           const EnumerationLimits& limits = {}, Shard shard = {});

// Materializing convenience for small n.
std::vector<Word> basic_trees(std::int64_t s, std::int64_t n, const EnumerationLimits& limits = {});

// Scans every subtree against the six identity left-hand sides
//   A*(A\B)  A\(A*B)  (B/A)*A  (B*A)/A  A/(B\A)  (A/B)\A
// with structural equality on A. Full words are normalized first.
bool is_reduced(TokenSpan basic_tokens);
bool is_reduced(const Word& w);
bool is_reduced(const FullWord& w);

// Same predicate via triality: a node (U, V, mu^g) cancels iff, in some
// nodal representative (X, Y, mu^h) of the node and some representative
// (Y1, Y2, mu^k) of the child Y, k = tau h and Y1 = X. Accepts full words;
// there Y1 = X means nodal equivalence.
bool is_reduced_triality(TokenSpan tokens);
bool is_reduced_triality(const Word& w);
bool is_reduced_triality(const FullWord& w);

// Orbit of w under the nodal group (S2)^(n-1). Element i of the result
// swaps exactly the nodes whose postfix rank (among internal nodes) is a set
// bit of i, so element 0 is w itself.
std::vector<FullWord> nodal_class(const Word& w, std::int64_t max_leaves = 20);

// The unique basic word nodally equivalent to f.
Word normalize_full(const FullWord& f);

// Number of reduced basic trees with n leaves on s generators.
std::uint64_t count_reduced(std::int64_t s, std::int64_t n, const EnumerationLimits& limits = {},
                            unsigned threads = 0);

// Number of reduced (a+b)-leaf trees with basic children of a and b leaves
// under `root`, which may be an opposite operation.
std::uint64_t count_reduced_rooted(std::int64_t s, std::int64_t a, std::int64_t b, OpSymbol root,
                                   const EnumerationLimits& limits = {});

}  // namespace pcat
