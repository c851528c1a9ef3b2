#ifndef NSG_ENUMERATION_HPP
#define NSG_ENUMERATION_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct EnumerationOptions {
  // Total tree nodes (all depths) a single traversal may visit.
  std::uint64_t node_budget = 100'000'000;
  unsigned workers = 1;
};

/// A node of the semigroup tree: children are obtained by removing one
/// effective generator (a minimal generator above the Frobenius number).
struct TreeNode {
  NumericalSemigroup semigroup;
  Int frobenius;
  std::vector<Int> effective_generators;

  explicit TreeNode(NumericalSemigroup s)
      : semigroup(std::move(s)), frobenius(semigroup.frobenius()) {
    for (Int g : semigroup.min_generators())
      if (g > frobenius) effective_generators.push_back(g);
  }

  /// Children in increasing removed-generator order.
  std::vector<TreeNode> children() const {
    std::vector<TreeNode> out;
    auto gaps = semigroup.gaps();
    for (Int g : effective_generators) {
      auto child_gaps = gaps;
      child_gaps.push_back(g);
      out.emplace_back(NumericalSemigroup::from_gaps(child_gaps));
    }
    return out;
  }

  /// The parent adds back the Frobenius number; absent for the root.
  std::optional<TreeNode> parent() const {
    if (frobenius < 0) return std::nullopt;
    auto gaps = semigroup.gaps();
    gaps.pop_back();
    return TreeNode(NumericalSemigroup::from_gaps(gaps));
  }
};

namespace detail {

// Traversal state for one tree node. dec[y] counts the unordered pairs
// {u, v} of members with u + y - u = y, u <= v, so y is a member iff
// dec[y] > 0 and a minimal generator iff dec[y] == 1 (only 0 + y).
// Every node of genus <= G has conductor <= 2G and multiplicity <= G + 1,
// so its minimal generators lie below 3G + 2 and a table of that size holds
// every value a descendant of genus <= G ever reads.
struct Frame {
  std::vector<std::uint8_t> dec;
  Int conductor = 0;
  Int multiplicity = 1;
  Int genus = 0;
};

inline std::size_t table_size(Int max_genus) {
  return static_cast<std::size_t>(3 * max_genus + 2);
}

inline Frame root_frame(Int max_genus) {
  Frame f;
  f.dec.resize(table_size(max_genus));
  for (std::size_t y = 0; y < f.dec.size(); ++y)
    f.dec[y] = static_cast<std::uint8_t>(y / 2 + 1);
  return f;
}

// Effective generators of `f`, increasing.
template <class F>
void for_each_effective(const Frame& f, F&& fn) {
  const Int lo = std::max<Int>(f.conductor, 1);
  const Int hi = f.conductor + f.multiplicity;
  for (Int x = lo; x <= hi; ++x)
    if (f.dec[static_cast<std::size_t>(x)] == 1) fn(x);
}

inline void make_child(const Frame& parent, Int x, Frame& child) {
  child.dec = parent.dec;
  const auto n = static_cast<Int>(parent.dec.size());
  for (Int y = x; y < n; ++y)
    if (parent.dec[static_cast<std::size_t>(y - x)] > 0)
      --child.dec[static_cast<std::size_t>(y)];
  child.conductor = x + 1;
  child.genus = parent.genus + 1;
  child.multiplicity = parent.multiplicity;
  if (x == parent.multiplicity) {
    Int m = x + 1;
    while (child.dec[static_cast<std::size_t>(m)] == 0) ++m;
    child.multiplicity = m;
  }
}

inline NumericalSemigroup materialize(const Frame& f) {
  std::vector<bool> members(static_cast<std::size_t>(f.conductor));
  for (Int i = 0; i < f.conductor; ++i)
    members[static_cast<std::size_t>(i)] = f.dec[static_cast<std::size_t>(i)] > 0;
  std::vector<Int> gens;
  for (Int x = f.multiplicity; x <= f.conductor + f.multiplicity; ++x)
    if (f.dec[static_cast<std::size_t>(x)] == 1) gens.push_back(x);
  return SemigroupAccess::make(std::move(members), std::move(gens), f.genus);
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_)
      throw ResourceLimitError("node budget of " + std::to_string(limit_) +
                               " exceeded");
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

template <class OnNode>
void walk_from(const Frame& start, Int target, Budget& budget,
               std::vector<Frame>& scratch, OnNode& on_node) {
  budget.charge();
  on_node(start);
  if (start.genus >= target) return;
  Frame& child = scratch[static_cast<std::size_t>(start.genus + 1)];
  for_each_effective(start, [&](Int x) {
    make_child(start, x, child);
    walk_from(child, target, budget, scratch, on_node);
  });
}

// Depth-first walk of the subtree below `start` down to genus `target`,
// calling on_node(frame) for every node visited (start included). `start`
// must not live in `scratch`, which holds one reusable frame per depth.
template <class OnNode>
void walk(const Frame& start, Int target, Budget& budget,
          std::vector<Frame>& scratch, OnNode&& on_node) {
  if (scratch.size() < static_cast<std::size_t>(target + 2))
    scratch.resize(static_cast<std::size_t>(target + 2));
  walk_from(start, target, budget, scratch, on_node);
}

inline void check_genus(Int g) {
  if (g < 0)
    throw Error(ErrorKind::InvalidArgument, "genus must be non-negative");
  // Keeps decomposition counts (<= table_size / 2 + 1) inside a byte.
  if (g > 80)
    throw Error(ErrorKind::InvalidArgument, "genus above 80 is not supported");
}

// Frames at genus `depth`, in traversal order. These are the independent work units for parallel folds.
inline std::vector<Frame> split_frames(Int target, Int depth, Budget& budget) {
  std::vector<Frame> units;
  std::vector<Frame> scratch;
  walk(root_frame(target), depth, budget, scratch, [&](const Frame& f) {
    if (f.genus == depth) units.push_back(f);
  });
  // Nodes at the split depth are charged again by their own walk.
  return units;
}

}  // namespace detail

/// Visits every numerical semigroup of genus exactly `g` once, depth-first,
/// children in increasing removed-generator order. Returns the visit count.
template <class Visitor>
std::uint64_t enumerate_genus(Int g, Visitor&& visitor,
                              const EnumerationOptions& opts = {}) {
  detail::check_genus(g);
  detail::Budget budget(opts.node_budget);
  std::vector<detail::Frame> scratch;
  std::uint64_t count = 0;
  detail::walk(detail::root_frame(g), g, budget, scratch,
               [&](const detail::Frame& f) {
                 if (f.genus != g) return;
                 ++count;
                 visitor(detail::materialize(f));
               });
  return count;
}

/// Parallel fold over the semigroups of genus `g`. Each work unit (a subtree
/// rooted a few levels below the root) folds into its own copy of `init`
/// through visit(acc, semigroup); unit results are then combined with
/// merge(total, unit) in traversal order, so the result does not depend on
/// the number of workers.
template <class Acc, class Visit, class Merge>
Acc fold_genus(Int g, const Acc& init, Visit visit, Merge merge,
               const EnumerationOptions& opts = {}) {
  detail::check_genus(g);
  detail::Budget budget(opts.node_budget);
  const Int depth = std::min<Int>(g, g / 3 + 1);
  const auto units = detail::split_frames(g, depth, budget);

  std::vector<Acc> partial(units.size(), init);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::vector<detail::Frame> scratch;
    try {
      for (std::size_t u = next++; u < units.size() && !failed; u = next++) {
        Acc& acc = partial[u];
        detail::walk(units[u], g, budget, scratch,
                     [&](const detail::Frame& f) {
                       if (f.genus == g) visit(acc, detail::materialize(f));
                     });
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(
                                      opts.workers,
                                      static_cast<unsigned>(units.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  Acc total = init;
  for (const Acc& p : partial) merge(total, p);
  return total;
}

/// Number of semigroups of each genus 0..g_max, from one traversal.
inline std::vector<std::uint64_t> count_by_genus(
    Int g_max, const EnumerationOptions& opts = {}) {
  detail::check_genus(g_max);
  detail::Budget budget(opts.node_budget);
  std::vector<detail::Frame> scratch;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g_max + 1), 0);
  detail::walk(detail::root_frame(g_max), g_max, budget, scratch,
               [&](const detail::Frame& f) {
                 ++counts[static_cast<std::size_t>(f.genus)];
               });
  return counts;
}

}  // namespace nsg

#endif  // NSG_ENUMERATION_HPP
