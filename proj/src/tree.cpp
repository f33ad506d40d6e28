#include "mh/tree.hpp"

#include <exception>
#include <thread>

#include "mh/errors.hpp"

namespace mh {

EnumerationBound EnumerationBound::depth(std::size_t d) {
  EnumerationBound b;
  b.max_depth = d;
  return b;
}

EnumerationBound EnumerationBound::coordinate(BigInt bound) {
  EnumerationBound b;
  b.max_coordinate = std::move(bound);
  return b;
}

namespace {

struct Expansion {
  std::vector<TreeNode> children;
  std::size_t dead_ends = 0;
};

void expand_node(const Equation& eq, const TreeNode& node, const EnumerationBound& bound,
                 Expansion& out) {
  for (std::size_t label = 1; label <= eq.n(); ++label) {
    if (node.incoming && *node.incoming == label) continue;
    BigInt root;
    try {
      root = vieta_partner(eq, node.point, label);
    } catch (DeadEnd&) {
      ++out.dead_ends;
      continue;
    } catch (Error& e) {
      e.set_step(node.depth + 1);
      throw;
    }
    if (bound.max_coordinate && root > *bound.max_coordinate) continue;
    if (bit_length(root) > bound.max_bits) {
      ResourceLimit e("coordinate exceeds " + std::to_string(bound.max_bits) + " bits");
      e.set_step(node.depth + 1);
      throw e;
    }
    // The other coordinates are already within the bound (the parent was
    // emitted), so the new root alone decides whether the child is kept.
    out.children.push_back(
        {node.point.with(label, std::move(root)), node.word.appended(label), node.depth + 1, label});
  }
}

Expansion expand_range(const Equation& eq, const std::vector<TreeNode>& level, std::size_t begin,
                       std::size_t end, const EnumerationBound& bound) {
  Expansion out;
  for (std::size_t i = begin; i < end; ++i) expand_node(eq, level[i], bound, out);
  return out;
}

Expansion expand_level(const Equation& eq, const std::vector<TreeNode>& level,
                       const EnumerationBound& bound, unsigned threads) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), level.size());
  if (workers <= 1 || level.size() < 64) return expand_range(eq, level, 0, level.size(), bound);

  std::vector<Expansion> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (level.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(level.size(), w * chunk);
    const std::size_t end = std::min(level.size(), begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        parts[w] = expand_range(eq, level, begin, end, bound);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Expansion merged;
  for (auto& part : parts) {
    merged.dead_ends += part.dead_ends;
    for (auto& child : part.children) merged.children.push_back(std::move(child));
  }
  return merged;
}

}  // namespace

TreeStats expand_tree(const Equation& eq, const Point& root, const EnumerationBound& bound,
                      const NodeSink& sink, unsigned threads) {
  if (!bound.max_depth && !bound.max_coordinate) {
    throw UsageError("tree expansion needs a depth or a coordinate bound");
  }
  check_point(eq, root);
  if (!is_solution(eq, root)) throw NotASolution(root.to_string() + " does not solve " + eq.describe());

  TreeStats stats;
  if (bound.max_coordinate && root.max() > *bound.max_coordinate) return stats;
  if (root.max_bit_length() > bound.max_bits) {
    throw ResourceLimit("root exceeds " + std::to_string(bound.max_bits) + " bits");
  }

  std::set<Point> seen;
  auto emit = [&](const TreeNode& node) {
    if (!seen.insert(node.point).second) ++stats.duplicates;
    ++stats.emitted;
    sink(node);
  };

  std::vector<TreeNode> level{{root, Word{}, 0, std::nullopt}};
  emit(level.front());
  while (!level.empty()) {
    if (bound.max_depth && level.front().depth >= *bound.max_depth) break;
    Expansion next = expand_level(eq, level, bound, threads);
    stats.dead_ends += next.dead_ends;
    for (const auto& node : next.children) emit(node);
    level = std::move(next.children);
  }
  return stats;
}

std::vector<TreeNode> expand_tree(const Equation& eq, const Point& root,
                                  const EnumerationBound& bound, unsigned threads) {
  std::vector<TreeNode> out;
  expand_tree(eq, root, bound, [&](const TreeNode& node) { out.push_back(node); }, threads);
  return out;
}

std::set<Point> solutions_upto(const Equation& eq, const BigInt& bound, unsigned threads,
                               std::size_t max_bits) {
  if (!eq.is_default_family()) {
    throw UnsupportedEquation("bounded enumeration needs a = n and b = 0, got " + eq.describe());
  }
  if (bound < 1) throw UsageError("the coordinate bound must be at least 1");
  EnumerationBound limit = EnumerationBound::coordinate(bound);
  limit.max_bits = max_bits;
  std::set<Point> out;
  expand_tree(eq, Point::ones(eq.n()), limit, [&](const TreeNode& node) { out.insert(node.point); },
              threads);
  return out;
}

std::set<Point> brute_force_solutions(const Equation& eq, std::size_t bound) {
  std::set<Point> out;
  if (bound == 0) return out;
  std::vector<BigInt> coords(eq.n(), 1);
  while (true) {
    Point x(coords);
    if (is_solution(eq, x)) out.insert(std::move(x));
    std::size_t pos = eq.n();
    while (pos > 0 && coords[pos - 1] == static_cast<unsigned long>(bound)) coords[--pos] = 1;
    if (pos == 0) break;
    ++coords[pos - 1];
  }
  return out;
}

}  // namespace mh
