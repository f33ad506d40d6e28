#include "mh/conjecture.hpp"

#include <exception>
#include <map>
#include <thread>

#include "mh/errors.hpp"
#include "mh/tree.hpp"

namespace mh {

namespace {

bool sorted_with_fixed_max(const Point& x, std::size_t fixed) {
  const BigInt& top = x.at(fixed);
  const BigInt* previous = nullptr;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    if (j == fixed) continue;
    if (x.at(j) > top) return false;
    if (previous && x.at(j) > *previous) return false;
    previous = &x.at(j);
  }
  return true;
}

std::vector<BigInt> tail_of(const Point& x, std::size_t fixed) {
  std::vector<BigInt> tail;
  for (std::size_t j = 1; j <= x.size(); ++j) {
    if (j != fixed) tail.push_back(x.at(j));
  }
  return tail;
}

void check_position(const Equation& eq, std::size_t fixed) {
  if (fixed < 1 || fixed > eq.n()) {
    throw UsageError("fixed position " + std::to_string(fixed) + " is outside 1.." +
                     std::to_string(eq.n()));
  }
}

}  // namespace

UniquenessReport uniqueness_from_solutions(const Equation& eq, const BigInt& bound,
                                           std::size_t fixed_position,
                                           const std::set<Point>& solutions) {
  check_position(eq, fixed_position);
  std::map<BigInt, std::vector<std::vector<BigInt>>> groups;
  for (const auto& x : solutions) {
    if (x.max() > bound || !sorted_with_fixed_max(x, fixed_position)) continue;
    groups[x.at(fixed_position)].push_back(tail_of(x, fixed_position));
  }

  UniquenessReport report{eq, bound, fixed_position, groups.size(), {}, {}};
  for (const auto& [top, tails] : groups) {
    for (std::size_t k = 1; k < tails.size(); ++k) {
      report.counterexamples.push_back({top, tails.front(), tails[k]});
    }
  }
  return report;
}

UniquenessReport positional_uniqueness(const Equation& eq, const BigInt& bound,
                                       std::size_t fixed_position, unsigned threads) {
  check_position(eq, fixed_position);
  const auto start = std::chrono::steady_clock::now();
  UniquenessReport report =
      uniqueness_from_solutions(eq, bound, fixed_position, solutions_upto(eq, bound, threads));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

UniquenessReport check_uniqueness(const Equation& eq, const BigInt& bound, unsigned threads) {
  return positional_uniqueness(eq, bound, 1, threads);
}

bool is_fundamental(const Equation& eq, const Point& x, FundamentalRule rule) {
  check_point(eq, x);
  if (!is_solution(eq, x)) throw NotASolution(x.to_string() + " does not solve " + eq.describe());
  auto lowers_max = [&](std::size_t i) {
    try {
      return x.with(i, vieta_partner(eq, x, i)).max() < x.max();
    } catch (const DeadEnd&) {
      return false;
    }
  };
  if (rule == FundamentalRule::ArgMax) return !lowers_max(argmax_coordinate(x).direction);
  for (std::size_t i = 1; i <= eq.n(); ++i) {
    if (lowers_max(i)) return false;
  }
  return true;
}

namespace {

struct BoxPart {
  std::set<Point> terminals;
  std::set<Point> any_rule;
  std::size_t solutions = 0;
  bool exhaustive = true;
};

// Every tuple of [1, box]^n whose first coordinate is congruent to `offset`
// modulo `stride`.
void scan_box(const Equation& eq, std::size_t box, std::size_t offset, std::size_t stride,
              const Limits& limits, BoxPart& out) {
  const std::size_t n = eq.n();
  for (std::size_t first = 1 + offset; first <= box; first += stride) {
    std::vector<BigInt> coords(n, 1);
    coords[0] = static_cast<unsigned long>(first);
    while (true) {
      Point x(coords);
      if (is_solution(eq, x)) {
        ++out.solutions;
        try {
          out.terminals.insert(descend_until_stuck(eq, x, limits).terminal());
        } catch (const ResourceLimit&) {
          out.exhaustive = false;
        }
        if (is_fundamental(eq, x, FundamentalRule::Any)) out.any_rule.insert(x);
      }
      std::size_t pos = n;
      while (pos > 1 && coords[pos - 1] == static_cast<unsigned long>(box)) coords[--pos] = 1;
      if (pos == 1) break;
      ++coords[pos - 1];
    }
  }
}

}  // namespace

FundamentalSet find_fundamentals(const Equation& eq, std::size_t box_bound, unsigned threads,
                                 const Limits& limits) {
  if (box_bound < 1) throw UsageError("the box bound must be at least 1");
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), box_bound);
  std::vector<BoxPart> parts(workers);
  if (workers == 1) {
    scan_box(eq, box_bound, 0, 1, limits, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          scan_box(eq, box_bound, w, workers, limits, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  FundamentalSet out{eq, box_bound, {}, {}, 0, true};
  for (auto& part : parts) {
    out.solutions.merge(part.terminals);
    out.any_rule.merge(part.any_rule);
    out.solutions_in_box += part.solutions;
    out.exhaustive_within_box = out.exhaustive_within_box && part.exhaustive;
  }
  return out;
}

}  // namespace mh
