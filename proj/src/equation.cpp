#include "mh/equation.hpp"

#include <algorithm>

#include "mh/errors.hpp"

namespace mh {

// ---------------------------------------------------------------------------
// Equation

Equation::Equation(std::size_t n, std::vector<BigInt> lambda)
    : Equation(n, std::move(lambda), BigInt(static_cast<unsigned long>(n)), BigInt(0)) {}

Equation::Equation(std::size_t n, std::vector<BigInt> lambda, BigInt a, BigInt b)
    : n_(n), lambda_(std::move(lambda)), a_(std::move(a)), b_(std::move(b)) {
  if (n_ < 3) throw InvalidEquation("n must be at least 3, got " + std::to_string(n_));
  if (lambda_.size() != n_) {
    throw InvalidEquation("lambda has " + std::to_string(lambda_.size()) + " entries, expected " +
                          std::to_string(n_));
  }
  for (const auto& l : lambda_) {
    if (l < 0) throw InvalidEquation("lambda entries must be nonnegative");
  }
  if (a_ < 0 || b_ < 0) throw InvalidEquation("a and b must be nonnegative");
  k_lambda_ = a_;
  for (const auto& l : lambda_) k_lambda_ += l;
}

Equation Equation::markov_hurwitz(std::size_t n) { return Equation(n, std::vector<BigInt>(n, 0)); }

Equation Equation::from_ints(std::initializer_list<long> lambda) {
  std::vector<BigInt> values;
  for (long l : lambda) values.emplace_back(l);
  const std::size_t n = values.size();
  return Equation(n, std::move(values));
}

bool Equation::is_default_family() const { return a_ == static_cast<unsigned long>(n_) && b_ == 0; }

std::string Equation::describe() const {
  std::string out = "n=" + std::to_string(n_) + " lambda=(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ",";
    out += to_decimal(lambda_[i]);
  }
  out += ") a=" + to_decimal(a_) + " b=" + to_decimal(b_);
  return out;
}

// ---------------------------------------------------------------------------
// Point

Point::Point(std::vector<BigInt> coords) : coords_(std::move(coords)) {}

Point Point::ones(std::size_t n) { return Point(std::vector<BigInt>(n, 1)); }

Point Point::from_ints(std::initializer_list<long> coords) {
  std::vector<BigInt> values;
  for (long c : coords) values.emplace_back(c);
  return Point(std::move(values));
}

const BigInt& Point::max() const {
  return *std::max_element(coords_.begin(), coords_.end());
}

bool Point::is_all_ones() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 1; });
}

std::size_t Point::max_bit_length() const {
  std::size_t bits = 0;
  for (const auto& c : coords_) bits = std::max(bits, bit_length(c));
  return bits;
}

Point Point::with(std::size_t direction, BigInt value) const {
  Point out = *this;
  out.coords_.at(direction - 1) = std::move(value);
  return out;
}

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(coords_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Point& lhs, const Point& rhs) {
  const auto& a = lhs.coords_;
  const auto& b = rhs.coords_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// Core operations

void check_point(const Equation& eq, const Point& x) {
  if (x.size() != eq.n()) {
    throw DimensionError("tuple has " + std::to_string(x.size()) + " coordinates, equation has n=" +
                         std::to_string(eq.n()));
  }
  for (const auto& c : x.coords()) {
    if (c < 1) throw DimensionError("coordinates must be positive integers, got " + x.to_string());
  }
}

namespace {

void check_direction(const Equation& eq, std::size_t i) {
  if (i < 1 || i > eq.n()) {
    throw InvalidWord("direction " + std::to_string(i) + " is outside 1.." + std::to_string(eq.n()));
  }
}

BigInt product_except(const std::vector<BigInt>& x, std::size_t skip) {
  BigInt p = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j != skip) p *= x[j];
  }
  return p;
}

}  // namespace

BigInt residual(const Equation& eq, const Point& x) {
  if (x.size() != eq.n()) {
    throw DimensionError("tuple has " + std::to_string(x.size()) + " coordinates, equation has n=" +
                         std::to_string(eq.n()));
  }
  const auto& c = x.coords();
  const std::size_t n = c.size();

  // prefix/suffix products give every prod_{j != i} x_j in O(n) multiplications
  std::vector<BigInt> prefix(n + 1), suffix(n + 1);
  prefix[0] = 1;
  suffix[n] = 1;
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * c[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * c[i];

  BigInt lhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs += c[i] * c[i];
    if (eq.lambda()[i] != 0) lhs += eq.lambda()[i] * prefix[i] * suffix[i + 1];
  }
  return lhs - eq.k_lambda() * prefix[n] - eq.b();
}

bool is_solution(const Equation& eq, const Point& x) { return residual(eq, x) == 0; }

BigInt vieta_partner(const Equation& eq, const Point& x, std::size_t i) {
  check_direction(eq, i);
  const auto& c = x.coords();
  const std::size_t m = i - 1;
  BigInt q = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != m) q += c[j] * c[j];
  }
  if (eq.lambda()[m] != 0) q += eq.lambda()[m] * product_except(c, m);
  q -= eq.b();
  if (q <= 0) {
    throw DeadEnd("mutation in direction " + std::to_string(i) + " of " + x.to_string() +
                  " leaves the positive integers");
  }
  if (!mpz_divisible_p(q.get_mpz_t(), c[m].get_mpz_t())) {
    throw NonIntegralRoot("mutation in direction " + std::to_string(i) + " of " + x.to_string() +
                          " is not an integer");
  }
  BigInt root;
  mpz_divexact(root.get_mpz_t(), q.get_mpz_t(), c[m].get_mpz_t());
  return root;
}

Point mutate_unchecked(const Equation& eq, const Point& x, std::size_t i, const Limits& limits) {
  check_point(eq, x);
  BigInt root = vieta_partner(eq, x, i);
  if (bit_length(root) > limits.max_bits) {
    throw ResourceLimit("coordinate exceeds " + std::to_string(limits.max_bits) + " bits");
  }
  return x.with(i, std::move(root));
}

Point mutate(const Equation& eq, const Point& x, std::size_t i, const Limits& limits) {
  check_point(eq, x);
  check_direction(eq, i);
  if (!is_solution(eq, x)) throw NotASolution(x.to_string() + " does not solve " + eq.describe());
  return mutate_unchecked(eq, x, i, limits);
}

ArgMax argmax_coordinate(const Point& x) {
  const auto& c = x.coords();
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t j = 1; j < c.size(); ++j) {
    int order = cmp(c[j], c[best]);
    if (order > 0) {
      best = j;
      tied = false;
    } else if (order == 0) {
      tied = true;
    }
  }
  return {best + 1, tied && !x.is_all_ones()};
}

Descent descend_until_stuck(const Equation& eq, const Point& x, const Limits& limits) {
  check_point(eq, x);
  if (!is_solution(eq, x)) throw NotASolution(x.to_string() + " does not solve " + eq.describe());

  Descent out;
  std::vector<std::size_t> labels;
  out.chain.push_back(x);
  while (true) {
    const Point& current = out.chain.back();
    if (current.is_all_ones()) {
      out.end = DescentEnd::AllOnes;
      break;
    }
    if (labels.size() >= limits.max_steps) {
      throw ResourceLimit("descent exceeded " + std::to_string(limits.max_steps) + " steps");
    }
    const ArgMax top = argmax_coordinate(current);
    if (top.tied) ++out.ties;
    BigInt root;
    try {
      root = vieta_partner(eq, current, top.direction);
    } catch (const DeadEnd&) {
      out.end = DescentEnd::DeadEnd;
      break;
    }
    // Only the mutated coordinate changes, so the new maximum is below the
    // old one iff the root and every other coordinate are.
    Point next = current.with(top.direction, std::move(root));
    if (next.max() >= current.max()) {
      out.end = DescentEnd::NonDecreasing;
      break;
    }
    labels.push_back(top.direction);
    out.chain.push_back(std::move(next));
  }
  out.word = Word(std::move(labels));
  return out;
}

Descent descend(const Equation& eq, const Point& x, const Limits& limits) {
  Descent d = descend_until_stuck(eq, x, limits);
  if (d.end != DescentEnd::AllOnes) {
    const char* why = d.end == DescentEnd::DeadEnd ? "leaves the positive integers"
                                                   : "does not lower the maximum";
    throw NonDecreasingStep("descent stuck at " + d.terminal().to_string() +
                                ": the argmax mutation " + why,
                            d.terminal().coords());
  }
  return d;
}

std::vector<Point> apply_word(const Equation& eq, const Point& x0, const Word& word,
                              const Limits& limits) {
  check_point(eq, x0);
  word.validate(eq.n());
  if (!is_solution(eq, x0)) throw NotASolution(x0.to_string() + " does not solve " + eq.describe());
  std::vector<Point> chain;
  chain.reserve(word.size() + 1);
  chain.push_back(x0);
  for (std::size_t t = 0; t < word.size(); ++t) {
    try {
      // solutions map to solutions, so only the start needs the residual check
      chain.push_back(mutate_unchecked(eq, chain.back(), word[t], limits));
    } catch (Error& e) {
      e.set_step(t + 1);
      throw;
    }
  }
  return chain;
}

}  // namespace mh
