// mh: command-line frontend for the Markov-Hurwitz toolkit.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Errors are printed
// on stderr as "error[Code]: message".

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mh/asymptotics.hpp"
#include "mh/conjecture.hpp"
#include "mh/equation.hpp"
#include "mh/errors.hpp"
#include "mh/euclid.hpp"
#include "mh/io.hpp"
#include "mh/tree.hpp"
#include "mh/words.hpp"

namespace {

using namespace mh;
using mh::io::Json;

struct RunConfig {
  std::optional<std::size_t> n;
  std::string lambda;
  std::string a;
  std::string b;
  std::string point;
  std::string start;
  std::string word;
  std::optional<std::size_t> direction;
  std::optional<std::size_t> depth;
  std::string max_coord;
  std::size_t bitlen = std::size_t{1} << 20;
  std::size_t max_steps = 10'000;
  std::string format;
  int digits = 12;
  unsigned threads = 1;
  bool oracle = false;
  bool unchecked = false;
  bool timing = false;
  std::string k = "0";
  std::string ks;
  std::string k_min;
  std::string k_max;
  std::size_t fixed_position = 1;
  std::size_t box = 0;
};

// ---------------------------------------------------------------------------
// Parsing helpers

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty entry in list \"" + text + "\"");
    items.push_back(item);
  }
  return items;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  const BigInt v = parse_bigint(text);
  if (v < 0 || !v.fits_ulong_p()) throw UsageError(what + " must be a nonnegative integer, got " + text);
  return v.get_ui();
}

Equation make_equation(const RunConfig& cfg) {
  std::vector<BigInt> lambda;
  if (!cfg.lambda.empty()) {
    for (const auto& item : split_list(cfg.lambda)) lambda.push_back(parse_bigint(item));
  }
  std::size_t n = 0;
  if (cfg.n) {
    n = *cfg.n;
  } else if (!lambda.empty()) {
    n = lambda.size();
  } else if (!cfg.point.empty()) {
    n = io::parse_point(cfg.point).size();
  } else {
    throw UsageError("give --n, --lambda or --point so that the number of variables is known");
  }
  if (cfg.lambda.empty()) lambda.assign(n, 0);
  BigInt a = cfg.a.empty() ? BigInt(static_cast<unsigned long>(n)) : parse_bigint(cfg.a);
  BigInt b = cfg.b.empty() ? BigInt(0) : parse_bigint(cfg.b);
  return Equation(n, std::move(lambda), std::move(a), std::move(b));
}

Point make_point(const RunConfig&, const Equation& eq, const std::string& text) {
  if (text.empty()) return Point::ones(eq.n());
  return io::parse_point(text);
}

// inline "2,1" | cyclic:LEN[:START] | random:SEED:LEN[:WINDOW] | file:PATH
Word make_word(const RunConfig& cfg, std::size_t n) {
  const std::string& spec = cfg.word;
  if (spec.empty() || spec == "-") return Word{};
  auto fields = [&](std::size_t prefix) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(spec.substr(prefix));
    while (std::getline(in, part, ':')) parts.push_back(part);
    return parts;
  };
  Word w;
  if (spec.rfind("cyclic:", 0) == 0) {
    auto parts = fields(7);
    if (parts.empty() || parts.size() > 2) throw UsageError("expected cyclic:LEN[:START]");
    w = cyclic_word(n, parse_size(parts[0], "word length"),
                    parts.size() > 1 ? parse_size(parts[1], "start label") : 1);
  } else if (spec.rfind("random:", 0) == 0) {
    auto parts = fields(7);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("expected random:SEED:LEN[:WINDOW]");
    const BigInt seed = parse_bigint(parts[0]);
    if (seed < 0 || bit_length(seed) > 64) throw UsageError("seed must fit in 64 bits");
    std::optional<std::size_t> window = default_generic_window(n);
    if (parts.size() > 2) {
      const std::size_t wsize = parse_size(parts[2], "window");
      window = wsize == 0 ? std::nullopt : std::optional<std::size_t>(wsize);
    }
    w = random_word(n, parse_size(parts[1], "word length"),
                    static_cast<std::uint64_t>(std::stoull(to_decimal(seed))), window);
  } else if (spec.rfind("file:", 0) == 0) {
    w = read_word_file(spec.substr(5));
  } else {
    w = parse_word(spec);
  }
  w.validate(n);
  return w;
}

Limits make_limits(const RunConfig& cfg) { return {cfg.bitlen, cfg.max_steps}; }

std::string format_or(const RunConfig& cfg, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("format \"" + f + "\" is not available here (choose " + list + ")");
}

std::string fraction_or_integer(const Rational& v) {
  if (v.get_den() == 1) return to_decimal(v.get_num());
  return to_fraction(v);
}

Json rational_tuple_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction(v));
  return out;
}

Json float_tuple_json(const std::vector<double>& values, int digits) {
  Json out = Json::array();
  for (double v : values) out.push_back(format_double(v, digits));
  return out;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string word_text(const Word& w) { return w.empty() ? "-" : to_string(w, ','); }

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// ---------------------------------------------------------------------------
// Commands

void cmd_mutate(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Point x = make_point(cfg, eq, cfg.point);
  if (!cfg.direction) throw UsageError("mutate needs --direction");
  const Point y = cfg.unchecked ? mutate_unchecked(eq, x, *cfg.direction, make_limits(cfg))
                                : mutate(eq, x, *cfg.direction, make_limits(cfg));
  if (format_or(cfg, "table", {"table", "json"}) == "json") print_json(out, io::to_json(y));
  else out << y.to_string() << '\n';
}

void cmd_apply(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Point x0 = make_point(cfg, eq, cfg.point);
  const Word w = make_word(cfg, eq.n());
  const auto chain = apply_word(eq, x0, w, make_limits(cfg));
  const std::string f = format_or(cfg, "table", {"table", "json", "csv"});
  if (f == "csv") out << "step,direction" << io::tree_csv_header(eq.n()).substr(10) << '\n';
  for (std::size_t t = 0; t < chain.size(); ++t) {
    const std::string dir = t ? std::to_string(w[t - 1]) : "";
    if (f == "json") {
      Json row{{"step", t}};
      row["direction"] = t ? Json(w[t - 1]) : Json(nullptr);
      row["point"] = io::to_json(chain[t]);
      print_json(out, row);
    } else if (f == "csv") {
      out << t << ',' << dir;
      for (const auto& c : chain[t].coords()) out << ',' << to_decimal(c);
      out << '\n';
    } else {
      out << t << '\t' << (t ? dir : "-") << '\t' << chain[t].to_string() << '\n';
    }
  }
}

const char* end_name(DescentEnd end) {
  switch (end) {
    case DescentEnd::AllOnes: return "all-ones";
    case DescentEnd::NonDecreasing: return "non-decreasing";
    case DescentEnd::DeadEnd: return "dead-end";
  }
  return "unknown";
}

void cmd_descend(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Point x = make_point(cfg, eq, cfg.point);
  // For the default family anything but (1,...,1) is a fault and raises
  // NonDecreasingStep; the extended family reports where it stopped.
  const Descent d = eq.is_default_family() ? descend(eq, x, make_limits(cfg))
                                           : descend_until_stuck(eq, x, make_limits(cfg));
  if (format_or(cfg, "table", {"table", "json"}) == "json") {
    Json chain = Json::array();
    for (const auto& p : d.chain) chain.push_back(io::to_json(p));
    print_json(out, Json{{"word", io::to_json(d.word)},
                         {"chain", chain},
                         {"terminal", io::to_json(d.terminal())},
                         {"end", end_name(d.end)},
                         {"ties", d.ties}});
    return;
  }
  out << "word\t" << word_text(d.word) << '\n';
  out << "reversed\t" << word_text(d.word.reversed()) << '\n';
  for (std::size_t t = 0; t < d.chain.size(); ++t) out << t << '\t' << d.chain[t].to_string() << '\n';
  out << "end\t" << end_name(d.end) << '\n';
  out << "ties\t" << d.ties << '\n';
}

EnumerationBound make_bound(const RunConfig& cfg) {
  EnumerationBound bound;
  bound.max_depth = cfg.depth;
  if (!cfg.max_coord.empty()) bound.max_coordinate = parse_bigint(cfg.max_coord);
  bound.max_bits = cfg.bitlen;
  if (!bound.max_depth && !bound.max_coordinate) throw UsageError("give --depth or --max-coord");
  return bound;
}

void cmd_tree(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Point root = make_point(cfg, eq, cfg.point);
  const EnumerationBound bound = make_bound(cfg);
  const std::string f = format_or(cfg, "table", {"table", "json", "csv", "dot"});
  TreeStats stats;
  if (f == "dot") {
    io::DotWriter dot(out);
    stats = expand_tree(eq, root, bound, [&](const TreeNode& node) { dot.add(node); }, cfg.threads);
  } else {
    if (f == "csv") out << io::tree_csv_header(eq.n()) << '\n';
    stats = expand_tree(
        eq, root, bound,
        [&](const TreeNode& node) {
          if (f == "json") print_json(out, io::to_json(node));
          else if (f == "csv") out << io::tree_csv_row(node) << '\n';
          else out << node.depth << '\t' << word_text(node.word) << '\t' << node.point.to_string() << '\n';
        },
        cfg.threads);
  }
  std::cerr << "nodes=" << stats.emitted << " duplicates=" << stats.duplicates
            << " dead_ends=" << stats.dead_ends << '\n';
}

void cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  if (cfg.max_coord.empty()) throw UsageError("enumerate needs --max-coord");
  const BigInt bound = parse_bigint(cfg.max_coord);
  const std::string f = format_or(cfg, "table", {"table", "json", "csv"});
  const auto solutions = solutions_upto(eq, bound, cfg.threads, cfg.bitlen);
  if (cfg.oracle) {
    if (!bound.fits_ulong_p() || bound > 200) throw UsageError("--oracle scans [1, B]^n; keep B <= 200");
    const auto reference = brute_force_solutions(eq, bound.get_ui());
    if (reference != solutions) {
      throw ConsistencyError("tree enumeration found " + std::to_string(solutions.size()) +
                             " solutions, the exhaustive scan " + std::to_string(reference.size()));
    }
  }
  if (f == "csv") out << io::tree_csv_header(eq.n()).substr(11) << '\n';
  for (const auto& x : solutions) {
    if (f == "json") print_json(out, io::to_json(x));
    else if (f == "csv") out << joined([&] {
      std::vector<std::string> cells;
      for (const auto& c : x.coords()) cells.push_back(to_decimal(c));
      return cells;
    }(), ",") << '\n';
    else out << x.to_string() << '\n';
  }
  std::cerr << "solutions=" << solutions.size() << (cfg.oracle ? " oracle=agree" : "") << '\n';
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> values;
  for (const auto& item : split_list(text)) values.push_back(parse_rational(item));
  return values;
}

EuclidPoint make_euclid_point(const std::string& text, std::size_t n) {
  if (text.empty()) return EuclidPoint::ones(n);
  std::string body = text;
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  EuclidPoint p{parse_rationals(body)};
  for (const auto& c : p.coords) {
    if (c < 0) throw UsageError("Euclid coordinates must be nonnegative");
  }
  return p;
}

DeformationSchedule make_schedule(const RunConfig& cfg) {
  if (cfg.ks.empty()) return DeformationSchedule::constant(parse_rational(cfg.k));
  auto values = parse_rationals(cfg.ks);
  Rational lo = values.front(), hi = values.front();
  for (const auto& v : values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!cfg.k_min.empty()) lo = parse_rational(cfg.k_min);
  if (!cfg.k_max.empty()) hi = parse_rational(cfg.k_max);
  return DeformationSchedule::sequence(std::move(values), lo, hi);
}

std::size_t euclid_dimension(const RunConfig& cfg) {
  if (cfg.n) return *cfg.n;
  if (!cfg.point.empty()) return make_euclid_point(cfg.point, 0).size();
  if (!cfg.start.empty()) return make_euclid_point(cfg.start, 0).size();
  if (!cfg.lambda.empty()) return split_list(cfg.lambda).size();
  throw UsageError("give --n or --point so that the number of coordinates is known");
}

void cmd_euclid(const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = euclid_dimension(cfg);
  const EuclidPoint x0 = make_euclid_point(cfg.point, n);
  if (x0.size() != n) throw DimensionError("--point has the wrong number of coordinates");
  const Word w = make_word(cfg, n);
  const std::string f = format_or(cfg, "table", {"table", "json", "csv"});
  const EuclidChain chain = euclid_chain(x0, w, make_schedule(cfg));
  if (f == "csv") {
    out << "step,direction,new";
    for (std::size_t j = 1; j <= n; ++j) out << ",e_" << j;
    out << '\n';
  }
  for (std::size_t t = 0; t < chain.points.size(); ++t) {
    std::vector<std::string> cells;
    for (const auto& c : chain.points[t].coords) cells.push_back(fraction_or_integer(c));
    const std::string dir = t ? std::to_string(w[t - 1]) : "";
    const std::string fresh = t ? fraction_or_integer(chain.newly_changed[t - 1]) : "";
    if (f == "json") {
      Json row{{"step", t}};
      row["direction"] = t ? Json(w[t - 1]) : Json(nullptr);
      row["new"] = t ? Json(fresh) : Json(nullptr);
      row["point"] = cells;
      print_json(out, row);
    } else if (f == "csv") {
      out << t << ',' << dir << ',' << fresh << ',' << joined(cells, ",") << '\n';
    } else {
      out << t << '\t' << (t ? dir : "-") << "\t(" << joined(cells, ",") << ")\n";
    }
  }
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = euclid_dimension(cfg);
  const EuclidPoint x0 = make_euclid_point(cfg.point, n);
  const EuclidPoint y0 = make_euclid_point(cfg.start, n);
  const Word w = make_word(cfg, n);
  const auto chain = comparison_chain(y0, x0, w, make_schedule(cfg));
  const std::string f = format_or(cfg, "csv", {"csv", "json", "table"});
  if (f == "csv") {
    out << comparison_trace_csv(chain, w, cfg.digits);
    return;
  }
  for (std::size_t t = 0; t < chain.tuples.size(); ++t) {
    const Rational len = total_interval(chain.tuples[t]).length();
    if (f == "json") {
      Json row{{"step", t}};
      row["direction"] = t ? Json(w[t - 1]) : Json(nullptr);
      row["k"] = t ? Json(to_fraction(chain.k[t - 1])) : Json(nullptr);
      row["l"] = rational_tuple_json(chain.tuples[t].values);
      row["interval"] = to_fraction(len);
      row["interval_decimal"] = format_double(to_double(len), cfg.digits);
      print_json(out, row);
    } else {
      std::vector<std::string> cells;
      for (const auto& v : chain.tuples[t].values) cells.push_back(format_double(to_double(v), cfg.digits));
      out << t << '\t' << (t ? std::to_string(w[t - 1]) : "-") << "\t(" << joined(cells, ",") << ")\t"
          << format_double(to_double(len), cfg.digits) << '\n';
    }
  }
}

void cmd_ratio(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Point start = make_point(cfg, eq, cfg.point);
  const Word w = make_word(cfg, eq.n());
  const RatioSequence seq = ratio_sequence(eq, w, start, make_limits(cfg));
  const std::string f = format_or(cfg, "table", {"table", "json", "csv"});
  if (!seq.from_root) std::cerr << "note: start is not (1,...,1); monotonicity is not expected\n";
  if (f == "csv") out << "t,direction,k,k_decimal,gap,gap_decimal\n";
  const Rational k_lambda(seq.k_lambda);
  for (std::size_t t = 0; t < seq.values.size(); ++t) {
    const Rational& k = seq.values[t];
    const Rational gap = k_lambda - k;
    const std::string kd = format_double(to_double(k), cfg.digits);
    const std::string gd = format_double(to_double(gap), cfg.digits);
    if (f == "json") {
      print_json(out, Json{{"t", t + 1}, {"direction", w[t]}, {"k", to_fraction(k)}, {"k_decimal", kd},
                           {"gap", to_fraction(gap)}, {"gap_decimal", gd}});
    } else if (f == "csv") {
      out << t + 1 << ',' << w[t] << ',' << to_fraction(k) << ',' << kd << ',' << to_fraction(gap) << ','
          << gd << '\n';
    } else {
      out << t + 1 << '\t' << w[t] << '\t' << kd << '\t' << gd << '\n';
    }
  }
}

void cmd_qestimate(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Word w = make_word(cfg, eq.n());
  const std::size_t depth = cfg.depth.value_or(w.size());
  const QEstimate q = q_estimate(eq, w, depth, make_limits(cfg));
  if (!q.generic) {
    std::cerr << "warning: the word prefix misses a direction in some window of "
              << default_generic_window(eq.n()) << '\n';
  }
  const std::string f = format_or(cfg, "table", {"table", "json"});
  if (f == "json") {
    print_json(out, Json{{"depth", q.depth},
                         {"quotients", float_tuple_json(q.per_coordinate, cfg.digits)},
                         {"spread", format_double(q.spread, cfg.digits)},
                         {"q_mid", format_double(q.q_mid, cfg.digits)},
                         {"generic", q.generic}});
    return;
  }
  std::vector<std::string> cells;
  for (double v : q.per_coordinate) cells.push_back(format_double(v, cfg.digits));
  out << "depth\t" << q.depth << '\n';
  out << "quotients\t(" << joined(cells, ",") << ")\n";
  out << "spread\t" << format_double(q.spread, cfg.digits) << '\n';
  out << "q_mid\t" << format_double(q.q_mid, cfg.digits) << '\n';
}

void cmd_report(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  const Word w = make_word(cfg, eq.n());
  const std::size_t depth = cfg.depth.value_or(w.size());
  const auto rows = convergence_report(eq, w, depth, make_limits(cfg));
  const std::string f = format_or(cfg, "table", {"table", "json", "csv"});
  if (f == "csv") out << "t,direction,k,k_decimal,gap,gap_decimal,interval,spread\n";
  if (f == "table") out << "t\tdirection\tk\tgap\tinterval\tspread\n";
  for (const auto& r : rows) {
    const std::string kd = format_double(to_double(r.k), cfg.digits);
    const std::string gd = format_double(to_double(r.gap), cfg.digits);
    const std::string iv = format_double(r.interval, cfg.digits);
    const std::string sp = format_double(r.spread, cfg.digits);
    if (f == "json") {
      print_json(out, Json{{"t", r.t}, {"direction", r.direction}, {"k", to_fraction(r.k)}, {"k_decimal", kd},
                           {"gap", to_fraction(r.gap)}, {"gap_decimal", gd}, {"interval", iv}, {"spread", sp}});
    } else if (f == "csv") {
      out << r.t << ',' << r.direction << ',' << to_fraction(r.k) << ',' << kd << ',' << to_fraction(r.gap)
          << ',' << gd << ',' << iv << ',' << sp << '\n';
    } else {
      out << r.t << '\t' << r.direction << '\t' << kd << '\t' << gd << '\t' << iv << '\t' << sp << '\n';
    }
  }
}

void cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  if (cfg.max_coord.empty()) throw UsageError("conjecture needs --max-coord");
  const BigInt bound = parse_bigint(cfg.max_coord);
  UniquenessReport report = positional_uniqueness(eq, bound, cfg.fixed_position, cfg.threads);
  if (cfg.oracle) {
    if (!bound.fits_ulong_p() || bound > 200) throw UsageError("--oracle scans [1, B]^n; keep B <= 200");
    const auto reference = uniqueness_from_solutions(eq, bound, cfg.fixed_position,
                                                     brute_force_solutions(eq, bound.get_ui()));
    if (io::to_json(reference, false) != io::to_json(report, false)) {
      throw ConsistencyError("uniqueness report differs from the exhaustive scan");
    }
  }
  // every reported pair is re-verified before it is printed
  for (const auto& c : report.counterexamples) {
    for (const auto* tail : {&c.tail_1, &c.tail_2}) {
      std::vector<BigInt> coords = *tail;
      coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(cfg.fixed_position - 1), c.max_coordinate);
      if (!is_solution(eq, Point(coords))) throw ConsistencyError("counterexample is not a solution");
    }
  }
  const std::string f = format_or(cfg, "json", {"json", "table"});
  if (f == "json") {
    out << io::to_json(report, cfg.timing).dump() << '\n';
    return;
  }
  out << "equation\t" << eq.describe() << '\n';
  out << "bound\t" << to_decimal(bound) << '\n';
  out << "fixed_position\t" << report.fixed_position << '\n';
  out << "groups\t" << report.groups_checked << '\n';
  out << "counterexamples\t" << report.counterexamples.size() << '\n';
  for (const auto& c : report.counterexamples) {
    std::vector<std::string> t1, t2;
    for (const auto& v : c.tail_1) t1.push_back(to_decimal(v));
    for (const auto& v : c.tail_2) t2.push_back(to_decimal(v));
    out << to_decimal(c.max_coordinate) << "\t(" << joined(t1, ",") << ")\t(" << joined(t2, ",") << ")\n";
  }
  if (cfg.timing) out << "elapsed_ms\t" << report.elapsed.count() << '\n';
}

void cmd_fundamentals(const RunConfig& cfg, std::ostream& out) {
  const Equation eq = make_equation(cfg);
  if (cfg.box == 0) throw UsageError("fundamentals needs --box");
  const FundamentalSet set = find_fundamentals(eq, cfg.box, cfg.threads, make_limits(cfg));
  const std::string f = format_or(cfg, "json", {"json", "table"});
  if (f == "json") {
    out << io::to_json(set).dump() << '\n';
    return;
  }
  out << "equation\t" << eq.describe() << '\n';
  out << "box\t" << set.box_bound << '\n';
  out << "solutions_in_box\t" << set.solutions_in_box << '\n';
  out << "exhaustive_within_box\t" << (set.exhaustive_within_box ? "true" : "false") << '\n';
  for (const auto& x : set.solutions) out << "fundamental\t" << x.to_string() << '\n';
  if (set.rules_differ()) {
    for (const auto& x : set.any_rule) out << "any_rule\t" << x.to_string() << '\n';
  }
}

// ---------------------------------------------------------------------------
// Config file and argument plumbing

// Reads key=value lines (# comments allowed) and turns them into flags that
// are placed before the command-line flags, so the command line wins.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    std::replace(key.begin(), key.end(), '_', '-');
    if (value == "true") {
      tokens.push_back("--" + key);
    } else if (value != "false") {
      tokens.push_back("--" + key + "=" + value);
    }
  }
  return tokens;
}

std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;
  const auto extra = config_tokens(*path);
  const std::size_t at = (!args.empty() && args[0].rfind('-', 0) != 0) ? 1 : 0;
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
  return args;
}

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--n", cfg.n, "number of variables (>= 3)");
  sub.add_option("--lambda", cfg.lambda, "comma-separated lambda_1..lambda_n (default all zero)");
  sub.add_option("--a", cfg.a, "product coefficient offset (default n)");
  sub.add_option("--b", cfg.b, "constant offset (default 0)");
  sub.add_option("--format", cfg.format, "json | csv | dot | table");
  sub.add_option("--digits", cfg.digits, "significant digits for floats")->check(CLI::Range(1, 40));
  sub.add_option("--bitlen", cfg.bitlen, "maximum bit length of a coordinate");
  sub.add_option("--max-steps", cfg.max_steps, "maximum descent length");
  sub.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

void add_word(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--word", cfg.word, "labels \"2,1\", cyclic:LEN[:START], random:SEED:LEN[:WINDOW] or file:PATH");
}

void add_deformation(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--k", cfg.k, "constant deformation parameter (exact rational)");
  sub.add_option("--ks", cfg.ks, "comma-separated per-step parameters");
  sub.add_option("--k-min", cfg.k_min, "declared lower bound of --ks");
  sub.add_option("--k-max", cfg.k_max, "declared upper bound of --ks");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  RunConfig cfg;
  CLI::App app{"Generalized Markov-Hurwitz equations, mutation trees and Euclid dynamics"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  using Handler = void (*)(const RunConfig&, std::ostream&);
  std::map<std::string, Handler> handlers;
  auto command = [&](const char* name, const char* about, Handler h) {
    CLI::App* sub = app.add_subcommand(name, about);
    add_common(*sub, cfg);
    handlers[name] = h;
    return sub;
  };

  auto* mutate_cmd = command("mutate", "one Vieta mutation", cmd_mutate);
  mutate_cmd->add_option("--point", cfg.point, "solution tuple, e.g. 1,1,1,1");
  mutate_cmd->add_option("--direction,-i", cfg.direction, "direction 1..n")->required();
  mutate_cmd->add_flag("--unchecked", cfg.unchecked, "skip the solution check");

  auto* apply_cmd = command("apply", "mutation chain along a word", cmd_apply);
  apply_cmd->add_option("--point", cfg.point, "start tuple (default all ones)");
  add_word(*apply_cmd, cfg);

  auto* descend_cmd = command("descend", "descent by the largest coordinate", cmd_descend);
  descend_cmd->add_option("--point", cfg.point, "solution tuple")->required();

  auto* tree_cmd = command("tree", "breadth-first mutation tree", cmd_tree);
  tree_cmd->add_option("--point", cfg.point, "root (default all ones)");
  tree_cmd->add_option("--depth", cfg.depth, "maximum depth");
  tree_cmd->add_option("--max-coord", cfg.max_coord, "maximum coordinate");

  auto* enum_cmd = command("enumerate", "all solutions with max coordinate <= bound", cmd_enumerate);
  enum_cmd->add_option("--max-coord", cfg.max_coord, "bound B")->required();
  enum_cmd->add_flag("--oracle", cfg.oracle, "cross-check against an exhaustive scan");

  auto* euclid_cmd = command("euclid", "k-deformed Euclid chain", cmd_euclid);
  euclid_cmd->add_option("--point", cfg.point, "start point (default all ones)");
  add_word(*euclid_cmd, cfg);
  add_deformation(*euclid_cmd, cfg);

  auto* compare_cmd = command("compare", "comparison tuples of a deformed chain against a classical one", cmd_compare);
  compare_cmd->add_option("--start", cfg.start, "start of the deformed chain (default all ones)");
  compare_cmd->add_option("--point", cfg.point, "start of the classical chain (default all ones)");
  add_word(*compare_cmd, cfg);
  add_deformation(*compare_cmd, cfg);

  auto* ratio_cmd = command("ratio", "ratio numbers along a word", cmd_ratio);
  ratio_cmd->add_option("--point", cfg.point, "start tuple (default all ones)");
  add_word(*ratio_cmd, cfg);

  auto* q_cmd = command("qestimate", "log quotients against the classical Euclid chain", cmd_qestimate);
  add_word(*q_cmd, cfg);
  q_cmd->add_option("--depth", cfg.depth, "depth (default word length)");

  auto* report_cmd = command("report", "per-step convergence diagnostics", cmd_report);
  add_word(*report_cmd, cfg);
  report_cmd->add_option("--depth", cfg.depth, "depth (default word length)");

  auto* conj_cmd = command("conjecture", "bounded uniqueness check", cmd_conjecture);
  conj_cmd->add_option("--max-coord,--bound", cfg.max_coord, "bound B")->required();
  conj_cmd->add_option("--fixed-position", cfg.fixed_position, "position of the fixed maximal coordinate");
  conj_cmd->add_flag("--oracle", cfg.oracle, "cross-check against an exhaustive scan");
  conj_cmd->add_flag("--timing", cfg.timing, "report elapsed time");

  auto* fund_cmd = command("fundamentals", "fundamental solutions inside a box", cmd_fundamentals);
  fund_cmd->add_option("--box", cfg.box, "coordinate bound of the scan")->required();

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[UsageError]: " << e.what() << '\n';
    return 2;
  } catch (const mh::Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.message() << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::ostringstream out;
  try {
    handlers.at(name)(cfg, out);
  } catch (const mh::UsageError& e) {
    std::cerr << "error[UsageError]: " << e.message() << '\n';
    return 2;
  } catch (const mh::Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.message();
    if (e.step()) std::cerr << " (at step " << *e.step() << ")";
    std::cerr << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error[UsageError]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[InternalError]: " << e.what() << '\n';
    return 1;
  }
  std::cout << out.str();
  std::cout.flush();
  return 0;
}
