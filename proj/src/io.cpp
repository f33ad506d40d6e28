#include "mh/io.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "mh/errors.hpp"

namespace mh::io {

namespace {

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_decimal(v);
}

BigInt integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw UsageError(std::string(what) + " must be an integer or a decimal string");
}

bool is_decimal_string(const Json& j) {
  if (!j.is_string()) return false;
  const auto& s = j.get_ref<const std::string&>();
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Json tuple_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace

Json to_json(const Point& x) { return tuple_json(x.coords()); }

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("a tuple must be a JSON array");
  std::vector<BigInt> coords;
  for (const auto& v : j) coords.push_back(integer_from_json(v, "a coordinate"));
  return Point(std::move(coords));
}

Json to_json(const Equation& eq) {
  Json lambda = Json::array();
  for (const auto& l : eq.lambda()) lambda.push_back(integer_json(l));
  return Json{{"n", eq.n()}, {"lambda", lambda}, {"a", integer_json(eq.a())}, {"b", integer_json(eq.b())}};
}

Equation equation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("lambda")) {
    throw UsageError("an equation needs at least \"n\" and \"lambda\"");
  }
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<BigInt> lambda;
  for (const auto& l : j.at("lambda")) lambda.push_back(integer_from_json(l, "lambda"));
  BigInt a = j.contains("a") ? integer_from_json(j.at("a"), "a") : BigInt(static_cast<unsigned long>(n));
  BigInt b = j.contains("b") ? integer_from_json(j.at("b"), "b") : BigInt(0);
  return Equation(n, std::move(lambda), std::move(a), std::move(b));
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (std::size_t label : w) out.push_back(label);
  return out;
}

Json to_json(const TreeNode& node) {
  Json out{{"depth", node.depth}, {"word", to_json(node.word)}};
  out["incoming"] = node.incoming ? Json(*node.incoming) : Json(nullptr);
  out["point"] = to_json(node.point);
  return out;
}

Json to_json(const UniquenessReport& report, bool include_timing) {
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) {
    counterexamples.push_back(
        {{"max", to_decimal(c.max_coordinate)}, {"tail_1", tuple_json(c.tail_1)}, {"tail_2", tuple_json(c.tail_2)}});
  }
  return Json{{"equation", to_json(report.equation)},
              {"bound", to_decimal(report.bound)},
              {"fixed_position", report.fixed_position},
              {"groups", report.groups_checked},
              {"counterexamples", counterexamples},
              {"elapsed_ms", include_timing ? report.elapsed.count() : 0}};
}

Json to_json(const FundamentalSet& set) {
  Json fundamentals = Json::array();
  for (const auto& x : set.solutions) fundamentals.push_back(to_json(x));
  Json any_rule = Json::array();
  for (const auto& x : set.any_rule) any_rule.push_back(to_json(x));
  return Json{{"equation", to_json(set.equation)},
              {"box_bound", set.box_bound},
              {"solutions_in_box", set.solutions_in_box},
              {"fundamentals", fundamentals},
              {"exhaustive_within_box", set.exhaustive_within_box},
              {"rules_differ", set.rules_differ()},
              {"any_rule", any_rule}};
}

std::string validate_uniqueness_report(const Json& j) {
  if (!j.is_object()) return "report is not an object";
  for (const char* key : {"equation", "bound", "groups", "counterexamples", "elapsed_ms"}) {
    if (!j.contains(key)) return std::string("missing key \"") + key + "\"";
  }
  const Json& eq = j.at("equation");
  if (!eq.is_object()) return "equation is not an object";
  for (const char* key : {"n", "lambda", "a", "b"}) {
    if (!eq.contains(key)) return std::string("equation is missing \"") + key + "\"";
  }
  if (!eq.at("n").is_number_unsigned()) return "equation.n is not a nonnegative integer";
  if (!eq.at("lambda").is_array() || eq.at("lambda").size() != eq.at("n").get<std::size_t>()) {
    return "equation.lambda is not an array of length n";
  }
  for (const auto& l : eq.at("lambda")) {
    if (!l.is_number_integer() && !is_decimal_string(l)) return "equation.lambda holds a non-integer";
  }
  for (const char* key : {"a", "b"}) {
    if (!eq.at(key).is_number_integer() && !is_decimal_string(eq.at(key))) {
      return std::string("equation.") + key + " is not an integer";
    }
  }
  if (!is_decimal_string(j.at("bound"))) return "bound is not a decimal string";
  if (!j.at("groups").is_number_unsigned()) return "groups is not a nonnegative integer";
  if (!j.at("elapsed_ms").is_number_integer() || j.at("elapsed_ms").get<long long>() < 0) {
    return "elapsed_ms is not a nonnegative integer";
  }
  if (!j.at("counterexamples").is_array()) return "counterexamples is not an array";
  for (const auto& c : j.at("counterexamples")) {
    if (!c.is_object() || !c.contains("max") || !c.contains("tail_1") || !c.contains("tail_2")) {
      return "counterexample entries need max, tail_1 and tail_2";
    }
    if (!is_decimal_string(c.at("max"))) return "counterexample max is not a decimal string";
    for (const char* key : {"tail_1", "tail_2"}) {
      if (!c.at(key).is_array()) return std::string("counterexample ") + key + " is not an array";
      for (const auto& v : c.at(key)) {
        if (!is_decimal_string(v)) return std::string("counterexample ") + key + " holds a non-decimal";
      }
    }
  }
  return {};
}

Point parse_point(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<BigInt> coords;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string item = body.substr(pos, comma - pos);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) throw UsageError("empty coordinate in \"" + text + "\"");
    coords.push_back(parse_bigint(item));
    pos = comma + 1;
  }
  return Point(std::move(coords));
}

std::string tree_csv_header(std::size_t n) {
  std::string out = "depth,word";
  for (std::size_t j = 1; j <= n; ++j) out += ",x_" + std::to_string(j);
  return out;
}

std::string tree_csv_row(const TreeNode& node) {
  std::string out = std::to_string(node.depth) + "," + to_string(node.word, ' ');
  for (const auto& c : node.point.coords()) out += "," + to_decimal(c);
  return out;
}

DotWriter::DotWriter(std::ostream& out, std::string name) : out_(out) {
  out_ << "digraph " << name << " {\n";
}

DotWriter::~DotWriter() { out_ << "}\n"; }

std::string DotWriter::node_id(const Word& word) {
  std::string id = "n";
  for (std::size_t label : word) id += "_" + std::to_string(label);
  return id;
}

void DotWriter::add(const TreeNode& node) {
  out_ << "  " << node_id(node.word) << " [label=\"" << node.point.to_string() << "\"];\n";
  if (node.incoming) {
    out_ << "  " << node_id(node.word.prefix(node.word.size() - 1)) << " -> " << node_id(node.word)
         << " [label=\"" << *node.incoming << "\"];\n";
  }
}

}  // namespace mh::io
