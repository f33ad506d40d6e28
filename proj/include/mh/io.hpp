// Wire formats: JSON for tuples, equations, tree nodes and reports; CSV and
// DOT for tree exports. Big integers are always decimal strings.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mh/asymptotics.hpp"
#include "mh/conjecture.hpp"
#include "mh/equation.hpp"
#include "mh/tree.hpp"

namespace mh::io {

using Json = nlohmann::ordered_json;

Json to_json(const Point& x);
Point point_from_json(const Json& j);

Json to_json(const Equation& eq);
Equation equation_from_json(const Json& j);

Json to_json(const Word& w);
Json to_json(const TreeNode& node);

/// `elapsed_ms` is written as given, so callers choose whether timings
/// appear in otherwise deterministic output.
Json to_json(const UniquenessReport& report, bool include_timing);
Json to_json(const FundamentalSet& set);

/// Structural check of a uniqueness report against its schema; returns an
/// empty string when valid, otherwise the first problem found.
std::string validate_uniqueness_report(const Json& j);

/// "1,4,1,1" or "(1,4,1,1)" with arbitrary-size decimals.
Point parse_point(const std::string& text);

std::string tree_csv_header(std::size_t n);
std::string tree_csv_row(const TreeNode& node);

/// Streaming DOT writer: one graph per expansion, node labels are tuples and
/// edge labels are directions.
class DotWriter {
 public:
  explicit DotWriter(std::ostream& out, std::string name = "tree");
  ~DotWriter();
  DotWriter(const DotWriter&) = delete;
  DotWriter& operator=(const DotWriter&) = delete;

  void add(const TreeNode& node);

 private:
  static std::string node_id(const Word& word);

  std::ostream& out_;
};

}  // namespace mh::io
