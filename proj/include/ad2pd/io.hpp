#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ad2pd/graph.hpp"
#include "ad2pd/two_path.hpp"

namespace ad2pd {

/// Malformed input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Graph file: header `digraph <n>` or `graph <n>`, then `<u> <v>` per line.
/// Lines whose first non-blank character is `#` and blank lines are skipped.
Graph parse_graph(std::string_view text);
/// As parse_graph, but the header must be `digraph`.
Graph parse_digraph(std::string_view text);
std::string format_graph(const Graph& g);

/// Decomposition file: `<member_id_1> <member_id_2>` per line, resolved against g.
Decomposition parse_decomposition(const Graph& g, std::string_view text);
std::string format_decomposition(const Decomposition& x);

/// 2-path costs keyed by (low member id, high member id); absent keys cost 0.
using WeightMap = std::map<std::pair<MemberId, MemberId>, double>;

/// Weight file: `<member_id_1> <member_id_2> <cost>` per line.
WeightMap parse_weights(std::string_view text);
double weight_of(const WeightMap& w, const TwoPath& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ad2pd
