#ifndef PATHHOM_DIGRAPH_HPP
#define PATHHOM_DIGRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathhom {

using Arc = std::pair<int, int>;

// Simple digraph on vertices 0..n-1: no self-loops, no parallel arcs.
// Loops are stripped and duplicates merged at construction; values are
// immutable afterwards and safe to share across threads.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  bool has_arc(int u, int v) const;
  // In-degree plus out-degree, counting each arc once; a reciprocal pair
  // contributes 2 at each endpoint.
  int total_degree(int v) const { return degree_[v]; }
  bool empty() const { return n_ == 0; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> degree_;
};

// Bidirectional map between internal vertex indices and external labels.
struct VertexMap {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;

  const std::string& label(int v) const { return labels[v]; }
  int index(const std::string& label) const { return index_of.at(label); }
  std::size_t size() const { return labels.size(); }
};

struct LabeledDigraph {
  Digraph graph;
  VertexMap map;
  std::size_t loops_removed = 0;
  std::size_t parallel_merged = 0;
};

// Builds a digraph from labeled arcs: vertices are all arc endpoints, loops
// are dropped (counted), duplicates merged (counted).  Internal indices are
// assigned by sorting external labels, numerically when every label parses
// as an integer.
LabeledDigraph from_arcs(const std::vector<std::pair<std::string, std::string>>& arcs);

struct Component {
  Digraph graph;
  std::vector<int> to_parent;  // component vertex -> parent vertex
};

// Weakly connected components, ordered by smallest parent vertex.
std::vector<Component> weak_components(const Digraph& d);

struct PruneResult {
  Digraph graph;
  std::vector<int> to_parent;
};

// Iteratively removes total-degree-1 vertices together with their incident
// arc until none remain.  Degree-0 vertices are kept, so the weak component
// count (hence homology) is preserved.
PruneResult prune_limbs_mapped(const Digraph& d);
Digraph prune_limbs(const Digraph& d);

// Reverses every arc; involutive.
Digraph transpose(const Digraph& d);

Digraph disjoint_union(const Digraph& a, const Digraph& b);
Digraph complete_digraph(int n);

// Parse failure in an edge-list or contact file; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format: one arc per line, two whitespace-separated tokens,
// '#'-prefixed comment lines and blank lines ignored.
std::vector<std::pair<std::string, std::string>> read_edge_list(std::istream& in);
std::vector<std::pair<std::string, std::string>> read_edge_list_file(const std::string& path);

} // namespace pathhom

#endif
