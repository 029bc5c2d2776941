#include <pathhom/digraph.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace pathhom {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : n_(vertex_count) {
  for (const Arc& a : arcs)
    if (a.first < 0 || a.first >= n_ || a.second < 0 || a.second >= n_)
      throw std::out_of_range("arc endpoint out of range");
  std::erase_if(arcs, [](const Arc& a) { return a.first == a.second; });
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  out_.resize(n_);
  degree_.assign(n_, 0);
  for (const Arc& a : arcs_) {
    out_[a.first].push_back(a.second);
    ++degree_[a.first];
    ++degree_[a.second];
  }
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_) return false;
  const auto& nb = out_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

struct LabelKey {
  bool numeric;
  long long value;
  const std::string* text;
};

LabelKey label_key(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  const bool numeric = ec == std::errc() && ptr == s.data() + s.size();
  return {numeric, v, &s};
}

// Numeric labels sort numerically and before non-numeric ones; ties and
// non-numeric labels fall back to string order.
bool label_less(const std::string& a, const std::string& b) {
  const LabelKey ka = label_key(a), kb = label_key(b);
  if (ka.numeric != kb.numeric) return ka.numeric;
  if (ka.numeric && ka.value != kb.value) return ka.value < kb.value;
  return a < b;
}

}  // namespace

LabeledDigraph from_arcs(const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::vector<std::string> labels;
  labels.reserve(arcs.size() * 2);
  for (const auto& [src, dst] : arcs) {
    labels.push_back(src);
    labels.push_back(dst);
  }
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  LabeledDigraph out;
  out.map.labels = std::move(labels);
  for (int i = 0; i < static_cast<int>(out.map.labels.size()); ++i)
    out.map.index_of.emplace(out.map.labels[i], i);

  std::vector<Arc> internal;
  internal.reserve(arcs.size());
  for (const auto& [src, dst] : arcs) {
    const int u = out.map.index_of.at(src);
    const int v = out.map.index_of.at(dst);
    if (u == v) {
      ++out.loops_removed;
      continue;
    }
    internal.emplace_back(u, v);
  }
  std::sort(internal.begin(), internal.end());
  const auto last = std::unique(internal.begin(), internal.end());
  out.parallel_merged = static_cast<std::size_t>(internal.end() - last);
  internal.erase(last, internal.end());
  out.graph = Digraph(static_cast<int>(out.map.labels.size()), std::move(internal));
  return out;
}

namespace {

Digraph subgraph(const Digraph& d, const std::vector<int>& vertices,
                 const std::vector<int>& parent_to_local) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const int u = parent_to_local[a.first];
    const int v = parent_to_local[a.second];
    if (u >= 0 && v >= 0) arcs.emplace_back(u, v);
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

}  // namespace

std::vector<Component> weak_components(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<std::vector<int>> undirected(n);
  for (const Arc& a : d.arcs()) {
    undirected[a.first].push_back(a.second);
    undirected[a.second].push_back(a.first);
  }
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : undirected[v])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }

  // Scanning vertices in order gives components ordered by smallest member.
  std::vector<Component> out(count);
  std::vector<int> parent_to_local(n, -1);
  for (int v = 0; v < n; ++v) {
    parent_to_local[v] = static_cast<int>(out[comp[v]].to_parent.size());
    out[comp[v]].to_parent.push_back(v);
  }
  for (int c = 0; c < count; ++c) {
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(out[c].to_parent.size()); ++i)
      local[out[c].to_parent[i]] = i;
    out[c].graph = subgraph(d, out[c].to_parent, local);
  }
  return out;
}

PruneResult prune_limbs_mapped(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> undirected(n);
  for (const Arc& a : d.arcs()) {
    ++degree[a.first];
    ++degree[a.second];
    undirected[a.first].push_back(a.second);
    undirected[a.second].push_back(a.first);
  }
  std::vector<bool> removed(n, false);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (removed[v] || degree[v] != 1) continue;
    removed[v] = true;
    degree[v] = 0;
    for (int w : undirected[v]) {
      if (removed[w]) continue;
      --degree[w];
      if (degree[w] == 1) queue.push_back(w);
    }
  }

  PruneResult out;
  std::vector<int> local(n, -1);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      local[v] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (local[a.first] >= 0 && local[a.second] >= 0)
      arcs.emplace_back(local[a.first], local[a.second]);
  out.graph = Digraph(static_cast<int>(out.to_parent.size()), std::move(arcs));
  return out;
}

Digraph prune_limbs(const Digraph& d) { return prune_limbs_mapped(d).graph; }

Digraph transpose(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.emplace_back(a.second, a.first);
  return Digraph(d.vertex_count(), std::move(arcs));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Arc> arcs(a.arcs());
  const int offset = a.vertex_count();
  for (const Arc& arc : b.arcs()) arcs.emplace_back(arc.first + offset, arc.second + offset);
  return Digraph(a.vertex_count() + b.vertex_count(), std::move(arcs));
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph(n, std::move(arcs));
}

std::vector<std::pair<std::string, std::string>> read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> arcs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string src, dst, extra;
    if (!(tokens >> src)) continue;  // blank line
    if (src[0] == '#') continue;
    if (!(tokens >> dst)) throw ParseError(lineno, "expected two tokens");
    if (tokens >> extra) throw ParseError(lineno, "expected exactly two tokens");
    arcs.emplace_back(std::move(src), std::move(dst));
  }
  return arcs;
}

std::vector<std::pair<std::string, std::string>> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

} // namespace pathhom
