#include <pathhom/motifs.hpp>

#include <stdexcept>

#include <pathhom/randgraph.hpp>

namespace pathhom {

MotifName motif_name_from_string(const std::string& name) {
  if (name == "dyad_up") return MotifName::dyad_up;
  if (name == "dyad_down") return MotifName::dyad_down;
  if (name == "torsion_cycle") return MotifName::torsion_cycle;
  if (name == "square_trivial") return MotifName::square_trivial;
  if (name == "square_hole") return MotifName::square_hole;
  if (name == "er") return MotifName::er;
  throw std::invalid_argument("unknown motif name: " + name);
}

std::string to_string(MotifName name) {
  switch (name) {
    case MotifName::dyad_up: return "dyad_up";
    case MotifName::dyad_down: return "dyad_down";
    case MotifName::torsion_cycle: return "torsion_cycle";
    case MotifName::square_trivial: return "square_trivial";
    case MotifName::square_hole: return "square_hole";
    case MotifName::er: return "er";
  }
  throw std::invalid_argument("unknown motif name");
}

Digraph dyad_up(int n) {
  if (n < 1) throw std::invalid_argument("dyad_up: parameter must be >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(2 + 2 * static_cast<std::size_t>(n));
  arcs.emplace_back(0, 1);
  arcs.emplace_back(1, 0);
  for (int i = 0; i < n; ++i) {
    arcs.emplace_back(0, 2 + i);
    arcs.emplace_back(1, 2 + i);
  }
  return Digraph(2 + n, std::move(arcs));
}

Digraph dyad_down(int n) { return transpose(dyad_up(n)); }

Digraph torsion_cycle(int n, TorsionLinks links) {
  if (n < 1) throw std::invalid_argument("torsion_cycle: parameter must be >= 1");
  const int len = 2 * n;
  const int x = len;
  const int y = len + 1;
  std::vector<Arc> arcs;
  for (int j = 0; j < len; ++j) {
    arcs.emplace_back(j, (j + 1) % len);
    const int ext = (j % 2 == 0) ? x : y;
    if (links != TorsionLinks::external_to_cycle) arcs.emplace_back(j, ext);
    if (links != TorsionLinks::cycle_to_external) arcs.emplace_back(ext, j);
  }
  return Digraph(len + 2, std::move(arcs));
}

Digraph square_trivial() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

Digraph square_hole() { return Digraph(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}); }

Digraph build(const MotifSpec& spec, std::uint64_t seed) {
  switch (spec.name) {
    case MotifName::dyad_up: return dyad_up(spec.parameter);
    case MotifName::dyad_down: return dyad_down(spec.parameter);
    case MotifName::torsion_cycle: return torsion_cycle(spec.parameter);
    case MotifName::square_trivial: return square_trivial();
    case MotifName::square_hole: return square_hole();
    case MotifName::er: {
      if (spec.parameter < 1) throw std::invalid_argument("er: parameter must be >= 1");
      std::mt19937_64 rng(seed);
      return sample_er_digraph(spec.parameter, 0.5, rng);
    }
  }
  throw std::invalid_argument("unknown motif");
}

} // namespace pathhom
