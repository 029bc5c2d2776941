// pathhom: path homology of digraphs, motif presets, isomorphism censuses,
// random-digraph Betti distributions, and temporal-network window analysis.
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <pathhom/census.hpp>
#include <pathhom/homology.hpp>
#include <pathhom/motifs.hpp>
#include <pathhom/parallel.hpp>
#include <pathhom/randgraph.hpp>
#include <pathhom/temporal.hpp>

using json = nlohmann::ordered_json;
using namespace pathhom;

namespace {

struct CommonFlags {
  int max_dim = 2;
  std::string ring = "q";
  bool reps = false;
  unsigned threads = default_thread_count();
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;

  Ring ring_value() const { return ring == "z" ? Ring::integer : Ring::rational; }
};

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json label_to_json(const std::string& label) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec == std::errc() && ptr == label.data() + label.size()) return value;
  return label;
}

json chain_to_json(const Chain& chain, const VertexMap* labels) {
  json terms = json::array();
  for (const ChainTerm& term : chain) {
    json path = json::array();
    for (const int v : term.path)
      path.push_back(labels ? label_to_json(labels->label(v)) : json(v));
    terms.push_back({{"path", path}, {"coef", integer_to_json(term.coefficient)}});
  }
  return terms;
}

json summary_to_json(const HomologySummary& s, const VertexMap* labels) {
  json out;
  out["betti"] = s.betti;
  out["reduced_betti"] = s.reduced_betti;
  json torsion = json::object();
  for (const auto& [dim, factors] : s.torsion) {
    json list = json::array();
    for (const Integer& f : factors) list.push_back(integer_to_json(f));
    torsion[std::to_string(dim)] = list;
  }
  out["torsion"] = torsion;
  if (!s.representatives.empty()) {
    json reps = json::object();
    for (const auto& [dim, chains] : s.representatives) {
      json list = json::array();
      for (const Chain& chain : chains) list.push_back(chain_to_json(chain, labels));
      reps[std::to_string(dim)] = list;
    }
    out["representatives"] = reps;
  }
  return out;
}

std::string summary_to_csv(const HomologySummary& s) {
  std::ostringstream out;
  out << "dimension,betti,reduced_betti\n";
  for (int p = 0; p <= s.max_dim; ++p)
    out << p << "," << s.betti[p] << "," << s.reduced_betti[p] << "\n";
  return out.str();
}

std::string summary_to_text(const HomologySummary& s) {
  std::ostringstream out;
  out << "betti:";
  for (const auto b : s.betti) out << " " << b;
  out << "\nreduced_betti:";
  for (const auto b : s.reduced_betti) out << " " << b;
  out << "\n";
  for (const auto& [dim, factors] : s.torsion) {
    out << "torsion[" << dim << "]:";
    for (const Integer& f : factors) out << " " << f;
    out << "\n";
  }
  return out.str();
}

class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json(const CommonFlags& flags, const json& value) {
  OutputStream out(flags.output);
  out.get() << value.dump(2) << "\n";
}

std::string format_frequency(std::int64_t count, std::int64_t trials) {
  std::ostringstream out;
  out.precision(10);
  out << static_cast<double>(count) / static_cast<double>(trials);
  return out.str();
}

int run_compute(const CommonFlags& flags, const std::string& path, bool dump_complex) {
  const LabeledDigraph input = from_arcs(read_edge_list_file(path));
  if (input.loops_removed > 0)
    std::cerr << "note: removed " << input.loops_removed << " self-loop(s)\n";
  HomologyOptions opt;
  opt.max_dim = flags.max_dim;
  opt.ring = flags.ring_value();
  opt.representatives = flags.reps;
  const HomologySummary summary = homology(input.graph, opt);

  if (flags.format == "text") {
    OutputStream out(flags.output);
    out.get() << "vertices: " << input.graph.vertex_count()
              << "\narcs: " << input.graph.arc_count() << "\n"
              << summary_to_text(summary);
    return 0;
  }
  if (flags.format == "csv") {
    OutputStream out(flags.output);
    out.get() << summary_to_csv(summary);
    return 0;
  }
  json doc = summary_to_json(summary, &input.map);
  if (dump_complex) {
    const PathComplex complex = build_path_complex(input.graph, flags.max_dim + 1);
    json paths = json::object();
    for (int p = 0; p <= complex.p_max(); ++p) {
      json list = json::array();
      for (const Path& path : complex.paths.dims[p]) {
        json tuple = json::array();
        for (const int v : path) tuple.push_back(label_to_json(input.map.label(v)));
        list.push_back(tuple);
      }
      paths[std::to_string(p)] = list;
    }
    doc["allowed_paths"] = paths;
    json dims = json::array();
    for (int p = 0; p <= complex.p_max(); ++p) dims.push_back(complex.omega_dim(p));
    doc["omega_dims"] = dims;
  }
  emit_json(flags, doc);
  return 0;
}

int run_motif(const CommonFlags& flags, const std::string& name, int parameter) {
  const MotifSpec spec{motif_name_from_string(name), parameter};
  const Digraph d = build(spec, flags.seed);
  HomologyOptions opt;
  opt.max_dim = flags.max_dim;
  opt.ring = flags.ring_value();
  opt.representatives = flags.reps;
  const HomologySummary summary = homology(d, opt);

  if (flags.format == "text") {
    OutputStream out(flags.output);
    for (const Arc& a : d.arcs()) out.get() << a.first << " " << a.second << "\n";
    out.get() << summary_to_text(summary);
    return 0;
  }
  if (flags.format == "csv") {
    OutputStream out(flags.output);
    out.get() << summary_to_csv(summary);
    return 0;
  }
  json doc;
  doc["motif"] = to_string(spec.name);
  doc["parameter"] = spec.parameter;
  doc["vertices"] = d.vertex_count();
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.first, a.second});
  doc["arcs"] = arcs;
  doc.update(summary_to_json(summary, nullptr));
  emit_json(flags, doc);
  return 0;
}

std::string arcs_as_string(const Digraph& d) {
  std::string out;
  for (const Arc& a : d.arcs()) {
    if (!out.empty()) out += " ";
    out += std::to_string(a.first) + ">" + std::to_string(a.second);
  }
  return out;
}

int run_census_cmd(const CommonFlags& flags, const std::string& family, int vertices,
                   const std::string& filter, const std::string& histogram_out) {
  CensusQuery query;
  query.family = family_from_string(family);
  query.vertices = vertices;
  query.max_dim = flags.max_dim;
  if (!filter.empty()) query.filter = BettiFilter::parse(filter);
  const CensusResult result = run_census(query, flags.threads);

  json histogram = json::array();
  for (const auto& [betti, count] : result.histogram)
    histogram.push_back({{"reduced_betti", betti}, {"classes", count}});
  if (!histogram_out.empty()) {
    std::ofstream h(histogram_out);
    if (!h) throw std::runtime_error("cannot open " + histogram_out);
    h << histogram.dump(2) << "\n";
  }

  if (flags.format == "csv" || flags.format == "text") {
    OutputStream out(flags.output);
    out.get() << "canonical_arcs";
    for (int p = 0; p <= flags.max_dim; ++p) out.get() << ",b" << p;
    out.get() << "\n";
    for (const CensusEntry& entry : result.matches) {
      out.get() << arcs_as_string(entry.graph);
      for (const auto b : entry.reduced_betti) out.get() << "," << b;
      out.get() << "\n";
    }
    return 0;
  }
  json doc;
  doc["family"] = to_string(query.family);
  doc["vertices"] = query.vertices;
  doc["max_dim"] = query.max_dim;
  doc["total_classes"] = result.total_classes;
  json matches = json::array();
  for (const CensusEntry& entry : result.matches)
    matches.push_back(
        {{"arcs", arcs_as_string(entry.graph)}, {"reduced_betti", entry.reduced_betti}});
  doc["matches"] = matches;
  doc["histogram"] = histogram;
  emit_json(flags, doc);
  return 0;
}

int run_sample(const CommonFlags& flags, int n, double q, int trials) {
  ERSpec spec;
  spec.n = n;
  spec.q = q;
  spec.trials = trials;
  spec.seed = flags.seed;
  spec.max_dim = flags.max_dim;
  const BettiDistribution dist = sample_er(spec, flags.threads);

  if (flags.format == "json") {
    json doc;
    doc["n"] = n;
    doc["q"] = q;
    doc["trials"] = trials;
    doc["seed"] = flags.seed;
    json by_dim = json::object();
    for (int p = 0; p <= flags.max_dim; ++p) {
      json rows = json::array();
      for (const auto& [value, count] : dist.counts[p])
        rows.push_back({{"betti_value", value},
                        {"count", count},
                        {"frequency", format_frequency(count, trials)}});
      by_dim[std::to_string(p)] = rows;
    }
    doc["distribution"] = by_dim;
    emit_json(flags, doc);
    return 0;
  }
  OutputStream out(flags.output);
  out.get() << "dimension,betti_value,frequency\n";
  for (int p = 0; p <= flags.max_dim; ++p)
    for (const auto& [value, count] : dist.counts[p])
      out.get() << p << "," << value << "," << format_frequency(count, trials) << "\n";
  return 0;
}

json labeled_chain_to_json(const LabeledChain& chain) {
  json terms = json::array();
  for (const LabeledChainTerm& term : chain) {
    json path = json::array();
    for (const std::string& label : term.path) path.push_back(label_to_json(label));
    terms.push_back({{"path", path}, {"coef", integer_to_json(term.coefficient)}});
  }
  return terms;
}

int run_temporal(const CommonFlags& flags, const std::string& path, const std::string& window,
                 std::string reps_out) {
  const WindowSpec spec = parse_window_spec(window);
  const ContactStream stream = ingest_file(path);
  const auto results = analyze(stream, spec, flags.max_dim, flags.reps, flags.threads);

  if (flags.reps) {
    if (reps_out.empty()) reps_out = (flags.output.empty() ? path : flags.output) + ".reps.json";
    json doc;
    doc["source"] = path;
    doc["window"] = window;
    json wins = json::array();
    for (const WindowResult& r : results) {
      if (r.representatives.empty()) continue;
      json w;
      w["index"] = r.bounds.index;
      w["start"] = r.bounds.start;
      w["end"] = r.bounds.end;
      json reps = json::object();
      for (const auto& [dim, chains] : r.representatives) {
        json list = json::array();
        for (const LabeledChain& chain : chains) list.push_back(labeled_chain_to_json(chain));
        reps[std::to_string(dim)] = list;
      }
      w["representatives"] = reps;
      wins.push_back(w);
    }
    doc["windows"] = wins;
    std::ofstream out(reps_out);
    if (!out) throw std::runtime_error("cannot open " + reps_out);
    out << doc.dump(2) << "\n";
  }

  if (flags.format == "json") {
    json rows = json::array();
    for (const WindowResult& r : results) {
      json row;
      row["index"] = r.bounds.index;
      row["start"] = r.bounds.start;
      row["end"] = r.bounds.end;
      row["contacts"] = r.contact_count;
      row["vertices"] = r.vertex_count;
      row["arcs"] = r.arc_count;
      row["reduced_betti"] = r.reduced_betti;
      rows.push_back(row);
    }
    emit_json(flags, rows);
    return 0;
  }
  OutputStream out(flags.output);
  out.get() << "index,start,end,contacts,vertices,arcs";
  for (int p = 0; p <= flags.max_dim; ++p) out.get() << ",b" << p;
  out.get() << "\n";
  for (const WindowResult& r : results) {
    out.get() << r.bounds.index << "," << r.bounds.start << "," << r.bounds.end << ","
              << r.contact_count << "," << r.vertex_count << "," << r.arc_count;
    for (const auto b : r.reduced_betti) out.get() << "," << b;
    out.get() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path homology of simple digraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--max-dim", flags.max_dim, "Top homology dimension")->check(CLI::Range(0, 8));
  app.add_option("--ring", flags.ring, "Coefficients: q (rationals) or z (integers)")
      ->check(CLI::IsMember({"q", "z"}));
  app.add_flag("--reps", flags.reps, "Also compute homology representatives");
  app.add_option("--threads", flags.threads, "Worker pool size");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", flags.output, "Write output to a file instead of stdout");

  auto* compute = app.add_subcommand("compute", "Homology of an edge-list file");
  std::string compute_path;
  bool dump_complex = false;
  compute->add_option("edgelist", compute_path, "Edge-list file")->required();
  compute->add_flag("--dump-complex", dump_complex, "Include allowed paths and omega dimensions");

  auto* motif = app.add_subcommand("motif", "Build a named digraph family member");
  std::string motif_name;
  int motif_parameter = 1;
  motif->add_option("name", motif_name,
                    "dyad_up | dyad_down | torsion_cycle | square_trivial | square_hole | er")
      ->required();
  motif->add_option("n", motif_parameter, "Family parameter");

  auto* census = app.add_subcommand("census", "Isomorphism-class census with homology");
  std::string census_family = "digraph";
  int census_vertices = 4;
  std::string census_filter;
  std::string histogram_out;
  census->add_option("--family", census_family, "digraph | dag | undirected");
  census->add_option("--vertices", census_vertices, "Vertex count")->required();
  census->add_option("--filter", census_filter, "Reduced Betti filter, e.g. b2>0");
  census->add_option("--histogram-out", histogram_out, "Write the JSON histogram to a file");

  auto* sample = app.add_subcommand("sample", "Erdos-Renyi Betti distribution");
  int sample_n = 4;
  double sample_q = 0.5;
  int sample_trials = 1000;
  sample->add_option("--n", sample_n, "Vertex count")->required();
  sample->add_option("--q", sample_q, "Arc probability")->required()->check(CLI::Range(0.0, 1.0));
  sample->add_option("--trials", sample_trials, "Number of samples")->required();

  auto* temporal = app.add_subcommand("temporal", "Windowed homology of a contact stream");
  std::string temporal_path;
  std::string temporal_window = "time:24h:8h";
  std::string reps_out;
  temporal->add_option("file", temporal_path, "Contact list file")->required();
  temporal->add_option("--window", temporal_window, "time:W:S | count:W:S | day");
  temporal->add_option("--reps-out", reps_out, "Representatives sidecar path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);  // prints help, exits 0
    std::cerr << e.what() << "\n";
    return 1;
  }

  // Distribution and window series default to CSV.
  if (sample->parsed() && app.get_option("--format")->count() == 0) flags.format = "csv";
  if (temporal->parsed() && app.get_option("--format")->count() == 0) flags.format = "csv";

  try {
    if (compute->parsed()) return run_compute(flags, compute_path, dump_complex);
    if (motif->parsed()) return run_motif(flags, motif_name, motif_parameter);
    if (census->parsed())
      return run_census_cmd(flags, census_family, census_vertices, census_filter, histogram_out);
    if (sample->parsed()) return run_sample(flags, sample_n, sample_q, sample_trials);
    if (temporal->parsed()) return run_temporal(flags, temporal_path, temporal_window, reps_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
