#include <pathhom/temporal.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <pathhom/parallel.hpp>

namespace pathhom {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t parse_int64(const std::string& token, std::size_t lineno, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(lineno, std::string("cannot parse ") + what + " '" + token + "'");
  return value;
}

}  // namespace

ContactStream ingest(std::istream& in, std::string source_name) {
  ContactStream out;
  out.source_name = std::move(source_name);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    tokens.clear();
    std::istringstream split(line);
    std::string token;
    while (split >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    if (tokens.size() != 3 && tokens.size() != 4)
      throw ParseError(lineno, "expected 3 columns (src dst time) or 4 (src dst weight time)");
    Contact c;
    c.src = tokens[0];
    c.dst = tokens[1];
    c.time = parse_int64(tokens.back(), lineno, "timestamp");
    out.contacts.push_back(std::move(c));
  }
  std::stable_sort(out.contacts.begin(), out.contacts.end(),
                   [](const Contact& a, const Contact& b) { return a.time < b.time; });
  return out;
}

ContactStream ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingest(in, path);
}

namespace {

std::int64_t parse_duration(const std::string& text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string("window spec: empty ") + what);
  std::int64_t scale = 1;
  std::string digits = text;
  switch (text.back()) {
    case 's': scale = 1; digits.pop_back(); break;
    case 'm': scale = 60; digits.pop_back(); break;
    case 'h': scale = 3600; digits.pop_back(); break;
    case 'd': scale = 86400; digits.pop_back(); break;
    default: break;
  }
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value <= 0)
    throw std::invalid_argument(std::string("window spec: bad ") + what + " '" + text + "'");
  return value * scale;
}

}  // namespace

WindowSpec parse_window_spec(const std::string& text) {
  WindowSpec spec;
  if (text == "day") {
    spec.kind = WindowKind::calendar_day;
    spec.width = spec.stride = 86400;
    return spec;
  }
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("window spec must be time:WIDTH:STRIDE, count:WIDTH:STRIDE, or day");
  const std::string kind = text.substr(0, first);
  const std::string width = text.substr(first + 1, second - first - 1);
  const std::string stride = text.substr(second + 1);
  if (kind == "time") {
    spec.kind = WindowKind::time_sliding;
    spec.width = parse_duration(width, "width");
    spec.stride = parse_duration(stride, "stride");
  } else if (kind == "count") {
    spec.kind = WindowKind::count_sliding;
    spec.width = parse_duration(width, "width");
    spec.stride = parse_duration(stride, "stride");
  } else {
    throw std::invalid_argument("window spec kind must be time, count, or day");
  }
  if (spec.stride > spec.width)
    throw std::invalid_argument("window spec: stride must not exceed width");
  return spec;
}

std::vector<Window> windows(const ContactStream& stream, const WindowSpec& spec) {
  if (spec.width <= 0 || spec.stride <= 0 || spec.stride > spec.width)
    throw std::invalid_argument("windows: need 0 < stride <= width");
  std::vector<Window> out;
  if (stream.empty()) return out;
  const std::span<const Contact> all(stream.contacts);

  if (spec.kind == WindowKind::count_sliding) {
    const std::int64_t n = static_cast<std::int64_t>(all.size());
    if (n < spec.width) {
      out.push_back({{0, 0, n}, all});
      return out;
    }
    std::int64_t index = 0;
    for (std::int64_t end = spec.width; end <= n; end += spec.stride, ++index) {
      const std::int64_t begin = end - spec.width;
      out.push_back({{index, begin, end},
                     all.subspan(static_cast<std::size_t>(begin),
                                 static_cast<std::size_t>(spec.width))});
    }
    return out;
  }

  // Time-based kinds; calendar days are stride = width = 86400 anchored at
  // the first midnight UTC at or before the first timestamp.
  std::int64_t origin;
  if (spec.origin) {
    origin = *spec.origin;
  } else if (spec.kind == WindowKind::calendar_day) {
    origin = floor_div(stream.t_min(), 86400) * 86400;
  } else {
    origin = stream.t_min();
  }
  const std::int64_t lo = stream.t_min();
  const std::int64_t hi = stream.t_max();
  // Windows [origin + k*stride, origin + k*stride + width) that intersect
  // [lo, hi]; the origin anchors the first window, so k stays nonnegative.
  const std::int64_t k_first =
      std::max<std::int64_t>(0, floor_div(lo - origin - spec.width, spec.stride) + 1);
  const std::int64_t k_last = floor_div(hi - origin, spec.stride);
  const auto by_time = [](const Contact& c, std::int64_t t) { return c.time < t; };
  for (std::int64_t k = k_first; k <= k_last; ++k) {
    const std::int64_t start = origin + k * spec.stride;
    const std::int64_t end = start + spec.width;
    const auto begin_it = std::lower_bound(all.begin(), all.end(), start, by_time);
    const auto end_it = std::lower_bound(all.begin(), all.end(), end, by_time);
    out.push_back({{k, start, end},
                   all.subspan(static_cast<std::size_t>(begin_it - all.begin()),
                               static_cast<std::size_t>(end_it - begin_it))});
  }
  return out;
}

namespace {

LabeledDigraph aggregate(std::span<const Contact> contacts) {
  std::vector<std::pair<std::string, std::string>> arcs;
  arcs.reserve(contacts.size());
  for (const Contact& c : contacts) arcs.emplace_back(c.src, c.dst);
  return from_arcs(arcs);
}

}  // namespace

std::vector<WindowResult> analyze(const ContactStream& stream, const WindowSpec& spec,
                                  int max_dim, bool want_representatives, unsigned threads) {
  const std::vector<Window> wins = windows(stream, spec);
  std::vector<WindowResult> out(wins.size());
  parallel_for(wins.size(), threads, [&](std::size_t i) {
    const Window& w = wins[i];
    WindowResult& result = out[i];
    result.bounds = w.bounds;
    result.contact_count = w.contacts.size();
    if (w.contacts.empty()) {
      result.reduced_betti.assign(max_dim + 1, 0);
      return;
    }
    const LabeledDigraph agg = aggregate(w.contacts);
    result.vertex_count = static_cast<std::size_t>(agg.graph.vertex_count());
    result.arc_count = agg.graph.arc_count();
    HomologySummary summary = homology(agg.graph, max_dim);
    result.reduced_betti = summary.reduced_betti;
    const bool has_dim2 = max_dim >= 2 && summary.reduced_betti[2] > 0;
    if (want_representatives && has_dim2) {
      HomologyOptions opt;
      opt.max_dim = max_dim;
      opt.representatives = true;
      summary = homology(agg.graph, opt);
      const auto it = summary.representatives.find(2);
      if (it != summary.representatives.end()) {
        std::vector<LabeledChain> labeled;
        for (const Chain& chain : it->second) {
          LabeledChain lc;
          for (const ChainTerm& term : chain) {
            LabeledChainTerm lt;
            for (const int v : term.path) lt.path.push_back(agg.map.label(v));
            lt.coefficient = term.coefficient;
            lc.push_back(std::move(lt));
          }
          labeled.push_back(std::move(lc));
        }
        result.representatives[2] = std::move(labeled);
      }
    }
  });
  return out;
}

} // namespace pathhom
