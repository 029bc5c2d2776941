#ifndef PATHHOM_TEMPORAL_HPP
#define PATHHOM_TEMPORAL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <pathhom/digraph.hpp>
#include <pathhom/homology.hpp>

namespace pathhom {

struct Contact {
  std::string src;
  std::string dst;
  std::int64_t time = 0;
};

struct ContactStream {
  std::vector<Contact> contacts;  // stably sorted by timestamp
  std::string source_name;

  bool empty() const { return contacts.empty(); }
  std::int64_t t_min() const { return contacts.front().time; }
  std::int64_t t_max() const { return contacts.back().time; }
};

// Three-column "src dst time" contact lists; a fourth column shifts the
// timestamp right: "src dst weight time".  '%' and '#' comment lines and
// blank lines are skipped.  Malformed lines raise ParseError with the line
// number.
ContactStream ingest(std::istream& in, std::string source_name = "");
ContactStream ingest_file(const std::string& path);

enum class WindowKind { time_sliding, count_sliding, calendar_day };

struct WindowSpec {
  WindowKind kind = WindowKind::time_sliding;
  std::int64_t width = 86400;  // seconds, or contacts for count_sliding
  std::int64_t stride = 28800;
  // Anchor for window boundaries; defaults to the first timestamp for
  // sliding windows and the first midnight UTC at or before it for days.
  std::optional<std::int64_t> origin;
};

// "time:24h:8h", "count:100:50", "day" (duration suffixes s, m, h, d).
WindowSpec parse_window_spec(const std::string& text);

struct WindowBounds {
  std::int64_t index = 0;
  // Timestamps for time and day windows, contact positions for count windows.
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct Window {
  WindowBounds bounds;
  std::span<const Contact> contacts;
};

// All windows intersecting the stream, empty ones included.
std::vector<Window> windows(const ContactStream& stream, const WindowSpec& spec);

struct LabeledChainTerm {
  std::vector<std::string> path;
  Integer coefficient;
};
using LabeledChain = std::vector<LabeledChainTerm>;

struct WindowResult {
  WindowBounds bounds;
  std::size_t contact_count = 0;
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  std::vector<std::int64_t> reduced_betti;
  // Dimension-2 representatives with external labels; filled only when
  // requested and the window has reduced Betti 2 > 0.
  std::map<int, std::vector<LabeledChain>> representatives;
};

// Aggregates each window into a simple digraph (duplicates merged, loops
// dropped) and computes reduced Betti numbers through max_dim.
std::vector<WindowResult> analyze(const ContactStream& stream, const WindowSpec& spec,
                                  int max_dim, bool want_representatives,
                                  unsigned threads = 1);

} // namespace pathhom

#endif
