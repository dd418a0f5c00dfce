#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctrlset/control.hpp"
#include "ctrlset/graph.hpp"

namespace ctrlset {

inline constexpr const char* kToolVersion = "0.1.0";

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bijection between external node labels and dense ids, in order of first
/// appearance in the input.
struct LabelMap {
  std::vector<std::string> labels;              // id -> label
  std::unordered_map<std::string, NodeId> ids;  // label -> id

  NodeId intern(const std::string& label);
  const std::string& label_of(NodeId id) const { return labels[id]; }
};

struct ParsedGraph {
  DirectedGraph graph;
  LabelMap labels;
};

/// Reads whitespace-separated "src dst" lines. Lines whose first
/// non-whitespace byte is '#' and blank lines are skipped; anything else
/// must hold exactly two tokens or a ParseError naming the line is thrown.
/// An input with no edges at all is a ParseError.
ParsedGraph parse_edge_list(std::istream& in);

/// One "src<TAB>dst" line per edge, in sorted (src, dst) order, labels are
/// the dense ids.
void write_edge_list(const DirectedGraph& g, std::ostream& out);

/// Incremental FNV-1a 64-bit digest.
class Fnv1a64 {
 public:
  void update(const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      state_ ^= static_cast<unsigned char>(data[i]);
      state_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

/// Digest of a whole stream, read in chunks.
std::string digest_stream(std::istream& in);

enum class ReportFormat { json, csv };

/// A ControlReport resolved back to input labels plus run metadata.
/// mis_labels / possible_labels are sorted lexicographically.
struct ReportDocument {
  ControlReport report;
  std::vector<std::string> mis_labels;
  std::vector<std::string> possible_labels;
  double elapsed_ms = 0.0;
  std::string version = kToolVersion;
  std::string input_digest;
};

ReportDocument make_report_document(const ControlReport& report, const LabelMap& labels,
                                    double elapsed_ms, std::string input_digest);

/// Serializes with a fixed key order (n, l, matching_size, mis,
/// possible_inputs, n_pd, perfect_matching, method, elapsed_ms, version,
/// input_digest). n_pd is rendered with six decimal places; output is
/// byte-stable for identical input except elapsed_ms. CSV is one header row
/// plus one data row with node sets pipe-joined.
std::string write_report(const ReportDocument& doc, ReportFormat format);

}  // namespace ctrlset
