#include "ctrlset/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

namespace ctrlset {

NodeId LabelMap::intern(const std::string& label) {
  const auto it = ids.find(label);
  if (it != ids.end()) return it->second;
  const auto id = static_cast<NodeId>(labels.size());
  labels.push_back(label);
  ids.emplace(label, id);
  return id;
}

namespace {

constexpr std::string_view kWs = " \t\r";

bool is_ws(char c) { return kWs.find(c) != std::string_view::npos; }

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph pg;
  std::vector<Edge> edges;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < sv.size()) {
      while (i < sv.size() && is_ws(sv[i])) ++i;
      if (i == sv.size()) break;
      const std::size_t start = i;
      while (i < sv.size() && !is_ws(sv[i])) ++i;
      tokens.push_back(sv.substr(start, i - start));
    }
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 2 tokens, found " +
                       std::to_string(tokens.size()));
    const NodeId src = pg.labels.intern(std::string(tokens[0]));
    const NodeId dst = pg.labels.intern(std::string(tokens[1]));
    edges.emplace_back(src, dst);
  }
  if (edges.empty()) throw ParseError("empty input: no edges found");
  pg.graph = build_graph(static_cast<NodeId>(pg.labels.labels.size()), std::move(edges));
  return pg;
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
  g.for_each_edge([&](NodeId u, NodeId v) { out << u << '\t' << v << '\n'; });
}

std::string Fnv1a64::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

std::string digest_stream(std::istream& in) {
  Fnv1a64 d;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
    d.update(buf, static_cast<std::size_t>(in.gcount()));
  return d.hex();
}

ReportDocument make_report_document(const ControlReport& report, const LabelMap& labels,
                                    double elapsed_ms, std::string input_digest) {
  ReportDocument doc;
  doc.report = report;
  doc.elapsed_ms = elapsed_ms;
  doc.input_digest = std::move(input_digest);
  for (const NodeId v : report.mis) doc.mis_labels.push_back(labels.label_of(v));
  for (const NodeId v : report.possible_inputs) doc.possible_labels.push_back(labels.label_of(v));
  std::sort(doc.mis_labels.begin(), doc.mis_labels.end());
  std::sort(doc.possible_labels.begin(), doc.possible_labels.end());
  return doc;
}

std::string write_report(const ReportDocument& doc, ReportFormat format) {
  const ControlReport& r = doc.report;
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["l"] = r.l;
    j["matching_size"] = r.matching_size;
    j["mis"] = doc.mis_labels;
    j["possible_inputs"] = doc.possible_labels;
    j["n_pd"] = fixed6(r.n_pd);
    j["perfect_matching"] = r.perfect_matching;
    j["method"] = method_name(r.method);
    j["elapsed_ms"] = doc.elapsed_ms;
    j["version"] = doc.version;
    j["input_digest"] = doc.input_digest;
    return j.dump() + "\n";
  }
  std::string out =
      "n,l,matching_size,mis,possible_inputs,n_pd,perfect_matching,method,elapsed_ms,version,"
      "input_digest\n";
  out += std::to_string(r.n) + ',';
  out += std::to_string(r.l) + ',';
  out += std::to_string(r.matching_size) + ',';
  out += csv_field(join(doc.mis_labels, '|')) + ',';
  out += csv_field(join(doc.possible_labels, '|')) + ',';
  out += fixed6(r.n_pd) + ',';
  out += (r.perfect_matching ? "true," : "false,");
  out += std::string(method_name(r.method)) + ',';
  out += fixed6(doc.elapsed_ms) + ',';
  out += csv_field(doc.version) + ',';
  out += csv_field(doc.input_digest) + '\n';
  return out;
}

}  // namespace ctrlset
