#include "radialnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "radialnet/error.hpp"
#include "radialnet/format.hpp"

namespace radialnet {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Normalizes one raw line. Returns nullopt for blank and comment lines.
std::optional<std::string_view> ContentOf(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string_view body = Trim(line);
  if (body.empty() || body.front() == '#') return std::nullopt;
  return body;
}

Label ParseLabel(std::string_view token, std::size_t line_no, const std::string& line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && ptr == token.data() + token.size() &&
       value > std::numeric_limits<Label>::max())) {
    throw ParseError(ErrorCode::kRange, line_no, line,
                     "token '" + std::string(token) + "' exceeds 32-bit range");
  }
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(ErrorCode::kParse, line_no, line,
                     "malformed token '" + std::string(token) + "'");
  }
  return static_cast<Label>(value);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !IsSpace(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename LineFn>
void ForEachContentLine(std::istream& in, LineFn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto body = ContentOf(line)) fn(*body, line_no, line);
  }
}

// Path element: an AS number, or nullopt for an AS-set group.
using PathElement = std::optional<Label>;

std::vector<PathElement> TokenizePath(std::string_view body, std::size_t line_no,
                                      const std::string& line) {
  std::vector<PathElement> out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (IsSpace(body[i])) {
      ++i;
      continue;
    }
    if (body[i] == '{') {
      const std::size_t close = body.find('}', i);
      if (close == std::string_view::npos) {
        throw ParseError(ErrorCode::kParse, line_no, line, "unterminated AS-set");
      }
      out.emplace_back(std::nullopt);
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && !IsSpace(body[j]) && body[j] != '{') ++j;
    out.emplace_back(ParseLabel(body.substr(i, j - i), line_no, line));
    i = j;
  }
  return out;
}

}  // namespace

EdgeSet ParseEdgeList(std::istream& in) {
  EdgeSet out;
  ForEachContentLine(in, [&](std::string_view body, std::size_t line_no, const std::string& line) {
    auto tokens = SplitWhitespace(body);
    if (tokens.size() != 2) {
      throw ParseError(ErrorCode::kParse, line_no, line, "expected two vertex labels");
    }
    out.Add(ParseLabel(tokens[0], line_no, line), ParseLabel(tokens[1], line_no, line));
  });
  return out;
}

EdgeSet ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in);
}

EdgeSet ParseAsPaths(std::istream& in) {
  EdgeSet out;
  ForEachContentLine(in, [&](std::string_view body, std::size_t line_no, const std::string& line) {
    auto elements = TokenizePath(body, line_no, line);
    // Collapse prepending before pairing so "a a b" yields only (a, b).
    std::vector<PathElement> path;
    for (const PathElement& e : elements) {
      if (e && !path.empty() && path.back() == e) continue;
      path.push_back(e);
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (path[i - 1] && path[i]) out.Add(*path[i - 1], *path[i]);
    }
  });
  return out;
}

EdgeSet ParseAsPaths(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseAsPaths(in);
}

void WriteEdgeList(std::ostream& out, const EdgeSet& edges) {
  std::vector<LabelEdge> sorted;
  sorted.reserve(edges.size());
  for (const LabelEdge& e : edges.edges) sorted.push_back(LabelEdge::Canonical(e.u, e.v));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const LabelEdge& e : sorted) out << e.u << ' ' << e.v << '\n';
}

MergeResult MergeSources(const std::vector<NamedEdgeSet>& sources, std::string_view baseline) {
  if (sources.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "at most 64 sources can be merged");
  }
  std::optional<std::size_t> base;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (std::size_t t = 0; t < s; ++t) {
      if (sources[t].name == sources[s].name) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate source name '" + sources[s].name + "'");
      }
    }
    if (sources[s].name == baseline) base = s;
  }
  if (!base) {
    throw Error(ErrorCode::kNotFound, "baseline source '" + std::string(baseline) + "' not found");
  }

  std::vector<std::pair<LabelEdge, std::uint64_t>> tagged;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (const LabelEdge& e : sources[s].edges.edges) {
      tagged.emplace_back(LabelEdge::Canonical(e.u, e.v), std::uint64_t{1} << s);
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  MergeResult result;
  for (std::size_t i = 0; i < tagged.size();) {
    std::uint64_t mask = 0;
    std::size_t j = i;
    for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) mask |= tagged[j].second;
    result.merged.edges.push_back(tagged[i].first);
    result.merged.source_masks.push_back(mask);
    i = j;
  }

  const std::uint64_t base_bit = std::uint64_t{1} << *base;
  std::vector<SourceStats> stats(sources.size());
  std::vector<std::size_t> outside_base(sources.size(), 0);
  for (std::uint64_t mask : result.merged.source_masks) {
    for (std::size_t s = 0; s < sources.size(); ++s) {
      const std::uint64_t bit = std::uint64_t{1} << s;
      if ((mask & bit) == 0) continue;
      ++stats[s].edges;
      if (mask == bit) ++stats[s].exclusive;
      if ((mask & base_bit) == 0) ++outside_base[s];
    }
  }

  const std::size_t base_edges = stats[*base].edges;
  if (base_edges == 0) {
    throw Error(ErrorCode::kDomain, "baseline source '" + std::string(baseline) + "' has no edges");
  }
  const auto denom = static_cast<double>(base_edges);
  for (std::size_t s = 0; s < sources.size(); ++s) {
    stats[s].name = sources[s].name;
    stats[s].gain = static_cast<double>(outside_base[s]) / denom;
  }

  result.report.sources = std::move(stats);
  result.report.baseline = std::string(baseline);
  result.report.union_edges = result.merged.size();
  result.report.gain = static_cast<double>(result.merged.size() - base_edges) / denom;
  return result;
}

void WriteSourceReport(std::ostream& out, const SourceReport& report) {
  out << "source,edges,exclusive,gain\n";
  for (const SourceStats& s : report.sources) {
    out << s.name << ',' << s.edges << ',' << s.exclusive << ',' << FormatDouble(s.gain) << '\n';
  }
  out << "union," << report.union_edges << ",," << FormatDouble(report.gain) << '\n';
}

}  // namespace radialnet
