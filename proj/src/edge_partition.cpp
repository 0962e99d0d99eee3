#include "ferrers/edge_partition.hpp"

#include <algorithm>
#include <sstream>

#include "ferrers/error.hpp"
#include "text_util.hpp"

namespace ferrers {

EdgePartition::EdgePartition(std::vector<std::vector<EdgeId>> parts) : parts_(std::move(parts)) {
  for (auto& p : parts_) std::sort(p.begin(), p.end());
}

EdgePartition EdgePartition::from_assignment(std::span<const int> part_of, int part_count) {
  std::vector<std::vector<EdgeId>> parts(static_cast<std::size_t>(part_count));
  for (std::size_t id = 0; id < part_of.size(); ++id) {
    int p = part_of[id];
    if (p < 0 || p >= part_count) throw InputError("edge " + std::to_string(id) + " has no valid part");
    parts[static_cast<std::size_t>(p)].push_back(static_cast<EdgeId>(id));
  }
  return EdgePartition(std::move(parts));
}

std::vector<int> EdgePartition::assignment(int edge_count) const {
  std::vector<int> out(static_cast<std::size_t>(edge_count), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (EdgeId id : parts_[i])
      if (id >= 0 && id < edge_count) out[static_cast<std::size_t>(id)] = static_cast<int>(i);
  return out;
}

std::string to_text(const BipartiteGraph& g, const EdgePartition& p) {
  std::ostringstream out;
  out << "parts " << p.part_count() << "\n";
  for (int i = 0; i < p.part_count(); ++i) {
    out << "part " << i << ":";
    for (EdgeId id : p.part(i)) {
      const Edge& e = g.edge(id);
      out << " " << e.u << "," << e.v;
    }
    out << "\n";
  }
  return out.str();
}

EdgePartition parse_partition(const BipartiteGraph& g, std::string_view text) {
  int declared = -1;
  std::vector<std::vector<EdgeId>> parts;
  int line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw InputError("partition line " + std::to_string(line_no) + ": " + what);
    };
    auto fields = detail::split_ws(line);
    if (declared < 0) {
      if (fields.size() != 2 || fields[0] != "parts") fail("expected header 'parts <k>'");
      auto k = detail::parse_int(fields[1]);
      if (!k || *k < 0) fail("bad part count");
      declared = *k;
      continue;
    }
    if (fields.size() < 2 || fields[0] != "part" || fields[1].empty() || fields[1].back() != ':')
      fail("expected 'part <i>: <u,v> ...'");
    auto index = detail::parse_int(fields[1].substr(0, fields[1].size() - 1));
    if (!index || *index != static_cast<int>(parts.size()))
      fail("parts must be numbered consecutively from 0");
    std::vector<EdgeId> part;
    for (std::size_t f = 2; f < fields.size(); ++f) {
      auto comma = fields[f].find(',');
      if (comma == std::string_view::npos) fail("expected '<u>,<v>' but got '" + std::string(fields[f]) + "'");
      auto u = detail::parse_int(fields[f].substr(0, comma));
      auto v = detail::parse_int(fields[f].substr(comma + 1));
      if (!u || !v) fail("non-integer endpoint in '" + std::string(fields[f]) + "'");
      auto id = g.edge_id(*u, *v);
      if (!id) fail("edge " + std::string(fields[f]) + " is not in the graph");
      part.push_back(*id);
    }
    parts.push_back(std::move(part));
  }
  if (declared < 0) throw InputError("partition: missing 'parts' header");
  if (declared != static_cast<int>(parts.size()))
    throw InputError("partition: header declares " + std::to_string(declared) + " parts but " +
                     std::to_string(parts.size()) + " are listed");
  return EdgePartition(std::move(parts));
}

}  // namespace ferrers
