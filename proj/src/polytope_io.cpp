#include "rahp/polytope_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace rahp {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_int(const std::string& token, int line) {
  long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

struct Record {
  std::string name;
  int header_line = 0;
  std::optional<long> vertices;
  int vertices_line = 0;
  std::vector<Face> faces;
};

CombinatorialPolytope finish(Record& r) {
  if (!r.vertices) throw ParseError(r.header_line, "record '" + r.name + "' has no 'vertices' line");
  if (r.faces.empty()) throw ParseError(r.header_line, "record '" + r.name + "' has no faces");
  int max_id = -1;
  for (const auto& f : r.faces)
    for (VertexId v : f) max_id = std::max(max_id, v);
  if (max_id + 1 != *r.vertices) {
    throw ParseError(r.vertices_line, "declared " + std::to_string(*r.vertices) +
                                          " vertices but faces use ids 0.." + std::to_string(max_id));
  }
  return {r.name, std::move(r.faces)};
}

}  // namespace

std::vector<CombinatorialPolytope> parse_polytopes(const std::string& text) {
  std::vector<CombinatorialPolytope> out;
  std::optional<Record> current;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    std::istringstream tokens(content);
    std::string keyword;
    tokens >> keyword;
    if (keyword == "polytope") {
      if (current) out.push_back(finish(*current));
      current.emplace();
      current->name = trim(content.substr(keyword.size()));
      current->header_line = line;
      if (current->name.empty()) throw ParseError(line, "polytope name missing");
      continue;
    }
    if (!current) throw ParseError(line, "expected 'polytope <name>' header");
    if (keyword == "vertices") {
      std::string count;
      std::string extra;
      if (!(tokens >> count) || (tokens >> extra)) throw ParseError(line, "expected 'vertices <V>'");
      if (current->vertices) throw ParseError(line, "duplicate 'vertices' line");
      const long v = parse_int(count, line);
      if (v < 0) throw ParseError(line, "vertex count must be non-negative");
      current->vertices = v;
      current->vertices_line = line;
    } else if (keyword == "face") {
      Face face;
      std::string token;
      while (tokens >> token) {
        const long v = parse_int(token, line);
        if (v < 0) throw ParseError(line, "vertex ids must be non-negative");
        if (current->vertices && v >= *current->vertices) {
          throw ParseError(line, "vertex id " + token + " out of range");
        }
        face.push_back(static_cast<VertexId>(v));
      }
      if (face.empty()) throw ParseError(line, "face without vertices");
      current->faces.push_back(std::move(face));
    } else {
      throw ParseError(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (current) out.push_back(finish(*current));
  if (out.empty()) throw ParseError(0, "no polytope records found");
  return out;
}

CombinatorialPolytope parse_polytope(const std::string& text) {
  auto all = parse_polytopes(text);
  if (all.size() != 1) throw ParseError(0, "expected exactly one polytope, found " + std::to_string(all.size()));
  return std::move(all.front());
}

CombinatorialPolytope canonicalize(const CombinatorialPolytope& p) {
  std::vector<Face> faces;
  faces.reserve(p.faces().size());
  for (const Face& face : p.faces()) {
    const std::size_t k = face.size();
    if (k == 0) {
      faces.push_back(face);
      continue;
    }
    const auto start = static_cast<std::size_t>(std::min_element(face.begin(), face.end()) - face.begin());
    const VertexId next = face[(start + 1) % k];
    const VertexId prev = face[(start + k - 1) % k];
    Face rotated;
    rotated.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      rotated.push_back(next <= prev ? face[(start + i) % k] : face[(start + k - i) % k]);
    }
    faces.push_back(std::move(rotated));
  }
  std::sort(faces.begin(), faces.end());
  return {p.name(), std::move(faces)};
}

std::string serialize(const CombinatorialPolytope& p) {
  const auto canonical = canonicalize(p);
  std::string out = "polytope " + canonical.name() + "\n";
  out += "vertices " + std::to_string(canonical.vertex_count()) + "\n";
  for (const Face& face : canonical.faces()) {
    out += "face";
    for (VertexId v : face) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace rahp
