#include "rahp/report.hpp"

#include <charconv>
#include <future>
#include <thread>

#include "rahp/bounds.hpp"

namespace rahp {

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string face_degree_summary(const IncidenceProfile& prof) {
  std::string out;
  for (const auto& [k, pk] : prof.face_degrees) {
    if (pk == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + std::to_string(pk);
  }
  return out;
}

std::vector<std::string> report_header() {
  std::vector<std::string> h{"name", "class", "V", "V_inf", "V_F", "E", "F", "p_k"};
  for (const auto& info : all_bounds()) h.emplace_back(info.key);
  for (const char* c : {"best_upper_id", "best_upper", "known_volume", "slack"}) h.emplace_back(c);
  return h;
}

std::vector<std::string> report_row(const CatalogEntry& entry) {
  const auto& p = entry.polytope;
  std::vector<std::string> row{p.name()};
  if (!p.valid()) {
    row.emplace_back("invalid");
    row.resize(report_header().size());
    return row;
  }
  const auto cls = classify(p);
  const auto prof = profile(p);
  row.emplace_back(to_string(cls.kind));
  for (auto n : {prof.vertices, prof.ideal_vertices, prof.finite_vertices, prof.edges, prof.faces})
    row.push_back(std::to_string(n));
  row.push_back(face_degree_summary(prof));

  std::optional<double> best;
  if (cls.realizable()) {
    const auto report = bound_report(p, cls);
    for (const auto& e : report.entries) row.push_back(e.applicable ? format_number(e.value->value) : "");
    if (report.best_upper) {
      const auto& e = report.entries[*report.best_upper];
      best = e.value->value;
      row.emplace_back(bound_info(e.id).key);
      row.push_back(format_number(*best));
    } else {
      row.insert(row.end(), 2, "");
    }
  } else {
    row.insert(row.end(), kBoundCount + 2, "");
  }
  if (entry.known_volume) {
    row.push_back(format_number(entry.known_volume->value));
    row.push_back(best ? format_number(*best - entry.known_volume->value) : "");
  } else {
    row.insert(row.end(), 2, "");
  }
  return row;
}

std::string render_report(const std::vector<CatalogEntry>& entries) {
  auto line = [](const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(fields[i]);
    }
    return out + "\n";
  };
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> lines(entries.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < entries.size(); i += workers) lines[i] = line(report_row(entries[i]));
    }));
  }
  for (auto& j : jobs) j.get();
  std::string out = line(report_header());
  for (const auto& l : lines) out += l;
  return out;
}

}  // namespace rahp
