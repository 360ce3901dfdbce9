// rahp: command-line front end for the polytope library.
//
// Exit codes: 0 success, 1 invalid input or a failing claim, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rahp/andreev.hpp"
#include "rahp/bounds.hpp"
#include "rahp/closed_volumes.hpp"
#include "rahp/generators.hpp"
#include "rahp/harness.hpp"
#include "rahp/polytope_io.hpp"
#include "rahp/report.hpp"
#include "rahp/surgery.hpp"

namespace fs = std::filesystem;
using namespace rahp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string output_dir;

std::string resolve_output(const std::string& path) {
  if (output_dir.empty() || path == "-" || fs::path(path).is_absolute()) return path;
  return (fs::path(output_dir) / path).string();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    const auto target = resolve_output(path);
    if (const auto parent = fs::path(target).parent_path(); !parent.empty()) fs::create_directories(parent);
    write_file(target, text);
  }
}

std::vector<CombinatorialPolytope> load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_polytopes(buf.str());
  }
  return parse_polytopes(read_file(path));
}

std::vector<CombinatorialPolytope> load_catalog_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("catalog '" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".poly") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CombinatorialPolytope> out;
  for (const auto& f : files) {
    try {
      for (auto& p : parse_polytopes(read_file(f.string()))) out.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
  }
  return out;
}

void print_violations(const CombinatorialPolytope& p) {
  for (const auto& v : p.validation().violations) {
    std::cout << "  " << v.invariant;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
  }
}

int cmd_validate(const std::string& file) {
  int rc = 0;
  for (const auto& p : load(file)) {
    if (p.valid()) {
      std::cout << p.name() << ": ok\n";
    } else {
      std::cout << p.name() << ": invalid\n";
      print_violations(p);
      rc = 1;
    }
  }
  return rc;
}

int cmd_classify(const std::string& file) {
  int rc = 0;
  for (const auto& p : load(file)) {
    if (!p.valid()) {
      std::cout << p.name() << ": invalid\n";
      print_violations(p);
      rc = 1;
      continue;
    }
    const auto cls = classify(p);
    std::cout << p.name() << ": " << to_string(cls.kind);
    if (cls.witness) std::cout << " " << cls.witness->describe();
    std::cout << "\n";
  }
  return rc;
}

std::string rational(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

int cmd_stats(const std::string& file) {
  int rc = 0;
  for (const auto& p : load(file)) {
    if (!p.valid()) {
      std::cout << p.name() << ": invalid\n";
      print_violations(p);
      rc = 1;
      continue;
    }
    const auto prof = profile(p);
    std::cout << p.name() << ": V=" << prof.vertices << " V_inf=" << prof.ideal_vertices
              << " V_F=" << prof.finite_vertices << " E=" << prof.edges << " F=" << prof.faces
              << " p_k=" << face_degree_summary(prof);
    if (prof.overfull_vertices == 0) {
      std::cout << " avg_neighbours=" << rational(avg_face_neighbours_direct(p));
      if (prof.all_ideal()) std::cout << " avg_quasi_adjacent=" << rational(avg_quasi_adjacent(p));
      if (prof.all_finite()) std::cout << " avg_quasi_incident=" << rational(avg_quasi_incident(p));
    } else {
      std::cout << " overfull=" << prof.overfull_vertices;
    }
    std::cout << "\n";
  }
  return rc;
}

int cmd_bounds(const std::string& file) {
  int rc = 0;
  for (const auto& p : load(file)) {
    if (!p.valid()) {
      std::cout << p.name() << ": invalid\n";
      print_violations(p);
      rc = 1;
      continue;
    }
    const auto cls = classify(p);
    if (!cls.realizable()) {
      std::cout << p.name() << ": not realizable, " << cls.witness->describe() << "\n";
      rc = 1;
      continue;
    }
    const auto report = bound_report(p, cls);
    std::cout << p.name() << ": " << to_string(cls.kind) << "\n";
    for (const auto& e : report.entries) {
      const auto& info = bound_info(e.id);
      if (!e.applicable) continue;
      std::cout << "  " << info.key << (info.upper ? " upper " : " lower ") << format_number(e.value->value)
                << " +- " << format_number(e.value->abs_err);
      if (!e.reason.empty()) std::cout << " [" << e.reason << "]";
      std::cout << "\n";
    }
    if (report.apex) {
      std::cout << "  apex v" << report.apex->apex << " via " << to_string(report.apex->method);
      if (report.apex->degenerate_projection) std::cout << " (degenerate-projection unverified)";
      std::cout << "\n";
    }
    if (report.triple) {
      std::cout << "  face triple f" << report.triple->f1 << ",f" << report.triple->f2 << ",f"
                << report.triple->f3 << " k_sum=" << report.triple->k_sum << "\n";
    }
    if (report.best_lower) {
      const auto& e = report.entries[*report.best_lower];
      std::cout << "  best_lower " << bound_info(e.id).key << " " << format_number(e.value->value) << "\n";
    }
    if (report.best_upper) {
      const auto& e = report.entries[*report.best_upper];
      std::cout << "  best_upper " << bound_info(e.id).key << " " << format_number(e.value->value) << "\n";
    }
  }
  return rc;
}

int cmd_volume(const std::string& family, int n) {
  ErrBoundedValue vol;
  std::string name;
  if (family == "antiprism") {
    if (n < 3) throw UsageError("antiprism needs n >= 3");
    vol = vol_antiprism(n);
    name = "A(" + std::to_string(n) + ")";
  } else if (family == "loebell") {
    if (n < 5) throw UsageError("loebell needs n >= 5");
    vol = vol_loebell(n);
    name = "L(" + std::to_string(n) + ")";
  } else if (family == "octahedron" || family == "octa-double-chain") {
    if (n < 0 || n > 60) throw UsageError("chain depth must be in 0..60");
    vol = std::ldexp(1.0, n) * v8();
    name = "octa-chain(" + std::to_string(n) + ")";
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  std::cout << name << " " << format_number(vol.value) << " +- " << format_number(vol.abs_err) << "\n";
  return 0;
}

int cmd_double(const std::string& file, int face, int depth, const std::string& selector,
               const std::string& out) {
  if (depth < 1) throw UsageError("--depth must be >= 1");
  FaceSelector sel{};
  try {
    sel = face_selector_from_string(selector);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (sel == FaceSelector::Explicit) throw UsageError("the explicit selector takes face ids; use --face with --depth 1");
  auto polys = load(file);
  if (polys.size() != 1) throw UsageError("double expects exactly one polytope, got " + std::to_string(polys.size()));
  const auto& p = polys.front();
  if (!p.valid()) {
    std::cerr << p.name() << ": invalid\n";
    print_violations(p);
    return 1;
  }
  if (!p.has_face(face)) throw UsageError("unknown face id " + std::to_string(face));
  auto current = double_along_face(p, face);
  if (depth > 1) {
    const auto chain = double_chain(current, depth - 1, FaceSelection{sel, {}});
    current = chain.polytopes.back();
  }
  emit(out, serialize(current));
  return 0;
}

int cmd_generate(const std::string& family, int n, const std::string& out) {
  std::vector<CombinatorialPolytope> polys;
  try {
    polys = generate(family_from_string(family), n);
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  std::string text;
  for (const auto& p : polys) text += serialize(p);
  emit(out, text);
  return 0;
}

std::vector<CatalogEntry> build_catalog(Suite suite, const std::string& dir) {
  auto entries = catalog(suite);
  if (!dir.empty()) {
    auto extra = user_entries(load_catalog_dir(dir));
    std::move(extra.begin(), extra.end(), std::back_inserter(entries));
  }
  return entries;
}

int cmd_verify(const std::string& suite, const std::string& dir) {
  Suite s;
  try {
    s = suite_from_string(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto results = run_suite(build_catalog(s, dir));
  for (const auto& r : results) std::cout << r.line() << "\n";
  const auto sum = summarize(results);
  std::cout << "summary: " << sum.holds << " hold, " << sum.fails << " fail, " << sum.not_applicable
            << " not applicable\n";
  return sum.fails == 0 ? 0 : 1;
}

int cmd_report(const std::string& dir, const std::string& out) {
  std::vector<CatalogEntry> entries;
  if (dir.empty()) {
    entries = catalog(Suite::All);
  } else {
    for (auto& p : load_catalog_dir(dir)) entries.push_back(CatalogEntry{std::move(p), "user", std::nullopt});
  }
  emit(out, render_report(entries));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled hyperbolic polyhedra: combinatorics, volumes and volume bounds"};
  app.require_subcommand(1);
  app.add_option("--output-dir", output_dir, "Directory for files written with -o");

  std::string file, family, selector = "max-degree", out, suite = "all", catalog_dir;
  int n = 0, face = 0, depth = 1;

  auto* validate = app.add_subcommand("validate", "Check structural invariants");
  validate->add_option("file", file, "Polytope file, or - for stdin")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Decide realizability");
  classify_cmd->add_option("file", file, "Polytope file, or - for stdin")->required();
  auto* stats = app.add_subcommand("stats", "Incidence profile and averages");
  stats->add_option("file", file, "Polytope file, or - for stdin")->required();
  auto* bounds = app.add_subcommand("bounds", "Evaluate every volume bound");
  bounds->add_option("file", file, "Polytope file, or - for stdin")->required();

  auto* volume = app.add_subcommand("volume", "Closed-form volume of a family member");
  volume->add_option("--family", family, "antiprism, loebell or octahedron")->required();
  volume->add_option("--n", n, "n, or chain depth for octahedron")->required();

  auto* dbl = app.add_subcommand("double", "Double along a face");
  dbl->add_option("file", file, "Polytope file, or - for stdin")->required();
  dbl->add_option("--face", face, "Face id for the first doubling")->required();
  dbl->add_option("--depth", depth, "Number of doublings")->capture_default_str();
  dbl->add_option("--selector", selector, "Face selector after the first stage")->capture_default_str();
  dbl->add_option("-o,--output", out, "Output file");

  auto* gen = app.add_subcommand("generate", "Generate antiprism, loebell or octa-double-chain");
  gen->add_option("family", family)->required();
  gen->add_option("n", n, "n, or depth for the chain")->required();
  gen->add_option("-o,--output", out, "Output file");

  auto* verify = app.add_subcommand("verify", "Check every claim over the catalog");
  verify->add_option("--suite", suite, "ideal, compact, mixed or all")->capture_default_str();
  verify->add_option("--catalog", catalog_dir, "Directory of extra .poly files");

  auto* report = app.add_subcommand("report", "CSV bounds report");
  report->add_option("--catalog", catalog_dir, "Directory of .poly files instead of the built-in catalog");
  report->add_option("-o,--output", out, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*classify_cmd) return cmd_classify(file);
    if (*stats) return cmd_stats(file);
    if (*bounds) return cmd_bounds(file);
    if (*volume) return cmd_volume(family, n);
    if (*dbl) return cmd_double(file, face, depth, selector, out);
    if (*gen) return cmd_generate(family, n, out);
    if (*verify) return cmd_verify(suite, catalog_dir);
    if (*report) return cmd_report(catalog_dir, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
