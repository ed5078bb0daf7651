// Command-line interface for the binary Segre variety toolkit: enumerate the
// invariant objects, compute stabiliser orbits, run self-checks, and export
// machine-readable listings.

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segre/orbits.hpp"
#include "segre/projective.hpp"
#include "segre/serialize.hpp"
#include "segre/varieties.hpp"
#include "segre/verify.hpp"

namespace {

constexpr int kExitUsage = 2;

// A user-facing input problem: reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_field(const std::string& object) {
  if (object == "hermitian" || object == "basis" || object == "base-lines" ||
      object == "spread" || object == "spread-line-orbits" ||
      object == "hermitian-substructure")
    return 4;
  return 2;
}

void require_field(const std::string& object, int field, std::initializer_list<int> allowed) {
  for (int f : allowed)
    if (field == f) return;
  std::ostringstream msg;
  msg << "object '" << object << "' is not defined over GF(" << field << ")";
  throw UsageError{msg.str()};
}

std::vector<segre::ProjectivePoint> enumerate_points(const std::string& object, int m,
                                                     int field) {
  if (object == "points") return segre::all_points(m, field);
  if (object == "segre") return segre::segre_points(m, field);
  if (object == "quadric") return segre::quadric_points(m, field);
  if (object == "hermitian") {
    require_field(object, field, {4});
    return segre::hermitian_points(m);
  }
  if (object == "basis") {
    require_field(object, field, {4});
    return segre::invariant_basis(m).points;
  }
  throw UsageError{"unknown point object '" + object + "'"};
}

std::vector<segre::ProjectiveLine> enumerate_lines(const std::string& object, int m,
                                                   int field) {
  if (object == "base-lines") {
    require_field(object, field, {4});
    return segre::base_lines(m);
  }
  if (object == "tangents") {
    require_field(object, field, {2});
    std::vector<segre::ProjectiveLine> lines;
    for (const segre::ProjectivePoint& p : segre::segre_points(m, 2))
      lines.push_back(segre::distinguished_tangent(p, segre::TangentMode::ClosedForm));
    return lines;
  }
  throw UsageError{"unknown line object '" + object + "'"};
}

bool is_point_object(const std::string& object) {
  return object == "points" || object == "segre" || object == "quadric" ||
         object == "hermitian" || object == "basis";
}

bool is_line_object(const std::string& object) {
  return object == "base-lines" || object == "tangents";
}

int run_enumerate(const std::string& object, int m, int field, bool list) {
  std::vector<std::string> records;
  std::size_t count = 0;
  if (is_point_object(object)) {
    auto pts = enumerate_points(object, m, field);
    count = pts.size();
    if (list) {
      std::sort(pts.begin(), pts.end());
      for (const auto& p : pts) records.push_back(segre::point_string(p));
    }
  } else if (is_line_object(object)) {
    auto lines = enumerate_lines(object, m, field);
    count = lines.size();
    if (list) {
      std::sort(lines.begin(), lines.end());
      for (const auto& l : lines)
        records.push_back(segre::point_string(l.first()) + "," +
                          segre::point_string(l.second()));
    }
  } else if (object == "spread") {
    require_field(object, field, {4});
    auto spread = segre::line_spread(m);
    count = spread.size();
    if (list) {
      std::sort(spread.begin(), spread.end(),
                [](const segre::SpreadLine& a, const segre::SpreadLine& b) {
                  return a.line < b.line;
                });
      for (const auto& s : spread) {
        std::ostringstream row;
        row << segre::point_string(s.line.first()) << ','
            << segre::point_string(s.line.second()) << ','
            << segre::point_string(s.contact_even) << ',' << s.class_r;
        records.push_back(row.str());
      }
    }
  } else {
    throw UsageError{"unknown object '" + object +
                     "'; expected points, segre, quadric, hermitian, basis, "
                     "base-lines, tangents or spread"};
  }
  std::cout << object << ' ' << m << ' ' << field << ' ' << count << '\n';
  for (const std::string& r : records) std::cout << r << '\n';
  return 0;
}

int run_orbits(const std::string& object, int m) {
  if (object == "points") {
    const auto orbits = segre::point_orbits(m);
    const auto order = segre::point_orbit_display_order(orbits, m);
    std::cout << "sizes";
    for (int o : order) std::cout << ' ' << orbits.sizes[static_cast<std::size_t>(o)];
    std::cout << '\n';
    for (std::size_t r = 0; r < order.size(); ++r) {
      const auto o = static_cast<std::size_t>(order[r]);
      std::cout << 'O' << (r + 1) << ' ' << orbits.sizes[o] << ' '
                << segre::point_string(orbits.representatives[o]) << '\n';
    }
    return 0;
  }
  if (object == "spread-lines") {
    const auto spread = segre::line_spread(m);
    const auto orbits = segre::spread_line_orbits(spread, m);
    const auto order = segre::line_orbit_display_order(orbits, spread);
    std::cout << "sizes";
    for (int o : order) std::cout << ' ' << orbits.sizes[static_cast<std::size_t>(o)];
    std::cout << '\n';
    for (std::size_t r = 0; r < order.size(); ++r) {
      const auto o = static_cast<std::size_t>(order[r]);
      std::cout << 'L' << (r + 1) << ' ' << orbits.sizes[o] << ' '
                << segre::point_string(orbits.representatives[o].first()) << ','
                << segre::point_string(orbits.representatives[o].second()) << '\n';
    }
    return 0;
  }
  throw UsageError{"unknown orbit object '" + object + "'; expected points or spread-lines"};
}

int run_verify(int m, const std::string& check, bool list) {
  if (list) {
    for (const segre::CheckInfo& info : segre::available_checks()) {
      std::cout << info.name << "  m={";
      for (std::size_t i = 0; i < info.applicable_m.size(); ++i)
        std::cout << (i ? "," : "") << info.applicable_m[i];
      std::cout << "}  " << info.summary << '\n';
    }
    return 0;
  }
  if (m < 2 || m > 5)
    throw UsageError{"verification supports m between 2 and 5 (the quadratic form "
                     "needs at least two factors)"};

  segre::VerificationReport report;
  if (check.empty()) {
    report = segre::run_all_checks(m);
    if (report.results.empty())
      throw UsageError{"no checks apply to m = " + std::to_string(m)};
  } else {
    if (!segre::check_applicable(check, m)) {
      bool known = false;
      for (const segre::CheckInfo& info : segre::available_checks())
        known = known || info.name == check;
      if (!known) throw UsageError{"unknown check '" + check + "'"};
      throw UsageError{"check '" + check + "' does not apply to m = " + std::to_string(m)};
    }
    try {
      report.results.push_back(segre::run_check(check, m));
    } catch (const std::logic_error& e) {
      report.results.push_back(segre::CheckResult{check, m, false, e.what()});
    }
  }
  int passed = 0;
  for (const segre::CheckResult& r : report.results) {
    std::cout << (r.pass ? "pass " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (r.pass) ++passed;
  }
  std::cout << "verification m=" << m << ": " << passed << '/' << report.results.size()
            << " checks passed" << '\n';
  return passed == static_cast<int>(report.results.size()) ? 0 : 1;
}

int run_export(const std::string& object, int m, int field, const std::string& format,
               const std::string& path) {
  if (format != "json" && format != "csv")
    throw UsageError{"unknown format '" + format + "'; expected json or csv"};
  if (path.empty()) throw UsageError{"--export <path> is required"};

  nlohmann::json items;
  std::string csv;
  std::size_t count = 0;
  const bool json = format == "json";
  nlohmann::json doc;

  if (is_point_object(object)) {
    const auto pts = enumerate_points(object, m, field);
    count = pts.size();
    if (json)
      doc = segre::make_document(m, field, object, segre::point_items(pts));
    else
      csv = segre::point_csv(pts);
  } else if (is_line_object(object)) {
    const auto lines = enumerate_lines(object, m, field);
    count = lines.size();
    if (json)
      doc = segre::make_document(m, field, object, segre::line_items(lines));
    else
      csv = segre::line_csv(lines);
  } else if (object == "spread") {
    require_field(object, field, {4});
    const auto spread = segre::line_spread(m);
    count = spread.size();
    if (json)
      doc = segre::make_document(m, field, object, segre::spread_items(spread));
    else
      csv = segre::spread_csv(spread);
  } else if (object == "point-orbits") {
    require_field(object, field, {2});
    const auto orbits = segre::point_orbits(m);
    const auto order = segre::point_orbit_display_order(orbits, m);
    count = orbits.objects.size();
    if (json) {
      doc = segre::make_document(m, field, object, segre::point_orbit_items(orbits, order));
      doc["summary"] = segre::orbit_summary(orbits, order);
    } else {
      csv = segre::point_orbit_csv(orbits, order);
    }
  } else if (object == "spread-line-orbits") {
    const auto spread = segre::line_spread(m);
    const auto orbits = segre::spread_line_orbits(spread, m);
    const auto order = segre::line_orbit_display_order(orbits, spread);
    count = orbits.objects.size();
    if (json) {
      doc = segre::make_document(m, field, object, segre::line_orbit_items(orbits, order));
      doc["summary"] = segre::orbit_summary(orbits, order);
    } else {
      csv = segre::line_orbit_csv(orbits, order);
    }
  } else if (object == "hermitian-substructure") {
    if (m != 3) throw UsageError{"the Hermitian substructure is computed for m = 3"};
    const segre::IncidenceStructure s = segre::hermitian_substructure();
    count = s.incidences.size();
    if (json)
      doc = segre::make_document(m, field, object, segre::substructure_items(s));
    else
      csv = segre::substructure_csv(s);
  } else {
    throw UsageError{"unknown export object '" + object + "'"};
  }

  std::ofstream out{path, std::ios::binary};
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << (json ? segre::to_json_text(doc) : csv);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return 1;
  }
  std::cout << "wrote " << path << ": " << object << " m=" << m << " field=" << field
            << ", " << count << (count == 1 ? " item" : " items") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary Segre variety toolkit: invariant objects, forms and "
               "stabiliser orbits of PG(2^m - 1, 2)"};
  app.require_subcommand(1);

  int m = 0;
  int field = 0;  // 0 = per-object default
  std::string object;
  std::string format = "json";
  std::string check;
  std::string path;
  bool list = false;
  bool all = false;

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "Count (and optionally list) an invariant object");
  cmd_enumerate->add_option("--m", m, "number of factors")->required();
  cmd_enumerate->add_option("--object", object, "points, segre, quadric, hermitian, "
                                                "basis, base-lines, tangents or spread")
      ->required();
  cmd_enumerate->add_option("--field", field, "coordinate field order (2 or 4)");
  cmd_enumerate->add_flag("--list", list, "print every object after the count line");

  CLI::App* cmd_orbits =
      app.add_subcommand("orbits", "Stabiliser orbits on points or spread lines");
  cmd_orbits->add_option("--m", m, "number of factors")->required();
  cmd_orbits->add_option("--object", object, "points (default) or spread-lines");

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the construction self-checks");
  cmd_verify->add_option("--m", m, "number of factors (2 to 5)");
  cmd_verify->add_option("--check", check, "run one named check (default: all applicable)");
  cmd_verify->add_flag("--all", all, "run every applicable check (the default)");
  cmd_verify->add_flag("--list", list, "list the available checks and exit");

  CLI::App* cmd_export = app.add_subcommand("export", "Write an object listing to a file");
  cmd_export->add_option("--m", m, "number of factors")->required();
  cmd_export->add_option("--object", object,
                         "an enumerable object, point-orbits, spread-line-orbits or "
                         "hermitian-substructure")
      ->required();
  cmd_export->add_option("--field", field, "coordinate field order (2 or 4)");
  cmd_export->add_option("--format", format, "json (default) or csv");
  cmd_export->add_option("--export,-o", path, "output file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cmd_enumerate->parsed()) {
      if (object.empty()) throw UsageError{"--object is required"};
      if (field == 0) field = default_field(object);
      if (field != 2 && field != 4) throw UsageError{"--field must be 2 or 4"};
      return run_enumerate(object, m, field, list);
    }
    if (cmd_orbits->parsed()) {
      if (object.empty()) object = "points";
      return run_orbits(object, m);
    }
    if (cmd_verify->parsed()) {
      if (!list && m == 0) throw UsageError{"--m is required"};
      if (!check.empty() && all)
        throw UsageError{"--check and --all are mutually exclusive"};
      return run_verify(m, check, list);
    }
    if (cmd_export->parsed()) {
      if (field == 0) field = default_field(object);
      if (field != 2 && field != 4) throw UsageError{"--field must be 2 or 4"};
      return run_export(object, m, field, format, path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
