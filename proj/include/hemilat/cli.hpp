#ifndef HEMILAT_CLI_HPP
#define HEMILAT_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classify.hpp"
#include "congruence.hpp"
#include "dot.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "search.hpp"
#include "symmetry.hpp"

namespace hemilat {
namespace cli {

namespace detail {

inline json read_input(const std::string& path, std::istream& stdin_stream) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("--in: cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
}

inline void write_output(const std::string& path, const json& j, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << j.dump(2) << "\n";
  } else {
    std::ofstream file(path);
    if (!file) throw UsageError("--out: cannot open " + path);
    file << j.dump(2) << "\n";
  }
}

inline void write_dot(const std::string& path, const std::string& dot) {
  std::ofstream file(path);
  if (!file) throw UsageError("--dot: cannot open " + path);
  file << dot;
}

/// Resolves one element given either its label or its decimal index.
inline int resolve_element(const FiniteSemilattice& s, const std::string& token) {
  for (int a = 0; a < s.size(); ++a)
    if (!s.labels().empty() && s.labels()[a] == token) return a;
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size() && v >= 0 && v < s.size()) return v;
  } catch (...) {
  }
  throw UsageError("--pair: unknown element \"" + token + "\"");
}

inline std::pair<int, int> resolve_pair(const FiniteSemilattice& s, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair: expected \"a,b\"");
  return {resolve_element(s, text.substr(0, comma)),
          resolve_element(s, text.substr(comma + 1))};
}

inline int max_size_cap() {
  if (const char* env = std::getenv("HEMILAT_MAX_SIZE")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw UsageError("HEMILAT_MAX_SIZE: expected an integer");
    }
  }
  return 7;  // desk scale
}

inline void check_bound(int max_size) {
  const int cap = max_size_cap();
  if (max_size > cap)
    throw UsageError("--max-size " + std::to_string(max_size) + " exceeds the cap of " +
                     std::to_string(cap) + " (set HEMILAT_MAX_SIZE to raise it)");
}

}  // namespace detail

/** Runs one CLI invocation. Exit codes: 0 success, 1 a law failed to
    validate (witness JSON on stdout), 2 usage error (message on stderr). */
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"finite hemiimplicative semilattice toolkit"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path = "-";
  std::string dot_path;
  std::string kind_name_arg;
  std::string pair_arg;
  std::string property_arg;
  std::string fixture_name;
  std::string out_dir;
  int max_size = 5;
  int jobs = default_jobs();
  bool labeled = false;
  bool with_implications = false;

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input algebra JSON file, or - for stdin");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate an algebra file");
  add_in(validate);
  validate->add_option("--dot", dot_path, "write a Hasse diagram of the order");

  CLI::App* classify_cmd = app.add_subcommand("classify", "axiom and variety flags");
  add_in(classify_cmd);

  CLI::App* build = app.add_subcommand("build", "build one of the six implications");
  add_in(build);
  build->add_option("--kind", kind_name_arg, "implication kind")->required();
  build->add_option("--out", out_path, "output file, or - for stdout");

  CLI::App* symmetrize_cmd = app.add_subcommand("symmetrize", "replace -> by <->");
  add_in(symmetrize_cmd);
  symmetrize_cmd->add_option("--out", out_path, "output file, or - for stdout");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "symmetrize/derive round-trips");
  add_in(roundtrip);

  CLI::App* filters_cmd = app.add_subcommand("filters", "list all filters");
  add_in(filters_cmd);

  CLI::App* congruences = app.add_subcommand("congruences", "congruence lattice");
  add_in(congruences);
  congruences->add_option("--dot", dot_path, "write the congruence lattice as DOT");

  CLI::App* principal = app.add_subcommand("principal", "principal congruence of a pair");
  add_in(principal);
  principal->add_option("--pair", pair_arg, "pair a,b (labels or indices)")->required();

  CLI::App* search = app.add_subcommand("search", "counterexample hunts");
  search->add_option("--property", property_arg, "product-escape or variety-separators")
      ->required();
  CLI::Option* search_size =
      search->add_option("--max-size", max_size, "semilattice size bound (default 5; "
                                                 "product factors default to 3)");
  search->add_option("--kind", kind_name_arg, "implication kind (product-escape)");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_flag("--labeled", labeled, "do not collapse isomorphic semilattices");

  CLI::App* enumerate = app.add_subcommand("enumerate", "write all small algebras to a directory");
  enumerate->add_option("--max-size", max_size, "semilattice size bound");
  enumerate->add_option("--out", out_dir, "output directory")->required();
  enumerate->add_flag("--labeled", labeled, "do not collapse isomorphic semilattices");
  enumerate->add_flag("--implications", with_implications,
                      "also write every hemiimplicative implication");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "built-in named algebras");
  fixtures_cmd->add_option("--name", fixture_name, "fixture name (omit to list)");

  std::vector<const char*> argv;
  argv.push_back("hemilat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      if (!dot_path.empty()) detail::write_dot(dot_path, hasse_dot(parsed.base));
      detail::write_output("-", algebra_to_json(parsed), out);
    } else if (*classify_cmd) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      detail::write_output("-", report_to_json(classify(parsed.require_hemi())), out);
    } else if (*build) {
      auto kind = kind_from_name(kind_name_arg);
      if (!kind) throw UsageError("--kind: unknown kind \"" + kind_name_arg + "\"");
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      detail::write_output(out_path, algebra_to_json(build_implication(parsed.base, *kind)),
                           out);
    } else if (*symmetrize_cmd) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      SymmetricAlgebra sym = symmetrize(parsed.require_hemi());
      detail::write_output(out_path, algebra_to_json(sym.algebra()), out);
    } else if (*roundtrip) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      const HemiAlgebra& alg = parsed.require_hemi();
      const ClassReport report = classify(alg);
      json j;
      j["h4"] = report.h4.holds;
      j["symmetric"] = report.symmetric.holds;
      j["condition_s"] = report.condition_s.holds;
      j["forward"] = verdict_to_json(check_roundtrip_h4(alg));
      j["reverse"] = report.symmetric.holds
                         ? verdict_to_json(check_roundtrip_symmetric(
                               SymmetricAlgebra::validate(alg)))
                         : json(nullptr);
      detail::write_output("-", j, out);
    } else if (*filters_cmd) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      json j;
      json list = json::array();
      json congruent = json::array();
      for (const FilterSet& f : enumerate_filters(parsed.base)) {
        list.push_back(filter_to_json(f));
        if (parsed.hemi) congruent.push_back(is_congruent_filter(*parsed.hemi, f).holds);
      }
      j["filters"] = list;
      if (parsed.hemi) j["congruent"] = congruent;
      detail::write_output("-", j, out);
    } else if (*congruences) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      const HemiAlgebra& alg = parsed.require_hemi();
      auto lattice = congruence_lattice(alg);
      json list = json::array();
      for (const auto& [filter, partition] : lattice) {
        json entry;
        entry["filter"] = filter_to_json(filter);
        entry["blocks"] = partition_to_json(partition);
        list.push_back(entry);
      }
      json j;
      j["congruences"] = list;
      if (!dot_path.empty())
        detail::write_dot(dot_path, congruence_lattice_dot(alg.base(), lattice));
      detail::write_output("-", j, out);
    } else if (*principal) {
      ParsedAlgebra parsed = parse_algebra(detail::read_input(in_path, in));
      const HemiAlgebra& alg = parsed.require_hemi();
      auto [a, b] = detail::resolve_pair(alg.base(), pair_arg);
      json j;
      j["pair"] = {a, b};
      j["filter"] = filter_to_json(congruent_filter_generated(alg, alg.rla(a, b)));
      j["blocks"] = partition_to_json(principal_congruence(alg, a, b));
      detail::write_output("-", j, out);
    } else if (*search) {
      if (property_arg == "product-escape" && search_size->count() == 0) max_size = 3;
      detail::check_bound(max_size);
      EnumerationBound bound{max_size, !labeled};
      json j;
      if (property_arg == "product-escape") {
        auto kind = kind_from_name(kind_name_arg);
        if (!kind)
          throw UsageError("--kind: product-escape needs one of the six kind names");
        auto witness = find_product_escape(*kind, bound, jobs);
        j["witness"] = witness ? search_witness_to_json(*witness) : json(nullptr);
      } else if (property_arg == "variety-separators") {
        json list = json::array();
        for (const SearchWitness& w : find_variety_separators(bound))
          list.push_back(search_witness_to_json(w));
        j["witnesses"] = list;
      } else {
        throw UsageError("--property: unknown property \"" + property_arg + "\"");
      }
      detail::write_output("-", j, out);
    } else if (*enumerate) {
      detail::check_bound(max_size);
      if (out_dir.empty()) throw UsageError("--out: expected a directory");
      std::filesystem::create_directories(out_dir);
      EnumerationBound bound{max_size, !labeled};
      json files = json::array();
      int index = 0;
      for_each_semilattice(bound, [&](const FiniteSemilattice& s) {
        std::string name =
            "semilattice_" + std::to_string(s.size()) + "_" + std::to_string(index++) + ".json";
        std::ofstream file(std::filesystem::path(out_dir) / name);
        file << semilattice_to_json(s).dump(2) << "\n";
        files.push_back(name);
        if (with_implications) {
          int sub = 0;
          for_each_hemi_implication(s, [&](const HemiAlgebra& alg) {
            std::string sub_name = "algebra_" + std::to_string(s.size()) + "_" +
                                   std::to_string(index - 1) + "_" + std::to_string(sub++) +
                                   ".json";
            std::ofstream sub_file(std::filesystem::path(out_dir) / sub_name);
            sub_file << algebra_to_json(alg).dump(2) << "\n";
            files.push_back(sub_name);
            return true;
          });
        }
        return true;
      });
      json j;
      j["count"] = files.size();
      j["files"] = files;
      detail::write_output("-", j, out);
    } else if (*fixtures_cmd) {
      if (fixture_name.empty()) {
        json j;
        j["fixtures"] = fixtures::names();
        detail::write_output("-", j, out);
      } else {
        auto fixture = fixtures::get(fixture_name);
        if (!fixture) throw UsageError("--name: unknown fixture \"" + fixture_name + "\"");
        detail::write_output("-", algebra_to_json(*fixture), out);
      }
    }
    return 0;
  } catch (const ValidationError& e) {
    detail::write_output("-", validation_error_to_json(e), out);
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace hemilat

#endif  // HEMILAT_CLI_HPP
