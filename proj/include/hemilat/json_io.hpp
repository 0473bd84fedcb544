#ifndef HEMILAT_JSON_IO_HPP
#define HEMILAT_JSON_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classify.hpp"
#include "congruence.hpp"
#include "search.hpp"

namespace hemilat {

using nlohmann::json;

/** A parsed algebra file: always a validated semilattice, plus the
    implication when the file carried one. */
struct ParsedAlgebra {
  FiniteSemilattice base;
  std::optional<HemiAlgebra> hemi;

  const HemiAlgebra& require_hemi() const {
    if (!hemi) throw UsageError("imp: this command needs an implication table");
    return *hemi;
  }
};

namespace detail {

inline int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw UsageError(std::string(field) + ": expected an integer");
  return j[field].get<int>();
}

inline Table require_table(const json& j, const char* field, int n) {
  if (!j.contains(field) || !j[field].is_array())
    throw UsageError(std::string(field) + ": expected an array of rows");
  Table table;
  for (const auto& row : j[field]) {
    if (!row.is_array()) throw UsageError(std::string(field) + ": expected rows of integers");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw UsageError(std::string(field) + ": expected integer entries");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (static_cast<int>(table.size()) != n)
    throw UsageError(std::string(field) + ": size mismatch with \"size\"");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw UsageError(std::string(field) + ": size mismatch with \"size\"");
  return table;
}

}  // namespace detail

inline ParsedAlgebra parse_algebra(const json& j) {
  if (!j.is_object()) throw UsageError("input: expected a JSON object");
  const int size = detail::require_int(j, "size");
  if (size <= 0) throw UsageError("size: must be positive");
  Table meet = detail::require_table(j, "meet", size);
  const int top = detail::require_int(j, "top");

  std::optional<int> bottom;
  if (j.contains("bottom") && !j["bottom"].is_null()) {
    if (!j["bottom"].is_number_integer()) throw UsageError("bottom: expected integer or null");
    bottom = j["bottom"].get<int>();
  }

  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_array()) throw UsageError("labels: expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw UsageError("labels: expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }

  FiniteSemilattice base =
      FiniteSemilattice::validate(std::move(meet), top, bottom, std::move(labels));

  std::optional<HemiAlgebra> hemi;
  if (j.contains("imp") && !j["imp"].is_null()) {
    Table imp = detail::require_table(j, "imp", size);
    hemi = HemiAlgebra::validate(base, std::move(imp));
  }
  return ParsedAlgebra{std::move(base), std::move(hemi)};
}

inline json semilattice_to_json(const FiniteSemilattice& s) {
  json j;
  j["size"] = s.size();
  j["meet"] = s.meet_table();
  j["top"] = s.top();
  j["bottom"] = s.bottom();
  j["imp"] = nullptr;
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

inline json algebra_to_json(const HemiAlgebra& alg) {
  json j = semilattice_to_json(alg.base());
  j["imp"] = alg.imp_table();
  return j;
}

inline json algebra_to_json(const ParsedAlgebra& parsed) {
  return parsed.hemi ? algebra_to_json(*parsed.hemi) : semilattice_to_json(parsed.base);
}

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["property"] = v.property;
    j["witness"] = v.witness;
  }
  return j;
}

inline json report_to_json(const ClassReport& r) {
  json j;
  json witnesses = json::object();
  auto put = [&](const char* name, const Verdict& v) {
    j[name] = v.holds;
    if (!v.holds) witnesses[name] = v.witness;
  };
  put("h2", r.h2);
  put("h3", r.h3);
  put("h4", r.h4);
  put("h5", r.h5);
  put("symmetric", r.symmetric);
  put("condition_s", r.condition_s);
  put("implicative", r.implicative);
  put("es_member", r.es_member);
  j["witnesses"] = witnesses;
  return j;
}

inline json filter_to_json(const FilterSet& f) { return json(f.elements()); }

inline json partition_to_json(const CongruencePartition& p) { return json(p.blocks()); }

inline json search_witness_to_json(const SearchWitness& w) {
  json j;
  j["property"] = w.property;
  j["tuple"] = w.tuple;
  if (!w.algebras.empty()) j["algebra"] = algebra_to_json(w.algebras.back());
  if (w.algebras.size() > 1) {
    json factors = json::array();
    for (std::size_t i = 0; i + 1 < w.algebras.size(); ++i)
      factors.push_back(algebra_to_json(w.algebras[i]));
    j["factors"] = factors;
  }
  return j;
}

inline json validation_error_to_json(const ValidationError& e) {
  json j;
  j["error"] = e.code();
  j["witness"] = e.witness();
  j["message"] = e.what();
  return j;
}

}  // namespace hemilat

#endif  // HEMILAT_JSON_IO_HPP
