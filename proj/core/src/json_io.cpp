#include "maw/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace maw {

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw input_error("complex JSON needs an integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 0 || n > 63) throw input_error("vertex count out of range");
  if (j.value("void", false)) return SimplicialComplex::void_complex(n);
  std::vector<std::vector<int>> facets;
  if (j.contains("facets")) {
    if (!j["facets"].is_array()) throw input_error("'facets' must be an array");
    for (const auto& f : j["facets"]) {
      if (!f.is_array()) throw input_error("each facet must be an array");
      std::vector<int> verts;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw input_error("facet entries must be integers");
        verts.push_back(v.get<int>());
      }
      facets.push_back(std::move(verts));
    }
  }
  if (facets.empty()) return SimplicialComplex::empty_complex(n);
  return SimplicialComplex::from_facets(n, facets);
}

Json complex_to_json(const SimplicialComplex& K) {
  Json j;
  j["n"] = K.n();
  if (K.is_void()) {
    j["void"] = true;
    return j;
  }
  Json facets = Json::array();
  for (VSet f : K.facets()) facets.push_back(subset_to_json(f));
  j["facets"] = facets;
  return j;
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
  return complex_from_json(j);
}

Json subset_to_json(VSet s) {
  Json a = Json::array();
  for (int v : vs_elements(s)) a.push_back(v + 1);
  return a;
}

Json homology_to_json(const HomologySummary& h) {
  Json out = Json::array();
  for (int d = -1; d <= h.top_degree(); ++d) {
    const auto& g = h.at_degree(d);
    if (g.free_rank == 0 && g.torsion.empty()) continue;
    Json e;
    e["degree"] = d;
    e["free_rank"] = g.free_rank;
    Json tors = Json::array();
    for (const auto& t : g.torsion) tors.push_back(t.str());
    e["torsion"] = tors;
    out.push_back(e);
  }
  return out;
}

Json field_dims_to_json(const FieldDims& d) {
  Json out = Json::array();
  for (std::size_t i = 0; i < d.dims.size(); ++i) {
    if (d.dims[i] == 0) continue;
    Json e;
    e["degree"] = static_cast<int>(i) - 1;
    e["dim"] = d.dims[i];
    out.push_back(e);
  }
  return out;
}

Json table_to_json(const BigradedTable& t) {
  Json out;
  out["n"] = t.n;
  out["field"] = t.field.name();
  Json entries = Json::array();
  for (VSet I = 0; I < (VSet(1) << t.n); ++I) {
    const auto& fd = t.entries[static_cast<std::size_t>(I)];
    auto dims = field_dims_to_json(fd);
    if (dims.empty()) continue;
    Json e;
    e["I"] = subset_to_json(I);
    e["dims"] = dims;
    entries.push_back(e);
  }
  out["entries"] = entries;
  out["total_by_degree"] = t.total_by_degree();
  return out;
}

Json golod_to_json(const GolodVerdict& v) {
  Json out;
  out["field"] = v.field.name();
  out["products_vanish"] = v.products_vanish;
  if (v.massey_all_vanish)
    out["massey_all_vanish"] = *v.massey_all_vanish;
  else
    out["massey_all_vanish"] = nullptr;
  out["classes"] = v.classes;
  out["pairs_checked"] = v.pairs_checked;
  out["triples_checked"] = v.triples_checked;
  out["label"] = v.label;
  out["witness"] = v.witness;
  return out;
}

Json extractible_to_json(const ExtractibleReport& r) {
  Json out;
  out["field"] = r.field.name();
  out["passes"] = r.passes;
  out["failing_degrees"] = r.failing_degrees;
  Json dims = Json::array();
  for (std::size_t i = 0; i < r.homology_dims.size(); ++i) {
    if (r.homology_dims[i] == 0) continue;
    Json e;
    e["degree"] = static_cast<int>(i) - 1;
    e["dim"] = r.homology_dims[i];
    dims.push_back(e);
  }
  out["homology"] = dims;
  return out;
}

Json series_to_json(const PoincareSeries& s) {
  Json out;
  out["n"] = s.n;
  out["numerator"] = s.numerator;
  out["denominator"] = s.denominator;
  out["display"] = s.to_string();
  return out;
}

Json crossval_to_json(const CrossValidation& cv) {
  Json out;
  out["ok"] = cv.ok;
  out["dims_match"] = cv.dims_match;
  out["totals_match"] = cv.totals_match;
  out["products_agree"] = cv.products_agree;
  out["classes"] = cv.classes;
  out["detail"] = cv.detail;
  return out;
}

ReportCache::ReportCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ReportCache::hash_key(const std::string& key) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::optional<Json> ReportCache::get(const std::string& key) const {
  const auto path = std::filesystem::path(dir_) / (hash_key(key) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("cache_key", std::string()) != key) return std::nullopt;
  return j["value"];
}

void ReportCache::put(const std::string& key, const Json& value) const {
  const auto path = std::filesystem::path(dir_) / (hash_key(key) + ".json");
  Json j;
  j["cache_key"] = key;
  j["value"] = value;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace maw
