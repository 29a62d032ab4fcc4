#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "maw/golod.hpp"
#include "maw/hochster.hpp"
#include "maw/koszul.hpp"

namespace maw {

// Key-order-preserving JSON; reports must serialize byte-identically for
// fixed inputs.
using Json = nlohmann::ordered_json;

// Schema: {"n": int, "facets": [[1-based vertices]...]}; an absent or empty
// facet list denotes {emptyset}, "void": true the void complex.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex load_complex_file(const std::string& path);

Json subset_to_json(VSet s);
Json homology_to_json(const HomologySummary& h);
Json field_dims_to_json(const FieldDims& d);
Json table_to_json(const BigradedTable& t);
Json golod_to_json(const GolodVerdict& v);
Json extractible_to_json(const ExtractibleReport& r);
Json series_to_json(const PoincareSeries& s);
Json crossval_to_json(const CrossValidation& cv);

// Content-addressed on-disk store for finished reports.
class ReportCache {
 public:
  explicit ReportCache(std::string dir);

  std::optional<Json> get(const std::string& key) const;
  void put(const std::string& key, const Json& value) const;

  static std::string hash_key(const std::string& key);  // 64-bit FNV-1a, hex

 private:
  std::string dir_;
};

}  // namespace maw
