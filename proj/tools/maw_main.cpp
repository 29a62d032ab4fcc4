// Batch workbench: load a complex (or enumerate a catalog), run the requested
// analysis, emit a deterministic JSON report.
//
// Exit codes: 0 ok, 1 counterexample found by a verification command,
// 2 malformed input, 3 size guard exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maw/configs.hpp"
#include "maw/golod.hpp"
#include "maw/json_io.hpp"
#include "maw/koszul.hpp"
#include "maw/partitions.hpp"
#include "maw/plmaps.hpp"
#include "maw/rng.hpp"

namespace {

using namespace maw;

constexpr const char* kVersion = "0.1.0";

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write " + out_path);
    out << text;
  }
}

Json envelope(const std::string& command) {
  Json j;
  j["tool"] = "maw";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

// ---- sampling helpers for verify-maps -------------------------------------------

BarycentricPoint random_barycentric(Rng& rng, int n, VSet support) {
  std::vector<Rat> z(static_cast<std::size_t>(n), Rat(0));
  Rat sum(0);
  while (sum == 0) {
    for (int i : vs_elements(support)) {
      Rat w(rng.next_in(0, 6), 1);
      z[static_cast<std::size_t>(i)] = w;
      sum += w;
    }
  }
  for (auto& w : z) w /= sum;
  return BarycentricPoint::make(std::move(z));
}

VSet random_face(Rng& rng, const SimplicialComplex& K) {
  if (K.facets().empty()) return 0;
  VSet f = K.facets()[rng.next_below(K.facets().size())];
  VSet sub = 0;
  for (int v : vs_elements(f))
    if (rng.next_below(2)) sub |= VSet(1) << v;
  return sub;
}

SmashPoint random_hat_point(Rng& rng, const SimplicialComplex& K) {
  VSet face = random_face(rng, K);
  std::vector<Rat> x(static_cast<std::size_t>(K.n()), Rat(1));
  for (int i : vs_elements(face)) x[static_cast<std::size_t>(i)] = rng.next_rat(0, 1, 8) * 2 - 1;
  // coordinates at -1 collapse; nudge them inside
  for (auto& c : x)
    if (c == -1) c = Rat(-7, 8);
  return SmashPoint::make(std::move(x));
}

struct MapCheckOutcome {
  long samples = 0;
  long failures = 0;
  Json counterexamples = Json::array();
  bool psi_applicable = false;
};

void record_failure(MapCheckOutcome& oc, const std::string& what, const Json& data) {
  ++oc.failures;
  if (oc.counterexamples.size() < 5) {
    Json e;
    e["check"] = what;
    e["sample"] = data;
    oc.counterexamples.push_back(e);
  }
}

MapCheckOutcome run_map_checks(const SimplicialComplex& K, long samples, std::uint64_t seed) {
  MapCheckOutcome oc;
  const int n = K.n();
  Rng h_rng = Rng(seed).fork(1);
  Rng phi_rng = Rng(seed).fork(2);
  Rng psi_rng = Rng(seed).fork(3);
  Rng dis_rng = Rng(seed).fork(4);

  for (long it = 0; it < samples; ++it) {
    // h round trip plus the off-support coordinates pinned at 1
    VSet face = random_face(h_rng, K);
    if (face == 0) face = K.facets().empty() ? 0 : K.facets()[0];
    if (face == 0) break;
    auto z = random_barycentric(h_rng, n, face);
    Rat t = h_rng.next_rat(-1, 1, 8);
    while (t == -1 || t == 1) t = h_rng.next_rat(-1, 1, 8);
    auto x = h_eval(t, z);
    ++oc.samples;
    bool ok = !x.basepoint;
    if (ok)
      for (int i = 0; i < n; ++i)
        if (!vs_contains(z.support(), i) && x.x[static_cast<std::size_t>(i)] != 1) ok = false;
    if (ok) {
      auto back = h_inv_eval(x);
      ok = back.t == t && back.z == z;
    }
    if (!ok) {
      Json data;
      data["t"] = t.str();
      data["z"] = z.to_string();
      record_failure(oc, "h_round_trip", data);
    }
  }

  for (long it = 0; it < samples; ++it) {
    std::vector<Rat> ts;
    for (int i = 0; i + 1 < n; ++i) ts.push_back(phi_rng.next_rat(-1, 1, 4));
    Rat t = phi_rng.next_rat(-1, 1, 4);
    VSet face = random_face(phi_rng, K);
    if (face == 0 && K.facets().empty()) break;
    if (face == 0) face = K.facets()[0];
    auto z = random_barycentric(phi_rng, n, face);
    auto r = phi_eval(K, ts, t, z);
    ++oc.samples;
    if (!r.member) {
      Json data;
      Json tsj = Json::array();
      for (const auto& v : ts) tsj.push_back(v.str());
      data["ts"] = tsj;
      data["t"] = t.str();
      data["z"] = z.to_string();
      data["blocks"] = r.blocks.to_string();
      record_failure(oc, "phi_membership", data);
    }
  }

  if (K.is_neighbourly() && !K.facets().empty()) {
    oc.psi_applicable = true;
    for (long it = 0; it < samples; ++it) {
      std::vector<Rat> ts;
      for (int i = 0; i + 1 < n; ++i) ts.push_back(psi_rng.next_rat(-1, 1, 4));
      auto x = random_hat_point(psi_rng, K);
      auto r = psi_neighbourly_eval(K, ts, x);
      ++oc.samples;
      bool ok = r.member;
      // time-zero slice acts as the identity
      auto id = psi_neighbourly_eval(K, std::vector<Rat>(static_cast<std::size_t>(n) - 1, Rat(0)), x);
      if (!(id.out == x)) ok = false;
      if (!ok) {
        Json data;
        Json tsj = Json::array();
        for (const auto& v : ts) tsj.push_back(v.str());
        data["ts"] = tsj;
        data["x"] = x.to_string();
        data["out"] = r.out.to_string();
        data["blocks"] = r.blocks.to_string();
        record_failure(oc, "psi_neighbourly", data);
      }
    }
    for (long it = 0; it < samples; ++it) {
      std::vector<Rat> ts;
      for (int i = 0; i + 1 < n; ++i) ts.push_back(dis_rng.next_rat(-1, 1, 4));
      Rat s = dis_rng.next_rat(-1, 1, 4);
      auto x = random_hat_point(dis_rng, K);
      auto r = psi_disjoint_vertex_eval(K, ts, s, x);
      ++oc.samples;
      if (!r.member) {
        Json data;
        Json tsj = Json::array();
        for (const auto& v : ts) tsj.push_back(v.str());
        data["ts"] = tsj;
        data["s"] = s.str();
        data["x"] = x.to_string();
        data["blocks"] = r.blocks.to_string();
        record_failure(oc, "psi_disjoint_vertex", data);
      }
    }
  }
  return oc;
}

// ---- catalog -------------------------------------------------------------------

Json analyze_catalog_entry(const SimplicialComplex& K, FieldSpec field, int max_n,
                           ReportCache* cache) {
  const std::string id = complex_to_json(K).dump();
  auto cached_run = [&](const std::string& check, auto&& fn) -> Json {
    const std::string key = id + "|" + check + "|" + field.name() + "|" + kVersion;
    if (cache)
      if (auto hit = cache->get(key)) return *hit;
    Json value = fn();
    if (cache) cache->put(key, value);
    return value;
  };
  Json e;
  e["n"] = K.n();
  e["facets"] = complex_to_json(K)["facets"];
  e["neighbourly"] = K.is_neighbourly();
  e["betti"] = cached_run("betti", [&] {
    return field_dims_to_json(reduced_homology_dims(K, field));
  });
  e["crosscheck"] = cached_run("crosscheck", [&] {
    return crossval_to_json(cross_validate(K, field, max_n));
  });
  e["golod"] = cached_run("golod", [&] {
    return golod_to_json(classify_golod(K, field, max_n));
  });
  e["extractible"] = cached_run("extractible", [&] {
    return extractible_to_json(extractible_necessary(K, field));
  });
  e["series"] = cached_run("series", [&] {
    return series_to_json(golod_poincare_series(K, field, max_n));
  });
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for subset-graded face-ring cohomology"};
  app.require_subcommand(1);

  std::string complex_path;
  std::string out_path;
  long long field_p = 0;
  long samples = 10000;
  std::uint64_t seed = 0;
  int max_n = 12;
  int kn_n = 4;
  bool verify_sphere_flag = false;
  bool no_fail = false;
  bool neighbourly_only = false;
  std::string cache_dir;

  auto add_common = [&](CLI::App* sub, bool with_complex) {
    if (with_complex)
      sub->add_option("--complex", complex_path, "complex JSON file")->required();
    sub->add_option("--out", out_path, "write the JSON report here (default stdout)");
    sub->add_option("--field", field_p, "coefficients: 0 for rationals, else a prime");
    sub->add_option("--max-n", max_n, "size guard for subset-graded analyses");
  };

  auto* betti = app.add_subcommand("betti", "reduced homology of a complex");
  add_common(betti, true);
  auto* hochster = app.add_subcommand("hochster", "subset-graded Betti table");
  add_common(hochster, true);
  auto* products = app.add_subcommand("products", "scan products of cohomology classes");
  add_common(products, true);
  products->add_flag("--no-fail", no_fail, "exit 0 even when a nonzero product exists");
  auto* golod = app.add_subcommand("golod", "product and bracket classification");
  add_common(golod, true);
  auto* extractible = app.add_subcommand("extractible", "vertex-deletion wedge condition");
  add_common(extractible, true);
  auto* kn = app.add_subcommand("kn", "ordered-partition sphere");
  kn->add_option("--n", kn_n, "ground set size")->required();
  kn->add_flag("--verify-sphere", verify_sphere_flag, "run homology and ridge checks");
  kn->add_flag("--no-fail", no_fail, "exit 0 even when verification fails");
  kn->add_option("--out", out_path, "write the JSON report here (default stdout)");
  auto* verify_maps = app.add_subcommand("verify-maps", "sample the coordinate maps");
  add_common(verify_maps, true);
  verify_maps->add_option("--samples", samples, "samples per check");
  verify_maps->add_option("--seed", seed, "RNG seed");
  verify_maps->add_flag("--no-fail", no_fail, "exit 0 even on counterexamples");
  int catalog_n = 0;  // 0 resolves to the guard limit
  auto* catalog = app.add_subcommand("catalog", "analyze every complex up to isomorphism");
  catalog->add_option("--max-n", catalog_n, "largest vertex count (<= 5, or <= 6 neighbourly)");
  catalog->add_option("--field", field_p, "coefficients: 0 for rationals, else a prime");
  catalog->add_option("--seed", seed, "RNG seed recorded in the report");
  catalog->add_option("--out", out_path, "write the JSON report here (default stdout)");
  catalog->add_option("--cache", cache_dir, "content-addressed report cache directory");
  catalog->add_flag("--neighbourly", neighbourly_only, "restrict to neighbourly complexes");
  auto* crosscheck = app.add_subcommand("crosscheck", "compare the two cohomology routes");
  add_common(crosscheck, true);
  crosscheck->add_flag("--no-fail", no_fail, "exit 0 even when the routes disagree");

  CLI11_PARSE(app, argc, argv);

  try {
    const FieldSpec field = validate_field(field_p);

    if (betti->parsed()) {
      auto K = load_complex_file(complex_path);
      Json r = envelope("betti");
      r["complex"] = complex_to_json(K);
      r["homology_z"] = homology_to_json(reduced_homology_z(K));
      r["field"] = field.name();
      r["dims"] = field_dims_to_json(reduced_homology_dims(K, field));
      emit(r, out_path);
      return 0;
    }

    if (hochster->parsed()) {
      auto K = load_complex_file(complex_path);
      auto T = bigraded_betti(K, field, max_n);
      Json r = envelope("hochster");
      r["complex"] = complex_to_json(K);
      r["table"] = table_to_json(T);
      auto check = bbcg_dimension_check(T);
      r["suspension_split_ok"] = check.ok;
      emit(r, out_path);
      return 0;
    }

    if (products->parsed()) {
      auto K = load_complex_file(complex_path);
      Json r = envelope("products");
      r["complex"] = complex_to_json(K);
      r["field"] = field.name();
      bool vanish = dispatch_field(field, [&](auto fld) {
        HochsterContext<decltype(fld)> ctx(fld, K, max_n);
        auto scan = all_products_vanish(ctx);
        r["pairs_checked"] = scan.pairs_checked;
        r["all_vanish"] = scan.all_vanish;
        if (scan.witness) {
          Json w;
          w["I"] = subset_to_json(scan.witness->I);
          w["J"] = subset_to_json(scan.witness->J);
          w["p"] = scan.witness->p;
          w["q"] = scan.witness->q;
          r["witness"] = w;
        }
        return scan.all_vanish;
      });
      emit(r, out_path);
      return (!vanish && !no_fail) ? 1 : 0;
    }

    if (golod->parsed()) {
      auto K = load_complex_file(complex_path);
      Json r = envelope("golod");
      r["complex"] = complex_to_json(K);
      r["result"] = golod_to_json(classify_golod(K, field, max_n));
      emit(r, out_path);
      return 0;
    }

    if (extractible->parsed()) {
      auto K = load_complex_file(complex_path);
      Json r = envelope("extractible");
      r["complex"] = complex_to_json(K);
      r["result"] = extractible_to_json(extractible_necessary(K, field));
      emit(r, out_path);
      return 0;
    }

    if (kn->parsed()) {
      Json r = envelope("kn");
      r["n"] = kn_n;
      auto C = build_Kn(kn_n);
      r["vertex_count"] = C.vertex_count();
      r["counts_by_len"] = C.counts_by_len();
      bool ok = true;
      if (verify_sphere_flag) {
        auto check = verify_sphere(kn_n);
        ok = check.ok;
        Json v;
        v["homology_ok"] = check.homology_ok;
        v["pseudomanifold_ok"] = check.pseudomanifold_ok;
        v["homology"] = homology_to_json(check.homology);
        v["top_count"] = check.top_count;
        r["verify"] = v;
      }
      emit(r, out_path);
      return (!ok && !no_fail) ? 1 : 0;
    }

    if (verify_maps->parsed()) {
      auto K = load_complex_file(complex_path);
      if (K.is_void() || K.n() == 0) throw input_error("need a complex with vertices");
      Json r = envelope("verify-maps");
      r["complex"] = complex_to_json(K);
      r["samples_per_check"] = samples;
      r["seed"] = seed;
      auto oc = run_map_checks(K, samples, seed);
      r["samples_run"] = oc.samples;
      r["psi_applicable"] = oc.psi_applicable;
      r["failures"] = oc.failures;
      r["counterexamples"] = oc.counterexamples;
      emit(r, out_path);
      return (oc.failures > 0 && !no_fail) ? 1 : 0;
    }

    if (catalog->parsed()) {
      if (catalog_n == 0) catalog_n = neighbourly_only ? 6 : 5;
      Json r = envelope("catalog");
      r["field"] = field.name();
      r["seed"] = seed;
      r["neighbourly_only"] = neighbourly_only;
      r["max_n"] = catalog_n;
      std::optional<ReportCache> cache_store;
      if (!cache_dir.empty()) cache_store.emplace(cache_dir);
      ReportCache* cache = cache_store ? &*cache_store : nullptr;
      Json entries = Json::array();
      long count = 0;
      for (int n = 1; n <= catalog_n; ++n) {
        auto list = neighbourly_only ? neighbourly_catalog(n) : catalog_complexes(n);
        for (const auto& K : list) {
          entries.push_back(analyze_catalog_entry(K, field, 12, cache));
          ++count;
        }
      }
      r["complex_count"] = count;
      r["entries"] = entries;
      emit(r, out_path);
      return 0;
    }

    if (crosscheck->parsed()) {
      auto K = load_complex_file(complex_path);
      Json r = envelope("crosscheck");
      r["complex"] = complex_to_json(K);
      r["field"] = field.name();
      auto cv = cross_validate(K, field, max_n);
      r["result"] = crossval_to_json(cv);
      emit(r, out_path);
      return (!cv.ok && !no_fail) ? 1 : 0;
    }
  } catch (const size_guard_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
