// Command-line front end: every library module behind one binary with
// JSON/CSV output, deterministic seeds, and replayable run manifests.

#include "weilbounds/json_io.hpp"
#include "weilbounds/parallel.hpp"
#include "weilbounds/vaaler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using weilbounds::json;

#ifndef WEILBOUNDS_VERSION
#define WEILBOUNDS_VERSION "0.0.0"
#endif

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_of(std::string_view s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(s)));
  return buf;
}

struct RunOutput {
  std::string primary;          // what goes to stdout / --out
  json payload;                 // set when the primary output is JSON
  bool is_json = false;
  std::optional<uint64_t> seed;
};

// Uniform CSV rendering: tabular payloads get real tables, everything else
// flattens to key,value rows (arrays and objects JSON-encoded in place).
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string payload_to_csv(const json& payload) {
  std::ostringstream out;
  if (payload.contains("polynomials")) {
    out << "degree,coefficients\n";
    for (const auto& poly : payload.at("polynomials")) {
      std::string coeffs;
      for (const auto& c : poly) {
        if (!coeffs.empty()) coeffs += " ";
        coeffs += c.get<std::string>();
      }
      out << (poly.size() ? poly.size() - 1 : 0) << "," << csv_escape(coeffs) << "\n";
    }
    return out.str();
  }
  if (payload.contains("by_degree")) {
    out << "degree,count,cumulative\n";
    const auto& by = payload.at("by_degree");
    const auto& cum = payload.at("cumulative");
    for (auto it = by.begin(); it != by.end(); ++it)
      out << it.key() << "," << it.value().get<size_t>() << ","
          << cum.at(it.key()).get<size_t>() << "\n";
    return out.str();
  }
  out << "key,value\n";
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (it.key() == "manifest") continue;
    out << it.key() << ","
        << csv_escape(it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
        << "\n";
  }
  return out.str();
}

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
  std::string manifest_path;
};

std::vector<size_t> parse_sizes(const std::string& csv) {
  std::vector<size_t> sizes;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) sizes.push_back(std::stoull(tok));
  if (sizes.empty()) throw weilbounds::ValidationError("no sizes given");
  return sizes;
}

std::pair<double, double> parse_interval(const std::string& csv) {
  auto comma = csv.find(',');
  if (comma == std::string::npos)
    throw weilbounds::ValidationError("interval must be 'a,b'");
  return {std::stod(csv.substr(0, comma)), std::stod(csv.substr(comma + 1))};
}

weilbounds::BigInt parse_bigint(const std::string& s) {
  try {
    return weilbounds::BigInt(s);
  } catch (const std::exception&) {
    throw weilbounds::ValidationError("bad integer: " + s);
  }
}

// ---- subcommand implementations ----------------------------------------

RunOutput run_weil_enum(const std::string& q, unsigned w, unsigned degree,
                        bool irreducible, unsigned threads) {
  auto params = weilbounds::WeilParams::make(parse_bigint(q), w);
  weilbounds::EnumerateOptions opts;
  opts.irreducible_only = irreducible;
  opts.threads = threads;
  auto polys = weilbounds::enumerate_weil_polynomials(params, degree, opts);
  RunOutput out;
  out.is_json = true;
  out.payload =
      weilbounds::enumeration_to_json(params.q, w, degree, polys, irreducible);
  return out;
}

RunOutput run_weil_count(const std::string& q, unsigned w, unsigned dmax) {
  auto counts = weilbounds::count_weil_integers(parse_bigint(q), w, dmax);
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["q"] = q;
  out.payload["w"] = w;
  json by = json::object(), cum = json::object();
  for (const auto& [d, n] : counts.by_degree) by[std::to_string(d)] = n;
  for (const auto& [d, n] : counts.cumulative) cum[std::to_string(d)] = n;
  out.payload["by_degree"] = std::move(by);
  out.payload["cumulative"] = std::move(cum);
  return out;
}

RunOutput run_hecke(const std::string& p, unsigned k, unsigned A) {
  auto cands = weilbounds::hecke_trace_candidates(parse_bigint(p), k, A);
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["p"] = p;
  out.payload["k"] = k;
  out.payload["A"] = A;
  out.payload["count"] = cands.size();
  json arr = json::array();
  for (const auto& c : cands) arr.push_back(weilbounds::poly_to_json(c));
  out.payload["polynomials"] = std::move(arr);
  return out;
}

RunOutput run_bounds_depth(unsigned n, unsigned A, const std::string& p,
                           unsigned eK, const std::string& method) {
  auto field = weilbounds::LocalFieldParams::make(parse_bigint(p), eK);
  weilbounds::DepthBoundReport report;
  if (method == "v1")
    report = weilbounds::depth_bound_v1(n, A, field);
  else if (method == "v2")
    report = weilbounds::depth_bound_v2(n, A, field);
  else
    throw weilbounds::ValidationError("method must be v1 or v2");
  RunOutput out;
  out.is_json = true;
  out.payload = weilbounds::depth_report_to_json(report, n, A, field);
  return out;
}

RunOutput run_bounds_lcm_phi(const std::string& B) {
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["B"] = B;
  out.payload["lcm"] = weilbounds::bigint_to_json(weilbounds::lcm_phi_le(parse_bigint(B)));
  return out;
}

RunOutput run_bounds_cyclotomic(unsigned n, const std::string& N) {
  auto r = weilbounds::cyclotomic_ratio(n, parse_bigint(N));
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["n"] = n;
  out.payload["N"] = N;
  out.payload["ratio"] = weilbounds::to_fraction_string(r.ratio);
  out.payload["verdict"] = r.within_n_to_n ? "<= n^n" : "> n^n";
  return out;
}

RunOutput run_bounds_gl(unsigned n, const std::string& Q) {
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["n"] = n;
  out.payload["Q"] = Q;
  out.payload["order"] =
      weilbounds::bigint_to_json(weilbounds::gl_order(n, parse_bigint(Q)));
  return out;
}

RunOutput run_bounds_sylow(unsigned n, const std::string& p, unsigned A) {
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["n"] = n;
  out.payload["p"] = p;
  out.payload["A"] = A;
  out.payload["bound"] =
      weilbounds::bigint_to_json(weilbounds::sylow_order_bound(n, parse_bigint(p), A));
  return out;
}

RunOutput run_vaaler(const std::string& interval, unsigned kappa,
                     const std::string& emit_csv, size_t grid) {
  auto [a, b] = parse_interval(interval);
  auto I = weilbounds::TorusInterval::make(a, b);
  auto pair = weilbounds::vaaler_pair(I, kappa);
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["interval"] = {I.a, I.b};
  out.payload["kappa"] = kappa;
  out.payload["majorant_mean"] = weilbounds::to_fraction_string(pair.majorant_mean);
  out.payload["minorant_mean"] = weilbounds::to_fraction_string(pair.minorant_mean);
  out.payload["mean_gap"] =
      weilbounds::to_fraction_string(pair.majorant_mean - pair.minorant_mean);
  out.payload["mean_gap_value"] =
      (pair.majorant_mean - pair.minorant_mean).convert_to<double>();
  out.payload["majorant"] = weilbounds::trig_to_json(pair.majorant);
  out.payload["minorant"] = weilbounds::trig_to_json(pair.minorant);
  if (!emit_csv.empty()) {
    std::ofstream csv(emit_csv);
    if (!csv) throw weilbounds::ValidationError("cannot open " + emit_csv);
    csv << "x,minorant,indicator,majorant\n";
    for (size_t k = 0; k < grid; ++k) {
      double x = static_cast<double>(k) / static_cast<double>(grid);
      csv << x << "," << pair.minorant.evaluate({x}) << ","
          << (I.contains(x) ? 1 : 0) << "," << pair.majorant.evaluate({x}) << "\n";
    }
    out.payload["csv_path"] = emit_csv;
  }
  return out;
}

RunOutput run_simulate(const std::string& q, unsigned k, unsigned A,
                       const std::string& sizes_csv, uint64_t seed,
                       const std::string& density_name, const std::string& format) {
  if (density_name != "lebesgue")
    throw weilbounds::ValidationError(
        "only the lebesgue density ships built in; supply tables via the library");
  auto density = weilbounds::DensitySpec::lebesgue(1);
  auto result = weilbounds::serre_decay_experiment(parse_bigint(q), k, A,
                                                   parse_sizes(sizes_csv), seed,
                                                   density);
  RunOutput out;
  out.seed = seed;
  if (format == "csv") {
    out.primary = weilbounds::decay_rows_to_csv(result.rows);
    if (result.empty_admissible_set)
      std::cerr << "weilbounds: empty admissible set; zero rows\n";
    return out;
  }
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["q"] = q;
  out.payload["k"] = k;
  out.payload["A"] = A;
  out.payload["seed"] = seed;
  out.payload["density"] = density_name;
  out.payload["admissible_points"] = result.admissible_points;
  out.payload["empty_admissible_set"] = result.empty_admissible_set;
  out.payload["rows"] = weilbounds::decay_rows_to_json(result.rows);
  return out;
}

RunOutput run_genus_lp(const std::string& q, const std::string& angles,
                       unsigned nmax, const std::string& mode) {
  auto S = weilbounds::AngleSet::parse(angles);
  weilbounds::LPMode m = weilbounds::LPMode::kAuto;
  if (mode == "exact")
    m = weilbounds::LPMode::kExact;
  else if (mode == "float")
    m = weilbounds::LPMode::kFloat;
  else if (mode != "auto")
    throw weilbounds::ValidationError("mode must be auto, exact or float");
  weilbounds::BigInt qv = parse_bigint(q);
  unsigned rows = nmax ? nmax : weilbounds::default_n_max(S);
  auto result = weilbounds::max_genus_lp(qv, S, rows, m);
  RunOutput out;
  out.is_json = true;
  out.payload = weilbounds::lp_result_to_json(result);
  out.payload["q"] = q;
  out.payload["angles"] = S.angles;
  if (result.status == weilbounds::GenusLPResult::Status::kOptimal) {
    weilbounds::AngleSet withmult = S;
    withmult.multiplicities = result.multiplicities;
    double worst = 0.0;
    for (unsigned n = 1; n <= rows; ++n)
      worst = std::min(worst, weilbounds::point_count(qv, n, withmult));
    out.payload["min_point_count"] = worst;
    out.payload["feasible"] = worst >= -1e-9;
  }
  return out;
}

RunOutput run_genus_ehr(const std::string& q, unsigned s) {
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["q"] = q;
  out.payload["s"] = s;
  out.payload["bound"] = weilbounds::ehr_bound(parse_bigint(q), s);
  out.payload["log_base"] = "natural";
  return out;
}

RunOutput run_genus_fermat(const std::string& p, unsigned r) {
  auto fd = weilbounds::fermat_data(parse_bigint(p), r);
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["p"] = p;
  out.payload["r"] = r;
  out.payload["genus"] = weilbounds::bigint_to_json(fd.genus);
  out.payload["angles"] = fd.angles;
  out.payload["multiplicity_per_angle"] = fd.multiplicity_per_angle;
  out.payload["points_over_square_field"] =
      weilbounds::bigint_to_json(fd.points_over_square_field);
  out.payload["maximality"] = fd.maximality_check;
  return out;
}

RunOutput run_genus_dejong(const std::string& q, unsigned d, double c) {
  auto dj = weilbounds::dejong_genus_bound(parse_bigint(q), d, c);
  RunOutput out;
  out.is_json = true;
  out.payload["schema_version"] = weilbounds::kSchemaVersion;
  out.payload["q"] = q;
  out.payload["d"] = d;
  out.payload["c"] = c;
  out.payload["p1_product"] = weilbounds::bigint_to_json(dj.p1_product);
  json factors = json::array(), values = json::array();
  for (const auto& f : dj.factors) factors.push_back(weilbounds::poly_to_json(f));
  for (const auto& v : dj.p1_values) values.push_back(weilbounds::bigint_to_json(v));
  out.payload["factors"] = std::move(factors);
  out.payload["p1_values"] = std::move(values);
  out.payload["genus_bound"] = dj.genus_bound;
  out.payload["cap_hit"] = dj.cap_hit;
  out.payload["bracketing_ok"] = dj.bracketing_ok;
  out.payload["caveat"] = "implicit constant c is a parameter; only the shape is backed";
  return out;
}

// ---- manifest + dispatch ------------------------------------------------

int run(std::vector<std::string> args);

json make_manifest(const std::string& subcommand, const std::vector<std::string>& argv,
                   const std::optional<uint64_t>& seed, const std::string& digest) {
  json manifest;
  manifest["schema_version"] = weilbounds::kSchemaVersion;
  manifest["subcommand"] = subcommand;
  manifest["argv"] = argv;
  if (seed)
    manifest["seed"] = *seed;
  else
    manifest["seed"] = nullptr;
  manifest["version"] = WEILBOUNDS_VERSION;
  manifest["output_digest"] = digest;
  return manifest;
}

int emit(RunOutput&& result, const std::string& subcommand,
         const std::vector<std::string>& argv, const CommonOpts& common) {
  if (result.is_json && common.format == "csv") {
    result.is_json = false;
    result.primary = payload_to_csv(result.payload);
  }
  std::string primary;
  if (result.is_json) {
    std::string body = result.payload.dump(2);
    json manifest = make_manifest(subcommand, argv, result.seed, digest_of(body));
    result.payload["manifest"] = manifest;
    primary = result.payload.dump(2) + "\n";
    if (!common.manifest_path.empty()) {
      std::ofstream mf(common.manifest_path);
      mf << manifest.dump(2) << "\n";
    }
    std::cerr << "manifest: " << manifest.dump() << "\n";
  } else {
    primary = result.primary;
    json manifest = make_manifest(subcommand, argv, result.seed, digest_of(primary));
    if (!common.manifest_path.empty()) {
      std::ofstream mf(common.manifest_path);
      mf << manifest.dump(2) << "\n";
    }
    std::cerr << "manifest: " << manifest.dump() << "\n";
  }
  if (!common.out_path.empty()) {
    std::ofstream out(common.out_path, std::ios::binary);
    if (!out) throw weilbounds::ValidationError("cannot open " + common.out_path);
    out << primary;
  } else {
    std::cout << primary;
  }
  return 0;
}

int run_replay(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw weilbounds::ValidationError("cannot open " + manifest_path);
  json manifest = json::parse(in);
  std::vector<std::string> argv = manifest.at("argv").get<std::vector<std::string>>();
  return run(std::move(argv));
}

int run(std::vector<std::string> args) {
  CLI::App app{"certified Weil-number enumeration, ramification-bound "
               "calculators, extremal trigonometric approximation, spectral "
               "family simulation, and genus bounds"};
  app.require_subcommand(1);
  CommonOpts common;
  app.add_option("--format", common.format, "json or csv")->capture_default_str();
  app.add_option("--out", common.out_path, "write primary output to a file");
  app.add_option("--manifest", common.manifest_path, "write the run manifest to a file");
  app.fallthrough();

  // weil-enum
  std::string q = "2", p = "2", N = "1", B = "1", Q = "2", angles, interval,
              sizes = "100,1000,10000", density = "lebesgue", method = "v1",
              mode = "auto", emit_csv, manifest_file;
  unsigned w = 1, degree = 2, dmax = 2, k = 2, A = 1, n = 1, eK = 1, nmax = 0,
           kappa = 8, r = 1, s = 1, d = 1,
           threads = weilbounds::default_thread_count();
  uint64_t seed = 42;
  size_t grid = 1024;
  double c = 1.0;
  bool irreducible = false;

  auto* enum_cmd = app.add_subcommand("weil-enum", "enumerate Weil polynomials");
  enum_cmd->add_option("--q", q, "prime power")->required();
  enum_cmd->add_option("--weight", w, "weight w (N = q^w)")->required();
  enum_cmd->add_option("--degree", degree, "degree m")->required();
  enum_cmd->add_flag("--irreducible", irreducible, "keep irreducible only");
  enum_cmd->add_option("--threads", threads, "workers for the search");

  auto* count_cmd = app.add_subcommand("weil-count", "count irreducible Weil minimal polynomials");
  count_cmd->add_option("--q", q)->required();
  count_cmd->add_option("--weight", w)->required();
  count_cmd->add_option("--dmax", dmax)->required();

  auto* hecke_cmd = app.add_subcommand("hecke", "candidate Hecke eigenvalue minimal polynomials");
  hecke_cmd->add_option("--p", p)->required();
  hecke_cmd->add_option("--k", k, "modular weight")->required();
  hecke_cmd->add_option("--A", A, "degree bound")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "depth/conductor bound calculators");
  bounds_cmd->require_subcommand(1);
  auto* depth_cmd = bounds_cmd->add_subcommand("depth", "depth and conductor bound");
  depth_cmd->add_option("--n", n)->required();
  depth_cmd->add_option("--A", A)->required();
  depth_cmd->add_option("--p", p)->required();
  depth_cmd->add_option("--eK", eK);
  depth_cmd->add_option("--method", method, "v1 or v2");
  auto* lcm_cmd = bounds_cmd->add_subcommand("lcm-phi", "lcm of m with phi(m) <= B");
  lcm_cmd->add_option("--B", B)->required();
  auto* cyc_cmd = bounds_cmd->add_subcommand("cyclotomic", "cyclotomic degree ratio");
  cyc_cmd->add_option("--n", n)->required();
  cyc_cmd->add_option("--N", N)->required();
  auto* gl_cmd = bounds_cmd->add_subcommand("gl", "|GL_n(F_Q)|");
  gl_cmd->add_option("--n", n)->required();
  gl_cmd->add_option("--Q", Q)->required();
  auto* sylow_cmd = bounds_cmd->add_subcommand("sylow", "p-Sylow order bound");
  sylow_cmd->add_option("--n", n)->required();
  sylow_cmd->add_option("--p", p)->required();
  sylow_cmd->add_option("--A", A)->required();

  auto* vaaler_cmd = app.add_subcommand("vaaler", "extremal majorant/minorant of an interval");
  vaaler_cmd->add_option("--interval", interval, "a,b with [a,b) on [0,1)")->required();
  vaaler_cmd->add_option("--kappa", kappa, "degree")->required();
  vaaler_cmd->add_option("--emit-csv", emit_csv, "sample table path");
  vaaler_cmd->add_option("--grid", grid, "sample count for --emit-csv");

  auto* sim_cmd = app.add_subcommand("simulate", "level-aspect sparsity decay experiment");
  sim_cmd->add_option("--q", q)->required();
  sim_cmd->add_option("--k", k, "modular weight")->required();
  sim_cmd->add_option("--A", A, "degree bound")->required();
  sim_cmd->add_option("--sizes", sizes, "comma-separated family sizes");
  sim_cmd->add_option("--seed", seed);
  sim_cmd->add_option("--density", density, "lebesgue");

  auto* genus_cmd = app.add_subcommand("genus", "genus bounds for curves with constrained angles");
  genus_cmd->require_subcommand(1);
  auto* lp_cmd = genus_cmd->add_subcommand("lp", "trigonometric-inequality LP");
  lp_cmd->add_option("--q", q)->required();
  lp_cmd->add_option("--angles", angles, "e.g. 0.5pi,1pi")->required();
  lp_cmd->add_option("--nmax", nmax, "rows (default from angle denominators)");
  lp_cmd->add_option("--mode", mode, "auto, exact or float");
  auto* ehr_cmd = genus_cmd->add_subcommand("ehr", "Elkies-Howe-Ritzenthaler bound");
  ehr_cmd->add_option("--q", q)->required();
  ehr_cmd->add_option("--s", s, "|S|")->required();
  auto* fermat_cmd = genus_cmd->add_subcommand("fermat", "Fermat curve data");
  fermat_cmd->add_option("--p", p)->required();
  fermat_cmd->add_option("--r", r)->required();
  auto* dejong_cmd = genus_cmd->add_subcommand("dejong", "class-group exponent pipeline");
  dejong_cmd->add_option("--q", q)->required();
  dejong_cmd->add_option("--d", d, "isogeny factor dimension bound")->required();
  dejong_cmd->add_option("--c", c, "Madan-Madden constant");

  auto* replay_cmd = app.add_subcommand("replay", "re-run a saved manifest");
  replay_cmd->add_option("--manifest-file", manifest_file, "manifest path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (common.format != "json" && common.format != "csv")
    throw weilbounds::ValidationError("format must be json or csv");
  if (replay_cmd->parsed()) return run_replay(manifest_file);

  RunOutput result;
  std::string name;
  if (enum_cmd->parsed()) {
    name = "weil-enum";
    result = run_weil_enum(q, w, degree, irreducible, threads);
  } else if (count_cmd->parsed()) {
    name = "weil-count";
    result = run_weil_count(q, w, dmax);
  } else if (hecke_cmd->parsed()) {
    name = "hecke";
    result = run_hecke(p, k, A);
  } else if (bounds_cmd->parsed()) {
    if (depth_cmd->parsed()) {
      name = "bounds depth";
      result = run_bounds_depth(n, A, p, eK, method);
    } else if (lcm_cmd->parsed()) {
      name = "bounds lcm-phi";
      result = run_bounds_lcm_phi(B);
    } else if (cyc_cmd->parsed()) {
      name = "bounds cyclotomic";
      result = run_bounds_cyclotomic(n, N);
    } else if (gl_cmd->parsed()) {
      name = "bounds gl";
      result = run_bounds_gl(n, Q);
    } else {
      name = "bounds sylow";
      result = run_bounds_sylow(n, p, A);
    }
  } else if (vaaler_cmd->parsed()) {
    name = "vaaler";
    result = run_vaaler(interval, kappa, emit_csv, grid);
  } else if (sim_cmd->parsed()) {
    name = "simulate";
    result = run_simulate(q, k, A, sizes, seed, density, common.format);
  } else if (genus_cmd->parsed()) {
    if (lp_cmd->parsed()) {
      name = "genus lp";
      result = run_genus_lp(q, angles, nmax, mode);
    } else if (ehr_cmd->parsed()) {
      name = "genus ehr";
      result = run_genus_ehr(q, s);
    } else if (fermat_cmd->parsed()) {
      name = "genus fermat";
      result = run_genus_fermat(p, r);
    } else {
      name = "genus dejong";
      result = run_genus_dejong(q, d, c);
    }
  } else {
    return 2;
  }
  return emit(std::move(result), name, args, common);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const weilbounds::ValidationError& e) {
    std::cerr << "weilbounds: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "weilbounds: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "weilbounds: internal error: " << e.what() << "\n";
    return 3;
  }
}
