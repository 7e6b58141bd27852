#ifndef WEILBOUNDS_JSON_IO_HPP
#define WEILBOUNDS_JSON_IO_HPP

// Serialization of the module types; pulls in the vendored nlohmann/json
// single header, so only targets that opt in pay for it.

#include "weilbounds/conductor.hpp"
#include "weilbounds/genus.hpp"
#include "weilbounds/plancherel.hpp"
#include "weilbounds/polynomial.hpp"
#include "weilbounds/trig.hpp"
#include "weilbounds/weil.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace weilbounds {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Integers that fit in int64 stay JSON numbers; anything wider becomes a
// decimal string.
inline json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<int64_t>::min() &&
      v <= std::numeric_limits<int64_t>::max())
    return v.convert_to<int64_t>();
  return v.str();
}

inline json poly_to_json(const IntPolynomial& p) {
  // Arrays of decimal coefficient strings, lowest degree first.
  return json(p.coeff_strings());
}

inline json enumeration_to_json(const BigInt& q, unsigned w, unsigned degree,
                                const std::vector<IntPolynomial>& polys,
                                bool irreducible_only) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["q"] = bigint_to_json(q);
  out["w"] = w;
  out["degree"] = degree;
  out["irreducible_only"] = irreducible_only;
  out["count"] = polys.size();
  json arr = json::array();
  for (const auto& p : polys) arr.push_back(poly_to_json(p));
  out["polynomials"] = std::move(arr);
  return out;
}

inline json depth_report_to_json(const DepthBoundReport& r, unsigned n, unsigned A,
                                 const LocalFieldParams& field) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["method"] = r.method == DepthMethod::kV1 ? "v1" : "v2";
  out["n"] = n;
  out["A"] = A;
  out["p"] = bigint_to_json(field.p);
  out["e_K"] = field.e_K;
  if (r.method == DepthMethod::kV1) {
    out["f"] = bigint_to_json(r.f);
    out["l"] = bigint_to_json(r.l);
    out["residue_order"] = bigint_to_json(r.residue_order);
    out["residue_field_size"] = bigint_to_json(r.residue_field_size);
    out["gl_order"] = bigint_to_json(r.group_order);
  } else {
    out["sylow_order_bound"] = bigint_to_json(r.group_order);
  }
  out["depth"] = to_fraction_string(r.depth);
  out["conductor"] = to_fraction_string(r.conductor);
  json caveats = json::array();
  if (r.p2_caveat) caveats.push_back("p2_caveat");
  out["caveats"] = std::move(caveats);
  return out;
}

inline json trig_to_json(const TrigPolynomial& p) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["rank"] = p.rank();
  out["degree"] = p.degree();
  json coeffs = json::array();
  p.for_each([&](std::span<const int> nu, const std::complex<double>& c) {
    if (c == std::complex<double>{0.0, 0.0}) return;
    json entry = json::array();
    json idx = json::array();
    for (int v : nu) idx.push_back(v);
    entry.push_back(std::move(idx));
    entry.push_back(c.real());
    entry.push_back(c.imag());
    coeffs.push_back(std::move(entry));
  });
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline json lp_result_to_json(const GenusLPResult& r) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["status"] =
      r.status == GenusLPResult::Status::kOptimal ? "optimal" : "unbounded";
  out["mode"] = r.exact_mode ? "exact" : "float";
  out["n_max"] = r.n_max;
  if (r.status == GenusLPResult::Status::kOptimal) {
    if (r.optimum_exact)
      out["optimum"] = to_fraction_string(*r.optimum_exact);
    else
      out["optimum"] = r.optimum_value;
    out["optimum_value"] = r.optimum_value;
    out["floor"] = static_cast<long long>(std::floor(r.optimum_value + 1e-12));
    json mult = json::array();
    if (!r.multiplicities_exact.empty()) {
      for (const auto& m : r.multiplicities_exact)
        mult.push_back(to_fraction_string(m));
    } else {
      for (double m : r.multiplicities) mult.push_back(m);
    }
    out["multiplicities"] = std::move(mult);
    out["binding_rows"] = r.binding_rows;
    if (!r.exact_mode) out["max_residual"] = r.max_residual;
  }
  return out;
}

// Family snapshot with the seed and density tag needed to replay it.
inline json family_to_json(const SpectralFamily& f) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["rank"] = f.rank;
  out["seed"] = f.meta.seed;
  out["density"] = f.meta.density_tag;
  out["size"] = f.meta.size;
  if (f.meta.q != 0) out["q"] = bigint_to_json(f.meta.q);
  out["points"] = f.points;
  out["weights"] = f.weights;
  return out;
}

inline SpectralFamily family_from_json(const json& in) {
  SpectralFamily f;
  f.rank = in.at("rank").get<unsigned>();
  f.meta.seed = in.at("seed").get<uint64_t>();
  f.meta.density_tag = in.at("density").get<std::string>();
  f.meta.size = in.at("size").get<size_t>();
  f.points = in.at("points").get<std::vector<double>>();
  f.weights = in.at("weights").get<std::vector<double>>();
  if (f.points.size() != f.weights.size() * f.rank)
    throw ValidationError("family snapshot: size mismatch");
  return f;
}

inline std::string decay_rows_to_csv(const std::vector<DecayRow>& rows) {
  std::string csv = "size,kappa,exact,lower,upper,ceiling\n";
  char line[256];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%zu,%u,%.12g,%.12g,%.12g,%.12g\n", r.size,
                  r.kappa, r.exact, r.lower, r.upper, r.ceiling);
    csv += line;
  }
  return csv;
}

inline json decay_rows_to_json(const std::vector<DecayRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["size"] = r.size;
    row["kappa"] = r.kappa;
    row["exact"] = r.exact;
    row["lower"] = r.lower;
    row["upper"] = r.upper;
    row["ceiling"] = r.ceiling;
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace weilbounds

#endif
