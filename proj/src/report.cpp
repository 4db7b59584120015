#include "hodge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hodge {

double round15(double x)
{
  if (!std::isfinite(x) || x == 0.0) { return x == 0.0 ? 0.0 : x; }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json number(double x)
{
  if (!std::isfinite(x)) { return nullptr; }
  return round15(x);
}

Json to_json(const MetricParams & m)
{
  return Json{{"a", number(m.a())}, {"b", number(m.b())}, {"c", number(m.c())}, {"group", to_string(m.group())}};
}

namespace {

Json triple(const std::array<double, 3> & v)
{
  return Json::array({number(v[0]), number(v[1]), number(v[2])});
}

}  // namespace

Json to_json(const GeometryTensors & g)
{
  const auto & k = g.curvature;
  return Json{
    {"christoffel",
     {{"gamma1", number(g.christoffel.gamma1)},
      {"gamma2", number(g.christoffel.gamma2)},
      {"gamma3", number(g.christoffel.gamma3)}}},
    {"curvature_operator", {{"r12", number(k.r12)}, {"r13", number(k.r13)}, {"r23", number(k.r23)}}},
    {"ricci", triple(k.ricci)},
    {"scal", number(k.scal)},
    {"norm_ric2", number(k.norm_ric2)},
    {"norm_r2", number(k.norm_r2)},
    {"cnabla", triple(g.cnabla)},
    {"volume", number(g.volume)},
  };
}

Json to_json(const HeatInvariants & h)
{
  const auto & si = h.invariants;
  return Json{
    {"volume", number(si.volume)},
    {"scal", number(si.scal)},
    {"lambda1", number(si.lambda1)},
    {"group", to_string(si.group)},
    {"norm_ric2", si.norm_ric2 ? number(*si.norm_ric2) : Json(nullptr)},
    {"norm_r2", si.norm_r2 ? number(*si.norm_r2) : Json(nullptr)},
    {"a2_functions", number(h.a2_functions)},
    {"a2_one_forms", number(h.a2_one_forms)},
  };
}

Json spectrum_rows(const Spectrum & s)
{
  Json rows = Json::array();
  for (const auto & e : s.entries) {
    rows.push_back({{"eigenvalue", number(e.eigenvalue)},
                    {"multiplicity", e.multiplicity},
                    {"k", e.k},
                    {"degree", e.degree},
                    {"tag", to_string(e.tag)}});
  }
  return rows;
}

Json berger_rows(const BergerParams & p, Group g, int k_max)
{
  struct Row
  {
    BergerEigenvalue e;
    int multiplicity;
  };
  std::vector<Row> all;
  for (int k = 0; k <= k_max; ++k) {
    if (!weight_contributes(g, k)) { continue; }
    for (const auto & e : berger_block_spectrum(WeightIndex(k), p)) {
      all.push_back({e, (k + 1) * e.multiplicity_in_block});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Row & x, const Row & y) {
    if (x.e.value != y.e.value) { return x.e.value < y.e.value; }
    return x.e.k < y.e.k;
  });
  Json rows = Json::array();
  for (const auto & r : all) {
    rows.push_back({{"eigenvalue", number(r.e.value)},
                    {"multiplicity", r.multiplicity},
                    {"k", r.e.k},
                    {"degree", 1},
                    {"tag", r.e.family == BergerFamily::nu ? "exact" : "coexact"},
                    {"family", r.e.label()}});
  }
  return rows;
}

Json to_json(const Lambda1Result & r)
{
  Json tied = Json::array();
  for (auto b : r.tied_branches) { tied.push_back(to_string(b)); }
  Json j{
    {"lambda1", number(r.value)},
    {"attaining_branch", to_string(r.attaining_branch)},
    {"tied_branches", tied},
    {"certified", r.certified},
    {"k_searched", r.k_searched},
    {"numerical_min", number(r.numerical_min)},
    {"numerical_argmin_k", r.numerical_argmin_k},
  };
  if (r.certificate) {
    const auto & c = *r.certificate;
    Json bounds = Json::array();
    for (const auto & [k, b] : c.per_k_bounds) { bounds.push_back({{"k", k}, {"bound", number(b)}}); }
    j["certificate"] = {{"k0", c.k0},
                        {"bound_at_k0", number(c.bound_at_k0)},
                        {"candidate_min", number(c.candidate_min)},
                        {"per_k_bounds", bounds}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json to_json(const StressReport & r)
{
  const auto & o = r.options;
  Json violations = Json::array();
  for (const auto & v : r.violations) {
    violations.push_back({{"index", v.index},
                          {"metric", triple(v.metric)},
                          {"numerical_min", number(v.numerical_min)},
                          {"formula", number(v.formula)},
                          {"argmin_k", v.argmin_k},
                          {"reason", v.reason}});
  }
  Json hist = Json::object();
  for (const auto & [k, n] : r.argmin_k_histogram) { hist[std::to_string(k)] = n; }
  return Json{
    {"seed", o.seed},
    {"samples", o.samples},
    {"box", Json::array({number(o.lo), number(o.hi)})},
    {"k_max", o.k_max},
    {"group", to_string(o.group)},
    {"rng", "mt19937_64(seed xor sample_index), 53-bit uniforms"},
    {"violations", violations},
    {"max_rel_dev", number(r.max_rel_dev)},
    {"argmin_k_histogram", hist},
    {"pass", r.pass()},
  };
}

Json to_json(const InversionResult & r)
{
  return Json{
    {"abc_sorted", triple(r.abc_sorted)},
    {"branch", to_string(r.branch)},
    {"residuals",
     {{"volume", number(r.residuals.volume)},
      {"scal", number(r.residuals.scal)},
      {"lambda1", number(r.residuals.lambda1)},
      {"norm_ric2", number(r.residuals.norm_ric2)}}},
    {"sigma", Json::array({number(r.sigma1), number(r.sigma2), number(r.sigma3)})},
    {"newton_inequalities", r.newton_inequalities},
    {"candidates", r.candidates},
    {"ricci_disambiguated", r.ricci_disambiguated},
  };
}

Json to_json(const CoexactBoundReport & r)
{
  Json violations = Json::array();
  for (const auto & [k, v] : r.violations) { violations.push_back({{"k", k}, {"eigenvalue", number(v)}}); }
  return Json{
    {"k_max", r.k_max},
    {"bound", number(r.bound)},
    {"min_coexact", number(r.min_coexact)},
    {"min_coexact_k", r.min_coexact_k},
    {"attained_at_k0", r.attained_at_k0},
    {"violations", violations},
    {"pass", r.pass()},
  };
}

Json to_json(const RoundCurlReport & r)
{
  Json moduli = Json::array();
  for (const auto & [k, v] : r.curl_moduli) { moduli.push_back({{"k", k}, {"modulus", number(v)}}); }
  return Json{
    {"k_max", r.k_max},
    {"max_integer_deviation", number(r.max_integer_deviation)},
    {"curl_moduli", moduli},
    {"pass", r.pass},
  };
}

std::string dump_json(const Json & report)
{
  return report.dump(2) + "\n";
}

namespace {

std::string scalar_text(const Json & v)
{
  if (v.is_string()) { return v.get<std::string>(); }
  return v.dump();
}

void flatten(const Json & v, const std::string & path, std::vector<std::pair<std::string, std::string>> & out)
{
  if (v.is_object()) {
    if (v.empty()) { out.emplace_back(path, "{}"); }
    for (const auto & [key, child] : v.items()) { flatten(child, path.empty() ? key : path + "." + key, out); }
  } else if (v.is_array()) {
    if (v.empty()) { out.emplace_back(path, "[]"); }
    for (std::size_t i = 0; i < v.size(); ++i) { flatten(v[i], path + "." + std::to_string(i), out); }
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

}  // namespace

std::string dump_csv(const Json & report)
{
  std::ostringstream out;
  std::vector<std::pair<std::string, std::string>> fields;
  const Json * rows = nullptr;
  for (const auto & [key, value] : report.items()) {
    if (key == "rows" && value.is_array()) {
      rows = &value;
      continue;
    }
    flatten(value, key, fields);
  }

  const char * prefix = rows ? "# " : "";
  if (!rows) { out << "field,value\n"; }
  for (const auto & [k, v] : fields) { out << prefix << k << ',' << v << '\n'; }
  if (rows) {
    std::vector<std::string> columns{"eigenvalue", "multiplicity", "k", "degree", "tag"};
    if (!rows->empty() && rows->front().contains("family")) { columns.push_back("family"); }
    for (std::size_t i = 0; i < columns.size(); ++i) { out << (i ? "," : "") << columns[i]; }
    out << '\n';
    for (const auto & row : *rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) { out << (i ? "," : "") << scalar_text(row.at(columns[i])); }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace hodge
