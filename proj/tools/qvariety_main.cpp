// Command-line front end: cyclotomic set listings, generator matrices,
// orthogonality checks, the design pipelines, distance verification, and the
// reproducible fixture tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qvariety/designer.hpp"
#include "qvariety/fixtures.hpp"
#include "qvariety/hyper.hpp"
#include "qvariety/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace qvariety;

namespace {

std::pair<long, int> split_prime_power(long Q) {
  if (Q < 2) throw std::invalid_argument("field order must be at least 2");
  long p = 2;
  while (p * p <= Q && Q % p != 0) ++p;
  if (p * p > Q) p = Q;
  int e = 0;
  long v = Q;
  while (v > 1) {
    if (v % p != 0) throw std::invalid_argument("field order is not a prime power");
    v /= p;
    ++e;
  }
  return {p, e};
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stol(item));
  }
  return out;
}

delta_set parse_tuples(const std::string& s) {
  delta_set out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!item.empty()) out.push_back(parse_longs(item));
  }
  return out;
}

// Tuples are ';'-separated with ',' inside; for univariate specs a plain
// comma list is accepted as one exponent per entry.
delta_set parse_delta(const variety_spec& spec, const std::string& s) {
  delta_set out = parse_tuples(s);
  if (spec.m() == 1) {
    delta_set flat;
    for (const auto& t : out)
      for (long v : t) flat.push_back({v});
    return flat;
  }
  return out;
}

variety_spec make_spec(long Q, const std::vector<long>& N, const std::vector<long>& J) {
  auto [p, e] = split_prime_power(Q);
  std::vector<bool> mask(N.size(), false);
  for (long j : J) {
    if (j < 1 || j > static_cast<long>(N.size()))
      throw std::invalid_argument("J index out of range");
    mask[j - 1] = true;
  }
  return variety_spec(field::get(p, e), N, mask);
}

json params_json(const stabilizer_params& p) {
  json out;
  out["n"] = p.n;
  out["k"] = p.k;
  out["d_lower"] = p.d_lower;
  out["q"] = p.base_q;
  out["rule"] = p.rule;
  out["certified"] = p.certified;
  return out;
}

json table_json(const fixture_table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = params_json(row.params);
    if (t.has_note) r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  json out;
  out["name"] = t.name;
  out["rows"] = std::move(rows);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Self-orthogonal J-affine variety codes and their stabilizer parameters"};
  app.require_subcommand(1);

  // cyclo: univariate cyclotomic sets as JSON.
  long cy_modulus = 0, cy_base = 0;
  bool cy_extended = false;
  auto* cyclo_cmd = app.add_subcommand("cyclo", "List minimal cyclotomic sets");
  cyclo_cmd->add_option("--modulus", cy_modulus, "modulus M")->required();
  cyclo_cmd->add_option("--base", cy_base, "multiplier base")->required();
  cyclo_cmd->add_flag("--extended", cy_extended, "include the exponent M as a separate value");

  // build: generator matrix of an evaluation code.
  long b_Q = 0;
  std::string b_N, b_J, b_delta;
  int b_sub = 0;
  auto* build_cmd = app.add_subcommand("build", "Print a generator matrix");
  build_cmd->add_option("--Q", b_Q, "evaluation field order")->required();
  build_cmd->add_option("--N", b_N, "coordinate orders, comma separated")->required();
  build_cmd->add_option("--J", b_J, "1-based indices with zero excluded");
  build_cmd->add_option("--delta", b_delta, "exponent tuples a1,a2;b1,b2;...")->required();
  build_cmd->add_option("--sub-exp", b_sub, "descend to the subfield GF(p^sub_exp)");

  // check: self-orthogonality certificate.
  long c_Q = 0, c_conj = 0;
  std::string c_N, c_J, c_delta, c_metric = "euclidean";
  int c_sub = 0;
  auto* check_cmd = app.add_subcommand("check", "Certify self-orthogonality");
  check_cmd->add_option("--Q", c_Q)->required();
  check_cmd->add_option("--N", c_N)->required();
  check_cmd->add_option("--J", c_J);
  check_cmd->add_option("--delta", c_delta)->required();
  check_cmd->add_option("--metric", c_metric, "euclidean or hermitian");
  check_cmd->add_option("--conj", c_conj, "Hermitian conjugation power (default sqrt Q)");
  check_cmd->add_option("--sub-exp", c_sub, "check the subfield subcode instead");

  // design: both families.
  auto* design_cmd = app.add_subcommand("design", "Run a design rule");
  design_cmd->require_subcommand(1);

  std::string du_rule;
  long du_p = 0, du_N = 0, du_t = -1, du_t2 = -1;
  int du_r = 0, du_s = 1;
  bool du_full = false, du_ext = false;
  auto* uni_cmd = design_cmd->add_subcommand("uni", "Univariate rules");
  uni_cmd->add_option("--rule", du_rule, "PropA|ThmC|RemarkN|PropD|ThmZ|PropY|ThmE")->required();
  uni_cmd->add_option("--p", du_p)->required();
  uni_cmd->add_option("--r", du_r);
  uni_cmd->add_option("--s", du_s);
  uni_cmd->add_option("--N", du_N)->required();
  uni_cmd->add_option("--t", du_t)->required();
  uni_cmd->add_option("--t2", du_t2, "enlargement partner index");
  uni_cmd->add_flag("--full-support", du_full, "include the zero point and exponent");
  uni_cmd->add_flag("--extended-range", du_ext, "PropD only");

  std::string dm_rule, dm_N, dm_J, dm_metric = "euclidean", dm_monomials;
  long dm_Q = 0, dm_t = -1;
  int dm_sub = 1;
  auto* multi_cmd = design_cmd->add_subcommand("multi", "Multivariate rules");
  multi_cmd->add_option("--rule", dm_rule,
                        "ThmF|CorL|ThmFF|CorLL|CorLLL|DirectCheck|ThmAS|ThmCS|CorEl35|Monomials")
      ->required();
  multi_cmd->add_option("--Q", dm_Q)->required();
  multi_cmd->add_option("--N", dm_N)->required();
  multi_cmd->add_option("--J", dm_J);
  multi_cmd->add_option("--t", dm_t);
  multi_cmd->add_option("--sub-exp", dm_sub, "subfield exponent s for the subfield rules");
  multi_cmd->add_option("--metric", dm_metric, "euclidean or hermitian");
  multi_cmd->add_option("--monomials", dm_monomials, "shifted exponent tuples for Monomials");

  // verify: distance oracle on an evaluation code (or its subfield subcode).
  long v_Q = 0, v_conj = 0, v_weight = 0;
  std::string v_N, v_J, v_delta;
  int v_sub = 0;
  bool v_exact = false;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle checks on the dual distance");
  verify_cmd->add_option("--Q", v_Q)->required();
  verify_cmd->add_option("--N", v_N)->required();
  verify_cmd->add_option("--J", v_J);
  verify_cmd->add_option("--delta", v_delta)->required();
  verify_cmd->add_option("--sub-exp", v_sub);
  verify_cmd->add_option("--weight", v_weight, "certify no dual word of weight below this");
  verify_cmd->add_flag("--exact", v_exact, "exact dual distance by enumeration");

  // fixture: reproducible tables.
  std::string f_name, f_format = "csv", f_out;
  bool f_all = false;
  auto* fixture_cmd = app.add_subcommand("fixture", "Emit a reproducible parameter table");
  fixture_cmd->add_option("name", f_name, "fixture name");
  fixture_cmd->add_flag("--all", f_all, "run every fixture");
  fixture_cmd->add_option("--format", f_format, "csv or json");
  fixture_cmd->add_option("--out", f_out, "output file (or directory with --all)");

  CLI11_PARSE(app, argc, argv);

  if (*cyclo_cmd) {
    json sets = json::array();
    for (const auto& s : minimal_sets(cy_modulus, cy_base, cy_extended)) {
      json one;
      one["rep"] = s.rep()[0];
      one["elements"] = flat_elements(s);
      sets.push_back(std::move(one));
    }
    json out;
    out["modulus"] = cy_modulus;
    out["base"] = cy_base;
    out["sets"] = std::move(sets);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*build_cmd) {
    variety_spec spec = make_spec(b_Q, parse_longs(b_N), parse_longs(b_J));
    classical_code code = build_code(spec, parse_delta(spec, b_delta));
    if (b_sub > 0) code = subfield_subcode(code, b_sub);
    const field& F = code.F();
    std::vector<long> logs(F.q(), -1);
    gf_elem cur = 1;
    for (long i = 0; i < F.q() - 1; ++i) {
      logs[cur] = i;
      cur = F.mul(cur, F.generator());
    }
    std::cout << "GF(" << F.p() << "^" << F.e() << ") " << code.n() << " " << code.dim()
              << "\n";
    for (const auto& row : code.gen.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) std::cout << " ";
        if (row[c] == 0)
          std::cout << "-";
        else
          std::cout << logs[row[c]];
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (*check_cmd) {
    variety_spec spec = make_spec(c_Q, parse_longs(c_N), parse_longs(c_J));
    classical_code code = build_code(spec, parse_delta(spec, c_delta));
    if (c_sub > 0) code = subfield_subcode(code, c_sub);
    metric mt = metric::euclidean();
    if (c_metric == "hermitian") {
      long conj = c_conj;
      if (conj == 0) {
        while (conj * conj < code.F().q()) ++conj;
        if (conj * conj != code.F().q())
          throw std::invalid_argument("field order is not a square; pass --conj");
      }
      mt = metric::hermitian(conj);
    }
    certification cert = certify_self_orthogonal(code, mt);
    json out;
    out["self_orthogonal"] = cert.self_orthogonal;
    json viol = json::array();
    for (const auto& [i, j] : cert.violations) viol.push_back({i, j});
    out["violations"] = std::move(viol);
    std::cout << out.dump(2) << "\n";
    return cert.self_orthogonal ? 0 : 1;
  }

  if (*uni_cmd) {
    static const std::map<std::string, uni_rule> rules = {
        {"PropA", uni_rule::prop_a}, {"ThmC", uni_rule::thm_c},
        {"RemarkN", uni_rule::remark_n}, {"PropD", uni_rule::prop_d},
        {"ThmZ", uni_rule::thm_z}, {"PropY", uni_rule::prop_y},
        {"ThmE", uni_rule::thm_e}};
    auto it = rules.find(du_rule);
    if (it == rules.end()) throw std::invalid_argument("unknown rule " + du_rule);
    univariate_design d;
    d.rule = it->second;
    d.p = du_p;
    d.r = du_r;
    d.s = du_s;
    d.N = du_N;
    d.t = du_t;
    d.t2 = du_t2;
    d.full_support = du_full;
    d.extended_range = du_ext;
    univariate_result res = design_univariate(d);
    json out;
    out["params"] = params_json(res.params);
    std::vector<long> flat;
    for (const auto& a : res.delta) flat.push_back(a[0]);
    out["delta"] = flat;
    if (d.t2 >= 0) {
      std::vector<long> flat2;
      for (const auto& a : res.delta2) flat2.push_back(a[0]);
      out["delta2"] = flat2;
      out["gap_inequality"] = res.gap_inequality_ok;
    }
    out["designed_d"] = res.designed_d;
    out["trace"] = res.trace;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*multi_cmd) {
    variety_spec spec = make_spec(dm_Q, parse_longs(dm_N), parse_longs(dm_J));
    auto hermitian_conj = [&](long base) {
      long conj = 1;
      while (conj * conj < base) ++conj;
      if (conj * conj != base)
        throw std::invalid_argument("Hermitian metric needs a square field order");
      return conj;
    };
    json out;
    if (dm_rule == "ThmAS" || dm_rule == "ThmCS" || dm_rule == "CorEl35") {
      bool herm = dm_rule == "ThmCS" ||
                  (dm_rule == "CorEl35" && dm_metric == "hermitian");
      long conj = 1;
      for (int i = 0; i < dm_sub; ++i) conj *= spec.F->p();
      metric mt = herm ? metric::hermitian(conj) : metric::euclidean();
      subfield_multi_result res =
          design_subfield_multivariate(spec, dm_t, dm_sub, mt, dm_rule == "CorEl35");
      out["params"] = params_json(res.params);
      out["delta"] = res.delta;
      out["trace"] = res.trace;
    } else if (dm_rule == "Monomials") {
      metric mt = dm_metric == "hermitian"
                      ? metric::hermitian(hermitian_conj(spec.F->q()))
                      : metric::euclidean();
      general_result res = design_general_monomials(spec, parse_tuples(dm_monomials), mt);
      out["params"] = params_json(res.params);
      out["dual_exponents"] = res.dual_exponents;
      out["footprint_bound"] = res.footprint_bound;
      out["trace"] = res.trace;
    } else {
      static const std::map<std::string, multi_rule> rules = {
          {"ThmF", multi_rule::thm_f},   {"CorL", multi_rule::cor_l},
          {"ThmFF", multi_rule::thm_ff}, {"CorLL", multi_rule::cor_ll},
          {"CorLLL", multi_rule::cor_lll}, {"DirectCheck", multi_rule::direct_check}};
      auto it = rules.find(dm_rule);
      if (it == rules.end()) throw std::invalid_argument("unknown rule " + dm_rule);
      bool herm = it->second == multi_rule::thm_ff || it->second == multi_rule::cor_ll ||
                  it->second == multi_rule::cor_lll ||
                  (it->second == multi_rule::direct_check && dm_metric == "hermitian");
      metric mt = herm ? metric::hermitian(hermitian_conj(spec.F->q()))
                       : metric::euclidean();
      multivariate_result res = design_multivariate(spec, dm_t, it->second, mt);
      out["params"] = params_json(res.params);
      out["exponents"] = res.exponents;
      out["trace"] = res.trace;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*verify_cmd) {
    variety_spec spec = make_spec(v_Q, parse_longs(v_N), parse_longs(v_J));
    classical_code code = build_code(spec, parse_delta(spec, v_delta));
    if (v_sub > 0) code = subfield_subcode(code, v_sub);
    oracle_limits limits = limits_from_env();
    json out;
    if (v_weight > 0) {
      word_check wc = no_word_below(code.gen, v_weight, limits);
      out["mode"] = "weight";
      out["bound"] = v_weight;
      const char* names[] = {"verified", "refuted", "unverified"};
      out["result"] = names[static_cast<int>(wc.result)];
      out["nodes"] = wc.nodes;
      if (wc.result == word_check::status::refuted)
        out["witness_columns"] = wc.dependent_columns;
    } else if (v_exact) {
      long d = min_distance_exact(dual_code(code), limits);
      out["mode"] = "exact";
      out["dual_distance"] = d;
    } else {
      throw std::invalid_argument("pass --weight W or --exact");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*fixture_cmd) {
    if (f_format != "csv" && f_format != "json")
      throw std::invalid_argument("format must be csv or json");
    if (f_all) {
      json all = json::array();
      for (const auto& name : fixture_names()) {
        fixture_table t = run_fixture(name);
        if (f_format == "csv") {
          std::string path = f_out.empty() ? name + ".csv" : f_out + "/" + name + ".csv";
          write_output(fixture_csv(t), path);
          std::cerr << "wrote " << path << "\n";
        } else {
          all.push_back(table_json(t));
        }
      }
      if (f_format == "json") write_output(all.dump(2) + "\n", f_out);
      return 0;
    }
    if (f_name.empty()) throw std::invalid_argument("pass a fixture name or --all");
    fixture_table t = run_fixture(f_name);
    if (f_format == "csv")
      write_output(fixture_csv(t), f_out);
    else
      write_output(table_json(t).dump(2) + "\n", f_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    nlohmann::ordered_json err;
    err["error"] = ex.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
