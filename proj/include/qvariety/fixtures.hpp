#pragma once

// Reproducible parameter ladders. Every fixture fixes the inputs of one
// design pipeline (field, coordinate orders, J, rule, t range) and runs it;
// the emitted rows are computed, never transcribed. CSV rendering is
// byte-stable: LF endings, plain decimal numbers, no padding.

#include <stdexcept>
#include <string>
#include <vector>

#include "qvariety/designer.hpp"
#include "qvariety/hyper.hpp"

namespace qvariety {

struct fixture_row {
  stabilizer_params params;
  std::string note;
};

struct fixture_table {
  std::string name;
  bool has_note = false;
  std::vector<fixture_row> rows;
};

namespace fixtures {

// Hermitian ladder over GF(9) from the 81-point torus; the t = 8 step takes
// the enlargement with partner t = 7.
inline fixture_table len80_f3() {
  fixture_table t{"len80_f3"};
  for (long tt = 1; tt <= 16; ++tt) {
    univariate_design d;
    d.rule = uni_rule::thm_z;
    d.p = 3;
    d.s = 1;
    d.N = 81;
    d.t = tt;
    if (tt == 8) d.t2 = 7;
    t.rows.push_back({design_univariate(d).params, ""});
  }
  return t;
}

// Hermitian full-support ladder over GF(25), length 105 = 3 * 5 * 7.
inline fixture_table len105_f5() {
  fixture_table t{"len105_f5"};
  for (long tt = 0; tt <= 16; ++tt) {
    univariate_design d;
    d.rule = uni_rule::thm_z;
    d.p = 5;
    d.s = 1;
    d.N = 105;
    d.t = tt;
    d.full_support = true;
    t.rows.push_back({design_univariate(d).params, ""});
  }
  return t;
}

// Hermitian full-support ladder over GF(16) with the companion-set rule.
inline fixture_table len92_f4() {
  fixture_table t{"len92_f4"};
  for (long tt = 1; tt <= 5; ++tt) {
    univariate_design d;
    d.rule = uni_rule::thm_e;
    d.p = 2;
    d.r = 6;
    d.s = 2;
    d.N = 92;
    d.t = tt;
    d.full_support = true;
    t.rows.push_back({design_univariate(d).params, ""});
  }
  return t;
}

// Euclidean full-support enlargement ladder over GF(4), length 94.
inline fixture_table len94_f4() {
  fixture_table t{"len94_f4"};
  for (long tt = 1; tt <= 3; ++tt) {
    univariate_design d;
    d.rule = uni_rule::thm_c;
    d.p = 2;
    d.r = 10;
    d.s = 2;
    d.N = 94;
    d.t = tt;
    d.t2 = tt - 1;
    d.full_support = true;
    t.rows.push_back({design_univariate(d).params, ""});
  }
  return t;
}

// Euclidean trivariate designs over GF(7) on (3, 7, 7) with J = {1}.
inline fixture_table len98_f7() {
  fixture_table t{"len98_f7"};
  variety_spec spec(field::get(7, 1), {3, 7, 7}, {true, false, false});
  metric mt = metric::euclidean();
  for (long tt : {2, 3, 4})
    t.rows.push_back({design_multivariate(spec, tt, multi_rule::thm_f, mt).params, ""});
  t.rows.push_back({enlarge_multivariate_design(spec, 3, 2, multi_rule::thm_f,
                                                multi_rule::thm_f, mt)
                        .params,
                    ""});
  t.rows.push_back({enlarge_multivariate_design(spec, 4, 3, multi_rule::thm_f,
                                                multi_rule::thm_f, mt)
                        .params,
                    ""});
  return t;
}

// Euclidean trivariate designs over GF(7) on the full torus (7, 7, 3).
inline fixture_table len72_f7() {
  fixture_table t{"len72_f7"};
  variety_spec spec(field::get(7, 1), {7, 7, 3}, {true, true, true});
  metric mt = metric::euclidean();
  t.rows.push_back({design_multivariate(spec, 2, multi_rule::thm_f, mt).params, ""});
  t.rows.push_back({design_multivariate(spec, 3, multi_rule::thm_f, mt).params, ""});
  t.rows.push_back(
      {design_multivariate(spec, 4, multi_rule::direct_check, mt).params, ""});
  t.rows.push_back({enlarge_multivariate_design(spec, 3, 2, multi_rule::thm_f,
                                                multi_rule::thm_f, mt)
                        .params,
                    ""});
  t.rows.push_back({enlarge_multivariate_design(spec, 4, 3, multi_rule::direct_check,
                                                multi_rule::thm_f, mt)
                        .params,
                    ""});
  return t;
}

// Hermitian bivariate designs over GF(49) on the torus (49, 4).
inline fixture_table len144_f7() {
  fixture_table t{"len144_f7"};
  variety_spec spec(field::get(7, 2), {49, 4}, {true, true});
  metric mt = metric::hermitian(7);
  for (long tt = 4; tt <= 6; ++tt)
    t.rows.push_back({design_multivariate(spec, tt, multi_rule::cor_ll, mt).params, ""});
  for (long tt = 7; tt <= 12; ++tt)
    t.rows.push_back(
        {design_multivariate(spec, tt, multi_rule::direct_check, mt).params, ""});
  return t;
}

// Hermitian bivariate designs over GF(16) on (16, 6) with both zeros kept.
inline fixture_table len96_f4() {
  fixture_table t{"len96_f4"};
  variety_spec spec(field::get(2, 4), {16, 6}, {false, false});
  metric mt = metric::hermitian(4);
  t.rows.push_back({design_multivariate(spec, 4, multi_rule::cor_ll, mt).params, ""});
  for (long tt : {5, 6})
    t.rows.push_back(
        {design_multivariate(spec, tt, multi_rule::direct_check, mt).params, ""});
  return t;
}

// Hermitian bivariate design over GF(25) on the torus (25, 4).
inline fixture_table len72_f5() {
  fixture_table t{"len72_f5"};
  variety_spec spec(field::get(5, 2), {25, 4}, {true, true});
  metric mt = metric::hermitian(5);
  t.rows.push_back({design_multivariate(spec, 4, multi_rule::direct_check, mt).params, ""});
  return t;
}

// Hermitian bivariate ladder over GF(16) on (16, 4); annotations mark rows
// meeting the Gilbert-Varshamov bound (GV) and best-known parameters (*).
inline fixture_table len64_f4() {
  fixture_table t{"len64_f4"};
  t.has_note = true;
  variety_spec spec(field::get(2, 4), {16, 4}, {false, false});
  metric mt = metric::hermitian(4);
  const std::vector<std::string> notes = {"GV", "GV", "GV *", "*",  "GV *", "",
                                          "",   "*",  "",     "*",  "*"};
  for (long tt = 2; tt <= 12; ++tt) {
    multi_rule rule = tt <= 10 ? multi_rule::cor_lll : multi_rule::direct_check;
    t.rows.push_back(
        {design_multivariate(spec, tt, rule, mt).params, notes[tt - 2]});
  }
  return t;
}

// Hermitian bivariate ladder over GF(81) on (81, 9).
inline fixture_table len729_f9() {
  fixture_table t{"len729_f9"};
  variety_spec spec(field::get(3, 4), {81, 9}, {false, false});
  metric mt = metric::hermitian(9);
  for (long tt = 2; tt <= 21; ++tt)
    t.rows.push_back({design_multivariate(spec, tt, multi_rule::cor_lll, mt).params, ""});
  return t;
}

// Hermitian subfield design over GF(25) from the (14, 5) grid in GF(625).
inline fixture_table len70_f5() {
  fixture_table t{"len70_f5"};
  variety_spec spec(field::get(5, 4), {14, 5}, {false, false});
  metric mt = metric::hermitian(5);
  t.rows.push_back({design_subfield_multivariate(spec, 3, 1, mt).params, ""});
  return t;
}

// Hermitian subfield ladder over GF(16) from the (256, 2) grid in GF(256).
inline fixture_table len512_f4() {
  fixture_table t{"len512_f4"};
  variety_spec spec(field::get(2, 8), {256, 2}, {false, false});
  metric mt = metric::hermitian(4);
  for (long tt = 2; tt <= 16; ++tt)
    t.rows.push_back(
        {design_subfield_multivariate(spec, tt, 2, mt, true).params, ""});
  return t;
}

}  // namespace fixtures

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "len80_f3",  "len105_f5", "len92_f4", "len94_f4", "len98_f7",
      "len72_f7",  "len144_f7", "len96_f4", "len72_f5", "len64_f4",
      "len729_f9", "len70_f5",  "len512_f4"};
  return names;
}

inline fixture_table run_fixture(const std::string& name) {
  using namespace fixtures;
  if (name == "len80_f3") return len80_f3();
  if (name == "len105_f5") return len105_f5();
  if (name == "len92_f4") return len92_f4();
  if (name == "len94_f4") return len94_f4();
  if (name == "len98_f7") return len98_f7();
  if (name == "len72_f7") return len72_f7();
  if (name == "len144_f7") return len144_f7();
  if (name == "len96_f4") return len96_f4();
  if (name == "len72_f5") return len72_f5();
  if (name == "len64_f4") return len64_f4();
  if (name == "len729_f9") return len729_f9();
  if (name == "len70_f5") return len70_f5();
  if (name == "len512_f4") return len512_f4();
  throw std::invalid_argument("fixtures: unknown fixture " + name);
}

inline std::string fixture_csv(const fixture_table& t) {
  std::string out = "n,k,d_lower,q,rule,certified";
  if (t.has_note) out += ",note";
  out += "\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.params.n) + "," + std::to_string(row.params.k) + "," +
           std::to_string(row.params.d_lower) + "," +
           std::to_string(row.params.base_q) + "," + row.params.rule + "," +
           (row.params.certified ? "true" : "false");
    if (t.has_note) out += "," + row.note;
    out += "\n";
  }
  return out;
}

}  // namespace qvariety
