#pragma once

// Multivariate stabilizer-code designs built on the footprint bound
// delta_a = prod_j (N_j - eps_j - a_j). The code of interest evaluates the
// monomials whose shifted exponents b in the box
//   H-bar = prod_j {eps_j, ..., T_j + eps_j}
// satisfy prod_j (b_j + 1 - eps_j) < t; its dual has minimum distance at
// least t whenever p divides N_j for every j outside J. Self-orthogonality
// of that code is guaranteed by window inclusion (the exponents fit under
// a half-range cap in one coordinate), by explicit corollary bounds on t,
// or by a direct pairwise orthogonality check. Subfield variants take the
// cyclotomic closure of the same exponent set and descend to a small field.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvariety/affine.hpp"
#include "qvariety/cyclo.hpp"
#include "qvariety/galois.hpp"
#include "qvariety/ortho.hpp"
#include "qvariety/quantum.hpp"

namespace qvariety {

namespace detail {

inline std::string tuple_str(const exponent_tuple& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(t[j]);
  }
  return s + ")";
}

}  // namespace detail

// delta_a for a in the box H_J.
inline long footprint_value(const variety_spec& spec, const exponent_tuple& a) {
  long v = 1;
  for (std::size_t j = 0; j < spec.m(); ++j) v *= spec.N[j] - spec.epsilon(j) - a[j];
  return v;
}

// Shifted box H-bar: coordinate j runs over {eps_j, ..., N_j - 1}.
inline std::vector<exponent_tuple> shifted_box(const variety_spec& spec) {
  std::vector<exponent_tuple> out;
  exponent_tuple cur(spec.m(), 0);
  for (std::size_t j = 0; j < spec.m(); ++j) cur[j] = spec.epsilon(j);
  while (true) {
    out.push_back(cur);
    std::size_t j = spec.m();
    while (j > 0) {
      --j;
      if (cur[j] + 1 <= spec.N[j] - 1) {
        ++cur[j];
        for (std::size_t l = j + 1; l < spec.m(); ++l) cur[l] = spec.epsilon(l);
        break;
      }
      if (j == 0) return out;
    }
  }
}

// Identify the shifted exponent N_j - 1 with 0 for j in J, landing in H_J.
inline exponent_tuple reduce_to_box(const variety_spec& spec, exponent_tuple b) {
  for (std::size_t j = 0; j < spec.m(); ++j)
    if (spec.in_J[j] && b[j] == spec.N[j] - 1) b[j] = 0;
  return b;
}

inline long shifted_product(const variety_spec& spec, const exponent_tuple& b) {
  long v = 1;
  for (std::size_t j = 0; j < spec.m(); ++j) v *= b[j] + 1 - spec.epsilon(j);
  return v;
}

// Exponents of the large code: delta_a >= t.
inline delta_set m_set(const variety_spec& spec, long t) {
  delta_set out;
  for (const auto& a : full_box(spec))
    if (footprint_value(spec, a) >= t) out.push_back(a);
  return out;
}

// Shifted exponents below the hyperbola: prod (b_j + 1 - eps_j) < t.
inline delta_set n_set(const variety_spec& spec, long t) {
  delta_set out;
  for (const auto& b : shifted_box(spec))
    if (shifted_product(spec, b) < t) out.push_back(b);
  return out;
}

struct hyperbolic_pair {
  classical_code E;  // evaluations of the large exponent set
  classical_code F;  // evaluations of the reduced small set
  bool duality_checked = false;
};

// Build both codes and, when p | N_j for every j outside J, assert that E is
// exactly the dual of F (dimension count plus a zero cross-Gram).
inline hyperbolic_pair hyperbolic_code(const variety_spec& spec, long t) {
  if (t < 1 || t > spec.n()) throw std::invalid_argument("hyper: t out of range");
  delta_set big = m_set(spec, t);
  delta_set small = n_set(spec, t);
  if (big.size() + small.size() != static_cast<std::size_t>(spec.n()))
    throw std::logic_error("hyper: exponent sets do not partition the box");

  auto build = [&](const delta_set& d) -> classical_code {
    if (d.empty()) return classical_code{gf_matrix(*spec.F, spec.n())};
    return build_code(spec, d);
  };
  hyperbolic_pair pair{build(big), classical_code{gf_matrix(*spec.F, spec.n())}};
  delta_set reduced;
  for (const auto& b : small) reduced.push_back(reduce_to_box(spec, b));
  pair.F = build(reduced);

  bool blanket = true;
  for (std::size_t j = 0; j < spec.m(); ++j)
    if (!spec.in_J[j] && spec.N[j] % spec.F->p() != 0) blanket = false;
  if (blanket) {
    bool ok = pair.E.dim() + pair.F.dim() == spec.n() &&
              is_zero(gram(pair.E.gen, pair.F.gen));
    if (!ok) throw std::logic_error("hyper: dual presentation mismatch");
    pair.duality_checked = true;
  }
  return pair;
}

// Half-range caps for the window sets.
inline long half_range(long N) {
  return N % 2 == 0 ? (N - 1) / 2 : (N - 1) / 2 - 1;
}
inline long half_range_hermitian(long N, long q) {
  return (N - 1) % (q + 1) == 0 ? (N - 1) / (q + 1) - 1 : (N - 1) / (q + 1);
}

enum class multi_rule { thm_f, cor_l, thm_ff, cor_ll, cor_lll, direct_check };

inline const char* rule_name(multi_rule r) {
  switch (r) {
    case multi_rule::thm_f: return "ThmF";
    case multi_rule::cor_l: return "CorL";
    case multi_rule::thm_ff: return "ThmFF";
    case multi_rule::cor_ll: return "CorLL";
    case multi_rule::cor_lll: return "CorLLL";
    case multi_rule::direct_check: return "DirectCheck";
  }
  return "?";
}

struct multivariate_result {
  stabilizer_params params;
  delta_set exponents;     // shifted exponents of the self-orthogonal code
  classical_code code;     // built from their reduced form
  std::vector<std::string> trace;
};

inline multivariate_result design_multivariate(const variety_spec& spec, long t,
                                               multi_rule rule, const metric& mt) {
  const field& F = *spec.F;
  const bool euclid_rule = rule == multi_rule::thm_f || rule == multi_rule::cor_l;
  const bool hermit_rule = rule == multi_rule::thm_ff || rule == multi_rule::cor_ll ||
                           rule == multi_rule::cor_lll;
  if (euclid_rule && !mt.is_euclidean())
    throw std::invalid_argument("hyper: rule expects the Euclidean metric");
  if (hermit_rule && mt.is_euclidean())
    throw std::invalid_argument("hyper: rule expects the Hermitian metric");
  if (!mt.is_euclidean() && mt.conj_power * mt.conj_power != F.q())
    throw std::invalid_argument("hyper: Hermitian metric needs Q = q^2");
  for (std::size_t j = 0; j < spec.m(); ++j)
    if (!spec.in_J[j] && spec.N[j] % F.p() != 0)
      throw std::invalid_argument(
          "hyper: p must divide N_j for every j outside J (distance bound)");
  if (t < 1 || t > spec.n()) throw std::invalid_argument("hyper: t out of range");

  multivariate_result res;
  auto note = [&](std::string line) { res.trace.push_back(std::move(line)); };
  res.exponents = n_set(spec, t);

  auto cap = [&](std::size_t i) -> long {
    return mt.is_euclidean() ? half_range(spec.N[i])
                             : half_range_hermitian(spec.N[i], mt.conj_power);
  };
  auto window_holds = [&](std::size_t i) -> bool {
    long r_i = cap(i);
    for (const auto& b : res.exponents)
      if (b[i] > r_i) return false;
    return true;
  };

  switch (rule) {
    case multi_rule::thm_f:
    case multi_rule::thm_ff: {
      long found = -1;
      for (std::size_t i = 0; i < spec.m() && found < 0; ++i)
        if (window_holds(i)) found = static_cast<long>(i);
      if (found < 0)
        throw std::invalid_argument(std::string(rule_name(rule)) +
                                    ": no coordinate window contains the exponent set");
      note(std::string("window: coordinate ") + std::to_string(found + 1) +
           " with cap " + std::to_string(cap(found)));
      break;
    }
    case multi_rule::cor_l:
    case multi_rule::cor_ll: {
      if (spec.m() != 2)
        throw std::invalid_argument(std::string(rule_name(rule)) + ": bivariate only");
      long slack1 = spec.in_J[0] ? 1 : 2;
      long slack2 = spec.in_J[1] ? 1 : 2;
      bool ok = t <= cap(0) + slack1 || t <= cap(1) + slack2;
      if (!ok)
        throw std::invalid_argument(std::string(rule_name(rule)) +
                                    ": t exceeds both coordinate bounds");
      note(std::string("bound: t <= ") + std::to_string(cap(0) + slack1) + " or t <= " +
           std::to_string(cap(1) + slack2));
      break;
    }
    case multi_rule::cor_lll: {
      long q = mt.conj_power;
      if (spec.m() != 2 || spec.in_J[0] || spec.in_J[1] || spec.N[0] != q * q ||
          spec.N[1] != q)
        throw std::invalid_argument("CorLLL: needs N = (q^2, q) with empty J");
      if (2 * t >= q * q + q + 1 || t >= 4 * q + 1)
        throw std::invalid_argument("CorLLL: t out of range");
      note("bound: 2t < q^2+q+1 and t < 4q+1");
      break;
    }
    case multi_rule::direct_check: {
      for (const auto& b : res.exponents) {
        exponent_tuple x = reduce_to_box(spec, b);
        for (const auto& c : res.exponents) {
          exponent_tuple y = reduce_to_box(spec, c);
          if (!monomials_orthogonal(spec, x, y, mt))
            throw std::invalid_argument(
                "DirectCheck: exponent pair not orthogonal, t too large");
        }
      }
      note("pairwise: all " + std::to_string(res.exponents.size() * res.exponents.size()) +
           " ordered exponent pairs orthogonal");
      break;
    }
  }

  delta_set reduced;
  for (const auto& b : res.exponents) reduced.push_back(reduce_to_box(spec, b));
  res.code = reduced.empty() ? classical_code{gf_matrix(F, spec.n())}
                             : build_code(spec, reduced);
  certification cert = reduced.empty() ? certification{true, {}}
                                       : certify_self_orthogonal(res.code, mt);
  if (!cert.self_orthogonal)
    throw std::logic_error(std::string(rule_name(rule)) +
                           ": certification failed despite hypotheses");
  note("Gram certificate: " + std::to_string(res.code.dim()) + " rows self-orthogonal");

  res.params = css_params(res.code, t, mt, cert);
  res.params.rule = rule_name(rule);
  return res;
}

struct enlarged_multivariate {
  stabilizer_params params;
  multivariate_result large;
  multivariate_result small;
};

// Enlargement of a nested pair of hyperbolic designs, t2 < t1. The nesting is
// verified on the generator matrices; the distance is the honest minimum
// min{t1, ceil((1 + 1/q) t2)}.
inline enlarged_multivariate enlarge_multivariate_design(const variety_spec& spec,
                                                         long t1, long t2,
                                                         multi_rule rule1,
                                                         multi_rule rule2,
                                                         const metric& mt) {
  enlarged_multivariate res{{},
                            design_multivariate(spec, t1, rule1, mt),
                            design_multivariate(spec, t2, rule2, mt)};
  if (!is_subcode(res.small.code, res.large.code))
    throw std::logic_error("hyper: enlargement pair is not nested");
  long q = mt.is_euclidean() ? spec.F->q() : mt.conj_power;
  long d = enlarged_distance(t1, t2, q);
  res.params = enlargement_params(spec.n(), res.large.code.dim(),
                                  res.small.code.dim(), d, q);
  res.params.rule = std::string(rule_name(rule1)) + "+Hamada";
  return res;
}

// Bivariate designs from an arbitrary admissible monomial set (shifted
// exponents). Needed when p fails to divide some N_j outside J: the window
// condition is kept, mixed pairs touching the exponents 0 and N_j - 1 in the
// non-divisible coordinate are restricted, and the distance comes from the
// footprint minimum over the complement of the dual pairing image.
struct general_result {
  stabilizer_params params;
  delta_set dual_exponents;
  long footprint_bound = 0;
  classical_code code;
  std::vector<std::string> trace;
};

inline general_result design_general_monomials(const variety_spec& spec,
                                               const delta_set& monomials,
                                               const metric& mt) {
  const field& F = *spec.F;
  if (spec.m() != 2) throw std::invalid_argument("general design: bivariate only");
  if (monomials.empty()) throw std::invalid_argument("general design: empty set");
  if (!mt.is_euclidean() && mt.conj_power * mt.conj_power != F.q())
    throw std::invalid_argument("general design: Hermitian metric needs Q = q^2");
  for (const auto& b : monomials)
    for (std::size_t j = 0; j < spec.m(); ++j)
      if (b[j] < spec.epsilon(j) || b[j] > spec.N[j] - 1)
        throw std::invalid_argument("general design: exponent outside the shifted box");

  general_result res;
  auto note = [&](std::string line) { res.trace.push_back(std::move(line)); };
  long q_mult = mt.is_euclidean() ? 1 : mt.conj_power;
  long in_J_count = (spec.in_J[0] ? 1 : 0) + (spec.in_J[1] ? 1 : 0);

  auto cap = [&](std::size_t i) -> long {
    return mt.is_euclidean() ? half_range(spec.N[i])
                             : half_range_hermitian(spec.N[i], mt.conj_power);
  };
  auto window_holds = [&](std::size_t i) -> bool {
    for (const auto& b : monomials)
      if (b[i] > cap(i)) return false;
    return true;
  };

  if (in_J_count == 2) {
    if (!window_holds(0) && !window_holds(1))
      throw std::invalid_argument("general design: no coordinate window fits");
  } else if (in_J_count == 1) {
    std::size_t i = spec.in_J[0] ? 0 : 1;
    std::size_t j = 1 - i;
    if (!window_holds(i))
      throw std::invalid_argument("general design: window in the J coordinate fails");
    if (spec.N[j] % F.p() != 0) {
      // Forbid X_i^b X_j^0 together with X_i^{b'} X_j^{N_j-1} unless b = b'.
      for (const auto& b : monomials)
        for (const auto& c : monomials)
          if (b[j] == 0 && c[j] == spec.N[j] - 1 && b[i] != c[i])
            throw std::invalid_argument(
                "general design: mixed pair with exponents 0 and N_j-1 differs in "
                "the J coordinate");
    }
  } else {
    std::size_t j0 = spec.m();
    for (std::size_t j = 0; j < spec.m(); ++j)
      if (spec.N[j] % F.p() == 0 && window_holds(j)) {
        j0 = j;
        break;
      }
    if (j0 == spec.m())
      throw std::invalid_argument(
          "general design: need p | N_j and a fitting window for some coordinate");
    std::size_t i = 1 - j0;
    // A monomial with exponent N_i - 1 needs its exponent-0 twin present.
    for (const auto& b : monomials)
      if (b[i] == spec.N[i] - 1) {
        exponent_tuple twin = b;
        twin[i] = 0;
        if (std::find(monomials.begin(), monomials.end(), twin) == monomials.end())
          throw std::invalid_argument(
              "general design: exponent N_i-1 present without its 0 twin");
      }
    note("window coordinate " + std::to_string(j0 + 1));
  }

  // Dual pairing image: per coordinate (N_j - 1 - q b_j) mod (N_j - 1), with
  // residue 0 kept as N_j - 1 for coordinates outside J.
  std::vector<exponent_tuple> image;
  for (const auto& b : monomials) {
    exponent_tuple a(spec.m());
    for (std::size_t j = 0; j < spec.m(); ++j) {
      long M = spec.N[j] - 1;
      long v = ((spec.N[j] - 1 - q_mult * b[j]) % M + M) % M;
      if (!spec.in_J[j] && v == 0) v = M;
      a[j] = v;
    }
    image.push_back(a);
  }
  std::sort(image.begin(), image.end());
  res.footprint_bound = 0;
  for (const auto& a : full_box(spec)) {
    if (std::binary_search(image.begin(), image.end(), a)) continue;
    res.dual_exponents.push_back(a);
    long d = footprint_value(spec, a);
    if (res.footprint_bound == 0 || d < res.footprint_bound) res.footprint_bound = d;
  }
  note("footprint minimum over " + std::to_string(res.dual_exponents.size()) +
       " dual exponents: " + std::to_string(res.footprint_bound));

  delta_set reduced;
  for (const auto& b : monomials) reduced.push_back(reduce_to_box(spec, b));
  res.code = build_code(spec, reduced);
  certification cert = certify_self_orthogonal(res.code, mt);
  if (!cert.self_orthogonal)
    throw std::logic_error("general design: certification failed despite conditions");

  res.params = css_params(res.code, res.footprint_bound, mt, cert);
  res.params.rule = "Monomials";
  return res;
}

// Subfield-subcode designs: close the small exponent set under multiplication
// by p^S, descend to the subfield, and certify. The companion condition from
// the underlying theorems is evaluated and reported; the pairwise orthogonality
// of the closed set is the operative check (the stated condition is sufficient
// but not necessary, and the all-zero tuple always collides with itself).
struct subfield_multi_result {
  stabilizer_params params;
  delta_set delta;
  classical_code subcode;
  std::vector<std::string> trace;
};

inline subfield_multi_result design_subfield_multivariate(const variety_spec& spec,
                                                          long t, int sub_exp,
                                                          const metric& mt,
                                                          bool el35 = false) {
  const field& F = *spec.F;
  if (sub_exp < 1) throw std::invalid_argument("subfield design: bad subfield exponent");
  const int S = mt.is_euclidean() ? sub_exp : 2 * sub_exp;
  if (F.e() % S != 0)
    throw std::invalid_argument("subfield design: subfield exponent must divide e");
  long base = 1;
  for (int i = 0; i < S; ++i) base *= F.p();
  if (!mt.is_euclidean()) {
    long ps = 1;
    for (int i = 0; i < sub_exp; ++i) ps *= F.p();
    if (mt.conj_power != ps)
      throw std::invalid_argument("subfield design: metric conjugation must be p^s");
  }
  if (t < 1 || t > spec.n()) throw std::invalid_argument("subfield design: t out of range");

  subfield_multi_result res;
  auto note = [&](std::string line) { res.trace.push_back(std::move(line)); };

  for (std::size_t j = 0; j < spec.m(); ++j)
    if (!spec.in_J[j] && spec.N[j] % F.p() != 0)
      note("hypothesis: p does not divide N_" + std::to_string(j + 1) +
           "; distance bound not covered by the construction alone");

  if (el35) {
    // The admissible t range comes from the first coordinate alone.
    long N1 = spec.N[0];
    int R = 0;
    for (long v = N1; v > 1; v /= F.p(), ++R)
      if (v % F.p() != 0)
        throw std::invalid_argument("subfield design: N_1 must be a power of p");
    long pw = 1;
    for (int i = 0; i < (R + 1) / 2; ++i) pw *= F.p();
    // R even: a < p^{R/2} - 1; R odd: a <= p^{(R+1)/2} - p - 1.
    long bound = R % 2 == 0 ? pw - 2 : pw - F.p() - 1;
    long frak_a = -1;
    for (long a : ordered_representatives(N1 - 1, base))
      if (a != 0 && a <= bound) frak_a = std::max(frak_a, a);
    if (frak_a < 0) throw std::invalid_argument("subfield design: no admissible representative");
    bool relaxed = spec.m() == 2 && !spec.in_J[0];
    long t_max = frak_a + (relaxed ? 2 : 1);
    if (t > t_max)
      throw std::invalid_argument("subfield design: t exceeds the corollary range " +
                                  std::to_string(t_max));
    note("univariate bound: max representative " + std::to_string(frak_a) +
         ", admissible t <= " + std::to_string(t_max));
  }

  // Representatives inside the small exponent set select whole orbits.
  auto coords = spec.coords();
  auto sets = minimal_sets(coords, base);
  delta_set reduced;
  for (const auto& b : n_set(spec, t)) reduced.push_back(reduce_to_box(spec, b));
  std::sort(reduced.begin(), reduced.end());
  std::vector<const cyclotomic_set*> chosen;
  for (const auto& st : sets)
    if (std::binary_search(reduced.begin(), reduced.end(), st.rep())) chosen.push_back(&st);

  long conj = mt.is_euclidean() ? 1 : mt.conj_power;
  for (const auto* sa : chosen)
    for (const auto* sb : chosen) {
      cyclotomic_set comp = companion(coords, base, *sb, -conj);
      if (comp == *sa)
        note("companion overlap: set of " + detail::tuple_str(sa->rep()) +
             " meets the image of " + detail::tuple_str(sb->rep()));
    }

  for (const auto* st : chosen)
    for (const auto& el : st->elements) res.delta.push_back(el);
  if (res.delta.empty()) throw std::invalid_argument("subfield design: empty exponent set");
  res.delta = normalize_delta(spec, res.delta);

  // Operative self-orthogonality check on the closed set.
  for (const auto& x : res.delta)
    for (const auto& y : res.delta)
      if (!monomials_orthogonal(spec, x, y, mt))
        throw std::invalid_argument("subfield design: exponents " + detail::tuple_str(x) +
                                    " and " + detail::tuple_str(y) +
                                    " are not orthogonal; t too large");
  note("pairwise: all ordered exponent pairs of the closed set orthogonal");

  classical_code big = build_code(spec, res.delta);
  res.subcode = subfield_subcode(big, S);
  if (res.subcode.dim() != static_cast<long>(res.delta.size()))
    throw std::logic_error("subfield design: subcode dimension differs from |delta|");
  certification cert = certify_self_orthogonal(res.subcode, mt);
  if (!cert.self_orthogonal)
    throw std::logic_error("subfield design: certification failed despite checks");
  note("Gram certificate: " + std::to_string(res.subcode.dim()) + " rows over GF(" +
       std::to_string(base) + ") self-orthogonal");

  res.params = css_params(res.subcode, t, mt, cert);
  res.params.rule = el35 ? "CorEl35" : (mt.is_euclidean() ? "ThmAS" : "ThmCS");
  return res;
}

}  // namespace qvariety
