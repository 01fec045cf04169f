#pragma once

// Univariate stabilizer-code designs. Each rule picks the first t nonzero
// cyclotomic sets modulo N - 1, checks the hypotheses that make the
// resulting subfield subcode self-orthogonal, and certifies the result with
// an exact Gram computation. The distance bound is the next set
// representative (plus one in the full-support variant, which appends the
// evaluation point zero and the exponent 0 and needs p | N).
//
// Rules and their forms:
//   PropA  Euclidean, N = p^r
//   ThmC   Euclidean, N - 1 | p^r - 1
//   ThmZ   Hermitian, N - 1 | p^{4s} - 1
//   PropY  Hermitian, N - 1 | p^{2r} - 1, s | r, r > s
//   ThmE   Hermitian, N - 1 | p^{2r} - 1, companion condition
//   PropD  Hermitian, N = p^{2r}, aligned p^s / p^{2s} chains
// RemarkN names the full-support variant of ThmC. A pair (t, t2) with
// t2 < t switches to the enlarged construction; its gap inequality is
// recorded in the trace and the emitted distance is always the honest
// minimum formula.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvariety/affine.hpp"
#include "qvariety/cyclo.hpp"
#include "qvariety/galois.hpp"
#include "qvariety/ortho.hpp"
#include "qvariety/quantum.hpp"

namespace qvariety {

enum class uni_rule { prop_a, thm_c, remark_n, prop_d, thm_z, prop_y, thm_e };

inline const char* rule_name(uni_rule r) {
  switch (r) {
    case uni_rule::prop_a: return "PropA";
    case uni_rule::thm_c: return "ThmC";
    case uni_rule::remark_n: return "ThmC";  // RemarkN is ThmC's full-support form
    case uni_rule::prop_d: return "PropD";
    case uni_rule::thm_z: return "ThmZ";
    case uni_rule::prop_y: return "PropY";
    case uni_rule::thm_e: return "ThmE";
  }
  return "?";
}

struct univariate_design {
  uni_rule rule = uni_rule::thm_c;
  long p = 0;
  int r = 0;
  int s = 1;
  long N = 0;
  long t = -1;
  long t2 = -1;                 // >= 0 switches to the enlarged pair (t, t2)
  bool full_support = false;    // include the point 0 and the exponent 0; needs p | N
  bool extended_range = false;  // PropD only: relax the bound when r/s is odd
};

struct univariate_result {
  stabilizer_params params;
  delta_set delta;           // exponents of the main design
  delta_set delta2;          // exponents of the enlargement partner, if any
  classical_code subcode;    // certified self-orthogonal code over the small field
  classical_code subcode2;   // partner code (may have dimension 0)
  std::vector<long> a_seq;   // ordered nonzero set representatives a_1, a_2, ...
  long designed_d = 0;
  bool gap_inequality_ok = true;  // meaningful only for enlarged designs
  std::vector<std::string> trace;
};

namespace detail {

inline long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1L << 62) / b) throw std::overflow_error("designer: power overflow");
    r *= b;
  }
  return r;
}

inline long mult_order(long a, long m) {
  if (m == 1) return 1;
  long x = a % m, ord = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    if (++ord > m) throw std::invalid_argument("designer: base not invertible");
  }
  return ord;
}

inline std::string num(long v) { return std::to_string(v); }

}  // namespace detail

inline univariate_result design_univariate(const univariate_design& dsn) {
  using detail::num;
  const long p = dsn.p;
  const int s = dsn.s;
  uni_rule rule = dsn.rule;
  bool full_support = dsn.full_support || rule == uni_rule::remark_n;
  if (rule == uni_rule::remark_n) rule = uni_rule::thm_c;

  const bool hermitian = rule == uni_rule::prop_d || rule == uni_rule::thm_z ||
                         rule == uni_rule::prop_y || rule == uni_rule::thm_e;
  if (s < 1) throw std::invalid_argument("designer: s must be positive");
  if (dsn.N < 3) throw std::invalid_argument("designer: N too small");
  if (full_support && (rule == uni_rule::prop_a || rule == uni_rule::prop_d))
    throw std::invalid_argument("designer: no full-support form for this rule");
  if (full_support && dsn.N % p != 0)
    throw std::invalid_argument("designer: full-support variant needs p | N");
  const bool enlarged = dsn.t2 >= 0;
  const long t = dsn.t, t2 = dsn.t2;
  long t_min = full_support ? 0 : 1;
  if (t < t_min) throw std::invalid_argument("designer: t out of range");
  if (enlarged && t2 >= t)
    throw std::invalid_argument("designer: enlargement needs t2 < t");

  const long M = dsn.N - 1;
  const int S = hermitian ? 2 * s : s;
  const long set_base = detail::ipow(p, S);
  const long q_small = detail::ipow(p, s);

  univariate_result res;
  auto note = [&](std::string line) { res.trace.push_back(std::move(line)); };

  // Cyclotomic data modulo N - 1.
  auto sets = minimal_sets(M, set_base);
  std::vector<long> reps;  // nonzero representatives, increasing
  for (const auto& st : sets)
    if (st.rep()[0] != 0) reps.push_back(st.rep()[0]);
  auto set_of = [&](long rep_value) -> const cyclotomic_set& {
    for (const auto& st : sets)
      if (st.rep()[0] == rep_value) return st;
    throw std::logic_error("designer: representative lookup failed");
  };
  res.a_seq = reps;
  if (t + 1 > static_cast<long>(reps.size()))
    throw std::invalid_argument("designer: t exceeds the number of nonzero sets");
  auto a = [&](long i) -> long {  // a_i, 1-based over the nonzero representatives
    if (i < 1 || i > static_cast<long>(reps.size()))
      throw std::invalid_argument("designer: representative index out of range");
    return reps[i - 1];
  };

  // Rule hypotheses.
  switch (rule) {
    case uni_rule::prop_a: {
      if (dsn.r < 2 || detail::ipow(p, dsn.r) != dsn.N)
        throw std::invalid_argument("PropA: N must equal p^r");
      long bound;
      if (dsn.r % 2 == 0) {
        if ((dsn.r / 2) % s != 0)
          throw std::invalid_argument("PropA: s must divide r/2");
        bound = detail::ipow(p, dsn.r / 2) - 1;
      } else {
        if (s != 1) throw std::invalid_argument("PropA: odd r needs s = 1");
        bound = detail::ipow(p, (dsn.r + 1) / 2) - p - 1;
      }
      if (t >= 1 && a(t) >= bound)
        throw std::invalid_argument("PropA: a_t = " + num(a(t)) +
                                    " is not below the bound " + num(bound));
      note("PropA bound: a_t = " + (t >= 1 ? num(a(t)) : std::string("-")) +
           " < " + num(bound));
      for (long i = 1; i <= t; ++i)
        if (static_cast<long>(set_of(a(i)).cardinality()) != dsn.r / s)
          throw std::logic_error("PropA: set cardinality differs from r/s");
      note("PropA cards: every chosen set has cardinality r/s = " + num(dsn.r / s));
      break;
    }
    case uni_rule::thm_c: {
      if (dsn.r < 1 || (detail::ipow(p, dsn.r) - 1) % M != 0)
        throw std::invalid_argument("ThmC: N - 1 must divide p^r - 1");
      long min_nc = 0;
      for (long i = 1; i <= t; ++i) {
        long nc = companion(one_coord(M), set_base, set_of(a(i)), -1).rep()[0];
        if (i == 1 || nc < min_nc) min_nc = nc;
      }
      if (t >= 1 && a(t) >= min_nc)
        throw std::invalid_argument("ThmC: a_t = " + num(a(t)) +
                                    " not below the smallest companion " + num(min_nc));
      if (t >= 1)
        note("ThmC companions: min over chosen sets = " + num(min_nc) +
             " > a_t = " + num(a(t)));
      break;
    }
    case uni_rule::thm_z: {
      if ((detail::ipow(p, 4 * s) - 1) % M != 0)
        throw std::invalid_argument("ThmZ: N - 1 must divide p^{4s} - 1");
      long denom = q_small + 1;
      if (t >= 1 && a(t) * denom >= M)
        throw std::invalid_argument("ThmZ: a_t = " + num(a(t)) +
                                    " is not below (N-1)/(p^s+1)");
      note("ThmZ bound: a_t < (N-1)/(p^s+1) = " + num(M) + "/" + num(denom));
      long card_sum = 0;
      for (long i = 1; i <= t; ++i) card_sum += static_cast<long>(set_of(a(i)).cardinality());
      bool gcd_one = std::gcd(M, q_small - 1) == 1;
      if (card_sum > 2 * t || (gcd_one && card_sum != 2 * t))
        throw std::logic_error("ThmZ: set cardinalities inconsistent");
      note("ThmZ dimension: sum of cardinalities " + num(card_sum) +
           (card_sum == 2 * t ? " = " : " < ") + num(2 * t));
      break;
    }
    case uni_rule::prop_y: {
      if (dsn.r <= s || dsn.r % s != 0)
        throw std::invalid_argument("PropY: needs s | r and r > s");
      if ((detail::ipow(p, 2 * dsn.r) - 1) % M != 0)
        throw std::invalid_argument("PropY: N - 1 must divide p^{2r} - 1");
      long denom = detail::ipow(p, 2 * (dsn.r - s)) + 1;
      if (t >= 1 && a(t) * denom >= M)
        throw std::invalid_argument("PropY: a_t is not below (N-1)/(p^{2(r-s)}+1)");
      note("PropY bound: a_t < " + num(M) + "/" + num(denom));
      break;
    }
    case uni_rule::thm_e: {
      if (dsn.r < 1 || (detail::ipow(p, 2 * dsn.r) - 1) % M != 0)
        throw std::invalid_argument("ThmE: N - 1 must divide p^{2r} - 1");
      long min_nc = 0;
      for (long i = 1; i <= t; ++i) {
        long nc = companion(one_coord(M), set_base, set_of(a(i)), -q_small).rep()[0];
        if (i == 1 || nc < min_nc) min_nc = nc;
      }
      if (t >= 1 && min_nc <= a(t))
        throw std::invalid_argument("ThmE: smallest companion " + num(min_nc) +
                                    " does not exceed a_t = " + num(a(t)));
      if (t >= 1)
        note("ThmE companions: min over chosen sets = " + num(min_nc) +
             " > a_t = " + num(a(t)));
      break;
    }
    case uni_rule::prop_d: {
      if (dsn.r < 1 || dsn.r % s != 0)
        throw std::invalid_argument("PropD: needs s | r");
      if (detail::ipow(p, 2 * dsn.r) != dsn.N)
        throw std::invalid_argument("PropD: N must equal p^{2r}");
      // The p^s chain must reach the same representative at some index.
      auto reps_s = ordered_representatives(M, q_small);
      std::vector<long> nz;
      for (long v : reps_s)
        if (v != 0) nz.push_back(v);
      long t_prime = -1;
      if (t >= 1) {
        for (std::size_t i = 0; i < nz.size(); ++i)
          if (nz[i] == a(t)) t_prime = static_cast<long>(i) + 1;
        if (t_prime < 0)
          throw std::invalid_argument("PropD: a_t is not a representative of the p^s chain");
      }
      long bound = detail::ipow(p, dsn.r) - 1;
      bool odd_ext = dsn.extended_range && (dsn.r / s) % 2 == 1;
      if (t >= 1 && (odd_ext ? a(t) > bound : a(t) >= bound))
        throw std::invalid_argument("PropD: a_t violates the p^r - 1 bound");
      note("PropD chains aligned at t' = " + num(t_prime) +
           (odd_ext ? " (extended range)" : ""));
      break;
    }
    case uni_rule::remark_n:
      break;  // rewritten to thm_c above
  }

  // Evaluation field: the smallest extension containing both the N-1 roots
  // of unity and the small field.
  const long ord = detail::mult_order(p % M == 0 ? 1 : p, M);
  const int L = static_cast<int>(std::lcm(ord, static_cast<long>(S)));
  const field& big = field::get(p, L);
  variety_spec spec(big, {dsn.N}, {!full_support});
  note("evaluation field GF(" + num(p) + "^" + num(L) + "), length " + num(spec.n()));

  metric mt = hermitian ? metric::hermitian(q_small) : metric::euclidean();

  auto assemble = [&](long tt) -> delta_set {
    delta_set d;
    if (full_support) d.push_back({0});
    for (long i = 1; i <= tt; ++i)
      for (long v : flat_elements(set_of(a(i)))) d.push_back({v});
    return d.empty() ? d : normalize_delta(spec, d);
  };
  auto design_d = [&](long tt) -> long {
    long next = (tt + 1 <= static_cast<long>(reps.size())) ? a(tt + 1) : M;
    return next + (full_support ? 1 : 0);
  };
  auto build_subcode = [&](const delta_set& d) -> classical_code {
    if (d.empty()) return classical_code{gf_matrix(field::get(p, S), spec.n())};
    classical_code code = build_code(spec, d);
    classical_code sub = subfield_subcode(code, S);
    if (sub.dim() != static_cast<long>(d.size()))
      throw std::logic_error("designer: subfield subcode dimension differs from |delta|");
    return sub;
  };

  res.delta = assemble(t);
  res.designed_d = design_d(t);

  // Consecutive-run witness: the design must contain every exponent from the
  // start of the box up to its designed distance bound.
  for (long v = full_support ? 0 : 1; v < design_d(t) - (full_support ? 1 : 0); ++v)
    if (!std::binary_search(res.delta.begin(), res.delta.end(), exponent_tuple{v}))
      throw std::logic_error("designer: consecutive exponent run is broken");

  res.subcode = build_subcode(res.delta);
  certification cert = res.delta.empty() ? certification{true, {}}
                                         : certify_self_orthogonal(res.subcode, mt);
  if (!cert.self_orthogonal)
    throw std::logic_error("designer: certification failed despite hypotheses");
  note("Gram certificate: " + num(res.subcode.dim()) + " rows over GF(" + num(p) +
       "^" + num(S) + ") self-orthogonal");

  std::string rname = std::string(rule_name(rule)) + (full_support ? "+RemarkN" : "");

  if (!enlarged) {
    res.params = css_params(res.subcode, res.designed_d, mt, cert);
    res.params.rule = rname;
    return res;
  }

  // Enlarged pair: build the partner, verify nesting, apply the minimum
  // distance formula. The gap inequality makes the minimum collapse to the
  // first code's bound; when it fails we still emit the honest minimum.
  res.delta2 = assemble(t2);
  res.subcode2 = build_subcode(res.delta2);
  if (!res.delta2.empty()) {
    certification cert2 = certify_self_orthogonal(res.subcode2, mt);
    if (!cert2.self_orthogonal)
      throw std::logic_error("designer: partner certification failed");
    if (!is_subcode(res.subcode2, res.subcode))
      throw std::logic_error("designer: enlargement pair is not nested");
  }
  long d1 = res.designed_d, d2 = design_d(t2);
  long d_enl = enlarged_distance(d1, d2, q_small);
  long a1 = a(t + 1);
  long a2 = (t2 + 1 <= static_cast<long>(reps.size())) ? a(t2 + 1) : M;
  // ceil((q+1) a2 / q) >= a1  <=>  (q+1) a2 > q (a1 - 1)
  res.gap_inequality_ok = (q_small + 1) * a2 > q_small * (a1 - 1);
  note(std::string("gap inequality a_{t+1} <= ceil((q+1) a_{t2+1} / q): ") +
       (res.gap_inequality_ok ? "holds" : "fails") + " (a_{t+1} = " + num(a1) +
       ", a_{t2+1} = " + num(a2) + ")");
  note("distance: min{" + num(d1) + ", ceil((1+1/q) " + num(d2) + ")} = " + num(d_enl));

  res.params = enlargement_params(spec.n(), res.subcode.dim(), res.subcode2.dim(),
                                  d_enl, q_small);
  res.params.rule = rname + "+Hamada";
  res.designed_d = d_enl;
  return res;
}

}  // namespace qvariety
