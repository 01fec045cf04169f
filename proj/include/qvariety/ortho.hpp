#pragma once

// Orthogonality of monomial evaluations and duals of exponent sets. The
// bilinear form is parameterized by a conjugation power applied to the second
// argument: 1 gives the Euclidean product, q gives the Hermitian product on a
// field of order q^2. Character-sum factorization reduces orthogonality of
// two monomials to a per-coordinate divisibility test, and the dual of an
// exponent set is the box minus the partner tuples of its elements.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qvariety/affine.hpp"
#include "qvariety/matrix.hpp"

namespace qvariety {

struct metric {
  long conj_power = 1;
  static metric euclidean() { return metric{1}; }
  static metric hermitian(long q) {
    if (q < 2) throw std::invalid_argument("metric: conjugation power below 2");
    return metric{q};
  }
  bool is_euclidean() const { return conj_power == 1; }
};

namespace detail {

// Values b in coordinate j's exponent range that keep the j-th character-sum
// factor of the pair (a_j, b) nonzero. Multi-valued exactly at the box
// corners of coordinates outside J.
inline std::vector<long> partner_values(const variety_spec& spec, std::size_t j,
                                        long aj, const metric& mt) {
  const long M = spec.N[j] - 1;
  std::vector<long> out;
  for (long b = 0; b <= spec.box_limit(j); ++b) {
    long long e = static_cast<long long>(mt.conj_power) * aj + b;
    bool nonzero;
    if (spec.in_J[j]) {
      nonzero = e % M == 0;
    } else if (e == 0) {
      nonzero = spec.N[j] % spec.F->p() != 0;
    } else {
      nonzero = e % M == 0;
    }
    if (nonzero) out.push_back(b);
  }
  return out;
}

}  // namespace detail

// True when ev(X^a) and ev(X^b) are orthogonal under the given form. The sum
// factors over coordinates; it is nonzero iff every factor is nonzero, where
// the j-th factor vanishes unless N_j - 1 divides conj * a_j + b_j (with the
// zero-sum case conj * a_j + b_j = 0 contributing N_j instead of N_j - 1 for
// coordinates outside J).
inline bool monomials_orthogonal(const variety_spec& spec, const exponent_tuple& a,
                                 const exponent_tuple& b, const metric& mt) {
  detail::check_exponent(spec, a);
  detail::check_exponent(spec, b);
  for (std::size_t j = 0; j < spec.m(); ++j) {
    const long M = spec.N[j] - 1;
    long long e = static_cast<long long>(mt.conj_power) * a[j] + b[j];
    bool factor_nonzero;
    if (spec.in_J[j])
      factor_nonzero = e % M == 0;
    else if (e == 0)
      factor_nonzero = spec.N[j] % spec.F->p() != 0;
    else
      factor_nonzero = e % M == 0;
    if (!factor_nonzero) return true;
  }
  return false;
}

// Membership in H', the part of the box where every coordinate has exactly
// one partner value: coordinates outside J must avoid the exponent N_j - 1,
// and also the exponent 0 when p does not divide N_j.
inline bool in_h_prime(const variety_spec& spec, const exponent_tuple& a) {
  detail::check_exponent(spec, a);
  for (std::size_t j = 0; j < spec.m(); ++j) {
    if (spec.in_J[j]) continue;
    if (a[j] == spec.N[j] - 1) return false;
    if (a[j] == 0 && spec.N[j] % spec.F->p() != 0) return false;
  }
  return true;
}

inline delta_set h_prime_box(const variety_spec& spec) {
  delta_set out;
  for (const auto& a : full_box(spec))
    if (in_h_prime(spec, a)) out.push_back(a);
  return out;
}

// The dual exponent set: all box tuples orthogonal to every element of delta.
// For delta inside H' each element excludes the single tuple
//   j in J:     -conj * a_j  (mod N_j - 1)
//   j not in J: -conj * a_j  (mod N_j - 1), residue 0 written as N_j - 1;
// outside H' the excluded partners are multi-valued and the exclusion is the
// cartesian product of the per-coordinate partner values.
inline delta_set delta_perp(const variety_spec& spec, const delta_set& delta_in,
                            const metric& mt) {
  delta_set delta = normalize_delta(spec, delta_in);
  bool prime_region = true;
  for (const auto& a : delta)
    if (!in_h_prime(spec, a)) {
      prime_region = false;
      break;
    }

  std::vector<exponent_tuple> excluded;
  if (prime_region) {
    for (const auto& a : delta) {
      exponent_tuple t(spec.m());
      for (std::size_t j = 0; j < spec.m(); ++j) {
        const long M = spec.N[j] - 1;
        long r = static_cast<long>(((-static_cast<long long>(mt.conj_power) * a[j]) % M + M) % M);
        if (!spec.in_J[j] && r == 0) r = M;
        t[j] = r;
      }
      excluded.push_back(std::move(t));
    }
  } else {
    for (const auto& a : delta) {
      std::vector<std::vector<long>> choices(spec.m());
      for (std::size_t j = 0; j < spec.m(); ++j) {
        choices[j] = detail::partner_values(spec, j, a[j], mt);
        if (choices[j].empty()) break;
      }
      bool feasible = true;
      for (const auto& ch : choices) feasible = feasible && !ch.empty();
      if (!feasible) continue;
      exponent_tuple t(spec.m(), 0);
      std::vector<std::size_t> idx(spec.m(), 0);
      while (true) {
        for (std::size_t j = 0; j < spec.m(); ++j) t[j] = choices[j][idx[j]];
        excluded.push_back(t);
        std::size_t j = spec.m();
        bool done = true;
        while (j-- > 0) {
          if (++idx[j] < choices[j].size()) {
            done = false;
            break;
          }
          idx[j] = 0;
        }
        if (done) break;
      }
    }
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());

  delta_set out;
  for (const auto& a : full_box(spec))
    if (!std::binary_search(excluded.begin(), excluded.end(), a)) out.push_back(a);
  return out;
}

struct certification {
  bool self_orthogonal = false;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// Exact Gram check of the code against itself under the given form. For the
// Hermitian form the code's field must have order conj_power^2.
inline certification certify_self_orthogonal(const classical_code& code,
                                             const metric& mt) {
  const field& F = code.F();
  if (!mt.is_euclidean() && mt.conj_power * mt.conj_power != F.q())
    throw std::invalid_argument("ortho: Hermitian form requires a field of order q^2");
  std::vector<std::vector<gf_elem>> conj_rows = code.gen.rows;
  if (!mt.is_euclidean())
    for (auto& row : conj_rows)
      for (auto& x : row) x = F.pow(x, mt.conj_power);
  certification cert;
  cert.self_orthogonal = true;
  for (std::size_t i = 0; i < code.gen.nrows(); ++i)
    for (std::size_t j = i; j < code.gen.nrows(); ++j) {
      gf_elem acc = 0;
      for (std::size_t c = 0; c < code.gen.ncols; ++c)
        acc = F.add(acc, F.mul(code.gen.rows[i][c], conj_rows[j][c]));
      if (acc != 0) {
        cert.self_orthogonal = false;
        cert.violations.emplace_back(i, j);
      }
    }
  return cert;
}

// True when every row of a is orthogonal to every row of b under the form.
inline bool spaces_orthogonal(const gf_matrix& a, const gf_matrix& b,
                              const metric& mt) {
  return is_zero(gram(a, b, mt.conj_power));
}

}  // namespace qvariety
