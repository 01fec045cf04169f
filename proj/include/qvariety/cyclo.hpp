#pragma once

// Cyclotomic (Frobenius) orbits of exponent tuples. Each coordinate carries
// an arithmetic modulus M and one of two conventions:
//   torus:    exponents {0..M-1}, multiplication by the base mod M;
//   extended: exponents {0..M}, 0 is a fixed point, nonzero exponents are
//             multiplied mod M with residue 0 normalized to M.
// The extended convention models coordinates whose point set includes zero,
// where the exponent M (= N-1) and the exponent 0 evaluate differently.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qvariety/galois.hpp"

namespace qvariety {

struct coord_spec {
  long modulus = 1;       // M = N - 1
  bool extended = false;  // true when the coordinate ranges over the full box {0..M}
};

struct cyclotomic_set {
  std::vector<std::vector<long>> elements;  // lex sorted
  const std::vector<long>& rep() const { return elements.front(); }
  std::size_t cardinality() const { return elements.size(); }
  bool operator==(const cyclotomic_set& o) const { return elements == o.elements; }
};

namespace detail {

inline void check_orbit_args(const std::vector<coord_spec>& coords, long base) {
  if (coords.empty()) throw std::invalid_argument("cyclo: empty coordinate list");
  if (base < 1) throw std::invalid_argument("cyclo: base must be positive");
  for (const auto& c : coords) {
    if (c.modulus < 1) throw std::invalid_argument("cyclo: modulus must be positive");
    if (std::gcd(base % c.modulus, c.modulus) != 1)
      throw std::invalid_argument("cyclo: base not invertible modulo coordinate modulus");
  }
}

inline long coord_apply(const coord_spec& c, long value, long factor) {
  // value * factor in the coordinate's convention; factor may be negative.
  if (c.extended && value == 0) return 0;
  long m = c.modulus;
  long r = static_cast<long>(((static_cast<long long>(value) * (factor % m)) % m + m) % m);
  if (c.extended && r == 0) r = m;
  return r;
}

inline std::vector<long> tuple_apply(const std::vector<coord_spec>& coords,
                                     const std::vector<long>& t, long factor) {
  std::vector<long> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = coord_apply(coords[j], t[j], factor);
  return out;
}

inline void check_tuple(const std::vector<coord_spec>& coords,
                        const std::vector<long>& t) {
  if (t.size() != coords.size())
    throw std::invalid_argument("cyclo: tuple arity mismatch");
  for (std::size_t j = 0; j < t.size(); ++j) {
    long hi = coords[j].modulus - (coords[j].extended ? 0 : 1);
    if (t[j] < 0 || t[j] > hi)
      throw std::invalid_argument("cyclo: tuple entry out of range");
  }
}

}  // namespace detail

// Orbit of one tuple under multiplication by the base.
inline cyclotomic_set set_containing(const std::vector<coord_spec>& coords,
                                     long base, const std::vector<long>& tuple) {
  detail::check_orbit_args(coords, base);
  detail::check_tuple(coords, tuple);
  cyclotomic_set s;
  std::vector<long> cur = tuple;
  do {
    s.elements.push_back(cur);
    cur = detail::tuple_apply(coords, cur, base);
  } while (cur != tuple);
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

// All orbits, ordered by their lexicographically minimal representative.
inline std::vector<cyclotomic_set> minimal_sets(const std::vector<coord_spec>& coords,
                                                long base) {
  detail::check_orbit_args(coords, base);
  std::vector<long> sizes(coords.size());
  long total = 1;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    sizes[j] = coords[j].modulus + (coords[j].extended ? 1 : 0);
    total *= sizes[j];
  }
  auto index_of = [&](const std::vector<long>& t) {
    long idx = 0;
    for (std::size_t j = 0; j < t.size(); ++j) idx = idx * sizes[j] + t[j];
    return idx;
  };
  std::vector<bool> seen(total, false);
  std::vector<cyclotomic_set> out;
  std::vector<long> t(coords.size(), 0);
  for (long flat = 0; flat < total; ++flat) {
    if (!seen[flat]) {
      cyclotomic_set s = set_containing(coords, base, t);
      for (const auto& el : s.elements) seen[index_of(el)] = true;
      out.push_back(std::move(s));
    }
    // advance the mixed-radix odometer, last coordinate fastest
    for (std::size_t j = coords.size(); j-- > 0;) {
      if (++t[j] < sizes[j]) break;
      t[j] = 0;
    }
  }
  return out;
}

// Orbit of (multiplier * rep) for a given orbit; multiplier may be negative.
inline cyclotomic_set companion(const std::vector<coord_spec>& coords, long base,
                                const cyclotomic_set& s, long multiplier) {
  return set_containing(coords, base, detail::tuple_apply(coords, s.rep(), multiplier));
}

inline std::vector<std::vector<long>> ordered_representatives(
    const std::vector<coord_spec>& coords, long base) {
  std::vector<std::vector<long>> reps;
  for (const auto& s : minimal_sets(coords, base)) reps.push_back(s.rep());
  return reps;
}

// Univariate conveniences.

inline std::vector<coord_spec> one_coord(long modulus, bool extended = false) {
  return {coord_spec{modulus, extended}};
}

inline std::vector<cyclotomic_set> minimal_sets(long modulus, long base,
                                                bool extended = false) {
  return minimal_sets(one_coord(modulus, extended), base);
}

inline cyclotomic_set set_containing(long modulus, long base, long value,
                                     bool extended = false) {
  return set_containing(one_coord(modulus, extended), base, {value});
}

inline std::vector<long> ordered_representatives(long modulus, long base,
                                                 bool extended = false) {
  std::vector<long> reps;
  for (const auto& s : minimal_sets(modulus, base, extended)) reps.push_back(s.rep()[0]);
  return reps;
}

inline std::vector<long> flat_elements(const cyclotomic_set& s) {
  std::vector<long> out;
  for (const auto& el : s.elements) out.push_back(el[0]);
  return out;
}

}  // namespace qvariety
