#pragma once

// Stabilizer code parameters obtained from self-orthogonal classical codes:
// the CSS route (one code containing its dual) and the enlargement route
// (two nested self-orthogonal codes improving the rate).

#include <stdexcept>
#include <string>

#include "qvariety/affine.hpp"
#include "qvariety/matrix.hpp"
#include "qvariety/ortho.hpp"

namespace qvariety {

struct stabilizer_params {
  long n = 0;
  long k = 0;
  long d_lower = 0;
  long base_q = 0;  // alphabet of the quantum code
  std::string rule;
  bool certified = false;
};

// Parameters of the CSS (Euclidean) or Hermitian construction applied to the
// dual pair (D, D^perp), D self-orthogonal: [[n, n - 2 dim D, >= d]] with
// d a certified lower bound on the distance of D^perp. The Gram certificate
// of D must be supplied; refusing to proceed without it keeps every emitted
// parameter set backed by an exact check.
inline stabilizer_params css_params(const classical_code& self_orth, long certified_d,
                                    const metric& mt, const certification& cert) {
  if (!cert.self_orthogonal)
    throw std::invalid_argument("quantum: self-orthogonality certificate absent or failed");
  const field& F = self_orth.F();
  long base_q = mt.is_euclidean() ? F.q() : mt.conj_power;
  if (!mt.is_euclidean() && mt.conj_power * mt.conj_power != F.q())
    throw std::invalid_argument("quantum: Hermitian construction requires a field of order q^2");
  stabilizer_params out;
  out.n = self_orth.n();
  out.k = out.n - 2 * self_orth.dim();
  out.d_lower = certified_d;
  out.base_q = base_q;
  out.certified = true;
  if (out.k < 0) throw std::invalid_argument("quantum: code dimension exceeds n/2");
  return out;
}

// Distance of the enlarged construction: min{d1, ceil((1 + 1/q) d2)}.
inline long enlarged_distance(long d1, long d2, long q) {
  long lifted = ((q + 1) * d2 + q - 1) / q;
  return d1 < lifted ? d1 : lifted;
}

// Parameters of the enlargement of a self-orthogonal pair D2 < D1 (strict):
// [[n, n - (card1 + card2), >= d]]. The caller is responsible for having
// certified both codes, their nesting, and the distance d.
inline stabilizer_params enlargement_params(long n, long card1, long card2, long d,
                                            long base_q = 0) {
  if (card2 >= card1)
    throw std::invalid_argument("quantum: enlargement requires card2 < card1");
  if (card1 + card2 > n)
    throw std::invalid_argument("quantum: cards exceed the length");
  stabilizer_params out;
  out.n = n;
  out.k = n - (card1 + card2);
  out.d_lower = d;
  out.base_q = base_q;
  out.certified = true;
  return out;
}

// True when every row of inner lies in the row space of outer.
inline bool is_subcode(const classical_code& inner, const classical_code& outer) {
  if (inner.gen.F != outer.gen.F || inner.gen.ncols != outer.gen.ncols) return false;
  return rank_of(stacked(outer.gen, inner.gen)) == outer.gen.nrows();
}

}  // namespace qvariety
