#pragma once

// Evaluation codes on J-affine point sets. A variety_spec fixes the
// evaluation field GF(Q) and per-coordinate orders N_j with N_j - 1 | Q - 1.
// Coordinates listed in J range over the (N_j - 1)-st roots of unity only;
// the others additionally take the value zero. Monomial exponents live in the
// box {0..N_j-2} for j in J and {0..N_j-1} otherwise.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvariety/cyclo.hpp"
#include "qvariety/galois.hpp"
#include "qvariety/matrix.hpp"

namespace qvariety {

using exponent_tuple = std::vector<long>;
using delta_set = std::vector<exponent_tuple>;  // kept lex sorted, no duplicates

struct variety_spec {
  const field* F = nullptr;
  std::vector<long> N;
  std::vector<bool> in_J;

  variety_spec(const field& f, std::vector<long> orders, std::vector<bool> j_mask)
      : F(&f), N(std::move(orders)), in_J(std::move(j_mask)) {
    if (N.empty()) throw std::invalid_argument("spec: no coordinates");
    if (in_J.size() != N.size())
      throw std::invalid_argument("spec: J mask arity mismatch");
    for (long nj : N) {
      if (nj < 2) throw std::invalid_argument("spec: coordinate order below 2");
      if ((F->q() - 1) % (nj - 1) != 0)
        throw std::invalid_argument("spec: N_j - 1 does not divide Q - 1");
    }
  }

  std::size_t m() const { return N.size(); }
  long epsilon(std::size_t j) const { return in_J[j] ? 1 : 0; }
  // Largest exponent allowed in coordinate j.
  long box_limit(std::size_t j) const { return N[j] - 1 - epsilon(j); }

  long n() const {
    long prod = 1;
    for (std::size_t j = 0; j < m(); ++j) prod *= N[j] - epsilon(j);
    return prod;
  }

  std::vector<coord_spec> coords() const {
    std::vector<coord_spec> out;
    for (std::size_t j = 0; j < m(); ++j)
      out.push_back(coord_spec{N[j] - 1, !in_J[j]});
    return out;
  }

  bool exponent_in_box(const exponent_tuple& a) const {
    if (a.size() != m()) return false;
    for (std::size_t j = 0; j < m(); ++j)
      if (a[j] < 0 || a[j] > box_limit(j)) return false;
    return true;
  }
};

namespace detail {

inline void check_exponent(const variety_spec& spec, const exponent_tuple& a) {
  if (!spec.exponent_in_box(a))
    throw std::invalid_argument("affine: exponent outside the monomial box");
}

}  // namespace detail

// All exponent tuples of the monomial box, lex order.
inline delta_set full_box(const variety_spec& spec) {
  delta_set out;
  exponent_tuple t(spec.m(), 0);
  while (true) {
    out.push_back(t);
    std::size_t j = spec.m();
    while (j-- > 0) {
      if (++t[j] <= spec.box_limit(j)) break;
      t[j] = 0;
      if (j == 0) return out;
    }
  }
}

inline delta_set normalize_delta(const variety_spec& spec, delta_set delta) {
  if (delta.empty()) throw std::invalid_argument("affine: empty exponent set");
  for (const auto& a : delta) detail::check_exponent(spec, a);
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  return delta;
}

// Evaluation points in row-major order: coordinate 0 varies slowest. Each
// coordinate runs through the powers zeta^0, zeta^1, ... of its subgroup
// generator zeta = g^{(Q-1)/(N_j-1)}; the zero value, when present, comes last.
inline std::vector<std::vector<gf_elem>> point_set(const variety_spec& spec) {
  const field& F = *spec.F;
  std::vector<std::vector<gf_elem>> values(spec.m());
  for (std::size_t j = 0; j < spec.m(); ++j) {
    gf_elem zeta = F.pow(F.generator(), (F.q() - 1) / (spec.N[j] - 1));
    gf_elem cur = 1;
    for (long i = 0; i < spec.N[j] - 1; ++i) {
      values[j].push_back(cur);
      cur = F.mul(cur, zeta);
    }
    if (!spec.in_J[j]) values[j].push_back(0);
  }
  std::vector<std::vector<gf_elem>> points;
  points.reserve(spec.n());
  std::vector<std::size_t> idx(spec.m(), 0);
  while (true) {
    std::vector<gf_elem> pt(spec.m());
    for (std::size_t j = 0; j < spec.m(); ++j) pt[j] = values[j][idx[j]];
    points.push_back(std::move(pt));
    std::size_t j = spec.m();
    while (j-- > 0) {
      if (++idx[j] < values[j].size()) break;
      idx[j] = 0;
      if (j == 0) return points;
    }
  }
}

// Evaluation of X^a at every point, with 0^0 = 1.
inline std::vector<gf_elem> evaluate_monomial(const variety_spec& spec,
                                              const exponent_tuple& a) {
  detail::check_exponent(spec, a);
  const field& F = *spec.F;
  auto points = point_set(spec);
  std::vector<gf_elem> row(points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    gf_elem v = 1;
    for (std::size_t j = 0; j < spec.m(); ++j)
      v = F.mul(v, F.pow(points[c][j], a[j]));
    row[c] = v;
  }
  return row;
}

struct classical_code {
  gf_matrix gen;  // rows form a basis
  long n() const { return static_cast<long>(gen.ncols); }
  long dim() const { return static_cast<long>(gen.nrows()); }
  const field& F() const { return *gen.F; }
};

// Evaluation code spanned by the monomials of delta, one generator row per
// exponent tuple in lex order. The rows are always independent; this is
// checked and a failure reports a library bug.
inline classical_code build_code(const variety_spec& spec, const delta_set& delta_in) {
  delta_set delta = normalize_delta(spec, delta_in);
  const field& F = *spec.F;
  auto points = point_set(spec);
  gf_matrix gen(F, points.size());
  for (const auto& a : delta) {
    std::vector<gf_elem> row(points.size());
    for (std::size_t c = 0; c < points.size(); ++c) {
      gf_elem v = 1;
      for (std::size_t j = 0; j < spec.m(); ++j)
        v = F.mul(v, F.pow(points[c][j], a[j]));
      row[c] = v;
    }
    gen.append_row(std::move(row));
  }
  if (rank_of(gen) != delta.size())
    throw std::logic_error("affine: dependent monomial evaluations");
  return classical_code{std::move(gen)};
}

// Field homomorphism GF(p^s) -> GF(p^e), s | e, fixed deterministically: the
// image of the small field's modulus root is its smallest root (by encoding)
// inside the big field.
struct subfield_embedding {
  const field* big = nullptr;
  const field* small = nullptr;
  std::vector<gf_elem> to_big;    // indexed by small encoding
  std::vector<gf_elem> to_small;  // indexed by big encoding, -1 when outside

  subfield_embedding(const field& big_f, int sub_exp) : big(&big_f) {
    if (sub_exp < 1 || big_f.e() % sub_exp != 0)
      throw std::invalid_argument("embedding: sub_exp does not divide field exponent");
    small = &field::get(big_f.p(), sub_exp);
    const field& B = big_f;
    const field& S = *small;

    // Candidate images: the p^s elements fixed by the s-fold Frobenius.
    std::vector<gf_elem> members{0};
    if (S.q() > 1) {
      gf_elem h = B.pow(B.generator(), (B.q() - 1) / (S.q() - 1));
      gf_elem cur = 1;
      for (long i = 0; i < S.q() - 1; ++i) {
        members.push_back(cur);
        cur = B.mul(cur, h);
      }
    }
    std::sort(members.begin(), members.end());

    gf_elem root = -1;
    for (gf_elem cand : members) {
      gf_elem acc = 0, power = 1;
      for (std::size_t i = 0; i < S.modulus().size(); ++i) {
        acc = B.add(acc, B.mul(S.modulus()[i] % B.p(), power));
        power = B.mul(power, cand);
      }
      if (acc == 0) {
        root = cand;
        break;
      }
    }
    if (root < 0) throw std::logic_error("embedding: modulus has no subfield root");

    to_big.assign(S.q(), 0);
    to_small.assign(B.q(), -1);
    for (gf_elem v = 0; v < S.q(); ++v) {
      gf_elem acc = 0, power = 1;
      long x = v;
      while (x != 0) {
        acc = B.add(acc, B.mul(static_cast<gf_elem>(x % B.p()), power));
        x /= B.p();
        power = B.mul(power, root);
      }
      to_big[v] = acc;
      if (to_small[acc] != -1) throw std::logic_error("embedding: not injective");
      to_small[acc] = v;
    }
  }
};

// Largest subcode of `code` (as a GF(p^sub_exp)-linear space) whose words
// have all entries in the embedded subfield, returned over GF(p^sub_exp).
//
// Solved as a kernel problem: writing candidate combining coefficients over
// an F_{p^s}-basis {g^0..g^{m-1}} of the big field, the condition
// word^{p^s} = word (entrywise) is F_{p^s}-linear in the unknowns.
inline classical_code subfield_subcode(const classical_code& code, int sub_exp) {
  const field& B = code.F();
  if (sub_exp == B.e()) return code;
  subfield_embedding emb(B, sub_exp);
  const field& S = *emb.small;
  const long p = B.p();
  const int e = B.e(), s = sub_exp, m = e / s;
  const std::size_t k = code.gen.nrows(), n = code.gen.ncols;
  const long long ps = S.q();

  std::vector<gf_elem> beta(m);
  for (int j = 0; j < m; ++j) beta[j] = B.pow(B.generator(), j);

  // F_p-matrix of the map (c_0..c_{m-1}) in GF(p^s)^m  ->  sum embed(c_l) g^l,
  // written in the digit basis on both sides, then inverted.
  std::vector<std::vector<int>> M(e, std::vector<int>(e, 0));
  for (int l = 0; l < m; ++l)
    for (int sigma = 0; sigma < s; ++sigma) {
      gf_elem unit = 1;
      for (int i = 0; i < sigma; ++i) unit = static_cast<gf_elem>(unit * p);
      gf_elem img = B.mul(emb.to_big[unit], beta[l]);
      auto digits = B.decode(img);
      digits.resize(e, 0);
      for (int row = 0; row < e; ++row) M[row][l * s + sigma] = digits[row];
    }
  // Invert M over GF(p).
  std::vector<std::vector<int>> inv(e, std::vector<int>(e, 0));
  for (int i = 0; i < e; ++i) inv[i][i] = 1;
  for (int col = 0; col < e; ++col) {
    int piv = col;
    while (piv < e && M[piv][col] == 0) ++piv;
    if (piv == e) throw std::logic_error("subcode: basis matrix is singular");
    std::swap(M[piv], M[col]);
    std::swap(inv[piv], inv[col]);
    long f = detail::mod_inverse(M[col][col], p);
    for (int c = 0; c < e; ++c) {
      M[col][c] = static_cast<int>(M[col][c] * f % p);
      inv[col][c] = static_cast<int>(inv[col][c] * f % p);
    }
    for (int r = 0; r < e; ++r) {
      if (r == col || M[r][col] == 0) continue;
      long g = M[r][col];
      for (int c = 0; c < e; ++c) {
        M[r][c] = static_cast<int>(((M[r][c] - g * M[col][c]) % p + p) % p);
        inv[r][c] = static_cast<int>(((inv[r][c] - g * inv[col][c]) % p + p) % p);
      }
    }
  }
  auto decompose = [&](gf_elem x) {
    auto digits = B.decode(x);
    digits.resize(e, 0);
    std::vector<gf_elem> out(m, 0);
    for (int l = 0; l < m; ++l) {
      long enc = 0;
      for (int sigma = s; sigma-- > 0;) {
        long v = 0;
        for (int c = 0; c < e; ++c) v += static_cast<long>(inv[l * s + sigma][c]) * digits[c];
        enc = enc * p + v % p;
      }
      out[l] = static_cast<gf_elem>(enc);
    }
    return out;
  };

  // One block of m small-field equations per coordinate.
  gf_matrix constraints(S, k * m);
  std::vector<std::vector<gf_elem>> block(m, std::vector<gf_elem>(k * m, 0));
  for (std::size_t c = 0; c < n; ++c) {
    for (auto& row : block) std::fill(row.begin(), row.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j) {
        gf_elem base = B.mul(beta[j], code.gen.rows[i][c]);
        gf_elem gamma = B.sub(B.pow(base, ps), base);
        auto comps = decompose(gamma);
        for (int l = 0; l < m; ++l) block[l][i * m + j] = comps[l];
      }
    for (auto& row : block) constraints.append_row(row);
  }

  gf_matrix ker = kernel(std::move(constraints));
  gf_matrix sub(S, n);
  for (const auto& mu : ker.rows) {
    std::vector<gf_elem> word(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j) {
        gf_elem coef = B.mul(emb.to_big[mu[i * m + j]], beta[j]);
        if (coef == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          word[c] = B.add(word[c], B.mul(coef, code.gen.rows[i][c]));
      }
    std::vector<gf_elem> small_word(n);
    for (std::size_t c = 0; c < n; ++c) {
      gf_elem v = emb.to_small[word[c]];
      if (v < 0) throw std::logic_error("subcode: word left the subfield");
      small_word[c] = v;
    }
    sub.append_row(std::move(small_word));
  }
  std::size_t dim = row_reduce(sub);
  if (dim != ker.nrows()) throw std::logic_error("subcode: dependent kernel words");
  return classical_code{std::move(sub)};
}

}  // namespace qvariety
