#pragma once

// Independent distance checks, deliberately simple: an exhaustive minimum
// weight over all messages (reflected mixed-radix Gray walk, one row update
// per step) and a certified lower bound on the dual distance obtained by
// showing that no small set of generator-matrix columns is dependent. Both
// respect an explicit work budget and report "unverified" when it is
// exceeded rather than guessing.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvariety/affine.hpp"
#include "qvariety/matrix.hpp"

namespace qvariety {

struct oracle_limits {
  long long enumeration = 1LL << 24;  // max number of messages for exact search
  long long nodes = 1LL << 27;        // max column subsets visited by no_word_below
};

// QVARIETY_BUDGET overrides both limits with a single work figure.
inline oracle_limits limits_from_env(oracle_limits base = {}) {
  if (const char* s = std::getenv("QVARIETY_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && v > 0) {
      base.enumeration = v;
      base.nodes = v;
    }
  }
  return base;
}

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline classical_code dual_code(const classical_code& code) {
  return classical_code{kernel(code.gen)};
}

// Exact minimum distance by enumerating every nonzero codeword. The walk is
// a reflected Gray sequence over message digits, so each step updates the
// running codeword by one scaled generator row.
inline long min_distance_exact(const classical_code& code,
                               const oracle_limits& limits = {}) {
  const field& F = code.F();
  const long q = F.q();
  const std::size_t k = code.gen.nrows(), n = code.gen.ncols;
  if (k == 0) throw std::invalid_argument("oracle: zero-dimensional code");
  long long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > limits.enumeration / q)
      throw budget_error("oracle: q^k exceeds the enumeration budget");
    total *= q;
  }

  // scaled[i][s] = s * row_i for every field scalar s; worthwhile for the
  // small alphabets this search is feasible for
  const bool cache_rows = q <= 256;
  std::vector<std::vector<std::vector<gf_elem>>> scaled;
  if (cache_rows) {
    scaled.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      scaled[i].assign(q, std::vector<gf_elem>(n));
      for (long s = 0; s < q; ++s)
        for (std::size_t c = 0; c < n; ++c)
          scaled[i][s][c] = F.mul(static_cast<gf_elem>(s), code.gen.rows[i][c]);
    }
  }

  std::vector<long> a(k, 0), d(k, 1);
  std::vector<std::size_t> f(k + 1);
  for (std::size_t i = 0; i <= k; ++i) f[i] = i;
  std::vector<gf_elem> cw(n, 0);
  long best = static_cast<long>(n) + 1;
  while (true) {
    std::size_t j = f[0];
    f[0] = 0;
    if (j == k) break;
    gf_elem old_digit = static_cast<gf_elem>(a[j]);
    a[j] += d[j];
    gf_elem new_digit = static_cast<gf_elem>(a[j]);
    if (a[j] == 0 || a[j] == q - 1) {
      d[j] = -d[j];
      f[j] = f[j + 1];
      f[j + 1] = j + 1;
    }
    gf_elem delta = F.sub(new_digit, old_digit);
    long wt = 0;
    if (cache_rows) {
      const auto& delta_row = scaled[j][delta];
      for (std::size_t c = 0; c < n; ++c) {
        cw[c] = F.add(cw[c], delta_row[c]);
        if (cw[c] != 0) ++wt;
      }
    } else {
      for (std::size_t c = 0; c < n; ++c) {
        cw[c] = F.add(cw[c], F.mul(delta, code.gen.rows[j][c]));
        if (cw[c] != 0) ++wt;
      }
    }
    if (wt < best) best = wt;
  }
  return best;
}

struct word_check {
  enum class status { verified, refuted, unverified };
  status result = status::unverified;
  std::vector<std::size_t> dependent_columns;  // witness when refuted
  long long nodes = 0;
};

// Certifies d(dual of the row space of G) >= w by exhausting all column
// subsets of size at most w - 1: a dependent subset is exactly a dual word
// of that weight. Returns refuted with a witness when one exists, and
// unverified when the node budget runs out.
inline word_check no_word_below(const gf_matrix& G, long w,
                                const oracle_limits& limits = {}) {
  if (w < 1) throw std::invalid_argument("oracle: weight bound below 1");
  const field& F = *G.F;
  const std::size_t k = G.nrows(), n = G.ncols;
  word_check out;
  if (w == 1) {
    out.result = word_check::status::verified;
    return out;
  }

  std::vector<std::vector<gf_elem>> columns(n, std::vector<gf_elem>(k));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < k; ++r) columns[c][r] = G.rows[r][c];

  // pivots: normalized reduced columns with their pivot positions
  std::vector<std::vector<gf_elem>> pivots;
  std::vector<std::size_t> pivot_pos;
  std::vector<std::size_t> chosen;
  bool exhausted_budget = false;

  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    for (std::size_t c = start; c < n; ++c) {
      if (++out.nodes > limits.nodes) {
        exhausted_budget = true;
        return false;
      }
      std::vector<gf_elem> v = columns[c];
      for (std::size_t t = 0; t < pivots.size(); ++t) {
        gf_elem coef = v[pivot_pos[t]];
        if (coef == 0) continue;
        for (std::size_t r = 0; r < k; ++r)
          v[r] = F.sub(v[r], F.mul(coef, pivots[t][r]));
      }
      std::size_t pos = 0;
      while (pos < k && v[pos] == 0) ++pos;
      if (pos == k) {
        chosen.push_back(c);
        out.dependent_columns = chosen;
        return true;
      }
      if (static_cast<long>(chosen.size()) + 2 <= w - 1) {
        gf_elem s = F.inv(v[pos]);
        for (std::size_t r = 0; r < k; ++r) v[r] = F.mul(v[r], s);
        pivots.push_back(std::move(v));
        pivot_pos.push_back(pos);
        chosen.push_back(c);
        bool found = self(self, c + 1);
        chosen.pop_back();
        pivots.pop_back();
        pivot_pos.pop_back();
        if (found || exhausted_budget) return found;
      }
    }
    return false;
  };

  bool refuted = dfs(dfs, 0);
  if (refuted)
    out.result = word_check::status::refuted;
  else if (exhausted_budget)
    out.result = word_check::status::unverified;
  else
    out.result = word_check::status::verified;
  return out;
}

}  // namespace qvariety
