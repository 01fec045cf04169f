#pragma once

// Arithmetic in GF(p^e) with a deterministically chosen modulus and generator.
//
// An element is an integer in [0, p^e): its base-p digits are the coefficients
// of the residue polynomial, least significant digit = constant term. The
// modulus is the lexicographically smallest monic irreducible of degree e
// (coefficients compared low-degree-first), the generator is the primitive
// element with the smallest encoding. Fields with at most 2^16 elements carry
// exp/log tables; larger ones multiply polynomials and reduce.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qvariety {

using gf_elem = std::int32_t;

constexpr long kFieldBudget = 1L << 20;   // largest supported p^e
constexpr long kTableLimit = 1L << 16;    // exp/log tables up to this size

namespace detail {

// Polynomials over GF(p): coefficient vectors, low degree first, trimmed.

inline void poly_trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mod_inverse(int a, long p) {
  // Fermat inversion in the prime field.
  long r = 1, b = ((a % p) + p) % p, k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<int>(r);
}

inline std::vector<int> poly_mul(const std::vector<int>& a,
                                 const std::vector<int>& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] += static_cast<long long>(a[i]) * b[j];
  }
  std::vector<int> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    out[i] = static_cast<int>(acc[i] % p);
  poly_trim(out);
  return out;
}

inline void poly_reduce(std::vector<int>& a, const std::vector<int>& mod, long p) {
  // mod is monic of degree >= 1.
  const int deg = static_cast<int>(mod.size()) - 1;
  while (static_cast<int>(a.size()) > deg) {
    int c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - deg;
    if (c != 0)
      for (int i = 0; i <= deg; ++i) {
        long long v = a[shift + i] - static_cast<long long>(c) * mod[i];
        a[shift + i] = static_cast<int>(((v % p) + p) % p);
      }
    a.pop_back();
    poly_trim(a);
    if (a.empty()) return;
  }
}

inline std::vector<int> poly_mul_mod(const std::vector<int>& a,
                                     const std::vector<int>& b,
                                     const std::vector<int>& mod, long p) {
  auto r = poly_mul(a, b, p);
  poly_reduce(r, mod, p);
  return r;
}

inline std::vector<int> poly_pow_mod(std::vector<int> base, long long k,
                                     const std::vector<int>& mod, long p) {
  std::vector<int> r{1};
  poly_reduce(base, mod, p);
  while (k > 0) {
    if (k & 1) r = poly_mul_mod(r, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    k >>= 1;
  }
  return r;
}

inline std::vector<int> poly_sub(std::vector<int> a, const std::vector<int>& b,
                                 long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<int>(((a[i] - b[i]) % p + p) % p);
  poly_trim(a);
  return a;
}

inline std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, long p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b via repeated leading-term elimination.
    int lead_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      long long f = static_cast<long long>(a.back()) * lead_inv % p;
      int shift = static_cast<int>(a.size() - b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        long long v = a[shift + i] - f * b[i];
        a[shift + i] = static_cast<int>(((v % p) + p) % p);
      }
      poly_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin irreducibility test for a monic degree-e polynomial over GF(p):
// x^{p^e} = x mod f, and gcd(x^{p^{e/l}} - x, f) = 1 for every prime l | e.
inline bool poly_irreducible(const std::vector<int>& f, long p) {
  const int e = static_cast<int>(f.size()) - 1;
  const std::vector<int> x{0, 1};
  auto frob_steps = [&](int k) {
    // x^{p^k} mod f
    std::vector<int> u = x;
    for (int i = 0; i < k; ++i) u = poly_pow_mod(u, p, f, p);
    return u;
  };
  if (poly_sub(frob_steps(e), x, p) != std::vector<int>{}) return false;
  for (long l : prime_factors(e)) {
    auto g = poly_gcd(poly_sub(frob_steps(static_cast<int>(e / l)), x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class field {
 public:
  long p() const { return p_; }
  int e() const { return e_; }
  long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  gf_elem generator() const { return generator_; }

  // Returns the cached field object for GF(p^e); references stay valid for
  // the lifetime of the process, so fields can be compared by address.
  static const field& get(long p, int e);

  gf_elem add(gf_elem a, gf_elem b) const {
    if (p_ == 2) return a ^ b;
    long res = 0, mult = 1, x = a, y = b;
    while (x != 0 || y != 0) {
      res += (x % p_ + y % p_) % p_ * mult;
      x /= p_;
      y /= p_;
      mult *= p_;
    }
    return static_cast<gf_elem>(res);
  }

  gf_elem neg(gf_elem a) const {
    if (p_ == 2) return a;
    long res = 0, mult = 1, x = a;
    while (x != 0) {
      res += (p_ - x % p_) % p_ * mult;
      x /= p_;
      mult *= p_;
    }
    return static_cast<gf_elem>(res);
  }

  gf_elem sub(gf_elem a, gf_elem b) const { return add(a, neg(b)); }

  gf_elem mul(gf_elem a, gf_elem b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) return exp_[log_[a] + log_[b]];
    return encode(detail::poly_mul_mod(decode(a), decode(b), modulus_, p_));
  }

  gf_elem inv(gf_elem a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    if (has_tables_) return exp_[q_ - 1 - log_[a]];
    return pow(a, q_ - 2);
  }

  gf_elem div(gf_elem a, gf_elem b) const { return mul(a, inv(b)); }

  gf_elem pow(gf_elem a, long long k) const {
    if (k < 0) throw std::invalid_argument("gf: negative exponent");
    if (a == 0) return k == 0 ? 1 : 0;
    if (has_tables_) {
      long idx = static_cast<long>(static_cast<long long>(log_[a]) % (q_ - 1) * (k % (q_ - 1)) % (q_ - 1));
      return exp_[idx];
    }
    gf_elem r = 1, base = a;
    long long kk = k % (q_ - 1);
    while (kk > 0) {
      if (kk & 1) r = mul(r, base);
      base = mul(base, base);
      kk >>= 1;
    }
    return r;
  }

  // a^{p^i}
  gf_elem frobenius(gf_elem a, int i = 1) const {
    long long ex = 1;
    for (int k = 0; k < i % e_; ++k) ex *= p_;
    return pow(a, ex);
  }

  // True iff a lies in the subfield GF(p^sub_exp), i.e. a^{p^sub_exp} = a.
  bool subfield_membership(gf_elem a, int sub_exp) const {
    require_sub(sub_exp);
    return frobenius(a, sub_exp) == a;
  }

  // Relative trace onto GF(p^sub_exp): sum of a^{p^{sub_exp * i}}.
  gf_elem trace_to(gf_elem a, int sub_exp) const {
    require_sub(sub_exp);
    gf_elem acc = a, y = a;
    for (int i = 1; i < e_ / sub_exp; ++i) {
      y = frobenius(y, sub_exp);
      acc = add(acc, y);
    }
    return acc;
  }

  long elem_order(gf_elem a) const {
    if (a == 0) throw std::domain_error("gf: order of zero");
    long ord = q_ - 1;
    for (long l : detail::prime_factors(q_ - 1))
      while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
    return ord;
  }

  std::vector<int> decode(gf_elem a) const {
    std::vector<int> digits;
    long x = a;
    while (x != 0) {
      digits.push_back(static_cast<int>(x % p_));
      x /= p_;
    }
    return digits;
  }

  gf_elem encode(const std::vector<int>& digits) const {
    long v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<gf_elem>(v);
  }

 private:
  field(long p, int e) : p_(p), e_(e) {
    if (!detail::is_prime(p)) throw std::invalid_argument("gf: p is not prime");
    if (e < 1) throw std::invalid_argument("gf: exponent must be positive");
    long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > kFieldBudget)
        throw std::invalid_argument("gf: p^e exceeds the field budget");
    }
    q_ = q;
    modulus_ = find_modulus();
    has_tables_ = q_ <= kTableLimit;
    generator_ = smallest_primitive();
    if (has_tables_) build_tables_with(generator_);
  }

  void require_sub(int sub_exp) const {
    if (sub_exp < 1 || e_ % sub_exp != 0)
      throw std::invalid_argument("gf: sub_exp does not divide field exponent");
  }

  std::vector<int> find_modulus() const {
    if (e_ == 1) return {0, 1};  // the polynomial x; residues are GF(p) itself
    for (long v = 0; v < q_; ++v) {
      std::vector<int> f(e_ + 1, 0);
      long x = v;
      for (int i = 0; i < e_; ++i) {
        f[i] = static_cast<int>(x % p_);
        x /= p_;
      }
      f[e_] = 1;
      if (detail::poly_irreducible(f, p_)) return f;
    }
    throw std::logic_error("gf: no irreducible polynomial found");
  }

  // Smallest element (by encoding) of multiplicative order q-1. Uses raw
  // polynomial arithmetic so it works before tables exist.
  gf_elem smallest_primitive() const {
    auto factors = detail::prime_factors(q_ - 1);
    for (gf_elem cand = 1; cand < q_; ++cand) {
      bool ok = raw_pow(cand, q_ - 1) == 1;
      for (long l : factors)
        if (ok && raw_pow(cand, (q_ - 1) / l) == 1) ok = false;
      if (ok) return cand;
    }
    throw std::logic_error("gf: no primitive element found");
  }

  gf_elem raw_mul(gf_elem a, gf_elem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<gf_elem>(static_cast<long long>(a) * b % p_);
    return encode(detail::poly_mul_mod(decode(a), decode(b), modulus_, p_));
  }

  gf_elem raw_pow(gf_elem a, long long k) const {
    gf_elem r = 1, base = a;
    while (k > 0) {
      if (k & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      k >>= 1;
    }
    return r;
  }

  void build_tables_with(gf_elem gen) {
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    gf_elem cur = 1;
    for (long i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = static_cast<std::int32_t>(i);
      cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw std::logic_error("gf: generator order mismatch");
    for (long i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
  }

  long p_;
  int e_;
  long q_;
  std::vector<int> modulus_;
  gf_elem generator_ = 0;
  bool has_tables_ = false;
  std::vector<gf_elem> exp_;
  std::vector<std::int32_t> log_;
};

inline const field& field::get(long p, int e) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<field>(new field(p, e))).first;
  return *it->second;
}

inline const field& make_field(long p, int e) { return field::get(p, e); }

}  // namespace qvariety
