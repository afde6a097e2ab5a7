#include "drep/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drep {

// --- PowerSeries -------------------------------------------------------------

PowerSeries PowerSeries::one(int nvars, int T) {
  PowerSeries p;
  p.nvars = nvars;
  p.trunc = T;
  p.c[std::vector<int>(nvars, 0)] = Scalar(1);
  return p;
}

Scalar PowerSeries::coeff(const std::vector<int>& e) const {
  auto it = c.find(e);
  return it == c.end() ? Scalar(0) : it->second;
}

Scalar PowerSeries::coeff1(int k) const { return coeff(std::vector<int>{k}); }

static int total_deg(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

static PowerSeries scale(const PowerSeries& p, const Scalar& s) {
  PowerSeries r;
  r.nvars = p.nvars;
  r.trunc = p.trunc;
  if (s == 0) return r;
  for (const auto& [e, v] : p.c) r.c.emplace(e, Scalar(v * s));
  return r;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r = *this;
  r.trunc = std::min(trunc, o.trunc);
  for (const auto& [e, v] : o.c) {
    auto& acc = r.c[e];
    acc += v;
    if (acc == 0) r.c.erase(e);
  }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = total_deg(it->first) > r.trunc ? r.c.erase(it) : std::next(it);
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  return *this + scale(o, Scalar(-1));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  if (nvars != o.nvars) throw std::invalid_argument("series: variable mismatch");
  PowerSeries r;
  r.nvars = nvars;
  r.trunc = std::min(trunc, o.trunc);
  for (const auto& [ea, va] : c) {
    int da = total_deg(ea);
    if (da > r.trunc) continue;
    for (const auto& [eb, vb] : o.c) {
      if (da + total_deg(eb) > r.trunc) continue;
      std::vector<int> e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      auto& acc = r.c[e];
      acc += va * vb;
      if (acc == 0) r.c.erase(e);
    }
  }
  return r;
}

PowerSeries PowerSeries::inverse() const {
  std::vector<int> zero(nvars, 0);
  Scalar c0 = coeff(zero);
  if (c0 == 0) throw std::invalid_argument("series inverse: zero constant term");
  // p^{-1} = c0^{-1} (1 + u + u^2 + ...) with u = 1 - p/c0.
  PowerSeries u = one(nvars, trunc) - scale(*this, Scalar(Scalar(1) / c0));
  PowerSeries acc = one(nvars, trunc);
  PowerSeries upow = one(nvars, trunc);
  for (int k = 1; k <= trunc; ++k) {
    upow = upow * u;
    if (upow.c.empty()) break;
    acc = acc + upow;
  }
  return scale(acc, Scalar(Scalar(1) / c0));
}

PowerSeries PowerSeries::pow_int(long e) const {
  if (e < 0) return inverse().pow_int(-e);
  PowerSeries r = one(nvars, trunc);
  PowerSeries base = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  return nvars == o.nvars && c == o.c;
}

std::string PowerSeries::str(const std::vector<std::string>& names) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c) {
    os << (first ? "" : " + ") << scalar_str(v);
    for (int i = 0; i < nvars; ++i)
      if (e[i]) os << "*" << names[i] << "^" << e[i];
    first = false;
  }
  return os.str();
}

// 1 - q^k as a univariate series.
static PowerSeries one_minus_qk(int k, int T) {
  PowerSeries p = PowerSeries::one(1, T);
  if (k <= T) p.c[{k}] = Scalar(-1);
  return p;
}

// --- census products ----------------------------------------------------------

PowerSeries chi_rep(const GeneratorCensus& census, int n, int T) {
  PowerSeries r = PowerSeries::one(1, T);
  if (n == 0) return r;
  for (const auto& [i, di] : census) {
    if (i > T || di == 0) continue;
    r = r * one_minus_qk(i, T).pow_int(-di * static_cast<long>(n) * n);
  }
  return r;
}

PowerSeries zeta_closed(const GeneratorCensus& census, int T) {
  PowerSeries r = PowerSeries::one(1, T);
  for (int s = 1; s <= T; ++s) {
    PowerSeries inner = PowerSeries::one(1, T);
    for (const auto& [i, di] : census) {
      long e = static_cast<long>(i) * s;
      if (e > T || di == 0) continue;
      inner.c[{static_cast<int>(e)}] -= Scalar(di);
      if (inner.c[{static_cast<int>(e)}] == 0) inner.c.erase({static_cast<int>(e)});
    }
    r = r * inner.inverse();
  }
  return r;
}

PowerSeries zeta_trains(int m, int T) {
  if (m < 1) throw std::invalid_argument("zeta_trains: m >= 1 required");
  // Inner polynomial 1 - q + sum_{l, tau in T(l,m)} (-1)^{l-1} q^{w_tau},
  // w_tau = m + n_l, by explicit train enumeration.
  std::map<int, long> coef;  // exponent -> coefficient
  coef[0] += 1;
  coef[1] -= 1;
  // DFS over trains: sequences 1 = n_1 < ... < n_l with gaps <= m.
  struct Frame { int last; int len; };
  std::vector<Frame> stack{{1, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    int w = m + f.last;
    if (w <= T) coef[w] += (f.len % 2) ? 1 : -1;
    for (int gap = 1; gap <= m; ++gap) {
      int nxt = f.last + gap;
      if (m + nxt > T) break;
      stack.push_back({nxt, f.len + 1});
    }
  }
  PowerSeries r = PowerSeries::one(1, T);
  for (int s = 1; s <= T; ++s) {
    PowerSeries inner;
    inner.nvars = 1;
    inner.trunc = T;
    for (const auto& [e, v] : coef) {
      if (v == 0) continue;
      long es = static_cast<long>(e) * s;
      if (es > T) continue;
      inner.c[{static_cast<int>(es)}] = Scalar(v);
    }
    r = r * inner.inverse();
  }
  return r;
}

PowerSeries chi_sym_hc(const std::map<int, long>& even_dims,
                       const std::map<int, long>& odd_dims, int T) {
  std::map<int, long> exp;  // weight -> b_i - a_i
  for (const auto& [i, a] : even_dims) exp[i] -= a;
  for (const auto& [i, b] : odd_dims) exp[i] += b;
  PowerSeries r = PowerSeries::one(1, T);
  for (const auto& [i, e] : exp) {
    if (i > T || e == 0 || i == 0) continue;
    r = r * one_minus_qk(i, T).pow_int(e);
  }
  return r;
}

// --- Molien-Weyl on the maximal torus -----------------------------------------

namespace {

// Laurent polynomials in z_1..z_n, exponents pruned to |e| <= bound.
using ZExp = std::vector<int>;
using LaurentPoly = std::map<ZExp, Scalar>;

struct TorusSeries {
  int n = 1;
  int T = 0;
  int zbound = 0;
  std::vector<LaurentPoly> byq;  // index = q-order, size T+1

  static TorusSeries one(int n, int T, int zbound) {
    TorusSeries s{n, T, zbound, std::vector<LaurentPoly>(T + 1)};
    s.byq[0][ZExp(n, 0)] = Scalar(1);
    return s;
  }
};

bool within_bound(const ZExp& e, int bound) {
  for (int x : e)
    if (x > bound || x < -bound) return false;
  return true;
}

TorusSeries ts_mul(const TorusSeries& a, const TorusSeries& b) {
  TorusSeries r{a.n, a.T, a.zbound, std::vector<LaurentPoly>(a.T + 1)};
  for (int i = 0; i <= a.T; ++i) {
    if (a.byq[i].empty()) continue;
    for (int j = 0; i + j <= a.T; ++j) {
      if (b.byq[j].empty()) continue;
      LaurentPoly& out = r.byq[i + j];
      for (const auto& [ea, va] : a.byq[i])
        for (const auto& [eb, vb] : b.byq[j]) {
          ZExp e(a.n);
          for (int k = 0; k < a.n; ++k) e[k] = ea[k] + eb[k];
          if (!within_bound(e, a.zbound)) continue;
          auto& acc = out[e];
          acc += va * vb;
          if (acc == 0) out.erase(e);
        }
      if (out.size() > 200000)
        throw std::length_error(
            "molien_weyl: torus series exceeded the term budget; lower the "
            "truncation order or the matrix size");
    }
  }
  return r;
}

// (1 - z_a z_b^{-1} q^i)^{+-1} style factors.
TorusSeries ts_factor(int n, int T, int zbound, int a, int b, int qpow,
                      bool inverse) {
  TorusSeries s = TorusSeries::one(n, T, zbound);
  ZExp e(n, 0);
  e[a] += 1;
  e[b] -= 1;
  if (!inverse) {
    if (qpow <= T) {
      if (within_bound(e, zbound)) s.byq[qpow][e] = Scalar(-1);
    }
    return s;
  }
  // sum_k (z_a/z_b)^k q^{ik}
  for (int k = 1; k * qpow <= T; ++k) {
    ZExp ek(n, 0);
    ek[a] += k;
    ek[b] -= k;
    if (!within_bound(ek, zbound)) continue;
    s.byq[k * qpow][ek] = Scalar(1);
  }
  return s;
}

}  // namespace

PowerSeries molien_weyl(const GeneratorCensus& census, int n, int T) {
  if (n < 1) throw std::invalid_argument("molien_weyl: n >= 1 required");
  const int zbound = T + n;  // safe: q-order <= T shifts exponents by <= T,
                             // plus n-1 from the Weyl factor
  TorusSeries acc = TorusSeries::one(n, T, zbound);
  for (const auto& [i, di] : census) {
    if (i > T || di == 0) continue;
    long e = -di;  // the integrand is prod_i det(I - Ad q^i)^{-d_i}
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        TorusSeries f = ts_factor(n, T, zbound, a, b, i, /*inverse=*/e < 0);
        for (long rep = 0; rep < std::labs(e); ++rep) acc = ts_mul(acc, f);
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      TorusSeries f = ts_factor(n, T, zbound, a, b, 0, false);
      // (1 - z_a/z_b) at q-order 0
      acc = ts_mul(acc, f);
    }
  Int fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  PowerSeries out;
  out.nvars = 1;
  out.trunc = T;
  for (int k = 0; k <= T; ++k) {
    auto it = acc.byq[k].find(ZExp(n, 0));
    if (it == acc.byq[k].end()) continue;
    Scalar v = it->second / Scalar(fact);
    if (!is_integer(v))
      throw std::logic_error("molien_weyl: non-integer coefficient at q^" +
                             std::to_string(k));
    if (v != 0) out.c[{k}] = v;
  }
  return out;
}

// --- necklaces and good cyclic words -------------------------------------------

static std::vector<long> divisors(int r) {
  std::vector<long> d;
  for (int i = 1; i <= r; ++i)
    if (r % i == 0) d.push_back(i);
  return d;
}

static long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

static long moebius(long m) {
  long result = 1;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

static long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Orbit counts by direct enumeration (oracle path, r small).
static void necklace_brute(int d, int r, long& phi_out, long& mob_out) {
  std::set<std::vector<int>> orbits, primitive;
  std::vector<int> w(r, 0);
  while (true) {
    std::vector<int> best = w;
    int period = r;
    std::vector<int> rot = w;
    for (int k = 1; k <= r; ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (k < r && rot < best) best = rot;
      if (k < period && rot == w) period = k;
    }
    orbits.insert(best);
    if (period == r) primitive.insert(best);
    int i = r - 1;
    while (i >= 0 && w[i] == d - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  phi_out = static_cast<long>(orbits.size());
  mob_out = static_cast<long>(primitive.size());
}

NecklaceCounts necklace_counts(int d, int r_max) {
  if (d < 1) throw std::invalid_argument("necklace_counts: d >= 1 required");
  NecklaceCounts out;
  out.phi.assign(r_max + 1, 0);
  out.mob.assign(r_max + 1, 0);
  for (int r = 1; r <= r_max; ++r) {
    long phi_r = 0, mob_r = 0;
    for (long e : divisors(r)) {
      phi_r += euler_phi(e) * ipow(d, r / e);
      mob_r += moebius(e) * ipow(d, r / e);
    }
    if (phi_r % r || mob_r % r)
      throw std::logic_error("necklace_counts: non-integer count");
    out.phi[r] = phi_r / r;
    out.mob[r] = mob_r / r;
    if (r <= 12) {
      long bp, bm;
      necklace_brute(d, r, bp, bm);
      if (bp != out.phi[r] || bm != out.mob[r])
        throw std::logic_error("necklace_counts: formula and enumeration differ");
    }
  }
  return out;
}

// Rotation of all-odd-letter words: each single rotation of a length-r word
// carries the sign (-1)^{r-1}.
static bool all_odd_word_good(const std::vector<int>& w) {
  const int r = static_cast<int>(w.size());
  std::vector<int> rot = w;
  for (int k = 1; k < r; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    bool sign_neg = ((r - 1) * k) % 2 != 0;
    if (rot == w && sign_neg) return false;
  }
  return true;
}

long good_cyclic_count(int d, const std::vector<int>& multidegree,
                       int length_cap) {
  if (static_cast<int>(multidegree.size()) != d)
    throw std::invalid_argument("good_cyclic_count: multidegree size != d");
  long len = std::accumulate(multidegree.begin(), multidegree.end(), 0L);
  if (len > length_cap)
    throw std::invalid_argument("good_cyclic_count: length beyond cap");
  if (len == 0) return 0;
  std::vector<int> letters;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < multidegree[i]; ++k) letters.push_back(i);
  std::sort(letters.begin(), letters.end());
  std::set<std::vector<int>> reps;
  do {
    std::vector<int> best = letters;
    std::vector<int> rot = letters;
    for (std::size_t k = 1; k < letters.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    if (all_odd_word_good(letters)) reps.insert(best);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return static_cast<long>(reps.size());
}

long good_cyclic_total(int d, int r, int length_cap) {
  if (r > length_cap)
    throw std::invalid_argument("good_cyclic_total: length beyond cap");
  long total = 0;
  // Sum over compositions of r into d nonnegative parts.
  std::vector<int> md(d, 0);
  md[0] = r;
  while (true) {
    total += good_cyclic_count(d, md, length_cap);
    // next composition
    int i = 0;
    while (i < d - 1 && md[i] == 0) ++i;
    if (i == d - 1) break;
    int v = md[i];
    md[i] = 0;
    md[0] = v - 1;
    md[i + 1] += 1;
  }
  return total;
}

// --- identities ----------------------------------------------------------------

static IdentityResult compare_univariate(const PowerSeries& lhs,
                                         const PowerSeries& rhs, int T) {
  IdentityResult r;
  for (int k = 0; k <= T; ++k) {
    if (lhs.coeff1(k) != rhs.coeff1(k)) {
      r.pass = false;
      r.first_mismatch = k;
      r.detail = "q^" + std::to_string(k) + ": " + scalar_str(lhs.coeff1(k)) +
                 " vs " + scalar_str(rhs.coeff1(k));
      return r;
    }
  }
  r.pass = true;
  return r;
}

static PowerSeries prod_one_minus_pow(const std::vector<std::pair<int, long>>& exps,
                                      int T) {
  PowerSeries r = PowerSeries::one(1, T);
  for (auto& [k, e] : exps) {
    if (k > T || e == 0) continue;
    r = r * one_minus_qk(k, T).pow_int(e);
  }
  return r;
}

IdentityResult verify_identity(const std::string& which, int param, int T) {
  if (which == "cid1") {
    // prod (1 - q^{2j+1})^{-1} = prod (1 + q^s)
    std::vector<std::pair<int, long>> lhs_exps;
    for (int j = 0; 2 * j + 1 <= T; ++j) lhs_exps.push_back({2 * j + 1, -1});
    PowerSeries lhs = prod_one_minus_pow(lhs_exps, T);
    PowerSeries rhs = PowerSeries::one(1, T);
    for (int s = 1; s <= T; ++s) {
      PowerSeries f = PowerSeries::one(1, T);
      f.c[{s}] = Scalar(1);
      rhs = rhs * f;
    }
    return compare_univariate(lhs, rhs, T);
  }
  if (which == "cid2") {
    const int m = param;
    if (m < 1) throw std::invalid_argument("cid2 needs m >= 1");
    // prod_{(m+1) nmid n} (1 - q^n)^{-1} = prod_s (1 + q^s + ... + q^{ms})
    std::vector<std::pair<int, long>> lhs_exps;
    for (int n = 1; n <= T; ++n)
      if (n % (m + 1) != 0) lhs_exps.push_back({n, -1});
    PowerSeries lhs = prod_one_minus_pow(lhs_exps, T);
    PowerSeries rhs = PowerSeries::one(1, T);
    for (int s = 1; s <= T; ++s) {
      PowerSeries f = PowerSeries::one(1, T);
      for (int k = 1; k <= m && k * s <= T; ++k) f.c[{k * s}] = Scalar(1);
      rhs = rhs * f;
    }
    return compare_univariate(lhs, rhs, T);
  }
  if (which == "cidd") {
    const int d = param;
    if (d < 1 || d > 4) throw std::invalid_argument("cidd supports 1 <= d <= 4");
    // prod_{r != 0} (1 - q_1^{r_1}...q_d^{r_d})^{(-1)^{sum r} c_r}
    //   = prod_s (1 + q_1^s + ... + q_d^s)
    PowerSeries lhs = PowerSeries::one(d, T);
    std::vector<int> md(d, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == d) {
        int total = T - remaining;
        if (total == 0) return;
        long c = good_cyclic_count(d, md, std::max(16, T));
        if (c == 0) return;
        long e = (total % 2) ? -c : c;
        PowerSeries f = PowerSeries::one(d, T);
        std::vector<int> exp = md;
        f.c[exp] = Scalar(-1);
        lhs = lhs * f.pow_int(e);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        md[pos] = v;
        rec(pos + 1, remaining - v);
      }
      md[pos] = 0;
    };
    rec(0, T);
    PowerSeries rhs = PowerSeries::one(d, T);
    for (int s = 1; s <= T; ++s) {
      PowerSeries f = PowerSeries::one(d, T);
      for (int i = 0; i < d; ++i) {
        std::vector<int> e(d, 0);
        e[i] = s;
        if (s <= T) f.c[e] = Scalar(1);
      }
      rhs = rhs * f;
    }
    IdentityResult r;
    r.pass = true;
    // Compare all coefficients to total degree T.
    std::set<std::vector<int>> keys;
    for (auto& [e, v] : lhs.c) keys.insert(e);
    for (auto& [e, v] : rhs.c) keys.insert(e);
    for (auto& e : keys) {
      if (lhs.coeff(e) != rhs.coeff(e)) {
        r.pass = false;
        r.first_mismatch = total_deg(e);
        r.detail = "mismatch at multidegree of total " + std::to_string(total_deg(e));
        return r;
      }
    }
    return r;
  }
  if (which == "cidd1") {
    const int d = param;
    if (d < 1) throw std::invalid_argument("cidd1 needs d >= 1");
    NecklaceCounts nk = necklace_counts(d, T);
    // Left side, printed form: prod_r (1-q^r)^{(-1)^r Phi_r(d)} *
    // prod_{j,k>=1} (1 - q^{2k(2j-1)})^{-M_{2j-1}(d)}
    std::vector<std::pair<int, long>> lhs_exps;
    for (int r = 1; r <= T; ++r)
      lhs_exps.push_back({r, (r % 2) ? -nk.phi[r] : nk.phi[r]});
    PowerSeries lhs = prod_one_minus_pow(lhs_exps, T);
    for (int j = 1; 2 * j - 1 <= T; ++j)
      for (int k = 1; 2 * k * (2 * j - 1) <= T; ++k)
        lhs = lhs * one_minus_qk(2 * k * (2 * j - 1), T).pow_int(-nk.mob[2 * j - 1]);
    // Independent route: exponents from brute-force good-word counts c_r.
    std::vector<std::pair<int, long>> c_exps;
    for (int r = 1; r <= T; ++r) {
      long cr = good_cyclic_total(d, r, std::max(16, T));
      c_exps.push_back({r, (r % 2) ? -cr : cr});
    }
    PowerSeries via_c = prod_one_minus_pow(c_exps, T);
    PowerSeries rhs = PowerSeries::one(1, T);
    for (int s = 1; s <= T; ++s) {
      PowerSeries f = PowerSeries::one(1, T);
      f.c[{s}] = Scalar(d);
      rhs = rhs * f;
    }
    IdentityResult r1 = compare_univariate(lhs, rhs, T);
    if (!r1.pass) return r1;
    IdentityResult r2 = compare_univariate(via_c, rhs, T);
    if (!r2.pass) {
      r2.detail = "good-word-count route: " + r2.detail;
      return r2;
    }
    return r1;
  }
  throw std::invalid_argument("unknown identity '" + which + "'");
}

}  // namespace drep
