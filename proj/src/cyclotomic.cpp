#include "headchar/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hc {

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> units_mod(long n) {
  if (n <= 0) throw PreconditionError("modulus must be positive");
  if (n == 1) return {1};
  std::vector<long> u;
  for (long k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.push_back(k);
  return u;
}

long canonical_cyclotomic_conductor(long n) {
  if (n <= 0) throw PreconditionError("conductor must be positive");
  return n % 4 == 2 ? n / 2 : n;
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Polynomials over Q as coefficient vectors, index = power of X.
using Poly = std::vector<Rat>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division, remainder must vanish.
Poly poly_div(const Poly& num_in, const Poly& den) {
  Poly num = num_in;
  poly_trim(num);
  if (den.empty() || den.back() == 0) throw Error("polynomial division by zero");
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rat c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  if (!num.empty()) throw Error("polynomial division left a remainder");
  return q;
}

// Per-level data: the cyclotomic polynomial, reduction rows X^e mod Phi_n,
// the unit group, and cached change-of-basis data for sublevels.
struct LevelData {
  long n = 1;
  long phi = 1;
  Poly cyclo;                              // Phi_n, monic, degree phi
  std::vector<std::vector<Rat>> rows;      // rows[e] = X^e mod Phi_n
  std::vector<long> units;                 // sorted units of Z/n

  struct Embed {
    long d = 1;                            // sublevel
    std::vector<std::vector<Rat>> basis;   // phi(n) x phi(d): zeta_d^j lifted
    std::vector<int> pivot_rows;           // phi(d) independent rows
    std::vector<std::vector<Rat>> inv;     // inverse of the pivot submatrix
  };
  std::map<long, Embed> embeds;

  std::mutex lock;  // guards lazy growth of rows and embeds
};

class LevelCache {
 public:
  LevelData& get(long n) {
    std::lock_guard<std::mutex> g(lock_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    auto ld = std::make_unique<LevelData>();
    ld->n = n;
    ld->phi = euler_phi(n);
    ld->cyclo = cyclotomic_poly(n);
    ld->units = units_mod(n);
    ld->rows.reserve(static_cast<size_t>(ld->phi));
    auto& ref = *ld;
    cache_.emplace(n, std::move(ld));
    return ref;
  }

 private:
  // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly cyclotomic_poly(long n) {
    auto it = poly_cache_.find(n);
    if (it != poly_cache_.end()) return it->second;
    Poly num(static_cast<size_t>(n) + 1, Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) num = poly_div(num, cyclotomic_poly(d));
    poly_cache_[n] = num;
    return num;
  }

  std::mutex lock_;
  std::map<long, std::unique_ptr<LevelData>> cache_;
  std::map<long, Poly> poly_cache_;  // only touched under lock_
};

LevelCache g_levels;

// Extend the lazily-built table of rows X^e mod Phi_n; ld.lock must be held.
void grow_rows_unlocked(LevelData& ld, long e) {
  while (static_cast<long>(ld.rows.size()) <= e) {
    long next = static_cast<long>(ld.rows.size());
    if (next < ld.phi) {
      std::vector<Rat> r(static_cast<size_t>(ld.phi), Rat(0));
      r[static_cast<size_t>(next)] = 1;
      ld.rows.push_back(std::move(r));
    } else {
      // shift the previous row by X and fold the overflow term back in
      const auto& prev = ld.rows.back();
      std::vector<Rat> r(static_cast<size_t>(ld.phi), Rat(0));
      Rat top = prev[static_cast<size_t>(ld.phi - 1)];
      for (long i = ld.phi - 1; i > 0; --i) r[static_cast<size_t>(i)] = prev[static_cast<size_t>(i - 1)];
      if (top != 0)
        for (long i = 0; i < ld.phi; ++i)
          r[static_cast<size_t>(i)] -= top * ld.cyclo[static_cast<size_t>(i)];
      ld.rows.push_back(std::move(r));
    }
  }
}

// X^e mod Phi_n as a phi-length coefficient vector (copied for thread safety).
std::vector<Rat> reduction_row(LevelData& ld, long e) {
  std::lock_guard<std::mutex> g(ld.lock);
  grow_rows_unlocked(ld, e);
  return ld.rows[static_cast<size_t>(e)];
}

// Reduce an arbitrary-length power vector mod Phi_n.
std::vector<Rat> reduce_powers(LevelData& ld, const std::vector<Rat>& raw) {
  std::vector<Rat> out(static_cast<size_t>(ld.phi), Rat(0));
  for (size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    if (static_cast<long>(e) < ld.phi) {
      out[e] += raw[e];
    } else {
      auto row = reduction_row(ld, static_cast<long>(e));
      for (long i = 0; i < ld.phi; ++i) out[static_cast<size_t>(i)] += raw[e] * row[static_cast<size_t>(i)];
    }
  }
  return out;
}

// sigma_k at level n without level minimization; gcd(k, n) == 1.
std::vector<Rat> galois_raw(LevelData& ld, const std::vector<Rat>& c, long k) {
  std::vector<Rat> out(static_cast<size_t>(ld.phi), Rat(0));
  for (long i = 0; i < ld.phi; ++i) {
    if (c[static_cast<size_t>(i)] == 0) continue;
    long e = (i * k) % ld.n;
    auto row = reduction_row(ld, e);
    for (long j = 0; j < ld.phi; ++j) out[static_cast<size_t>(j)] += c[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
  }
  return out;
}

// Lift coefficients from level n to a multiple N (zeta_n = zeta_N^(N/n)).
std::vector<Rat> lift_to(LevelData& from, LevelData& to, const std::vector<Rat>& c) {
  long step = to.n / from.n;
  std::vector<Rat> out(static_cast<size_t>(to.phi), Rat(0));
  for (long i = 0; i < from.phi; ++i) {
    if (c[static_cast<size_t>(i)] == 0) continue;
    auto row = reduction_row(to, i * step);
    for (long j = 0; j < to.phi; ++j) out[static_cast<size_t>(j)] += c[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
  }
  return out;
}

// Change of basis from level n down to sublevel d (d | n), cached per pair.
// Valid only for values already known to lie in Q(zeta_d); verified anyway.
const LevelData::Embed& embed_data(LevelData& ld, long d) {
  std::lock_guard<std::mutex> g(ld.lock);
  auto it = ld.embeds.find(d);
  if (it != ld.embeds.end()) return it->second;

  LevelData::Embed em;
  em.d = d;
  long phid = euler_phi(d);
  long step = ld.n / d;
  // columns: zeta_d^j expressed in the level-n power basis
  em.basis.assign(static_cast<size_t>(ld.phi), std::vector<Rat>(static_cast<size_t>(phid), Rat(0)));
  for (long j = 0; j < phid; ++j) {
    long e = j * step;
    grow_rows_unlocked(ld, e);  // ld.lock already held, bypass reduction_row
    const auto& col = ld.rows[static_cast<size_t>(e)];
    for (long i = 0; i < ld.phi; ++i) em.basis[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
  }

  // Gaussian elimination on a copy to find phi(d) independent rows.
  auto m = em.basis;
  std::vector<int> pivots;
  long rows_n = ld.phi;
  for (long col = 0; col < phid; ++col) {
    long sel = -1;
    for (long r = 0; r < rows_n; ++r) {
      if (std::find(pivots.begin(), pivots.end(), static_cast<int>(r)) != pivots.end()) continue;
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { sel = r; break; }
    }
    if (sel < 0) throw Error("cyclotomic basis embedding is singular");
    pivots.push_back(static_cast<int>(sel));
    Rat pv = m[static_cast<size_t>(sel)][static_cast<size_t>(col)];
    for (long r = 0; r < rows_n; ++r) {
      if (r == sel) continue;
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
      if (f == 0) continue;
      for (long c2 = col; c2 < phid; ++c2)
        m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -= f * m[static_cast<size_t>(sel)][static_cast<size_t>(c2)];
    }
  }
  em.pivot_rows = pivots;

  // invert the phi(d) x phi(d) pivot submatrix by Gauss-Jordan
  long k = phid;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(2 * k), Rat(0)));
  for (long r = 0; r < k; ++r) {
    for (long c2 = 0; c2 < k; ++c2) a[static_cast<size_t>(r)][static_cast<size_t>(c2)] = em.basis[static_cast<size_t>(pivots[static_cast<size_t>(r)])][static_cast<size_t>(c2)];
    a[static_cast<size_t>(r)][static_cast<size_t>(k + r)] = 1;
  }
  for (long col = 0; col < k; ++col) {
    long sel = -1;
    for (long r = col; r < k; ++r)
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { sel = r; break; }
    if (sel < 0) throw Error("cyclotomic basis pivot submatrix is singular");
    std::swap(a[static_cast<size_t>(sel)], a[static_cast<size_t>(col)]);
    Rat pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (long c2 = 0; c2 < 2 * k; ++c2) a[static_cast<size_t>(col)][static_cast<size_t>(c2)] /= pv;
    for (long r = 0; r < k; ++r) {
      if (r == col) continue;
      Rat f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (long c2 = 0; c2 < 2 * k; ++c2)
        a[static_cast<size_t>(r)][static_cast<size_t>(c2)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(c2)];
    }
  }
  em.inv.assign(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k), Rat(0)));
  for (long r = 0; r < k; ++r)
    for (long c2 = 0; c2 < k; ++c2) em.inv[static_cast<size_t>(r)][static_cast<size_t>(c2)] = a[static_cast<size_t>(r)][static_cast<size_t>(k + c2)];

  auto [pos, ok] = ld.embeds.emplace(d, std::move(em));
  (void)ok;
  return pos->second;
}

// Express a level-n value known to lie in Q(zeta_d) over the level-d basis.
std::vector<Rat> rewrite_to_sublevel(LevelData& ld, const std::vector<Rat>& c, long d) {
  const auto& em = embed_data(ld, d);
  long k = euler_phi(d);
  std::vector<Rat> x(static_cast<size_t>(k), Rat(0));
  for (long r = 0; r < k; ++r)
    for (long i = 0; i < k; ++i)
      x[static_cast<size_t>(r)] += em.inv[static_cast<size_t>(r)][static_cast<size_t>(i)] * c[static_cast<size_t>(em.pivot_rows[static_cast<size_t>(i)])];
  // verify on every row; failure would mean the fixedness test lied
  for (long r = 0; r < ld.phi; ++r) {
    Rat acc(0);
    for (long j = 0; j < k; ++j) acc += em.basis[static_cast<size_t>(r)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    if (acc != c[static_cast<size_t>(r)]) throw Error("sublevel rewrite failed verification");
  }
  return x;
}

// Minimize the level: repeatedly drop primes p with the value fixed by
// Gal(Q(zeta_n)/Q(zeta_{n/p})), landing on the canonical conductor.
void minimize_level(long& n, std::vector<Rat>& c) {
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (long p : prime_factors(n)) {
      long d0 = n / p;
      LevelData& ld = g_levels.get(n);
      bool fixed = true;
      for (long t = 1; t < p && fixed; ++t) {
        long k = (1 + t * d0) % n;
        if (std::gcd(k, n) != 1) continue;
        if (galois_raw(ld, c, k) != c) fixed = false;
      }
      if (!fixed) continue;
      long d = canonical_cyclotomic_conductor(d0);
      c = rewrite_to_sublevel(ld, c, d);
      n = d;
      changed = true;
      break;
    }
  }
}

}  // namespace

Cyc Cyc::from_coeffs(long n, std::vector<Rat> raw) {
  if (n <= 0) throw PreconditionError("cyclotomic level must be positive");
  LevelData& ld = g_levels.get(n);
  auto c = reduce_powers(ld, raw);
  long lev = n;
  minimize_level(lev, c);
  Cyc out;
  out.level_ = lev;
  out.coeff_ = std::move(c);
  return out;
}

Cyc Cyc::root_of_unity(long n, long k) {
  if (n <= 0) throw PreconditionError("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  long g = std::gcd(k == 0 ? n : k, n);
  n /= g;
  k /= g;
  // now zeta_n^k is primitive of order n (k == 0 forces n == 1)
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^((m+1)/2) for odd m
    long m = n / 2;
    long e = ((m + 1) / 2 % m) * (k % m) % m;
    bool neg = k % 2 == 1;
    std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
    raw[static_cast<size_t>(e)] = neg ? Rat(-1) : Rat(1);
    return from_coeffs(m, std::move(raw));
  }
  std::vector<Rat> raw(static_cast<size_t>(k) + 1, Rat(0));
  raw[static_cast<size_t>(k)] = 1;
  return from_coeffs(n, std::move(raw));
}

bool Cyc::is_zero() const {
  for (const auto& q : coeff_)
    if (q != 0) return false;
  return true;
}

Rat Cyc::rational_value() const {
  if (level_ != 1) throw Error("value is not rational");
  return coeff_[0];
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& q : out.coeff_) q = -q;
  return out;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  if (a.level_ == b.level_) {
    std::vector<Rat> c(a.coeff_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeff_[i];
    long lev = a.level_;
    minimize_level(lev, c);
    Cyc out;
    out.level_ = lev;
    out.coeff_ = std::move(c);
    return out;
  }
  long N = std::lcm(a.level_, b.level_);
  LevelData& ln = g_levels.get(N);
  auto ca = lift_to(g_levels.get(a.level_), ln, a.coeff_);
  auto cb = lift_to(g_levels.get(b.level_), ln, b.coeff_);
  for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  long lev = N;
  minimize_level(lev, ca);
  Cyc out;
  out.level_ = lev;
  out.coeff_ = std::move(ca);
  return out;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.level_ == 1) {
    if (a.coeff_[0] == 0) return Cyc();
    Cyc out = b;
    for (auto& q : out.coeff_) q *= a.coeff_[0];
    return out;  // scaling preserves the minimal level unless zero
  }
  if (b.level_ == 1) return b * a;
  long N = std::lcm(a.level_, b.level_);
  LevelData& ln = g_levels.get(N);
  auto ca = lift_to(g_levels.get(a.level_), ln, a.coeff_);
  auto cb = lift_to(g_levels.get(b.level_), ln, b.coeff_);
  std::vector<Rat> conv(ca.size() + cb.size(), Rat(0));
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      conv[i + j] += ca[i] * cb[j];
    }
  }
  auto c = reduce_powers(ln, conv);
  long lev = N;
  minimize_level(lev, c);
  Cyc out;
  out.level_ = lev;
  out.coeff_ = std::move(c);
  return out;
}

Cyc operator*(const Rat& q, const Cyc& a) { return Cyc(q) * a; }

Cyc Cyc::inverse() const {
  if (is_zero()) throw Error("inversion of zero");
  if (level_ == 1) return Cyc(Rat(1) / coeff_[0]);
  LevelData& ld = g_levels.get(level_);
  long k = ld.phi;
  // multiplication-by-a matrix: column j is a * zeta^j
  std::vector<std::vector<Rat>> m(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k), Rat(0)));
  for (long j = 0; j < k; ++j) {
    std::vector<Rat> shifted(coeff_.size() + static_cast<size_t>(j), Rat(0));
    for (size_t i = 0; i < coeff_.size(); ++i) shifted[i + static_cast<size_t>(j)] = coeff_[i];
    auto col = reduce_powers(ld, shifted);
    for (long r = 0; r < k; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(j)] = col[static_cast<size_t>(r)];
  }
  // solve m x = e0
  std::vector<Rat> rhs(static_cast<size_t>(k), Rat(0));
  rhs[0] = 1;
  for (long col = 0; col < k; ++col) {
    long sel = -1;
    for (long r = col; r < k; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { sel = r; break; }
    if (sel < 0) throw Error("inversion of zero");
    std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(col)]);
    std::swap(rhs[static_cast<size_t>(sel)], rhs[static_cast<size_t>(col)]);
    Rat pv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (long c2 = col; c2 < k; ++c2) m[static_cast<size_t>(col)][static_cast<size_t>(c2)] /= pv;
    rhs[static_cast<size_t>(col)] /= pv;
    for (long r = 0; r < k; ++r) {
      if (r == col) continue;
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (long c2 = col; c2 < k; ++c2)
        m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(c2)];
      rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
    }
  }
  // 1/a generates the same field, so the level is already minimal
  Cyc out;
  out.level_ = level_;
  out.coeff_ = std::move(rhs);
  return out;
}

Cyc Cyc::galois(long k) const {
  if (level_ == 1) return *this;
  long kk = k % level_;
  if (kk < 0) kk += level_;
  if (std::gcd(kk, level_) != 1)
    throw PreconditionError("galois exponent must be a unit mod the level");
  if (kk == 1) return *this;
  LevelData& ld = g_levels.get(level_);
  auto c = galois_raw(ld, coeff_, kk);
  // automorphisms preserve the minimal level
  Cyc out;
  out.level_ = level_;
  out.coeff_ = std::move(c);
  return out;
}

Cyc Cyc::conj() const { return level_ == 1 ? *this : galois(level_ - 1); }

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc acc(1);
  Cyc base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string to_string(const Cyc& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t e = 0; e < a.coeffs().size(); ++e) {
    const Rat& q = a.coeffs()[e];
    if (q == 0) continue;
    Rat mag = q < 0 ? Rat(-q) : q;
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "z(" << a.level() << ")^" << e;
    }
  }
  return os.str();
}

namespace {

struct CycParser {
  const std::string& s;
  size_t i = 0;

  explicit CycParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && s[i] == ' ') ++i;
  }

  bool eat(char c) {
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  Int integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) throw Error("cyc parse: expected integer at offset " + std::to_string(start));
    return Int(s.substr(start, i - start));
  }

  Rat rational() {
    Int num = integer();
    skip_ws();
    if (eat('/')) {
      Int den = integer();
      if (den == 0) throw Error("cyc parse: zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  // term := rational | [rational "*"] "z(" int ")^" int
  // returns (coefficient, level, exponent); level 0 means a plain rational
  void term(Rat& coeff, long& level, long& expo) {
    skip_ws();
    coeff = 1;
    level = 0;
    expo = 0;
    bool have_coeff = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == '+')) {
      coeff = rational();
      have_coeff = true;
      skip_ws();
      if (!eat('*')) {
        return;  // plain rational term
      }
      skip_ws();
    }
    if (i < s.size() && s[i] == 'z') {
      ++i;
      if (!eat('(')) throw Error("cyc parse: expected '(' after z");
      level = static_cast<long>(integer());
      if (!eat(')')) throw Error("cyc parse: expected ')'");
      if (!eat('^')) throw Error("cyc parse: expected '^'");
      expo = static_cast<long>(integer());
      return;
    }
    if (have_coeff) throw Error("cyc parse: dangling '*'");
    throw Error("cyc parse: expected term at offset " + std::to_string(i));
  }
};

}  // namespace

Cyc parse_cyc(const std::string& text) {
  CycParser p(text);
  Cyc acc;
  bool neg = false;
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.i >= p.s.size()) break;
    if (first) {
      if (p.eat('-')) neg = true;
    } else {
      if (p.eat('+')) {
        neg = false;
      } else if (p.eat('-')) {
        neg = true;
      } else {
        throw Error("cyc parse: expected '+' or '-' at offset " + std::to_string(p.i));
      }
    }
    Rat coeff;
    long level, expo;
    p.term(coeff, level, expo);
    if (neg) coeff = -coeff;
    if (level == 0)
      acc = acc + Cyc(coeff);
    else
      acc = acc + Cyc(coeff) * Cyc::root_of_unity(level, expo);
    first = false;
    neg = false;
  }
  if (first) throw Error("cyc parse: empty input");
  return acc;
}

FieldDescriptor field_of_values(const std::vector<Cyc>& values) {
  long c = 1;
  for (const auto& v : values) c = std::lcm(c, v.level());
  FieldDescriptor fd;
  fd.conductor = c;
  if (c == 1) {
    fd.stabilizer = {1};
    return fd;
  }
  for (long k : units_mod(c)) {
    bool fixes = true;
    for (const auto& v : values) {
      if (v.level() == 1) continue;
      if (v.galois(k % v.level()) != v) { fixes = false; break; }
    }
    if (fixes) fd.stabilizer.push_back(k);
  }
  return fd;
}

}  // namespace hc
