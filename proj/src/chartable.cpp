#include "headchar/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "headchar/structure.hpp"

namespace hc {

namespace {

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<long>(static_cast<unsigned long long>(r) * b % p);
    b = static_cast<long>(static_cast<unsigned long long>(b) * b % p);
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error("modular inverse of zero");
  return mod_pow(a, p - 2, p);
}

std::vector<long> prime_list_upto(long n) {
  std::vector<long> ps;
  for (long q = 2; q <= n; ++q) {
    bool prime = true;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(q);
  }
  return ps;
}

using Row = std::vector<long>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form mod p; returns the pivot columns.
std::vector<int> rref(Matrix& m, long p) {
  std::vector<int> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    long inv = mod_inv(m[r][c], p);
    for (size_t j = c; j < cols; ++j)
      m[r][j] = static_cast<long>(static_cast<unsigned long long>(m[r][j]) * inv % p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (size_t j = c; j < cols; ++j) {
        long sub = static_cast<long>(static_cast<unsigned long long>(f) * m[r][j] % p);
        m[i][j] = (m[i][j] - sub % p + p) % p;
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(pivots.size(), Row(cols, 0));
  return pivots;
}

// Basis of {c : c * m = 0} for square m, via the transpose's kernel.
Matrix left_nullspace(const Matrix& m, long p) {
  size_t n = m.size();
  Matrix t(n, Row(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  std::vector<int> pivots = rref(t, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
  Matrix basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row v(n, 0);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      long coef = t[r][f];
      if (coef != 0) v[static_cast<size_t>(pivots[r])] = (p - coef) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Space {
  Matrix rows;              // RREF basis, row vectors of length k
  std::vector<int> pivots;  // pivot columns of the basis
};

// Class matrix for class i: entry [l][j] counts x in class i with
// class(x^{-1} z_l) = j, z_l the representative of class l.
Matrix class_matrix(const Group& g, const Classes& cls, int i) {
  int k = cls.count();
  Matrix m(static_cast<size_t>(k), Row(static_cast<size_t>(k), 0));
  for (int l = 0; l < k; ++l) {
    int z = cls.list[static_cast<size_t>(l)].rep;
    for (int x : cls.list[static_cast<size_t>(i)].members) {
      int y = g.mul(g.inv(x), z);
      ++m[static_cast<size_t>(l)][static_cast<size_t>(cls.class_of[static_cast<size_t>(y)])];
    }
  }
  return m;
}

}  // namespace

Classes conjugacy_classes(const Group& g) {
  size_t n = g.elements.size();
  std::vector<Perm> gen_inv;
  for (const Perm& p : g.gens) gen_inv.push_back(inverse(p));

  std::vector<char> visited(n, 0);
  std::vector<ClassData> classes;
  for (size_t x = 0; x < n; ++x) {
    if (visited[x]) continue;
    std::vector<int> orbit = {static_cast<int>(x)};
    visited[x] = 1;
    for (size_t q = 0; q < orbit.size(); ++q)
      for (size_t gi = 0; gi < g.gens.size(); ++gi) {
        Perm im = compose(compose(gen_inv[gi], g.elements[static_cast<size_t>(orbit[q])]), g.gens[gi]);
        int idx = g.require_index(im);
        if (!visited[static_cast<size_t>(idx)]) {
          visited[static_cast<size_t>(idx)] = 1;
          orbit.push_back(idx);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    ClassData cd;
    cd.rep = orbit.front();
    cd.size = static_cast<long>(orbit.size());
    cd.element_order = g.elements[static_cast<size_t>(cd.rep)].order();
    cd.members = std::move(orbit);
    classes.push_back(std::move(cd));
  }
  std::sort(classes.begin(), classes.end(), [](const ClassData& a, const ClassData& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });

  Classes out;
  out.group_order = g.order();
  out.exponent = g.exponent();
  out.class_of.assign(n, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c].members) out.class_of[static_cast<size_t>(e)] = static_cast<int>(c);
  std::vector<long> primes = prime_list_upto(out.exponent);
  for (ClassData& cd : classes) {
    const Perm& rep = g.elements[static_cast<size_t>(cd.rep)];
    cd.inverse_class = out.class_of[static_cast<size_t>(g.require_index(inverse(rep)))];
    for (long q : primes)
      cd.power_map[q] = out.class_of[static_cast<size_t>(g.require_index(perm_power(rep, q)))];
  }
  out.list = std::move(classes);
  return out;
}

int class_power(const Classes& cls, int ci, long e) {
  if (ci < 0 || ci >= cls.count()) throw PreconditionError("class index out of range");
  if (e < 0) throw PreconditionError("class power wants a nonnegative exponent");
  if (e == 0) return 0;  // identity class is always first
  int cur = ci;
  long rest = e;
  for (long q = 2; rest > 1; ++q)
    while (rest % q == 0) {
      cur = cls.list[static_cast<size_t>(cur)].power_map.at(q);
      rest /= q;
    }
  return cur;
}

long degree_of(const ClassFunction& f) {
  if (f.values.empty()) throw PreconditionError("empty class function");
  const Cyc& v = f.values[0];
  if (!v.is_rational()) throw PreconditionError("degree is not rational");
  Rat q = v.rational_value();
  if (boost::multiprecision::denominator(q) != 1 || q <= 0)
    throw PreconditionError("degree is not a positive integer");
  return static_cast<long>(boost::multiprecision::numerator(q));
}

Cyc inner_product(const ClassFunction& a, const ClassFunction& b, const Classes& cls) {
  if (a.values.size() != cls.list.size() || b.values.size() != cls.list.size())
    throw PreconditionError("class function length mismatch");
  Cyc acc;
  for (size_t c = 0; c < cls.list.size(); ++c)
    acc += Rat(cls.list[c].size) * (a.values[c] * b.values[c].conj());
  return Rat(1, cls.group_order) * acc;
}

ClassFunction trivial_character(const Classes& cls) {
  ClassFunction f;
  f.values.assign(cls.list.size(), Cyc(1));
  return f;
}

ClassFunction regular_character(const Classes& cls) {
  ClassFunction f;
  f.values.assign(cls.list.size(), Cyc());
  f.values[0] = Cyc(Rat(cls.group_order));
  return f;
}

int irr_index_of(const CharTable& t, const ClassFunction& f) {
  for (size_t i = 0; i < t.irr.size(); ++i)
    if (t.irr[i] == f) return static_cast<int>(i);
  return -1;
}

CharTable character_table(const Group& g) {
  CharTable table;
  table.group = &g;
  table.classes = conjugacy_classes(g);
  const Classes& cls = table.classes;
  int k = cls.count();
  long n = cls.group_order;
  long e = cls.exponent;

  // smallest prime p = 1 (mod e) with p > 2*ceil(sqrt(|G|))
  long sqrt_bound = 0;
  while (sqrt_bound * sqrt_bound < n) ++sqrt_bound;
  long p = e + 1;
  auto is_prime = [](long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  };
  while (p <= 2 * sqrt_bound || p % e != 1 || !is_prime(p)) ++p;

  // common eigenbasis of the class matrices, refined deterministically
  std::vector<Space> spaces;
  {
    Space whole;
    whole.rows.assign(static_cast<size_t>(k), Row(static_cast<size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
      whole.rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      whole.pivots.push_back(i);
    }
    spaces.push_back(std::move(whole));
  }
  for (int ci = 1; ci < k; ++ci) {
    bool split_done = true;
    for (const Space& s : spaces)
      if (s.rows.size() > 1) split_done = false;
    if (split_done) break;
    Matrix t = class_matrix(g, cls, ci);
    for (auto& row : t)
      for (long& v : row) v %= p;
    std::vector<Space> next;
    for (Space& s : spaces) {
      size_t r = s.rows.size();
      if (r == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction of t to the invariant subspace, in basis coordinates
      Matrix bt(r, Row(static_cast<size_t>(k), 0));
      for (size_t a = 0; a < r; ++a)
        for (size_t l = 0; l < static_cast<size_t>(k); ++l) {
          long coef = s.rows[a][l];
          if (coef == 0) continue;
          for (size_t j = 0; j < static_cast<size_t>(k); ++j)
            bt[a][j] = static_cast<long>(
                (bt[a][j] + static_cast<unsigned long long>(coef) * t[l][j]) % p);
        }
      Matrix rmat(r, Row(r, 0));
      for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) rmat[a][b] = bt[a][static_cast<size_t>(s.pivots[b])];

      size_t remaining = r;
      for (long lam = 0; lam < p && remaining > 0; ++lam) {
        Matrix shifted = rmat;
        for (size_t d = 0; d < r; ++d) shifted[d][d] = (shifted[d][d] - lam % p + p) % p;
        Matrix ns = left_nullspace(shifted, p);
        if (ns.empty()) continue;
        Matrix sub(ns.size(), Row(static_cast<size_t>(k), 0));
        for (size_t a = 0; a < ns.size(); ++a)
          for (size_t b = 0; b < r; ++b) {
            long coef = ns[a][b];
            if (coef == 0) continue;
            for (size_t j = 0; j < static_cast<size_t>(k); ++j)
              sub[a][j] = static_cast<long>(
                  (sub[a][j] + static_cast<unsigned long long>(coef) * s.rows[b][j]) % p);
          }
        Space piece;
        piece.pivots = rref(sub, p);
        piece.rows = std::move(sub);
        remaining -= piece.rows.size();
        next.push_back(std::move(piece));
      }
      if (remaining != 0) throw Error("eigenspace refinement failed to split");
    }
    spaces = std::move(next);
  }
  for (const Space& s : spaces)
    if (s.rows.size() != 1) throw Error("eigenspace refinement did not reach one dimension");
  if (static_cast<int>(spaces.size()) != k) throw Error("wrong number of one-dimensional eigenspaces");

  // central character values: u * T_i = omega_i * u, read off at the pivot
  std::vector<std::vector<long>> omega(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k), 0));
  for (int ci = 0; ci < k; ++ci) {
    Matrix t = class_matrix(g, cls, ci);
    for (auto& row : t)
      for (long& v : row) v %= p;
    for (int r = 0; r < k; ++r) {
      const Row& u = spaces[static_cast<size_t>(r)].rows[0];
      size_t piv = static_cast<size_t>(spaces[static_cast<size_t>(r)].pivots[0]);
      unsigned long long acc = 0;
      for (size_t l = 0; l < static_cast<size_t>(k); ++l)
        if (u[l] != 0) acc = (acc + static_cast<unsigned long long>(u[l]) * t[l][piv]) % p;
      omega[static_cast<size_t>(r)][static_cast<size_t>(ci)] = static_cast<long>(acc);
    }
  }
  for (int r = 0; r < k; ++r)
    if (omega[static_cast<size_t>(r)][0] != 1) throw Error("identity class eigenvalue is not 1");

  // degrees from the second orthogonality of central characters
  std::vector<long> size_inv(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) size_inv[static_cast<size_t>(j)] = mod_inv(cls.list[static_cast<size_t>(j)].size % p, p);
  std::vector<long> degree(static_cast<size_t>(k), 0);
  for (int r = 0; r < k; ++r) {
    unsigned long long s = 0;
    for (int j = 0; j < k; ++j) {
      unsigned long long term = static_cast<unsigned long long>(omega[static_cast<size_t>(r)][static_cast<size_t>(j)]) *
                                omega[static_cast<size_t>(r)][static_cast<size_t>(cls.list[static_cast<size_t>(j)].inverse_class)] % p;
      term = term * static_cast<unsigned long long>(size_inv[static_cast<size_t>(j)]) % p;
      s = (s + term) % p;
    }
    long d2 = static_cast<long>(static_cast<unsigned long long>(n % p) * mod_inv(static_cast<long>(s), p) % p);
    for (long d = 1; d <= sqrt_bound; ++d)
      if (d * d % p == d2) {
        degree[static_cast<size_t>(r)] = d;
        break;
      }
    if (degree[static_cast<size_t>(r)] == 0) throw Error("degree recovery failed");
  }
  long deg_sq = 0;
  for (long d : degree) deg_sq += d * d;
  if (deg_sq != n) throw Error("degrees do not satisfy the sum-of-squares identity");

  // modular character values chi(g_j) = d * omega_j / size_j
  std::vector<std::vector<long>> val(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k), 0));
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < k; ++j) {
      unsigned long long v = static_cast<unsigned long long>(degree[static_cast<size_t>(r)] % p) *
                             omega[static_cast<size_t>(r)][static_cast<size_t>(j)] % p;
      val[static_cast<size_t>(r)][static_cast<size_t>(j)] =
          static_cast<long>(v * static_cast<unsigned long long>(size_inv[static_cast<size_t>(j)]) % p);
    }

  // a fixed e-th root of unity mod p, from the smallest primitive root
  long zgen = 2;
  {
    std::vector<long> qs;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        qs.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) qs.push_back(m);
    for (;; ++zgen) {
      bool ok = true;
      for (long q : qs)
        if (mod_pow(zgen, (p - 1) / q, p) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }
  long ome = mod_pow(zgen, (p - 1) / e, p);

  // exact lifting, class by class, inside Q(zeta_o) for o the element order
  std::vector<ClassFunction> rows(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r) rows[static_cast<size_t>(r)].values.assign(static_cast<size_t>(k), Cyc());
  for (int j = 0; j < k; ++j) {
    long o = cls.list[static_cast<size_t>(j)].element_order;
    long ome_o = mod_pow(ome, e / o, p);
    long inv_o = mod_inv(o % p, p);
    std::vector<int> pow_class(static_cast<size_t>(o));
    for (long l = 0; l < o; ++l) pow_class[static_cast<size_t>(l)] = class_power(cls, j, l);
    std::vector<long> ome_pow(static_cast<size_t>(o));
    for (long x = 0; x < o; ++x) ome_pow[static_cast<size_t>(x)] = mod_pow(ome_o, x, p);
    for (int r = 0; r < k; ++r) {
      Cyc acc;
      long total = 0;
      for (long t = 0; t < o; ++t) {
        unsigned long long s = 0;
        for (long l = 0; l < o; ++l) {
          long w = ome_pow[static_cast<size_t>((o - t * l % o) % o)];
          s = (s + static_cast<unsigned long long>(val[static_cast<size_t>(r)][static_cast<size_t>(pow_class[static_cast<size_t>(l)])]) * w) % p;
        }
        long m = static_cast<long>(s * static_cast<unsigned long long>(inv_o) % p);
        if (m > degree[static_cast<size_t>(r)]) throw Error("lifting produced an impossible multiplicity");
        total += m;
        if (m != 0) acc += Rat(m) * Cyc::root_of_unity(o, t);
      }
      if (total != degree[static_cast<size_t>(r)])
        throw Error("eigenvalue multiplicities do not sum to the degree");
      rows[static_cast<size_t>(r)].values[static_cast<size_t>(j)] = acc;
    }
  }

  // canonical order: by degree, then by rendered values
  std::vector<std::vector<std::string>> rendered(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r)
    for (const Cyc& v : rows[static_cast<size_t>(r)].values) rendered[static_cast<size_t>(r)].push_back(to_string(v));
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (degree[static_cast<size_t>(a)] != degree[static_cast<size_t>(b)])
      return degree[static_cast<size_t>(a)] < degree[static_cast<size_t>(b)];
    return rendered[static_cast<size_t>(a)] < rendered[static_cast<size_t>(b)];
  });
  for (int r : perm) table.irr.push_back(std::move(rows[static_cast<size_t>(r)]));

  // orthogonality is the gate for everything downstream; fail loudly here
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Cyc ip = inner_product(table.irr[static_cast<size_t>(a)], table.irr[static_cast<size_t>(b)], cls);
      bool ok = (a == b) ? ip.is_one() : ip.is_zero();
      if (!ok) throw TheoremViolation("character table failed row orthogonality");
    }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Cyc sum;
      for (int r = 0; r < k; ++r)
        sum += table.irr[static_cast<size_t>(r)].values[static_cast<size_t>(a)] *
               table.irr[static_cast<size_t>(r)].values[static_cast<size_t>(b)].conj();
      Cyc expect = (a == b) ? Cyc(Rat(n / cls.list[static_cast<size_t>(a)].size)) : Cyc();
      if (!(sum == expect)) throw TheoremViolation("character table failed column orthogonality");
    }
  return table;
}

std::vector<ClassFunction> linear_characters(const Group& g, const Classes& cls) {
  Subgroup der = derived_subgroup(g);
  Quotient q = quotient_group(g, der);
  const Group& a = q.group;
  long asize = a.order();
  long ex = a.exponent();

  // characters of the abelianization as value exponents t, chi(x) = zeta_ex^t
  std::vector<std::vector<long>> chars = {std::vector<long>(static_cast<size_t>(asize), 0)};
  std::vector<char> member(static_cast<size_t>(asize), 0);
  member[0] = 1;
  std::vector<int> belems = {0};
  while (static_cast<long>(belems.size()) < asize) {
    int b = -1;
    for (int x = 0; x < static_cast<int>(asize); ++x)
      if (!member[static_cast<size_t>(x)]) {
        b = x;
        break;
      }
    long m = 1;
    int cur = b;
    while (!member[static_cast<size_t>(cur)]) {
      cur = a.mul(cur, b);
      ++m;
    }
    int bm = cur;
    std::vector<int> bpow(static_cast<size_t>(m));
    bpow[0] = 0;
    for (long j = 1; j < m; ++j) bpow[static_cast<size_t>(j)] = a.mul(bpow[static_cast<size_t>(j - 1)], b);

    std::vector<int> newb;
    for (long j = 0; j < m; ++j)
      for (int u : belems) newb.push_back(a.mul(bpow[static_cast<size_t>(j)], u));
    std::sort(newb.begin(), newb.end());

    std::vector<std::vector<long>> next;
    for (const std::vector<long>& old : chars) {
      long c = old[static_cast<size_t>(bm)];
      if (c % m != 0) throw Error("linear character extension step failed");
      long x0 = c / m;
      for (long s = 0; s < m; ++s) {
        long xv = (x0 + s * (ex / m)) % ex;
        std::vector<long> fresh(static_cast<size_t>(asize), 0);
        for (long j = 0; j < m; ++j)
          for (int u : belems) {
            int idx = a.mul(bpow[static_cast<size_t>(j)], u);
            fresh[static_cast<size_t>(idx)] = (j * xv + old[static_cast<size_t>(u)]) % ex;
          }
        next.push_back(std::move(fresh));
      }
    }
    chars = std::move(next);
    belems = std::move(newb);
    for (int x : belems) member[static_cast<size_t>(x)] = 1;
  }

  std::vector<ClassFunction> out;
  for (const std::vector<long>& ch : chars) {
    ClassFunction f;
    for (const ClassData& cd : cls.list) {
      long t = ch[static_cast<size_t>(q.image[static_cast<size_t>(cd.rep)])];
      f.values.push_back(Cyc::root_of_unity(ex, t));
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const ClassFunction& x, const ClassFunction& y) {
    std::vector<std::string> rx, ry;
    for (const Cyc& v : x.values) rx.push_back(to_string(v));
    for (const Cyc& v : y.values) ry.push_back(to_string(v));
    return rx < ry;
  });
  return out;
}

long character_order(const ClassFunction& lam, const Classes& cls) {
  if (degree_of(lam) != 1) throw PreconditionError("character order is defined for linear characters");
  std::vector<long> divs;
  for (long d = 1; d <= cls.exponent; ++d)
    if (cls.exponent % d == 0) divs.push_back(d);
  long ord = 1;
  for (const Cyc& v : lam.values) {
    long vo = 0;
    for (long d : divs)
      if (v.pow(d).is_one()) {
        vo = d;
        break;
      }
    if (vo == 0) throw PreconditionError("linear character value is not a root of unity");
    ord = std::lcm(ord, vo);
  }
  return ord;
}

std::string render_table_text(const CharTable& t) {
  std::ostringstream os;
  const Classes& cls = t.classes;
  os << "order " << cls.group_order << ", classes " << cls.count() << ", exponent " << cls.exponent
     << "\n";
  os << "classes:\n";
  for (int c = 0; c < cls.count(); ++c) {
    const ClassData& cd = cls.list[static_cast<size_t>(c)];
    os << "  " << c << ": rep=" << cycle_string(t.group->elements[static_cast<size_t>(cd.rep)])
       << " size=" << cd.size << " order=" << cd.element_order << "\n";
  }
  os << "irreducibles:\n";
  for (size_t r = 0; r < t.irr.size(); ++r) {
    os << "  X" << r << " deg=" << degree_of(t.irr[r]) << ":";
    for (size_t c = 0; c < t.irr[r].values.size(); ++c)
      os << (c ? ", " : " ") << to_string(t.irr[r].values[c]);
    os << "\n";
  }
  return os.str();
}

}  // namespace hc
