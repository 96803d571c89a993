#include "headchar/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace hc {

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int conj_index(const Group& g, int x, const Perm& c, const Perm& ci) {
  return g.require_index(compose(compose(ci, g.elements[static_cast<size_t>(x)]), c));
}

// Smallest subgroup containing <seed> that is closed under conjugation by the
// listed elements.  Used for commutator subgroups, where the conjugators are
// the generators of the group the closure is normal in.
Subgroup closure_normal_under(const Group& g, std::vector<int> seed, const std::vector<int>& conj_by) {
  Subgroup cur = subgroup_generated(g, seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int cg : conj_by) {
      const Perm& c = g.elements[static_cast<size_t>(cg)];
      Perm ci = inverse(c);
      for (int e : cur.elems) {
        int im = conj_index(g, e, c, ci);
        if (!cur.contains(im)) {
          seed.push_back(im);
          cur = subgroup_generated(g, seed);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return cur;
}

std::vector<int> generator_indices(const Group& g) {
  std::vector<int> out;
  for (const Perm& p : g.gens) {
    int i = g.require_index(p);
    if (i != 0 && std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  return out;
}

// [<A>, <B>] as a normal subgroup of g, where both argument subgroups are
// normal in g: the closure of generator-pair commutators under g-conjugation.
Subgroup commutator_of_normals(const Group& g, const std::vector<int>& a_gens,
                               const std::vector<int>& b_gens, const std::vector<int>& g_gens) {
  std::vector<int> seed;
  for (int a : a_gens)
    for (int b : b_gens) {
      int c = g.require_index(
          commutator(g.elements[static_cast<size_t>(a)], g.elements[static_cast<size_t>(b)]));
      if (c != 0) seed.push_back(c);
    }
  return closure_normal_under(g, seed, g_gens);
}

}  // namespace

Subgroup derived_subgroup(const Subgroup& u) {
  const Group& g = *u.parent;
  std::vector<int> gens = small_generating_set(u);
  std::vector<int> seed;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      int c = g.require_index(commutator(g.elements[static_cast<size_t>(gens[i])],
                                         g.elements[static_cast<size_t>(gens[j])]));
      if (c != 0) seed.push_back(c);
    }
  return closure_normal_under(g, seed, gens);
}

Subgroup derived_subgroup(const Group& g) { return derived_subgroup(whole_group(g)); }

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> terms = {whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(terms.back());
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<int> g_gens = generator_indices(g);
  std::vector<Subgroup> terms = {whole_group(g)};
  std::vector<int> cur_gens = g_gens;
  while (true) {
    Subgroup next = commutator_of_normals(g, cur_gens, g_gens, g_gens);
    if (next.order() == terms.back().order()) break;
    cur_gens = small_generating_set(next);
    terms.push_back(std::move(next));
  }
  return terms;
}

bool is_nilpotent(const Group& g) { return lower_central_series(g).back().order() == 1; }

bool is_nilpotent(const Subgroup& u) {
  if (u.order() == 1) return true;
  Group h = as_group(u);
  return is_nilpotent(h);
}

bool is_solvable(const Group& g) { return derived_series(g).back().order() == 1; }

Subgroup nilpotent_residual(const Group& g) { return lower_central_series(g).back(); }

Subgroup sylow_subgroup(const Group& g, long p) {
  if (!is_prime(p)) throw PreconditionError("sylow subgroup: " + std::to_string(p) + " is not prime");
  long n = g.order();
  if (n % p != 0)
    throw PreconditionError("sylow subgroup: " + std::to_string(p) + " does not divide the group order");
  long p_part = 1;
  while (n % p == 0) {
    n /= p;
    p_part *= p;
  }
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < p_part) {
    Subgroup nm = normalizer(g, cur);
    int pick = -1;
    for (int x : nm.elems) {
      if (cur.contains(x)) continue;
      long o = g.elements[static_cast<size_t>(x)].order();
      while (o % p == 0) o /= p;
      if (o == 1) {
        pick = x;
        break;
      }
    }
    if (pick < 0)
      throw TheoremViolation("sylow search stalled below the full p-part");
    std::vector<int> gens = small_generating_set(cur);
    gens.push_back(pick);
    cur = subgroup_generated(g, gens);
  }
  return cur;
}

Subgroup frattini_of_p_group(const Subgroup& p_sub) {
  const Group& g = *p_sub.parent;
  long n = p_sub.order();
  if (n == 1) return trivial_subgroup(g);
  std::vector<long> ps = prime_divisors(n);
  if (ps.size() != 1)
    throw PreconditionError("frattini subgroup is only computed for p-groups");
  long p = ps[0];
  std::vector<int> gens = small_generating_set(p_sub);
  std::vector<int> seed;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      int c = g.require_index(commutator(g.elements[static_cast<size_t>(gens[i])],
                                         g.elements[static_cast<size_t>(gens[j])]));
      if (c != 0) seed.push_back(c);
    }
  for (int e : p_sub.elems) {
    int ep = g.require_index(perm_power(g.elements[static_cast<size_t>(e)], p));
    if (ep != 0) seed.push_back(ep);
  }
  return closure_normal_under(g, seed, gens);
}

Subgroup frattini_of_p_group(const Group& p_group) {
  return frattini_of_p_group(whole_group(p_group));
}

std::vector<SubgroupClass> all_subgroups(const Group& g) {
  long n = g.order();
  if (n > kSubgroupEnumCap)
    throw PreconditionError("subgroup enumeration is capped at order " +
                            std::to_string(kSubgroupEnumCap));
  std::vector<long> primes = prime_divisors(n);

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> worklist;
  std::vector<int> triv = {0};
  found.insert(triv);
  worklist.push_back(triv);

  for (size_t w = 0; w < worklist.size(); ++w) {
    std::vector<int> v = worklist[w];
    Subgroup sv;
    sv.parent = &g;
    sv.elems = v;
    std::vector<int> v_gens = small_generating_set(sv);
    Subgroup nm = normalizer(g, sv);
    std::vector<char> seen(g.elements.size(), 0);
    for (int e : v) seen[static_cast<size_t>(e)] = 1;
    for (int x : nm.elems) {
      if (seen[static_cast<size_t>(x)]) continue;
      seen[static_cast<size_t>(x)] = 1;
      long o = g.elements[static_cast<size_t>(x)].order();
      bool extends = false;
      for (long p : primes) {
        if (o % p != 0) continue;
        int xp = g.require_index(perm_power(g.elements[static_cast<size_t>(x)], p));
        if (sv.contains(xp)) {
          extends = true;
          break;
        }
      }
      if (!extends) continue;
      std::vector<int> u_gens = v_gens;
      u_gens.push_back(x);
      Subgroup u = subgroup_generated(g, u_gens);
      // every element of u outside v generates the same extension
      for (int e : u.elems) seen[static_cast<size_t>(e)] = 1;
      if (found.insert(u.elems).second) worklist.push_back(u.elems);
    }
  }

  std::vector<int> all(g.elements.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  found.insert(all);

  // conjugation tables for the generators, for orbit computations
  std::vector<std::vector<int>> conj_map;
  for (const Perm& c : g.gens) {
    Perm ci = inverse(c);
    std::vector<int> m(g.elements.size());
    for (size_t e = 0; e < g.elements.size(); ++e)
      m[e] = conj_index(g, static_cast<int>(e), c, ci);
    conj_map.push_back(std::move(m));
  }

  std::set<std::vector<int>> classed;
  std::vector<SubgroupClass> classes;
  for (const std::vector<int>& v : found) {
    if (classed.count(v)) continue;
    std::vector<std::vector<int>> orbit = {v};
    classed.insert(v);
    for (size_t q = 0; q < orbit.size(); ++q)
      for (const std::vector<int>& m : conj_map) {
        std::vector<int> img;
        img.reserve(orbit[q].size());
        for (int e : orbit[q]) img.push_back(m[static_cast<size_t>(e)]);
        std::sort(img.begin(), img.end());
        if (!found.count(img))
          throw Error("conjugate of an enumerated subgroup was not enumerated");
        if (classed.insert(img).second) orbit.push_back(std::move(img));
      }
    std::sort(orbit.begin(), orbit.end());
    SubgroupClass cls;
    cls.rep.parent = &g;
    cls.rep.elems = orbit.front();
    for (std::vector<int>& m : orbit) {
      Subgroup s;
      s.parent = &g;
      s.elems = std::move(m);
      cls.members.push_back(std::move(s));
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.rep.elems.size() != b.rep.elems.size()) return a.rep.elems.size() < b.rep.elems.size();
    return a.rep.elems < b.rep.elems;
  });
  return classes;
}

std::vector<Subgroup> all_subgroups_flat(const Group& g) {
  std::vector<Subgroup> out;
  for (SubgroupClass& cls : all_subgroups(g))
    for (Subgroup& s : cls.members) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  std::set<std::vector<int>> cyclics;
  std::set<std::vector<int>> closures;
  for (int x = 1; x < static_cast<int>(g.elements.size()); ++x) {
    if (!is_prime(g.elements[static_cast<size_t>(x)].order())) continue;
    Subgroup c = subgroup_generated(g, {x});
    if (!cyclics.insert(c.elems).second) continue;
    Subgroup ncl = normal_closure(g, c);
    closures.insert(ncl.elems);
  }
  std::vector<std::vector<int>> keep;
  for (const std::vector<int>& a : closures) {
    bool minimal = true;
    for (const std::vector<int>& b : closures) {
      if (b.size() >= a.size() || b == a) continue;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(a);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<Subgroup> out;
  for (std::vector<int>& v : keep) {
    Subgroup s;
    s.parent = &g;
    s.elems = std::move(v);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> complements_of(const Group& g, const Subgroup& n) {
  if (n.parent != &g) throw PreconditionError("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw PreconditionError("complements are only searched for normal subgroups");
  long target = g.order() / n.order();
  std::vector<Subgroup> out;
  for (Subgroup& h : all_subgroups_flat(g)) {
    if (h.order() != target) continue;
    if (intersection(h, n).order() != 1) continue;
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

// Complement to an abelian minimal normal subgroup nn of g, assuming g/nn is
// nilpotent and g is not: adjust each generator by elements of nn until the
// adjusted tuple generates a subgroup of the right order meeting nn trivially.
Subgroup complement_by_adjustment(const Group& g, const Subgroup& nn) {
  std::vector<int> gens = generator_indices(g);
  long target = g.order() / nn.order();
  size_t t = gens.size();
  std::vector<size_t> pos(t, 0);
  size_t nsize = nn.elems.size();
  while (true) {
    std::vector<int> cand;
    cand.reserve(t);
    for (size_t i = 0; i < t; ++i) cand.push_back(g.mul(gens[i], nn.elems[pos[i]]));
    // closure with early abort once the target order is exceeded
    std::vector<char> in(g.elements.size(), 0);
    std::vector<int> queue = {0};
    in[0] = 1;
    long count = 1;
    for (int c : cand)
      if (!in[static_cast<size_t>(c)]) {
        in[static_cast<size_t>(c)] = 1;
        queue.push_back(c);
        ++count;
      }
    bool over = false;
    for (size_t q = 0; q < queue.size() && !over; ++q)
      for (int c : cand) {
        int next = g.mul(queue[q], c);
        if (!in[static_cast<size_t>(next)]) {
          in[static_cast<size_t>(next)] = 1;
          queue.push_back(next);
          if (++count > target) {
            over = true;
            break;
          }
        }
      }
    if (!over && count == target) {
      bool trivial_meet = true;
      for (int e : nn.elems)
        if (e != 0 && in[static_cast<size_t>(e)]) {
          trivial_meet = false;
          break;
        }
      if (trivial_meet) {
        Subgroup s;
        s.parent = &g;
        for (size_t i = 0; i < in.size(); ++i)
          if (in[i]) s.elems.push_back(static_cast<int>(i));
        return s;
      }
    }
    // advance the odometer
    size_t i = 0;
    while (i < t && ++pos[i] == nsize) {
      pos[i] = 0;
      ++i;
    }
    if (i == t) break;
  }
  // the adjusted-tuple search is complete in theory, so this is a safety net
  if (g.order() <= kSubgroupEnumCap) {
    std::vector<Subgroup> comps = complements_of(g, nn);
    if (!comps.empty()) return comps.front();
  }
  throw TheoremViolation("no complement to the nilpotent residual was found");
}

}  // namespace

Subgroup carter_subgroup(const Group& g) {
  if (!is_solvable(g)) throw PreconditionError("carter subgroup requires a solvable group");
  Subgroup result;
  if (is_nilpotent(g)) {
    result = whole_group(g);
  } else {
    std::vector<Subgroup> mins = minimal_normal_subgroups(g);
    if (mins.empty()) throw Error("non-nilpotent group without minimal normal subgroups");
    const Subgroup& nn = mins.front();
    Quotient q = quotient_group(g, nn);
    Subgroup cq = carter_subgroup(q.group);
    std::vector<int> t_elems;
    for (int x = 0; x < static_cast<int>(g.elements.size()); ++x)
      if (cq.contains(q.image[static_cast<size_t>(x)])) t_elems.push_back(x);
    if (static_cast<long>(t_elems.size()) < g.order()) {
      Subgroup t;
      t.parent = &g;
      t.elems = std::move(t_elems);
      Group tg = as_group(t);
      Subgroup ct = carter_subgroup(tg);
      result.parent = &g;
      for (int e : ct.elems)
        result.elems.push_back(g.require_index(tg.elements[static_cast<size_t>(e)]));
      std::sort(result.elems.begin(), result.elems.end());
    } else {
      // g/nn nilpotent and g is not, so nn is the nilpotent residual and a
      // complement to it is a carter subgroup
      result = complement_by_adjustment(g, nn);
    }
  }
  if (!is_nilpotent(result) || !subgroup_equal(normalizer(g, result), result))
    throw TheoremViolation("carter construction produced a non-carter subgroup");
  return result;
}

std::vector<Subgroup> carter_brute_force(const Group& g) {
  std::vector<Subgroup> out;
  for (Subgroup& u : all_subgroups_flat(g)) {
    if (!is_nilpotent(u)) continue;
    if (!subgroup_equal(normalizer(g, u), u)) continue;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace hc
