#include "headchar/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hc {

Perm::Perm(std::vector<Point> images) : img(std::move(images)) {}

Perm Perm::identity(int degree) {
  Perm p;
  p.img.resize(static_cast<size_t>(degree));
  std::iota(p.img.begin(), p.img.end(), Point(0));
  return p;
}

Perm Perm::from_images(const std::vector<long>& images) {
  size_t n = images.size();
  if (n == 0) throw PreconditionError("permutation needs at least one point");
  if (n > 60000) throw PreconditionError("permutation degree too large");
  std::vector<char> seen(n, 0);
  Perm p;
  p.img.resize(n);
  for (size_t i = 0; i < n; ++i) {
    long v = images[i];
    if (v < 0 || v >= static_cast<long>(n))
      throw PreconditionError("permutation image out of range: " + std::to_string(v));
    if (seen[static_cast<size_t>(v)])
      throw PreconditionError("permutation repeats image " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
    p.img[i] = static_cast<Point>(v);
  }
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

long Perm::order() const {
  // lcm of cycle lengths
  long ord = 1;
  std::vector<char> seen(img.size(), 0);
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  c.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) c.img[i] = b.img[a.img[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c;
  c.img.resize(a.img.size());
  for (size_t i = 0; i < a.img.size(); ++i) c.img[a.img[i]] = static_cast<Point>(i);
  return c;
}

Perm conjugate(const Perm& x, const Perm& g) {
  return compose(compose(inverse(g), x), g);
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(inverse(x), inverse(y)), compose(x, y));
}

Perm perm_power(const Perm& a, long e) {
  int d = a.degree();
  Perm base = a;
  if (e < 0) {
    base = inverse(a);
    e = -e;
  }
  Perm acc = Perm::identity(d);
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::string cycle_string(const Perm& a) {
  std::ostringstream os;
  std::vector<char> seen(a.img.size(), 0);
  bool any = false;
  for (size_t i = 0; i < a.img.size(); ++i) {
    if (seen[i] || a.img[i] == i) {
      seen[i] = 1;
      continue;
    }
    any = true;
    os << "(" << i;
    seen[i] = 1;
    size_t j = a.img[i];
    while (j != i) {
      os << " " << j;
      seen[j] = 1;
      j = a.img[j];
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

// ---------------------------------------------------------------------------
// Schreier-Sims

Bsgs::Bsgs(int degree, const std::vector<Perm>& gens) : degree_(degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    extend(0, g);
  }
}

void Bsgs::rebuild_orbit(Level& lv) {
  lv.orbit.clear();
  lv.where.assign(static_cast<size_t>(degree_), -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_pt);
  lv.where[lv.base_pt] = 0;
  lv.transversal.push_back(Perm::identity(degree_));
  for (size_t q = 0; q < lv.orbit.size(); ++q) {
    Point p = lv.orbit[q];
    for (const Perm& s : lv.gens) {
      Point r = s.apply(p);
      if (lv.where[r] < 0) {
        lv.where[r] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(r);
        lv.transversal.push_back(compose(lv.transversal[q], s));
      }
    }
  }
}

// Membership sift starting at `level`; g must fix the earlier base points.
bool Bsgs::sifts_from(size_t level, const Perm& g) const {
  Perm r = g;
  for (size_t i = level; i < levels_.size(); ++i) {
    if (r.is_identity()) return true;
    const Level& lv = levels_[i];
    Point p = r.apply(lv.base_pt);
    if (lv.where[p] < 0) return false;
    r = compose(r, inverse(lv.transversal[static_cast<size_t>(lv.where[p])]));
  }
  return r.is_identity();
}

void Bsgs::extend(size_t level, const Perm& g) {
  if (g.is_identity()) return;
  if (level < levels_.size() && sifts_from(level, g)) return;
  if (level == levels_.size()) {
    // new base point: smallest point moved by g
    Point b = 0;
    for (size_t i = 0; i < g.img.size(); ++i)
      if (g.img[i] != i) {
        b = static_cast<Point>(i);
        break;
      }
    Level lv;
    lv.base_pt = b;
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  rebuild_orbit(levels_[level]);
  // close under Schreier generators; re-index levels_ each time because the
  // recursion below may grow the vector and move it
  for (size_t q = 0; q < levels_[level].orbit.size(); ++q) {
    for (size_t si = 0; si < levels_[level].gens.size(); ++si) {
      Perm s = levels_[level].gens[si];
      Perm u = levels_[level].transversal[q];
      Point r = s.apply(levels_[level].orbit[q]);
      Perm back = inverse(levels_[level].transversal[static_cast<size_t>(levels_[level].where[r])]);
      Perm schreier = compose(compose(u, s), back);
      if (!schreier.is_identity()) extend(level + 1, schreier);
    }
  }
}

long Bsgs::order(long cap) const {
  long o = 1;
  for (const Level& lv : levels_) {
    o *= static_cast<long>(lv.orbit.size());
    if (cap >= 0 && o > cap) return cap + 1;
  }
  return o;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm r = g;
  for (const Level& lv : levels_) {
    if (r.is_identity()) return true;
    Point p = r.apply(lv.base_pt);
    if (lv.where[p] < 0) return false;
    r = compose(r, inverse(lv.transversal[static_cast<size_t>(lv.where[p])]));
  }
  return r.is_identity();
}

// ---------------------------------------------------------------------------
// Group

int Group::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it != elements.end() && *it == p) return static_cast<int>(it - elements.begin());
  return -1;
}

int Group::require_index(const Perm& p) const {
  int i = index_of(p);
  if (i < 0) throw Error("element is not in the group");
  return i;
}

int Group::mul(int a, int b) const {
  return require_index(compose(elements[static_cast<size_t>(a)], elements[static_cast<size_t>(b)]));
}

int Group::inv(int a) const { return require_index(inverse(elements[static_cast<size_t>(a)])); }

bool Group::is_abelian() const {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

long Group::exponent() const {
  long e = 1;
  for (const Perm& p : elements) e = std::lcm(e, p.order());
  return e;
}

Group group_from_generators(int degree, const std::vector<Perm>& gens) {
  if (degree < 1) throw PreconditionError("group degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");

  Bsgs chain(degree, gens);
  long order = chain.order(kElementCap);
  if (order > kElementCap)
    throw PreconditionError("group order exceeds the element cap of " + std::to_string(kElementCap));

  // breadth-first closure
  std::set<Perm> seen;
  std::vector<Perm> queue;
  queue.push_back(Perm::identity(degree));
  seen.insert(queue[0]);
  for (size_t q = 0; q < queue.size(); ++q) {
    for (const Perm& g : gens) {
      Perm next = compose(queue[q], g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (static_cast<long>(seen.size()) != order)
    throw Error("enumeration disagrees with the stabilizer chain order");

  Group out;
  out.degree = degree;
  out.gens = gens;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(int idx) const {
  return std::binary_search(elems.begin(), elems.end(), idx);
}

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.parent = &g;
  s.elems.resize(g.elements.size());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup s;
  s.parent = &g;
  s.elems = {g.require_index(Perm::identity(g.degree))};
  return s;
}

Subgroup subgroup_generated(const Group& g, const std::vector<int>& gen_indices) {
  std::vector<char> in(g.elements.size(), 0);
  int id = g.require_index(Perm::identity(g.degree));
  std::vector<int> queue = {id};
  in[static_cast<size_t>(id)] = 1;
  for (int gi : gen_indices) {
    if (gi < 0 || gi >= static_cast<int>(g.elements.size()))
      throw PreconditionError("generator index out of range");
    if (!in[static_cast<size_t>(gi)]) {
      in[static_cast<size_t>(gi)] = 1;
      queue.push_back(gi);
    }
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    for (int gi : gen_indices) {
      int next = g.mul(queue[q], gi);
      if (!in[static_cast<size_t>(next)]) {
        in[static_cast<size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  Subgroup s;
  s.parent = &g;
  for (size_t i = 0; i < in.size(); ++i)
    if (in[i]) s.elems.push_back(static_cast<int>(i));
  return s;
}

Subgroup subgroup_from_indices(const Group& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s;
  s.parent = &g;
  s.elems = std::move(elems);
  for (int a : s.elems)
    if (!s.contains(g.inv(a))) throw Error("element set is not closed under inversion");
  for (int a : s.elems)
    for (int b : s.elems)
      if (!s.contains(g.mul(a, b))) throw Error("element set is not closed under multiplication");
  return s;
}

Group as_group(const Subgroup& s) {
  const Group& p = *s.parent;
  Group out;
  out.degree = p.degree;
  for (int gi : small_generating_set(s)) out.gens.push_back(p.elements[static_cast<size_t>(gi)]);
  if (out.gens.empty()) out.gens.push_back(Perm::identity(p.degree));
  out.elements.reserve(s.elems.size());
  for (int i : s.elems) out.elements.push_back(p.elements[static_cast<size_t>(i)]);
  // parent elements are sorted, so a subsequence is sorted too
  return out;
}

std::vector<int> small_generating_set(const Subgroup& s) {
  const Group& g = *s.parent;
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.elems.size() < s.elems.size()) {
    int pick = -1;
    for (int e : s.elems)
      if (!cur.contains(e)) {
        pick = e;
        break;
      }
    gens.push_back(pick);
    cur = subgroup_generated(g, gens);
  }
  return gens;
}

Subgroup conjugate_subgroup(const Subgroup& s, int g_index) {
  const Group& g = *s.parent;
  const Perm& c = g.elements[static_cast<size_t>(g_index)];
  Perm ci = inverse(c);
  Subgroup out;
  out.parent = &g;
  out.elems.reserve(s.elems.size());
  for (int e : s.elems)
    out.elems.push_back(g.require_index(compose(compose(ci, g.elements[static_cast<size_t>(e)]), c)));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

Subgroup normalizer(const Group& g, const Subgroup& s) {
  std::vector<char> member(g.elements.size(), 0);
  for (int e : s.elems) member[static_cast<size_t>(e)] = 1;
  Subgroup out;
  out.parent = &g;
  for (int gi = 0; gi < static_cast<int>(g.elements.size()); ++gi) {
    const Perm& c = g.elements[static_cast<size_t>(gi)];
    Perm ci = inverse(c);
    bool ok = true;
    for (int e : s.elems) {
      int im = g.index_of(compose(compose(ci, g.elements[static_cast<size_t>(e)]), c));
      if (im < 0 || !member[static_cast<size_t>(im)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.elems.push_back(gi);
  }
  return out;
}

Subgroup centralizer(const Group& g, int x_index) {
  const Perm& x = g.elements[static_cast<size_t>(x_index)];
  Subgroup out;
  out.parent = &g;
  for (int gi = 0; gi < static_cast<int>(g.elements.size()); ++gi) {
    const Perm& c = g.elements[static_cast<size_t>(gi)];
    if (compose(c, x) == compose(x, c)) out.elems.push_back(gi);
  }
  return out;
}

bool is_normal(const Group& g, const Subgroup& s) {
  for (const Perm& c : g.gens) {
    Perm ci = inverse(c);
    for (int e : s.elems) {
      int im = g.index_of(compose(compose(ci, g.elements[static_cast<size_t>(e)]), c));
      if (im < 0 || !s.contains(im)) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const Group& g, const Subgroup& s) {
  std::vector<int> gens = small_generating_set(s);
  Subgroup cur = subgroup_generated(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm& c : g.gens) {
      Perm ci = inverse(c);
      for (int e : cur.elems) {
        int im = g.require_index(compose(compose(ci, g.elements[static_cast<size_t>(e)]), c));
        if (!cur.contains(im)) {
          gens.push_back(im);
          cur = subgroup_generated(g, gens);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return cur;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw PreconditionError("subgroups have different parents");
  Subgroup out;
  out.parent = a.parent;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(out.elems));
  return out;
}

Subgroup product_set(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw PreconditionError("subgroups have different parents");
  const Group& g = *a.parent;
  std::set<int> prod;
  for (int x : a.elems)
    for (int y : b.elems) prod.insert(g.mul(x, y));
  std::vector<int> gens;
  gens.insert(gens.end(), a.elems.begin(), a.elems.end());
  gens.insert(gens.end(), b.elems.begin(), b.elems.end());
  Subgroup generated = subgroup_generated(g, gens);
  if (generated.elems.size() != prod.size())
    throw Error("product set is not a subgroup");
  return generated;
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.elems == b.elems;
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) return false;
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end());
}

Quotient quotient_group(const Group& g, const Subgroup& n) {
  if (n.parent != &g) throw PreconditionError("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw PreconditionError("quotient by a non-normal subgroup");

  long order = g.order();
  long m = order / n.order();
  // coset id = minimal element index in the right coset Nx
  std::vector<int> coset_min(static_cast<size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    if (coset_min[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> members;
    members.reserve(n.elems.size());
    int mn = x;
    for (int e : n.elems) {
      int y = g.mul(e, x);
      members.push_back(y);
      mn = std::min(mn, y);
    }
    for (int y : members) coset_min[static_cast<size_t>(y)] = mn;
  }
  // number the cosets by their minimal element
  std::vector<int> reps;
  for (int x = 0; x < order; ++x)
    if (coset_min[static_cast<size_t>(x)] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());
  std::vector<int> coset_no(static_cast<size_t>(order), -1);
  for (size_t i = 0; i < reps.size(); ++i) {
    for (int x = 0; x < order; ++x)
      if (coset_min[static_cast<size_t>(x)] == reps[i]) coset_no[static_cast<size_t>(x)] = static_cast<int>(i);
  }

  // image of each group element as a permutation of the cosets
  std::vector<Perm> images(static_cast<size_t>(order));
  for (int x = 0; x < order; ++x) {
    Perm p;
    p.img.resize(static_cast<size_t>(m));
    for (size_t i = 0; i < reps.size(); ++i)
      p.img[i] = static_cast<Point>(coset_no[static_cast<size_t>(g.mul(reps[i], x))]);
    images[static_cast<size_t>(x)] = std::move(p);
  }

  std::vector<Perm> qgens;
  for (const Perm& c : g.gens) qgens.push_back(images[static_cast<size_t>(g.require_index(c))]);
  if (qgens.empty()) qgens.push_back(Perm::identity(static_cast<int>(m)));

  Quotient out;
  out.group.degree = static_cast<int>(m);
  out.group.gens = std::move(qgens);
  {
    std::set<Perm> uniq(images.begin(), images.end());
    out.group.elements.assign(uniq.begin(), uniq.end());
  }
  if (static_cast<long>(out.group.elements.size()) != m)
    throw Error("quotient image has unexpected order");

  out.image.resize(static_cast<size_t>(order));
  out.section.assign(static_cast<size_t>(m), -1);
  for (int x = 0; x < order; ++x) {
    int qi = out.group.require_index(images[static_cast<size_t>(x)]);
    out.image[static_cast<size_t>(x)] = qi;
    if (out.section[static_cast<size_t>(qi)] < 0) out.section[static_cast<size_t>(qi)] = x;
  }
  return out;
}

}  // namespace hc
