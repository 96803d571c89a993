#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "headchar/cyclotomic.hpp"  // Error types

namespace hc {

using Point = std::uint16_t;

// Groups with more elements than this are rejected up front; everything
// downstream assumes a full element enumeration is affordable.
inline constexpr long kElementCap = 5000;

// all_subgroups refuses groups above this order.
inline constexpr long kSubgroupEnumCap = 400;

/// A permutation of {0, ..., degree-1} as an image array; img[i] is the image
/// of point i.  Composition acts on the right: i^(a*b) = (i^a)^b.
struct Perm {
  std::vector<Point> img;

  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(int degree);
  static Perm from_images(const std::vector<long>& images);  // validates

  int degree() const { return static_cast<int>(img.size()); }
  Point apply(Point p) const { return img[p]; }
  bool is_identity() const;
  long order() const;

  auto operator<=>(const Perm&) const = default;
};

Perm compose(const Perm& a, const Perm& b);  // apply a, then b
Perm inverse(const Perm& a);
Perm conjugate(const Perm& x, const Perm& g);  // g^-1 * x * g
Perm commutator(const Perm& x, const Perm& y);  // x^-1 y^-1 x y
Perm perm_power(const Perm& a, long e);
std::string cycle_string(const Perm& a);  // "(0 1 2)(3 4)", "()" for identity

/// Base and strong generating set (deterministic Schreier-Sims).  Used for
/// membership tests and as an independent order check on the enumeration.
class Bsgs {
 public:
  Bsgs(int degree, const std::vector<Perm>& gens);

  // Group order as a double-checked product of orbit sizes; saturates at
  // cap+1 when `cap` >= 0 is given and the true order exceeds it.
  long order(long cap = -1) const;
  bool contains(const Perm& g) const;

 private:
  struct Level {
    Point base_pt;
    std::vector<Perm> gens;
    std::vector<Point> orbit;              // discovery order
    std::vector<int> where;                // point -> index into orbit, -1 outside
    std::vector<Perm> transversal;         // transversal[i]: base ^ u = orbit[i]
  };

  void extend(size_t level, const Perm& g);
  bool sifts_from(size_t level, const Perm& g) const;
  void rebuild_orbit(Level& lv);

  int degree_;
  std::vector<Level> levels_;
};

/// A fully enumerated permutation group.  Elements are sorted; their indices
/// are the element ids used everywhere else.
struct Group {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // sorted ascending; elements[0] is the identity

  long order() const { return static_cast<long>(elements.size()); }
  int index_of(const Perm& p) const;      // -1 when absent
  int require_index(const Perm& p) const;  // throws when absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int mul(int a, int b) const;   // index of elements[a] * elements[b]
  int inv(int a) const;
  bool is_abelian() const;
  long exponent() const;
};

// Enumerates the group generated by `gens`; throws PreconditionError when
// the order exceeds kElementCap or a generator is malformed.
Group group_from_generators(int degree, const std::vector<Perm>& gens);

/// A subgroup as a sorted list of element indices into a parent group.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<int> elems;  // sorted ascending

  long order() const { return static_cast<long>(elems.size()); }
  bool contains(int idx) const;
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup subgroup_generated(const Group& g, const std::vector<int>& gen_indices);
Subgroup subgroup_from_indices(const Group& g, std::vector<int> elems);  // validates closure

// Realize a subgroup as a standalone Group on the same points.
Group as_group(const Subgroup& s);
// Greedy minimal-ish generating sequence, deterministic.
std::vector<int> small_generating_set(const Subgroup& s);

Subgroup conjugate_subgroup(const Subgroup& s, int g_index);
Subgroup normalizer(const Group& g, const Subgroup& s);
Subgroup centralizer(const Group& g, int x_index);
bool is_normal(const Group& g, const Subgroup& s);
Subgroup normal_closure(const Group& g, const Subgroup& s);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
// Set product A*B; throws Error when the product is not a subgroup.
Subgroup product_set(const Subgroup& a, const Subgroup& b);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);  // a <= b

/// G/N as a permutation group on the right cosets of N, with the
/// epimorphism and a section retained for reuse.
struct Quotient {
  Group group;
  std::vector<int> image;    // parent element index -> quotient element index
  std::vector<int> section;  // quotient element index -> minimal parent preimage
};

Quotient quotient_group(const Group& g, const Subgroup& n);

}  // namespace hc
