#pragma once

#include <map>
#include <string>
#include <vector>

#include "headchar/cyclotomic.hpp"
#include "headchar/permgroup.hpp"

namespace hc {

struct ClassData {
  int rep = 0;               // smallest element index in the class
  std::vector<int> members;  // sorted element indices
  long size = 0;
  int inverse_class = 0;
  long element_order = 1;
  std::map<long, int> power_map;  // prime q <= exponent -> class of x^q
};

/// Conjugacy classes in canonical order: by element order, then class size,
/// then representative index.  The identity class is always index 0.
struct Classes {
  std::vector<ClassData> list;
  std::vector<int> class_of;  // element index -> class index
  long exponent = 1;
  long group_order = 0;
  int count() const { return static_cast<int>(list.size()); }
};

Classes conjugacy_classes(const Group& g);

/// Class of x^e for x in class ci, obtained by chaining the prime power maps.
int class_power(const Classes& cls, int ci, long e);

struct ClassFunction {
  std::vector<Cyc> values;  // indexed by class
  bool operator==(const ClassFunction&) const = default;
};

struct CharTable {
  const Group* group = nullptr;
  Classes classes;
  std::vector<ClassFunction> irr;  // canonical order: degree, then rendered values
};

/// Full exact character table via class matrices over a prime field and
/// cyclotomic lifting.  Both orthogonality relations are checked before the
/// table is returned.
CharTable character_table(const Group& g);

/// chi(1); throws if the value at the identity class is not a positive integer.
long degree_of(const ClassFunction& f);

/// (1/|G|) sum over classes of size * a * conj(b), exact.
Cyc inner_product(const ClassFunction& a, const ClassFunction& b, const Classes& cls);

/// All degree-1 characters, built directly from the abelianization without
/// going through the class-matrix machinery.  Canonically ordered.
std::vector<ClassFunction> linear_characters(const Group& g, const Classes& cls);

/// Order of a linear character in the dual group = lcm of the multiplicative
/// orders of its values.
long character_order(const ClassFunction& lam, const Classes& cls);

ClassFunction trivial_character(const Classes& cls);
ClassFunction regular_character(const Classes& cls);

/// Index of f among the irreducibles of t, or -1.
int irr_index_of(const CharTable& t, const ClassFunction& f);

/// Canonical text rendering: class header block plus one line per irreducible.
std::string render_table_text(const CharTable& t);

}  // namespace hc
