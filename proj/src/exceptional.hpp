#pragma once

#include <string>
#include <vector>

#include "numeric.hpp"

namespace weylsig {

using RootVec = std::vector<int>;
// A Weyl group element as a permutation of root indices.
using RootPerm = std::vector<int>;

struct RootSystem {
  std::string name;
  int rank = 0;
  std::vector<RootVec> roots;          // integer coordinates
  std::vector<int> simple;             // indices of the simple roots
  std::vector<RootVec> simple_coords;  // coordinates of each root in the simple basis
  std::vector<bool> positive;
  int lowest = -1;  // index of the lowest root
  int ratio = 1;    // |long|^2 / |short|^2

  int size() const { return static_cast<int>(roots.size()); }
  long dot(int i, int j) const;
  bool is_long(int i) const;
  int index_of(const RootVec& v) const;  // -1 when v is not a root
  int negative(int i) const;
  RootPerm reflection(int i) const;
};

RootSystem build_g2();
RootSystem build_f4();

struct WeylGroup {
  std::vector<RootPerm> elements;  // elements[0] is the identity
  std::vector<int> sign;           // (-1)^length
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // class 0 holds the identity

  int order() const { return static_cast<int>(elements.size()); }
  int find(const RootPerm& p) const;

 private:
  std::vector<std::pair<RootPerm, int>> sorted_;
  friend WeylGroup enumerate_weyl_group(const RootSystem& rs);
};

WeylGroup enumerate_weyl_group(const RootSystem& rs);
RootPerm compose(const RootPerm& a, const RootPerm& b);  // a after b
RootPerm invert(const RootPerm& a);

struct Irreducible {
  std::string label;  // phi_{a,b} with ' or '' when (a,b) repeats
  int dim = 0;
  int b = 0;
  std::vector<BigInt> values;  // per class
};

// Exact character table; labels by dimension, fake-degree valuation and the
// long/short reflection rule for primes.
std::vector<Irreducible> character_table(const RootSystem& rs, const WeylGroup& w);

enum class SubsystemKind { Parabolic, PseudoParabolic, Neither };
const char* kind_name(SubsystemKind k);

struct RootSubsystem {
  std::vector<int> roots;  // sorted root indices of one representative
  std::vector<int> basis;
  std::string label;
  SubsystemKind kind = SubsystemKind::Neither;
};

// Smallest additively closed subsystem containing the given roots.
std::vector<int> closure(const RootSystem& rs, const std::vector<int>& gens);
std::string classify(const RootSystem& rs, const std::vector<int>& roots);
// Representatives of the W-classes of additively closed subsystems, in display order.
std::vector<RootSubsystem> enumerate_closed_subsystems(const RootSystem& rs, const WeylGroup& w);
// Every closed subsystem, without W-dedup (for the conjugacy-independence check).
std::vector<std::vector<int>> all_closed_subsystems(const RootSystem& rs);
std::vector<int> canonical_form(const WeylGroup& w, const std::vector<int>& roots);

BigInt extended_sign_mult(const RootSystem& rs, const WeylGroup& w, const Irreducible& chi, const std::vector<int>& roots);

struct ExtendedTable {
  std::string group;
  std::vector<RootSubsystem> columns;
  std::vector<Irreducible> rows;
  std::vector<std::vector<BigInt>> cells;  // rows x columns
  int count(SubsystemKind k) const;
};

// "G2" or "F4". Rows and columns follow the standard display order. Results are cached.
ExtendedTable extended_table(const std::string& group, int workers = 1);

}  // namespace weylsig
