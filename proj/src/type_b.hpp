#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "partitions.hpp"

namespace weylsig {

// S_{a_1} x ... x S_{a_k} x B_{b_1} x ... x B_{b_l}; both part lists sorted descending.
struct ParabolicB {
  Composition a, b;

  ParabolicB() = default;
  ParabolicB(Composition a_parts, Composition b_parts);

  int rank() const { return total(a) + total(b); }
  bool generalized() const { return b.size() > 1; }
  auto operator<=>(const ParabolicB&) const = default;
};

struct IrrepB {
  Partition lam, mu;

  int rank() const { return lam.size() + mu.size(); }
  auto operator<=>(const IrrepB&) const = default;
};

struct SignSignatureB {
  int rank = 0;
  bool generalized = false;
  std::map<ParabolicB, BigInt> mult;
  BigInt at(const ParabolicB& p) const;
};

// Table order for n = 3: b-parts lex descending, then a-parts lex ascending.
std::vector<ParabolicB> enumerate_parabolics_b(int n, bool generalized, int cap = kPartitionCap);
// Bipartitions ordered by (|lam|, lam, mu) ascending.
std::vector<IrrepB> irreps_b(int n);

// x ≻ y: mu* > sigma*, or mu = sigma and lam* > nu*.
bool succ(const IrrepB& x, const IrrepB& y);
std::vector<IrrepB> irreps_b_succ_order(int n);
// The generalized parabolic P_{lam*, mu*} paired with V_{lam, mu} in the triangular system.
ParabolicB dual_parabolic(const IrrepB& v);

BigInt sign_mult_b(const IrrepB& v, const ParabolicB& p);
SignSignatureB sign_signature_b(const IrrepB& v, bool generalized);
// Support compares only which entries are nonzero.
IrrepB recover_b(const SignSignatureB& sig, Match match = Match::Exact);
std::map<IrrepB, BigInt> decompose_b(const SignSignatureB& vec);

BigInt dim_b(const IrrepB& v);

using PairB = std::pair<IrrepB, IrrepB>;
std::map<PairB, BigInt> branch_b_to_bb(const IrrepB& v, int k);
std::map<Partition, BigInt> branch_b_to_sn(const IrrepB& v);

// One irrep per factor of p, in the order of p.a then p.b.
struct FactorTarget {
  std::vector<Partition> a;
  std::vector<IrrepB> b;
};
BigInt branch_b_generalized(const IrrepB& v, const ParabolicB& p, const FactorTarget& target);

struct LabeledDim {
  IrrepB label;
  BigInt dim;
};
std::vector<LabeledDim> wigner_mackey_labels(int n, int cap = 8);

}  // namespace weylsig
