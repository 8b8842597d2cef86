#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "partitions.hpp"
#include "tableaux.hpp"

namespace weylsig {

enum class DKind { Plus, Minus, Bar };

// Plus/Minus: S_{a_1} x ... x S_{a_k} and its conjugate under the outer sign change.
// Bar: S_{a_1} x ... x S_{a_k} x D_d.
struct ParabolicD {
  DKind kind = DKind::Plus;
  Composition a;
  int d = 0;

  static ParabolicD plus(Composition a);
  static ParabolicD minus(Composition a);
  static ParabolicD bar(Composition a, int d);

  int rank() const { return total(a) + d; }
  auto operator<=>(const ParabolicD&) const = default;
};

struct IrrepD {
  bool split = false;
  Partition lam, mu;  // NonSplit: lex-smaller dual first. Split: mu == lam.
  Sign sign = Sign::Plus;

  static IrrepD pair(Partition a, Partition b);
  static IrrepD split_rep(Partition lam, Sign s);

  int rank() const { return lam.size() + mu.size(); }
  // {lam, lam} is the reducible sum of the two split pieces.
  bool irreducible() const { return split || lam != mu; }
  auto operator<=>(const IrrepD&) const = default;
};

using SignSignatureD = std::map<ParabolicD, BigInt>;

std::vector<ParabolicD> enumerate_parabolics_d(int n, int cap = kPartitionCap);
std::vector<IrrepD> irreps_d(int n);

BigInt sign_mult_d(const IrrepD& v, const ParabolicD& p);
// The non-split formula evaluated for any pair, including lam == mu.
BigInt sign_mult_d_pair(const Partition& lam, const Partition& mu, const ParabolicD& p);
SignSignatureD sign_signature_d(const IrrepD& v);
IrrepD recover_d(const SignSignatureD& sig, int n, Match match = Match::Exact);

BigInt dim_d(const IrrepD& v);

using PairD = std::pair<IrrepD, IrrepD>;
std::map<PairD, BigInt> branch_d_nonsplit(const IrrepD& v, int k);
std::map<PairD, BigInt> branch_d_split(const IrrepD& v, int k);
std::map<Partition, BigInt> branch_d_split_to_sn(const IrrepD& v);

// Rewrites every reducible {nu,nu} factor as its two split pieces.
std::map<PairD, BigInt> expand_reducible(const std::map<PairD, BigInt>& terms);

}  // namespace weylsig
