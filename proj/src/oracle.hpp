#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"
#include "partitions.hpp"
#include "signed_perm.hpp"
#include "type_b.hpp"
#include "type_d.hpp"

namespace weylsig {

inline constexpr int kOracleSnCap = 8;

// Young's seminormal form for S_m, plus the character on every permutation.
class SnIrrep {
 public:
  explicit SnIrrep(const Partition& lam);

  const Partition& shape() const { return lam_; }
  int dim() const { return dim_; }
  int degree() const { return lam_.size(); }
  // Matrix of the adjacent transposition (i, i+1).
  const RatMatrix& generator(int i) const { return gens_[i]; }
  // perm[j] = image of j.
  RatMatrix matrix(const std::vector<int>& perm) const;
  const Rational& character(const std::vector<int>& perm) const;

 private:
  Partition lam_;
  int dim_ = 0;
  std::vector<RatMatrix> gens_;
  std::map<std::vector<int>, Rational> chars_;
};

// Shared instances, built on first use.
const SnIrrep& sn_irrep(const Partition& lam);

Rational mn_character(const Partition& lam, const Partition& cycle_type);
Partition cycle_type(const std::vector<int>& perm);

// A representation given by a matrix/character oracle on group elements.
struct ExplicitModule {
  GroupTag tag = GroupTag::A;
  int n = 0;
  int dim = 0;
  std::string label;
  std::vector<SignedPerm> gens;
  std::vector<RatMatrix> gen_matrices;
  std::function<RatMatrix(const SignedPerm&)> matrix;
  std::function<Rational(const SignedPerm&)> character;
};

// Coset-basis induction from a subgroup given by a membership test.
struct SubgroupRep {
  int dim = 0;
  std::function<bool(const SignedPerm&)> contains;
  std::function<RatMatrix(const SignedPerm&)> matrix;
  std::function<Rational(const SignedPerm&)> character;
};

class InducedModule {
 public:
  InducedModule(std::vector<SignedPerm> transversal, SubgroupRep sub);

  int dim() const { return static_cast<int>(transversal_.size()) * sub_.dim; }
  RatMatrix matrix(const SignedPerm& g) const;
  Rational character(const SignedPerm& g) const;
  const std::vector<SignedPerm>& transversal() const { return transversal_; }

 private:
  std::vector<SignedPerm> transversal_;
  SubgroupRep sub_;
};

// Keeps one candidate per left coset of the subgroup.
std::vector<SignedPerm> coset_transversal(const std::vector<SignedPerm>& candidates,
                                          const std::function<bool(const SignedPerm&)>& contains);
// Permutations sending {0..i-1} and {i..n-1} onto a subset and its complement, in order.
std::vector<SignedPerm> shuffles(int n, int i);

ExplicitModule build_sn_irrep(const Partition& lam);
ExplicitModule build_bn_irrep(const Partition& lam, const Partition& mu);
ExplicitModule build_dn_irrep(const IrrepD& label);

// Caches character values; the wrapped module must outlive nothing else.
ExplicitModule memoize(ExplicitModule m);

// Checks s^2 = 1 and (st)^m = 1 for generator pairs, m read off the group elements.
bool validate_relations(const ExplicitModule& m, std::string* why = nullptr);
bool character_is_class_function(const ExplicitModule& m, const Group& g);

BigInt oracle_sign_mult(const ExplicitModule& m, const std::vector<SignedPerm>& subgroup_gens);
// Same average with the trivial character in place of det.
BigInt oracle_trivial_mult(const ExplicitModule& m, const std::vector<SignedPerm>& subgroup_gens);

// Multiplicity of left ⊗ right in the restriction of m to G_k x G_{n-k}, the
// subgroup preserving the first k coordinates. All three modules share m's type.
BigInt oracle_branch_mult(const ExplicitModule& m, int k, const ExplicitModule& left, const ExplicitModule& right);

std::vector<SignedPerm> parabolic_generators_a(const Composition& parts);
std::vector<SignedPerm> parabolic_generators_b(const ParabolicB& p);
std::vector<SignedPerm> parabolic_generators_d(const ParabolicD& p);

// Full formula-versus-oracle sweep for one type and rank.
struct OracleCheckRow {
  std::string irrep;
  std::vector<std::string> parabolics;
  std::vector<BigInt> formula;
  std::vector<BigInt> oracle;
  bool ok() const { return formula == oracle; }
};
std::vector<OracleCheckRow> oracle_check(GroupTag tag, int n, int workers = 1);

}  // namespace weylsig
