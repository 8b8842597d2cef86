#pragma once

#include <map>
#include <vector>

#include "numeric.hpp"
#include "partitions.hpp"

namespace weylsig {

// Canonical key: a partition of n (parts of the Young subgroup, sorted).
struct SignSignatureA {
  int rank = 0;
  std::map<Partition, BigInt> mult;
  BigInt at(const Partition& p) const;
};

BigInt sign_mult_a(const Partition& lam, const Composition& parabolic);
SignSignatureA sign_signature_a(const Partition& lam);
Partition recover_a(const SignSignatureA& sig);
std::map<Partition, BigInt> decompose_a(const SignSignatureA& vec);

// Partitions of n ordered by their duals, lex descending. Rows of the
// triangular system use parabolics P_{lam*} in this order.
std::vector<Partition> type_a_order(int n);

}  // namespace weylsig
