#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "numeric.hpp"
#include "partitions.hpp"

namespace weylsig {

enum class Sign { Plus, Minus };

inline constexpr int kSplitSquareCap = 8;

// Memo tables for Kostka and LR numbers. Readers share the lock; inserts take it exclusively.
class CoefficientCache {
 public:
  static CoefficientCache& global();

  BigInt kostka(const Partition& shape, const Composition& content);
  BigInt lr(const Partition& lam, const Partition& mu, const Partition& nu);

  // Persistent form: one "key<TAB>value" per line.
  void load(const std::string& path);
  void save(const std::string& path) const;
  void clear();
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, BigInt> table_;

  bool lookup(const std::string& key, BigInt& out) const;
  void store(const std::string& key, const BigInt& v);
};

// Uncached evaluations, exposed for tests.
BigInt kostka_uncached(const Partition& shape, const Composition& content);
BigInt lr_uncached(const Partition& lam, const Partition& mu, const Partition& nu);

BigInt kostka(const Partition& shape, const Composition& content);
BigInt lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Multiplicities of the GL-irreducibles in Sym^2 (plus) or Alt^2 (minus) of V^lam.
std::map<Partition, BigInt> split_square_coefficients(const Partition& lam, Sign sign, int cap = kSplitSquareCap);

}  // namespace weylsig
