#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace weylsig {

// g e_j = sign * e_{pi(j)}, stored as img[j] = sign * (pi(j) + 1).
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int n);
  // Adjacent transposition of coordinates i, i+1 (0-based).
  static SignedPerm transposition(int n, int i);
  static SignedPerm sign_change(int n, int i);
  // e_i -> -e_{i+1}, e_{i+1} -> -e_i: the extra simple reflection of type D.
  static SignedPerm signed_swap(int n, int i);

  int n() const { return static_cast<int>(img.size()); }
  int target(int j) const { return (img[j] < 0 ? -img[j] : img[j]) - 1; }
  int sign(int j) const { return img[j] < 0 ? -1 : 1; }
  int det() const;
  int negatives() const;
  bool is_identity() const;

  SignedPerm operator*(const SignedPerm& h) const;  // this ∘ h
  SignedPerm inverse() const;
  auto operator<=>(const SignedPerm&) const = default;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& g) const;
};

template <class T>
using SignedPermMap = std::unordered_map<SignedPerm, T, SignedPermHash>;

// All elements generated by gens (BFS); throws past cap.
std::vector<SignedPerm> generate(const std::vector<SignedPerm>& gens, int n, std::size_t cap = 1000000);

enum class GroupTag { A, B, D };

std::vector<SignedPerm> coxeter_generators(GroupTag tag, int n);

struct Group {
  GroupTag tag;
  int n;
  std::vector<SignedPerm> gens;
  std::vector<SignedPerm> elements;
  std::vector<std::vector<int>> classes;  // indices into elements
};

Group enumerate_group(GroupTag tag, int n, std::size_t cap = 1000000);

std::string to_string(const SignedPerm& g);

}  // namespace weylsig
