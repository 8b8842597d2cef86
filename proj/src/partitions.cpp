#include "partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace weylsig {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition has a non-positive part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!contains(outer, inner)) throw DomainError("inner shape does not fit inside outer shape");
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int r : p.parts())
    for (int j = 0; j < r; ++j) ++out[j];
  return Partition(std::move(out));
}

std::strong_ordering lex_compare(const Composition& a, const Composition& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  return lex_compare(a.parts(), b.parts());
}

Composition concat(const Composition& a, const Composition& b) {
  Composition out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Composition entrywise_sum(const Composition& a, const Composition& b) {
  Composition out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

int effective_length(const Composition& a) {
  for (int i = static_cast<int>(a.size()); i > 0; --i)
    if (a[i - 1] != 0) return i;
  return 0;
}

int total(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

namespace {

void gen_partitions(int rem, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(rem, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rem - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int cap) {
  if (n < 0) throw DomainError("negative partition size");
  if (n > cap) throw DomainError("partition size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return partitions_of_bounded(n, n);
}

std::vector<Partition> partitions_of_bounded(int n, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, max_len, cur, out);
  return out;
}

Partition sort_to_partition(const Composition& c) {
  std::vector<int> v;
  for (int x : c)
    if (x != 0) v.push_back(x);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::vector<Composition> compositions_of(int n, int length) {
  std::vector<Composition> out;
  if (length == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Composition cur(length, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == length - 1) {
      cur[i] = rem;
      out.push_back(cur);
      return;
    }
    for (int x = rem; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, rem - x);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Composition> sub_compositions(const Composition& a) {
  std::vector<Composition> out;
  Composition cur(a.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.size()) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= a[i]; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BigInt hook_dimension(const Partition& p) {
  Partition c = conjugate(p);
  BigInt num = 1, den = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) den *= (p[i] - j - 1) + (c[j] - i - 1) + 1;
  return num / den;
}

namespace {

std::string join(const std::vector<int>& v, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += close;
  return s;
}

std::vector<int> parse_list(const std::string& s, char open, char close) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw DomainError("expected " + std::string(1, open) + "..." + std::string(1, close) + ", got '" + s + "'");
  std::vector<int> out;
  std::string body = t.substr(1, t.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        tok.size() > 6)
      throw DomainError("bad integer '" + tok + "' in '" + s + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Partition& p) { return join(p.parts(), '[', ']'); }
std::string to_string(const Composition& c) { return join(c, '(', ')'); }

Partition parse_partition(const std::string& s) { return Partition(parse_list(s, '[', ']')); }
Composition parse_composition(const std::string& s) { return parse_list(s, '(', ')'); }

}  // namespace weylsig
