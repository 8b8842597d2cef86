#include "labels.hpp"

#include <algorithm>
#include <cctype>

namespace weylsig {

namespace {

std::string strip(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

std::pair<std::string, std::string> split_bar(const std::string& s) {
  auto pos = s.find('|');
  if (pos == std::string::npos || s.find('|', pos + 1) != std::string::npos)
    throw DomainError("expected exactly one '|' in '" + s + "'");
  return {s.substr(0, pos), s.substr(pos + 1)};
}

Composition positive(Composition c, const std::string& src) {
  for (int x : c)
    if (x <= 0) throw DomainError("parabolic parts must be positive in '" + src + "'");
  return c;
}

}  // namespace

std::string label_text(const IrrepB& v) { return to_string(v.lam) + "|" + to_string(v.mu); }

std::string label_text(const IrrepD& v) {
  if (v.split) return to_string(v.lam) + (v.sign == Sign::Plus ? "+" : "-");
  return "{" + to_string(v.lam) + "," + to_string(v.mu) + "}";
}

std::string label_text(const ParabolicB& p) { return to_string(p.a) + "|" + to_string(p.b); }

std::string label_text(const ParabolicD& p) {
  switch (p.kind) {
    case DKind::Plus: return to_string(p.a) + "+";
    case DKind::Minus: return to_string(p.a) + "-";
    case DKind::Bar: return to_string(p.a) + "|(" + std::to_string(p.d) + ")";
  }
  return {};
}

IrrepB parse_irrep_b(const std::string& s) {
  auto [l, m] = split_bar(strip(s));
  return IrrepB{parse_partition(l), parse_partition(m)};
}

IrrepD parse_irrep_d(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw DomainError("empty type D label");
  if (t.front() == '{') {
    if (t.back() != '}') throw DomainError("unterminated '{' in '" + s + "'");
    std::string body = t.substr(1, t.size() - 2);
    auto close = body.find(']');
    if (close == std::string::npos || close + 1 >= body.size() || body[close + 1] != ',')
      throw DomainError("expected {[..],[..]} in '" + s + "'");
    IrrepD v = IrrepD::pair(parse_partition(body.substr(0, close + 1)), parse_partition(body.substr(close + 2)));
    if (!v.irreducible()) throw DomainError("{lam,lam} is reducible; use lam+ or lam-");
    return v;
  }
  char sg = t.back();
  if (sg != '+' && sg != '-') throw DomainError("expected {lam,mu}, lam+ or lam- in '" + s + "'");
  return IrrepD::split_rep(parse_partition(t.substr(0, t.size() - 1)), sg == '+' ? Sign::Plus : Sign::Minus);
}

ParabolicB parse_parabolic_b(const std::string& s) {
  auto [a, b] = split_bar(strip(s));
  return ParabolicB(positive(parse_composition(a), s), positive(parse_composition(b), s));
}

ParabolicD parse_parabolic_d(const std::string& s) {
  std::string t = strip(s);
  if (t.find('|') != std::string::npos) {
    auto [a, d] = split_bar(t);
    Composition dd = parse_composition(d);
    if (dd.size() != 1) throw DomainError("expected a single D-part in '" + s + "'");
    return ParabolicD::bar(positive(parse_composition(a), s), dd[0]);
  }
  if (t.empty()) throw DomainError("empty type D parabolic");
  char sg = t.back();
  if (sg != '+' && sg != '-') throw DomainError("expected a trailing + or - in '" + s + "'");
  Composition a = positive(parse_composition(t.substr(0, t.size() - 1)), s);
  return sg == '+' ? ParabolicD::plus(a) : ParabolicD::minus(a);
}

Partition parse_parabolic_a(const std::string& s) { return sort_to_partition(positive(parse_composition(s), s)); }

}  // namespace weylsig
