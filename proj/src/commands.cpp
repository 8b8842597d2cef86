#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "exceptional.hpp"
#include "labels.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "tableaux.hpp"
#include "type_a.hpp"
#include "type_b.hpp"
#include "type_d.hpp"
#include "wgraph.hpp"

namespace weylsig {

using json = nlohmann::ordered_json;

namespace {

// What a subcommand produced: either a JSON document or raw text (TSV, a
// bare number, a label).
struct Payload {
  json value;
  std::string text;
  bool raw = false;
  int status = 0;

  static Payload of_json(json v) { return {std::move(v), {}, false, 0}; }
  static Payload of_text(std::string t) { return {json(t), std::move(t), true, 0}; }
};

json number(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

BigInt value_of(const json& v, const std::string& key) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
  if (v.is_string()) {
    static const std::regex re("-?[0-9]+");
    auto s = v.get<std::string>();
    if (std::regex_match(s, re)) return BigInt(s);
  }
  throw DomainError("multiplicity for " + key + " is not an integer");
}

json parse_json_arg(const std::string& s) {
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded()) throw DomainError("argument is not valid JSON");
  if (!j.is_object()) throw DomainError("expected a JSON object of label -> multiplicity");
  return j;
}

void need_args(const Request& req, std::size_t count, const char* usage) {
  if (req.args.size() != count) throw UsageError(std::string("usage: weylsig ") + usage);
}

void check_cap(const Request& req, int rank) {
  int cap = req.cap.value_or(kPartitionCap);
  if (rank > cap) throw DomainError("rank " + std::to_string(rank) + " exceeds cap " + std::to_string(cap));
}

bool tsv(const Request& req) { return req.format == "tsv"; }

// Two-column TSV of an ordered object; values printed as-is.
std::string object_tsv(const std::string& head, const json& obj) {
  std::string out = head + "\tvalue\n";
  for (const auto& [k, v] : obj.items()) out += k + "\t" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

Payload map_payload(const Request& req, const std::string& head, json obj) {
  if (tsv(req)) return Payload::of_text(object_tsv(head, obj));
  return Payload::of_json(std::move(obj));
}

char type_letter(const std::string& s) {
  if (s == "A" || s == "B" || s == "C" || s == "D") return s == "C" ? 'B' : s[0];
  throw UsageError("type must be one of A, B, C, D");
}

// "B3" -> ('B', 3)
std::pair<char, int> parse_group(const std::string& s) {
  static const std::regex re("([ABCD])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("unknown group " + s);
  int n = std::stoi(m[2]);
  if (n < 1) throw DomainError("rank must be positive");
  return {m[1].str() == "C" ? 'B' : m[1].str()[0], n};
}

// ---- kostka / lr ----

Payload cmd_kostka(const Request& req) {
  need_args(req, 2, "kostka <shape> <content>");
  auto shape = parse_partition(req.args[0]);
  auto content = parse_composition(req.args[1]);
  return Payload::of_text(kostka(shape, content).str());
}

Payload cmd_lr(const Request& req) {
  need_args(req, 3, "lr <lam> <mu> <nu>");
  auto v = lr_coefficient(parse_partition(req.args[0]), parse_partition(req.args[1]), parse_partition(req.args[2]));
  return Payload::of_text(v.str());
}

// ---- sig ----

json signature_json_a(const Partition& lam) {
  auto sig = sign_signature_a(lam);
  json out = json::object();
  for (const auto& p : partitions_of(lam.size())) out[to_string(p.parts())] = number(sig.at(p));
  return out;
}

json signature_json_b(const IrrepB& v, bool generalized) {
  auto sig = sign_signature_b(v, generalized);
  json out = json::object();
  for (const auto& p : enumerate_parabolics_b(v.rank(), generalized)) out[label_text(p)] = number(sig.at(p));
  return out;
}

json signature_json_d(const IrrepD& v) {
  auto sig = sign_signature_d(v);
  json out = json::object();
  for (const auto& p : enumerate_parabolics_d(v.rank())) {
    auto it = sig.find(p);
    out[label_text(p)] = number(it == sig.end() ? BigInt(0) : it->second);
  }
  return out;
}

Payload cmd_sig(const Request& req) {
  need_args(req, 2, "sig A|B|D <label> [--generalized]");
  char t = type_letter(req.args[0]);
  const auto& label = req.args[1];
  if (req.generalized && t != 'B') throw UsageError("--generalized applies to type B only");
  json out;
  if (t == 'A') {
    auto lam = parse_partition(label);
    check_cap(req, lam.size());
    out = signature_json_a(lam);
  } else if (t == 'B') {
    auto v = parse_irrep_b(label);
    check_cap(req, v.rank());
    out = signature_json_b(v, req.generalized);
  } else {
    auto v = parse_irrep_d(label);
    check_cap(req, v.rank());
    out = signature_json_d(v);
  }
  return map_payload(req, "parabolic", std::move(out));
}

// ---- recover / decompose ----

SignSignatureA read_signature_a(const json& j) {
  SignSignatureA sig;
  sig.rank = -1;
  for (const auto& [k, v] : j.items()) {
    auto p = parse_parabolic_a(k);
    if (sig.rank >= 0 && p.size() != sig.rank) throw DomainError("parabolics of different ranks");
    sig.rank = p.size();
    if (!sig.mult.emplace(p, value_of(v, k)).second) throw DomainError("duplicate parabolic " + k);
  }
  if (sig.rank < 0) throw DomainError("empty signature");
  return sig;
}

SignSignatureB read_signature_b(const json& j) {
  SignSignatureB sig;
  sig.rank = -1;
  for (const auto& [k, v] : j.items()) {
    auto p = parse_parabolic_b(k);
    if (sig.rank >= 0 && p.rank() != sig.rank) throw DomainError("parabolics of different ranks");
    sig.rank = p.rank();
    sig.generalized = sig.generalized || p.generalized();
    if (!sig.mult.emplace(p, value_of(v, k)).second) throw DomainError("duplicate parabolic " + k);
  }
  if (sig.rank < 0) throw DomainError("empty signature");
  return sig;
}

std::pair<SignSignatureD, int> read_signature_d(const json& j) {
  SignSignatureD sig;
  int rank = -1;
  for (const auto& [k, v] : j.items()) {
    auto p = parse_parabolic_d(k);
    if (rank >= 0 && p.rank() != rank) throw DomainError("parabolics of different ranks");
    rank = p.rank();
    if (!sig.emplace(p, value_of(v, k)).second) throw DomainError("duplicate parabolic " + k);
  }
  if (rank < 0) throw DomainError("empty signature");
  return {sig, rank};
}

Payload cmd_recover(const Request& req) {
  need_args(req, 2, "recover A|B|D <json>");
  char t = type_letter(req.args[0]);
  auto j = parse_json_arg(req.args[1]);
  if (t == 'A') {
    auto sig = read_signature_a(j);
    check_cap(req, sig.rank);
    return Payload::of_text(to_string(recover_a(sig)));
  }
  if (t == 'B') {
    auto sig = read_signature_b(j);
    check_cap(req, sig.rank);
    return Payload::of_text(label_text(recover_b(sig)));
  }
  auto [sig, n] = read_signature_d(j);
  check_cap(req, n);
  return Payload::of_text(label_text(recover_d(sig, n)));
}

Payload cmd_decompose(const Request& req) {
  need_args(req, 2, "decompose A|B <json>");
  char t = type_letter(req.args[0]);
  auto j = parse_json_arg(req.args[1]);
  json out = json::object();
  if (t == 'A') {
    auto sig = read_signature_a(j);
    check_cap(req, sig.rank);
    for (const auto& [lam, c] : decompose_a(sig))
      if (c != 0) out[to_string(lam)] = number(c);
  } else if (t == 'B') {
    auto sig = read_signature_b(j);
    check_cap(req, sig.rank);
    sig.generalized = true;
    for (const auto& [v, c] : decompose_b(sig))
      if (c != 0) out[label_text(v)] = number(c);
  } else {
    throw UsageError("decompose supports types A and B");
  }
  return map_payload(req, "irrep", std::move(out));
}

// ---- branch ----

int branch_split_point(const std::string& to, const std::string& prefix, int n) {
  if (to.rfind(prefix + ":", 0) != 0) throw UsageError("--to must be " + prefix + ":<k> or sn");
  auto digits = to.substr(prefix.size() + 1);
  int k = -1;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || end != digits.data() + digits.size()) throw UsageError("bad split point in --to " + to);
  if (k < 0 || k > n) throw DomainError("split point " + std::to_string(k) + " out of range 0.." + std::to_string(n));
  return k;
}

template <class Map, class Label>
json pairs_json(const Map& terms, Label label) {
  json out = json::object();
  for (const auto& [key, c] : terms)
    if (c != 0) out[label(key.first) + " x " + label(key.second)] = number(c);
  return out;
}

json sn_json(const std::map<Partition, BigInt>& terms) {
  json out = json::object();
  for (const auto& [nu, c] : terms)
    if (c != 0) out[to_string(nu)] = number(c);
  return out;
}

Payload cmd_branch(const Request& req) {
  need_args(req, 2, "branch A|B|D <label> --to aa:<k>|bb:<k>|dd:<k>|sn");
  char t = type_letter(req.args[0]);
  if (req.to.empty()) throw UsageError("branch needs --to");
  json out;
  if (t == 'A') {
    auto lam = parse_partition(req.args[1]);
    check_cap(req, lam.size());
    int k = branch_split_point(req.to, "aa", lam.size());
    std::map<std::pair<Partition, Partition>, BigInt> terms;
    for (const auto& mu : partitions_of(k))
      for (const auto& nu : partitions_of(lam.size() - k)) terms[{mu, nu}] = lr_coefficient(lam, mu, nu);
    out = pairs_json(terms, [](const Partition& p) { return to_string(p); });
  } else if (t == 'B') {
    auto v = parse_irrep_b(req.args[1]);
    check_cap(req, v.rank());
    if (req.to == "sn") {
      out = sn_json(branch_b_to_sn(v));
    } else {
      int k = branch_split_point(req.to, "bb", v.rank());
      out = pairs_json(branch_b_to_bb(v, k), [](const IrrepB& x) { return label_text(x); });
    }
  } else {
    auto v = parse_irrep_d(req.args[1]);
    check_cap(req, v.rank());
    if (req.to == "sn") {
      out = sn_json(v.split ? branch_d_split_to_sn(v) : branch_b_to_sn(IrrepB{v.lam, v.mu}));
    } else {
      int k = branch_split_point(req.to, "dd", v.rank());
      auto terms = v.split ? branch_d_split(v, k) : branch_d_nonsplit(v, k);
      out = pairs_json(terms, [](const IrrepD& x) { return label_text(x); });
    }
  }
  return map_payload(req, "component", std::move(out));
}

// ---- table ----

struct Grid {
  std::vector<std::string> columns, rows;
  std::vector<std::vector<BigInt>> cells;
};

template <class Row, class Col, class F>
Grid fill_grid(const std::vector<Row>& rows, const std::vector<Col>& cols, int workers, F cell) {
  Grid g;
  g.cells.assign(rows.size(), std::vector<BigInt>(cols.size()));
  parallel_for(static_cast<int>(rows.size()), workers, [&](int i) {
    for (std::size_t j = 0; j < cols.size(); ++j) g.cells[i][j] = cell(rows[i], cols[j]);
  });
  return g;
}

std::string grid_tsv(const Grid& g) {
  std::string out = "irrep";
  for (const auto& c : g.columns) out += "\t" + c;
  out += "\n";
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    out += g.rows[i];
    for (const auto& v : g.cells[i]) out += "\t" + v.str();
    out += "\n";
  }
  return out;
}

json grid_json(const std::string& group, const Grid& g, const std::vector<std::string>& kinds = {}) {
  json cols = json::array();
  for (std::size_t j = 0; j < g.columns.size(); ++j) {
    json c = {{"label", g.columns[j]}};
    if (!kinds.empty()) c["kind"] = kinds[j];
    cols.push_back(std::move(c));
  }
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    json values = json::array();
    for (const auto& v : g.cells[i]) values.push_back(number(v));
    rows.push_back({{"irrep", g.rows[i]}, {"values", std::move(values)}});
  }
  return {{"group", group}, {"columns", std::move(cols)}, {"rows", std::move(rows)}};
}

Payload cmd_table(const Request& req) {
  need_args(req, 1, "table A<n>|B<n>|D<n>|G2-extended|F4-extended");
  const auto& name = req.args[0];
  if (name == "G2-extended" || name == "F4-extended") {
    std::string group = name.substr(0, 2);
#ifndef WEYLSIG_ENABLE_F4
    if (group == "F4") throw DomainError("F4 support was disabled at build time");
#endif
    auto t = extended_table(group, req.parallel);
    Grid g;
    std::vector<std::string> kinds;
    for (const auto& c : t.columns) {
      g.columns.push_back(c.label);
      kinds.push_back(kind_name(c.kind));
    }
    for (const auto& r : t.rows) g.rows.push_back(r.label);
    g.cells = t.cells;
    if (tsv(req)) return Payload::of_text(grid_tsv(g));
    return Payload::of_json(grid_json(group, g, kinds));
  }
  auto [t, n] = parse_group(name);
  check_cap(req, n);
  Grid g;
  if (t == 'A') {
    auto ps = partitions_of(n);
    g = fill_grid(ps, ps, req.parallel, [](const Partition& lam, const Partition& p) { return sign_mult_a(lam, p.parts()); });
    for (const auto& p : ps) {
      g.rows.push_back(to_string(p));
      g.columns.push_back(to_string(p.parts()));
    }
  } else if (t == 'B') {
    auto vs = irreps_b(n);
    auto ps = enumerate_parabolics_b(n, req.generalized);
    g = fill_grid(vs, ps, req.parallel, [](const IrrepB& v, const ParabolicB& p) { return sign_mult_b(v, p); });
    for (const auto& v : vs) g.rows.push_back(label_text(v));
    for (const auto& p : ps) g.columns.push_back(label_text(p));
  } else {
    if (req.generalized) throw UsageError("--generalized applies to type B only");
    auto vs = irreps_d(n);
    auto ps = enumerate_parabolics_d(n);
    g = fill_grid(vs, ps, req.parallel, [](const IrrepD& v, const ParabolicD& p) { return sign_mult_d(v, p); });
    for (const auto& v : vs) g.rows.push_back(label_text(v));
    for (const auto& p : ps) g.columns.push_back(label_text(p));
  }
  if (tsv(req)) return Payload::of_text(grid_tsv(g));
  return Payload::of_json(grid_json(name, g));
}

// ---- wcell ----

// Orbit names for the three G2 special representations, keyed by tau-signature.
std::string g2_orbit(const TauSignature& sig) {
  static const std::map<std::string, std::string> names = {
      {"{{}}", "G_2"}, {"{{1},{2}}", "G_2(a_1)"}, {"{{1,2}}", "0"}};
  auto it = names.find(to_string(sig));
  return it == names.end() ? std::string() : it->second;
}

Payload cmd_wcell(const Request& req) {
  need_args(req, 1, "wcell <file> --type G2|A<n>|B<n>|D<n>");
  if (req.type.empty()) throw UsageError("wcell needs --type");
  if (tsv(req)) throw UsageError("wcell output is JSON only");
  CoxeterData cox;
  try {
    cox = CoxeterData::parse(req.type);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::ifstream in(req.args[0]);
  if (!in) throw DomainError("cannot read " + req.args[0]);
  std::stringstream buf;
  buf << in.rdbuf();
  auto file = parse_wcell(buf.str());

  std::vector<json> reports(file.cells.size());
  std::vector<TauSignature> sigs(file.cells.size());
  parallel_for(static_cast<int>(file.cells.size()), req.parallel, [&](int c) {
    const auto& g = file.cells[c];
    for (const auto& t : g.tau)
      for (int a : t)
        if (a < 1 || a > cox.rank) throw DomainError("cell #" + std::to_string(c) + " uses root " + std::to_string(a) + " outside " + cox.name());
    json r;
    r["cell"] = c;
    r["size"] = g.size();
    r["vertices"] = g.ids;
    sigs[c] = tau_signature(g);
    r["tau_signature"] = to_string(sigs[c]);
    auto v = validate(g, cox);
    r["valid"] = v.ok;
    if (!v.ok) r["violation"] = v.violation;
    if (v.ok) {
      if (cox.classical()) {
        try {
          r["label"] = label_text(identify_special(sigs[c], cox));
        } catch (const DomainError& e) {
          r["label"] = nullptr;
          r["label_error"] = e.what();
        }
      } else if (cox.family == 'G') {
        auto orbit = g2_orbit(sigs[c]);
        r["orbit"] = orbit.empty() ? json(nullptr) : json(orbit);
      }
      json realized = json::object();
      for (const auto& A : all_subsets(cox.rank)) {
        auto t = tau_subset_realized(g, cox, A);
        realized[to_string(A)] = {{"count", t.count}, {"rank", t.rank}, {"trace", t.trace.str()}};
      }
      r["tau_realized"] = std::move(realized);
    }
    reports[c] = std::move(r);
  });
  std::set<TauSignature> distinct(sigs.begin(), sigs.end());
  json out;
  out["type"] = cox.name();
  out["cells"] = reports;
  out["distinct_tau_signatures"] = distinct.size();
  return Payload::of_json(std::move(out));
}

// ---- oracle-check ----

Payload cmd_oracle_check(const Request& req) {
  need_args(req, 0, "oracle-check --type A|B|D --n <max rank>");
  if (req.type.empty()) throw UsageError("oracle-check needs --type");
  if (!req.cap) throw UsageError("oracle-check needs --n");
  if (tsv(req)) throw UsageError("oracle-check output is JSON only");
  char t = type_letter(req.type);
  GroupTag tag = t == 'A' ? GroupTag::A : t == 'B' ? GroupTag::B : GroupTag::D;
  int first = t == 'D' ? 2 : 1;
  if (*req.cap < first) throw DomainError("--n below the smallest rank for this type");
  bool all_ok = true;
  json ranks = json::array();
  for (int n = first; n <= *req.cap; ++n) {
    auto rows = oracle_check(tag, n, req.parallel);
    json matrix = json::array();
    json mismatches = json::array();
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t j = 0; j < row.formula.size(); ++j) {
        bool ok = row.formula[j] == row.oracle[j];
        line += ok ? '.' : 'X';
        if (!ok)
          mismatches.push_back({{"irrep", row.irrep},
                                {"parabolic", row.parabolics[j]},
                                {"formula", number(row.formula[j])},
                                {"oracle", number(row.oracle[j])}});
      }
      matrix.push_back({{"irrep", row.irrep}, {"cells", line}, {"pass", row.ok()}});
      all_ok = all_ok && row.ok();
    }
    json rank = {{"n", n}, {"parabolics", rows.empty() ? json::array() : json(rows.front().parabolics)}};
    rank["matrix"] = std::move(matrix);
    rank["mismatches"] = std::move(mismatches);
    ranks.push_back(std::move(rank));
  }
  json out = {{"type", std::string(1, t)}, {"pass", all_ok}, {"ranks", std::move(ranks)}};
  auto p = Payload::of_json(std::move(out));
  p.status = all_ok ? 0 : 1;
  return p;
}

Payload dispatch(const Request& req) {
  if (req.format != "json" && req.format != "tsv") throw UsageError("--format must be json or tsv");
  if (req.parallel < 1) throw UsageError("--parallel must be positive");
  if (req.cap && *req.cap < 0) throw UsageError("--n must be non-negative");
  static const std::map<std::string, Payload (*)(const Request&)> table = {
      {"kostka", cmd_kostka},       {"lr", cmd_lr},         {"sig", cmd_sig},
      {"recover", cmd_recover},     {"decompose", cmd_decompose}, {"branch", cmd_branch},
      {"table", cmd_table},         {"wcell", cmd_wcell},   {"oracle-check", cmd_oracle_check},
  };
  auto it = table.find(req.command);
  if (it == table.end()) throw UsageError("unknown command '" + req.command + "'");
  return it->second(req);
}

std::string render(const Request& req, const Payload& p) {
  if (req.envelope) {
    json env;
    env["command"] = req.command;
    env["args"] = req.args;
    env["version"] = kVersion;
    env["status"] = p.status;
    env["result"] = p.value;
    return env.dump(2) + "\n";
  }
  if (p.raw) return p.text.ends_with('\n') ? p.text : p.text + "\n";
  return p.value.dump(2) + "\n";
}

}  // namespace

Request request_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw UsageError("request is not a JSON object");
  Request r;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "command") r.command = v.get<std::string>();
      else if (k == "args") r.args = v.get<std::vector<std::string>>();
      else if (k == "format") r.format = v.get<std::string>();
      else if (k == "generalized") r.generalized = v.get<bool>();
      else if (k == "n") r.cap = v.get<int>();
      else if (k == "parallel") r.parallel = v.get<int>();
      else if (k == "to") r.to = v.get<std::string>();
      else if (k == "type") r.type = v.get<std::string>();
      else if (k == "envelope") r.envelope = v.get<bool>();
      else throw UsageError("unknown request field '" + k + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad request field: ") + e.what());
  }
  if (r.command.empty()) throw UsageError("request has no command");
  return r;
}

Response run(const Request& req) {
  auto error = [&](int status, const std::string& what) {
    json e = {{"error", what}};
    if (req.envelope) e = {{"command", req.command}, {"args", req.args}, {"version", kVersion}, {"status", status}, {"result", e}};
    return Response{status, e.dump(2) + "\n"};
  };
  try {
    Payload p = dispatch(req);
    return {p.status, render(req, p)};
  } catch (const UsageError& e) {
    return error(2, e.what());
  } catch (const ParseError& e) {
    return error(1, e.what());
  } catch (const DomainError& e) {
    return error(1, e.what());
  } catch (const std::invalid_argument& e) {
    return error(1, e.what());
  } catch (const std::out_of_range& e) {
    return error(1, e.what());
  } catch (const std::exception& e) {
    return error(1, std::string("internal error: ") + e.what());
  }
}

}  // namespace weylsig
