#include "minifold/atlas.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef MINIFOLD_DEFAULT_ATLAS_CSV
#define MINIFOLD_DEFAULT_ATLAS_CSV "data/fpp_atlas.v1.csv"
#endif

namespace minifold::atlas {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_labels(const std::string& s) {
  if (s.empty()) return {};
  return split(s, ';');
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += v[i];
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& field, const std::string& why) {
  throw AtlasError("line " + std::to_string(line) + ", field '" + field + "': " + why);
}

long parse_positive(const std::string& s, std::size_t line, const std::string& field) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(line, field, "expected a positive integer, got '" + s + "'");
  const long v = std::stol(s);
  if (v <= 0) fail(line, field, "expected a positive integer, got '" + s + "'");
  return v;
}

const std::vector<std::string>& subgroup_labels() {
  static const std::vector<std::string> labels{"trivial", "Z/3", "Z/7", "(Z/3)^2", "G21"};
  return labels;
}

FPPRecord parse_row(const std::string& raw, std::size_t line) {
  std::string text = raw;
  if (!text.empty() && text.back() == '\r') text.pop_back();
  const auto cells = split(text, ',');
  if (cells.size() != 9)
    fail(line, "row", "expected 9 fields, got " + std::to_string(cells.size()));
  FPPRecord r;
  r.field_or_class = cells[0];
  if (r.field_or_class.empty()) fail(line, "field_or_class", "empty");

  r.p = static_cast<int>(parse_positive(cells[1], line, "p"));
  if (r.p != 2 && r.p != 3 && r.p != 5) fail(line, "p", "must be 2, 3 or 5");

  const auto t1_parts = split(cells[2], '/');
  if (t1_parts.size() > 2) fail(line, "T1", "at most one '/' alias allowed");
  r.t1 = split_labels(t1_parts[0]);
  if (t1_parts.size() == 2) r.t1_alias = split_labels(t1_parts[1]);

  r.index_n = parse_positive(cells[3], line, "index_N");

  const auto suf = split(cells[4], '/');
  if (suf.size() > 2 || suf[0].empty()) fail(line, "suffix", "malformed '" + cells[4] + "'");
  r.suffix = suf[0];
  if (suf.size() == 2) r.suffix_alias = suf[1];
  if (r.t1_alias.has_value() != r.suffix_alias.has_value())
    fail(line, "suffix", "a T1 alias requires a suffix alias and vice versa");

  r.aut = cells[5];
  const auto& auts = automorphism_labels();
  if (std::find(auts.begin(), auts.end(), r.aut) == auts.end())
    fail(line, "aut", "unknown automorphism group '" + r.aut + "'");

  for (const auto& f : split_labels(cells[6])) r.h1.push_back(parse_positive(f, line, "h1"));

  if (cells[7] == "true") r.lifts_su21 = true;
  else if (cells[7] == "false") r.lifts_su21 = false;
  else fail(line, "lifts_su21", "expected true or false");

  auto sc = split_labels(cells[8]);
  r.sc_rest_unknown = !sc.empty() && sc.back() == "?";
  if (r.sc_rest_unknown) sc.pop_back();
  for (const auto& g : sc) {
    const auto& labels = subgroup_labels();
    if (std::find(labels.begin(), labels.end(), g) == labels.end())
      fail(line, "sc_quotients", "unknown subgroup '" + g + "'");
    if (!contains_subgroup(r.aut, g))
      fail(line, "sc_quotients", g + " is not a subgroup of " + r.aut);
  }
  r.sc_quotients = std::move(sc);
  return r;
}

std::string format_row(const FPPRecord& r) {
  std::ostringstream out;
  std::string t1 = join(r.t1, ';');
  if (r.t1_alias) t1 += "/" + join(*r.t1_alias, ';');
  std::string suffix = r.suffix;
  if (r.suffix_alias) suffix += "/" + *r.suffix_alias;
  std::vector<std::string> h1;
  for (long f : r.h1) h1.push_back(std::to_string(f));
  std::vector<std::string> sc = r.sc_quotients;
  if (r.sc_rest_unknown) sc.emplace_back("?");
  out << r.field_or_class << ',' << r.p << ',' << t1 << ',' << r.index_n << ',' << suffix << ',' << r.aut << ','
      << join(h1, ';') << ',' << (r.lifts_su21 ? "true" : "false") << ',' << join(sc, ';');
  return out.str();
}

}  // namespace

Integer FPPRecord::h1_order() const {
  Integer n = 1;
  for (long f : h1) n *= f;
  return n;
}

Tri FPPRecord::simply_connected_quotient(const std::string& subgroup) const {
  if (std::find(sc_quotients.begin(), sc_quotients.end(), subgroup) != sc_quotients.end()) return Tri::True;
  return sc_rest_unknown ? Tri::Unknown : Tri::False;
}

const std::vector<std::string>& automorphism_labels() {
  static const std::vector<std::string> labels{"trivial", "Z/3", "(Z/3)^2", "G21"};
  return labels;
}

bool contains_subgroup(const std::string& group, const std::string& sub) {
  if (sub == "trivial" || sub == group) return true;
  if (group == "G21") return sub == "Z/3" || sub == "Z/7";
  if (group == "(Z/3)^2") return sub == "Z/3";
  return false;
}

std::vector<FPPRecord> ingest(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<FPPRecord> out;
  if (!std::getline(in, line)) return out;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) fail(lineno, "header", "expected '" + std::string(kHeader) + "'");
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_row(line, lineno));
  }
  return out;
}

std::vector<FPPRecord> ingest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AtlasError("cannot open atlas data file '" + path.string() + "'");
  return ingest(in);
}

void serialize(const std::vector<FPPRecord>& records, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& r : records) out << format_row(r) << '\n';
}

AtlasQueryResult query_aut(const std::vector<FPPRecord>& records, const std::string& group) {
  const auto& auts = automorphism_labels();
  if (std::find(auts.begin(), auts.end(), group) == auts.end())
    throw AtlasError("unknown automorphism group label '" + group + "'");
  AtlasQueryResult res;
  std::copy_if(records.begin(), records.end(), std::back_inserter(res.records),
               [&](const FPPRecord& r) { return r.aut == group; });
  return res;
}

bool three_torsion_free(const FPPRecord& r) {
  return std::none_of(r.h1.begin(), r.h1.end(), [](long f) { return f % 3 == 0; });
}

bool k_phantom_eligible(const FPPRecord& r, const std::string& subgroup) {
  if (subgroup != "Z/7" && subgroup != "G21")
    throw std::invalid_argument("k_phantom_eligible: subgroup must contain an element of order 7 (Z/7 or G21)");
  return contains_subgroup(r.aut, subgroup) && r.simply_connected_quotient(subgroup) == Tri::True;
}

std::filesystem::path default_data_path() {
  if (const char* env = std::getenv("MINIFOLD_ATLAS_CSV"); env && *env) return env;
  return MINIFOLD_DEFAULT_ATLAS_CSV;
}

}  // namespace minifold::atlas
