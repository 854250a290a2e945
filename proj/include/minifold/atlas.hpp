#pragma once

// The classification table of fake projective planes: fifty groups Pi, each
// giving a complex-conjugate pair of surfaces, with automorphism group and
// first homology.
//
// CSV layout (UTF-8, one header row):
//   field_or_class,p,T1,index_N,suffix,aut,h1,lifts_su21,sc_quotients
// T1           semicolon-joined labels, empty for the empty set; a second
//              presentation of the same row follows a '/' (e.g. "/2I")
// suffix       label or "-"; may carry a '/' alias (e.g. "b/d")
// aut          trivial | Z/3 | (Z/3)^2 | G21
// h1           semicolon-joined invariant factors, empty for the trivial group
// lifts_su21   true | false
// sc_quotients subgroup labels G with S/G simply connected, semicolon-joined;
//              a trailing "?" marks the remaining subgroups as unknown

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minifold/numeric.hpp"

namespace minifold::atlas {

class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kHeader = "field_or_class,p,T1,index_N,suffix,aut,h1,lifts_su21,sc_quotients";

enum class Tri { False, True, Unknown };

struct FPPRecord {
  std::string field_or_class;
  int p = 0;
  std::vector<std::string> t1;
  std::optional<std::vector<std::string>> t1_alias;
  long index_n = 0;
  std::string suffix;
  std::optional<std::string> suffix_alias;
  std::string aut;
  std::vector<long> h1;
  bool lifts_su21 = false;
  std::vector<std::string> sc_quotients;
  bool sc_rest_unknown = true;

  Integer h1_order() const;
  /// Tri::True if listed, Tri::Unknown if unlisted and marked "?", else Tri::False.
  Tri simply_connected_quotient(const std::string& subgroup) const;

  friend bool operator==(const FPPRecord&, const FPPRecord&) = default;
};

/// Validated records. Throws AtlasError carrying the 1-based line number
/// (header = line 1) and the offending field.
std::vector<FPPRecord> ingest(std::istream& in);
std::vector<FPPRecord> ingest_file(const std::filesystem::path& path);

void serialize(const std::vector<FPPRecord>& records, std::ostream& out);

/// Labels accepted in the aut column.
const std::vector<std::string>& automorphism_labels();

/// Whether group `sub` is (isomorphic to) a subgroup of `group`. Labels:
/// trivial, Z/3, Z/7, (Z/3)^2, G21.
bool contains_subgroup(const std::string& group, const std::string& sub);

struct AtlasQueryResult {
  std::vector<FPPRecord> records;
  std::size_t surface_count() const { return 2 * records.size(); }
};

/// Records with the given automorphism group. Throws AtlasError for an
/// unknown label.
AtlasQueryResult query_aut(const std::vector<FPPRecord>& records, const std::string& group);

bool three_torsion_free(const FPPRecord& r);

/// S/G simply connected with G of order divisible by 7, as required for the
/// K-theoretic phantom construction. Throws std::invalid_argument unless
/// subgroup is Z/7 or G21.
bool k_phantom_eligible(const FPPRecord& r, const std::string& subgroup);

/// Path from $MINIFOLD_ATLAS_CSV, else the compiled-in data file.
std::filesystem::path default_data_path();

}  // namespace minifold::atlas
