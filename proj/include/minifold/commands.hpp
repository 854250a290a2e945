#pragma once

// The subcommands behind the `minifold` executable. Each returns a Report;
// the executable only parses flags, renders and sets the exit code.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minifold/eulerform.hpp"
#include "minifold/report.hpp"

namespace minifold::cli {

/// Which Gram matrix to build. `profile` is one of wilson, pn:N, fake-pn:N;
/// otherwise `poly` holds a polynomial literal.
struct FormArgs {
  std::string profile;
  std::string poly;
  std::optional<std::vector<long>> twists;  // default 0..n
  std::optional<long> modulus;              // default: over Z
};

HilbertProfile resolve_profile(const FormArgs& args);
GramMatrix resolve_gram(const FormArgs& args);

/// "0,-1,-2" -> {0, -1, -2}. Throws std::invalid_argument.
std::vector<long> parse_long_list(const std::string& text);

struct GramArgs {
  FormArgs form;
  bool expect_exceptional = false;
};
Report cmd_gram(const GramArgs& args);

struct DetcheckArgs {
  std::uint64_t seed = 1;
  int count = 100;       // degree d = n cases
  int zero_count = 50;   // degree d < n cases
  int max_degree = 6;
};
Report cmd_detcheck(const DetcheckArgs& args);

struct SonbArgs {
  FormArgs form;
  unsigned workers = 1;
  bool use_symmetry = false;
  bool show_candidates = false;
  std::optional<std::string> expect;  // "found" or "exhausted"
};
Report cmd_sonb(const SonbArgs& args);

struct SerreArgs {
  FormArgs form;
  std::optional<long> bound;
};
Report cmd_serre(const SerreArgs& args);

struct LefschetzArgs {
  std::string branch = "principal";  // or "conjugate"
  int k_max = 6;
};
Report cmd_lefschetz(const LefschetzArgs& args);

Report cmd_chartable();

/// Either five class-function values on 1, s, s^3, t, t^2 (e.g.
/// "3,b,bbar,0,0") or an expression in C, V1, V1bar, V3, V3bar built with
/// + and * (e.g. "V3*V3").
struct DecomposeArgs {
  std::string values;
  std::string expr;
};
Report cmd_decompose(const DecomposeArgs& args);

struct AtlasArgs {
  std::filesystem::path data;
  std::optional<std::string> aut;
  bool three_torsion_free = false;
  bool count = false;
  bool k_phantom = false;
};
Report cmd_atlas(const AtlasArgs& args);

/// target: wilson | keum | equivariant.
Report cmd_reproduce(const std::string& target, const std::filesystem::path& data);

}  // namespace minifold::cli
