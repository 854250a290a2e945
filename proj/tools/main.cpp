#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "minifold/atlas.hpp"
#include "minifold/commands.hpp"

using namespace minifold;

namespace {

void add_form_options(CLI::App* cmd, cli::FormArgs& form, std::string& twists) {
  cmd->add_option("--profile", form.profile, "wilson, pn:N or fake-pn:N");
  cmd->add_option("--poly", form.poly, "polynomial literal, e.g. \"[1,-3/2,1/2]\" or \"(k-1)*(k-2)/2\"");
  cmd->add_option("--twists", twists, "comma-separated twists c_0,...,c_r (default 0..n)")->allow_extra_args(false);
  cmd->add_option("--mod", form.modulus, "reduce modulo this prime");
}

void finish_form(cli::FormArgs& form, const std::string& twists) {
  if (form.profile.empty() && form.poly.empty()) form.profile = "wilson";
  if (!twists.empty()) form.twists = cli::parse_long_list(twists);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler-form, Lefschetz and character computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string data;
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", seed, "seed for generated test data");
  app.add_option("--data", data, "atlas CSV (default: $MINIFOLD_ATLAS_CSV or the bundled file)");

  std::string twists;
  cli::GramArgs gram;
  auto* c_gram = app.add_subcommand("gram", "Euler-form Gram matrix of a Hilbert polynomial");
  add_form_options(c_gram, gram.form, twists);
  c_gram->add_flag("--expect-exceptional", gram.expect_exceptional, "check numerical exceptionality");

  cli::DetcheckArgs det;
  auto* c_det = app.add_subcommand("detcheck", "determinant identity on random integer-valued polynomials");
  c_det->add_option("--count", det.count, "polynomials with degree = n");
  c_det->add_option("--zero-count", det.zero_count, "polynomials with degree < n");
  c_det->add_option("--max-degree", det.max_degree, "largest n");

  cli::SonbArgs sonb;
  std::string expect;
  auto* c_sonb = app.add_subcommand("sonb", "search for a semi-orthonormal basis");
  add_form_options(c_sonb, sonb.form, twists);
  c_sonb->add_option("--workers", sonb.workers, "search threads");
  c_sonb->add_flag("--symmetry", sonb.use_symmetry, "restrict the first vector to Serre orbit representatives");
  c_sonb->add_flag("--show-candidates", sonb.show_candidates, "list candidates and their pairing matrix");
  c_sonb->add_option("--expect", expect, "found or exhausted")->check(CLI::IsMember({"found", "exhausted"}));

  cli::SerreArgs serre;
  auto* c_serre = app.add_subcommand("serre", "Serre operator and its order");
  add_form_options(c_serre, serre.form, twists);
  c_serre->add_option("--bound", serre.bound, "order search bound");

  cli::LefschetzArgs lef;
  auto* c_lef = app.add_subcommand("lefschetz", "fixed point formula for an order-7 automorphism");
  c_lef->add_option("--branch", lef.branch, "principal or conjugate")
      ->check(CLI::IsMember({"principal", "conjugate"}));
  c_lef->add_option("--k-max", lef.k_max, "largest twist k");

  auto* c_chart = app.add_subcommand("chartable", "character table of G21");

  cli::DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "decompose a class function of G21");
  c_dec->add_option("--values", dec.values, "values on 1,s,s^3,t,t^2, e.g. 3,b,bbar,0,0");
  c_dec->add_option("--expr", dec.expr, "expression in C,V1,V1bar,V3,V3bar with + and *");

  cli::AtlasArgs at;
  auto* c_atlas = app.add_subcommand("atlas", "query the fake projective plane table");
  c_atlas->add_option("--aut", at.aut, "automorphism group: trivial, Z/3, (Z/3)^2, G21");
  c_atlas->add_flag("--three-torsion-free", at.three_torsion_free, "keep records without 3-torsion in H1");
  c_atlas->add_flag("--count", at.count, "only count records and surfaces");
  c_atlas->add_flag("--k-phantom", at.k_phantom, "list (record, subgroup) pairs eligible for K-phantoms");

  std::string target;
  auto* c_rep = app.add_subcommand("reproduce", "end-to-end reproduction pipelines");
  c_rep->add_option("target", target, "wilson, keum or equivariant")
      ->required()
      ->check(CLI::IsMember({"wilson", "keum", "equivariant"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const ReportFormat fmt = parse_report_format(format);
    const std::filesystem::path data_path = data.empty() ? atlas::default_data_path() : std::filesystem::path(data);
    Report report("none");
    if (c_gram->parsed()) {
      finish_form(gram.form, twists);
      report = cli::cmd_gram(gram);
    } else if (c_det->parsed()) {
      det.seed = seed;
      report = cli::cmd_detcheck(det);
    } else if (c_sonb->parsed()) {
      finish_form(sonb.form, twists);
      if (!expect.empty()) sonb.expect = expect;
      report = cli::cmd_sonb(sonb);
    } else if (c_serre->parsed()) {
      finish_form(serre.form, twists);
      report = cli::cmd_serre(serre);
    } else if (c_lef->parsed()) {
      report = cli::cmd_lefschetz(lef);
    } else if (c_chart->parsed()) {
      report = cli::cmd_chartable();
    } else if (c_dec->parsed()) {
      report = cli::cmd_decompose(dec);
    } else if (c_atlas->parsed()) {
      at.data = data_path;
      report = cli::cmd_atlas(at);
    } else if (c_rep->parsed()) {
      report = cli::cmd_reproduce(target, data_path);
    }
    std::cout << report.render(fmt);
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
