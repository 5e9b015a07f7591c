#include <CLI11.hpp>

#include <iostream>

#include "cli.hpp"
#include "rps/error.hpp"

namespace {

enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kInvariant = 3, kConflict = 4 };

}  // namespace

int main(int argc, char** argv) {
  rpscli::GlobalOptions g;
  CLI::App app{"Random permutation set fusion toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--lambda", g.lambda, "dispersion factor of the ranked probability transformation, in [0,1)")
      ->check([](const std::string& s) -> std::string {
        double v = 0;
        try {
          v = std::stod(s);
        } catch (...) {
          return "not a number";
        }
        return v >= 0.0 && v < 1.0 ? "" : "must satisfy 0 <= lambda < 1";
      });
  app.add_option("--seed", g.seed, "seed of the fold split");
  app.add_option("--folds", g.folds, "cross-validation folds")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  app.add_option("--out", g.out, "write the result to this file");
  app.add_flag("--force", g.force, "overwrite an existing --out file");
  app.add_flag("-v,--verbose", g.verbose, "progress on stderr");
  app.add_flag("--json", g.json, "print JSON instead of tables");

  rpscli::TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "BPA JSON to RPS and its ranked probabilities");
  transform->add_option("bpa", ta.input, "mass function JSON file")->required();

  rpscli::FuseArgs fa;
  auto* fuse = app.add_subcommand("fuse", "combine RPS JSON files with orthogonal sums");
  fuse->add_option("inputs", fa.inputs, "RPS JSON files, fused first to last")->required()->expected(2, -1);
  fuse->add_option("--order", fa.order, "left keeps the earlier order, right the later")
      ->check(CLI::IsMember({"left", "right"}));
  fuse->add_option("--reliability", fa.reliability, "reliability report; discounts input i by R_i");

  rpscli::ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "k-fold cross-validation on a CSV dataset");
  classify->add_option("dataset", ca.dataset, "CSV file with a header row")->required();
  classify->add_option("--label-column", ca.label_column, "label column name or 0-based index (default last)");
  classify->add_option("--method", ca.method, "rps or dempster")->check(CLI::IsMember({"rps", "dempster"}));

  rpscli::ReliabilityArgs ra;
  auto* reliability = app.add_subcommand("reliability", "source reliabilities from BPAs or a dataset");
  reliability->add_option("bpas", ra.inputs, "one JSON file per source (a BPA or an array of BPAs)");
  reliability->add_option("--truth", ra.truth, "true labels, comma separated, one per sample (a single label applies to all)")
      ->delimiter(',')
      ->allow_extra_args(false);
  reliability->add_option("--dataset", ra.dataset, "CSV file; every feature is a source");
  reliability->add_option("--label-column", ra.label_column, "label column name or 0-based index");

  auto* examples = app.add_subcommand("examples", "worked examples, distance checks and reliability sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*transform) return rpscli::cmd_transform(g, ta, std::cout, std::cerr);
    if (*fuse) return rpscli::cmd_fuse(g, fa, std::cout, std::cerr);
    if (*classify) return rpscli::cmd_classify(g, ca, std::cout, std::cerr);
    if (*reliability) return rpscli::cmd_reliability(g, ra, std::cout, std::cerr);
    if (*examples) return rpscli::cmd_examples(g, std::cout, std::cerr);
  } catch (const rps::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const rps::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const rps::ConflictError& e) {
    std::cerr << "total conflict (K = " << rpscli::num(e.conflict()) << "): " << e.what() << '\n';
    return kConflict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
