#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sperner_cli.hpp"

namespace {

int default_workers() {
  if (const char *env = std::getenv("SPERNER_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception &) {
    }
    std::cerr << "warning: ignoring SPERNER_WORKERS='" << env << "'\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int main(int argc, char **argv) {
  using sperner::cli::Format;
  sperner::cli::RunConfig cfg;
  cfg.workers = default_workers();

  CLI::App app{"Squashed order, shadows, cascade bounds and exhaustive checks on cross-intersecting antichains"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (default: $SPERNER_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized probes")->capture_default_str();

  auto *order = app.add_subcommand("order", "List k-subsets in squashed order");
  order->add_option("action", cfg.target, "list")->required()->check(CLI::IsMember({"list"}));
  order->add_option("n", cfg.n, "Ground size")->required();
  order->add_option("k", cfg.k, "Rank")->required();
  auto *first = order->add_option("--first", cfg.first, "Only the first m sets");
  order->add_option("--last", cfg.last, "Only the last m sets")->excludes(first);

  for (const char *op : {"shadow", "shade", "new-shadow", "new-shade"}) {
    auto *sub = app.add_subcommand(op, std::string("Compute the ") + op + " of a uniform family");
    sub->add_option("--family", cfg.family_path, "Family file")->required();
  }

  auto *casc = app.add_subcommand("cascade", "k-binomial representation of m and its shadow bound");
  casc->add_option("m", cfg.m, "Family size")->required();
  casc->add_option("k", cfg.k, "Rank")->required();

  auto *t1 = app.add_subcommand("table1", "Shade of final segments of the middle level");
  t1->add_option("--n", cfg.n, "Even ground size (default 4)");

  auto *lem = app.add_subcommand("lemmas", "Exact sweeps of the difference-calculus lemmas");
  lem->add_option("action", cfg.target, "check")->required()->check(CLI::IsMember({"check"}));
  lem->add_option("--id", cfg.lemma_id, "Lemma id, e.g. 3.6");
  lem->add_option("--max", cfg.max, "Sweep bound (default per lemma)");

  auto *norm = app.add_subcommand("normalize", "Push a family into the middle band");
  norm->add_option("--family", cfg.family_path, "Family file")->required();
  norm->add_option("--partner", cfg.partner_path, "Cross-intersecting partner family file");
  norm->add_option("--mode", cfg.mode, "Band: even or odd (default by parity of n)")
      ->check(CLI::IsMember({"even", "odd"}));

  auto *ver = app.add_subcommand("verify", "Exhaustive verification");
  ver->add_option("target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"theorem-1.4", "theorem-1.5", "theorem-1.6", "lemma-3.15"}));
  ver->add_option("--n", cfg.n, "Ground size");
  ver->add_flag("--long", cfg.allow_long, "Allow n = 6 (ranks 3,4 only)");
  ver->add_flag("--all-pairs", cfg.all_pairs, "List raw ordered pairs instead of isomorphism classes");
  ver->add_option("--budget", cfg.budget_seconds, "Wall-clock budget in seconds (0: none)")
      ->check(CLI::NonNegativeNumber);

  auto *sw = app.add_subcommand("sweep", "Inequality sweeps");
  sw->add_option("target", cfg.target)
      ->required()
      ->check(CLI::IsMember({"lemma-3.8", "lemma-3.14", "kkt", "lemma-1.9", "theorem-1.14", "normalization"}));
  sw->add_option("--max-n", cfg.max_n, "Largest ground size");
  sw->add_option("--n", cfg.n, "Ground size (normalization)");
  sw->add_option("--trials", cfg.trials, "Random trials per level")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(sperner::cli::Exit::usage);
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return sperner::cli::dispatch(cfg, std::cout, std::cerr);
}
