#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "simdim/io.hpp"
#include "simdim/products.hpp"
#include "simdim/resolving.hpp"
#include "simdim/verify.hpp"

namespace {

using namespace simdim;

int exit_code_for(const Error& e) {
  switch (e.kind) {
    case Error::unsupported_metric: return 3;
    case Error::budget_exceeded: return 4;
    default: return 2;  // parse, IO, bad parameters, capacity
  }
}

MetricSelector parse_metric(const std::string& text) {
  if (text == "full") return MetricSelector::Full();
  if (text == "adj") return MetricSelector::Adjacency();
  if (text.rfind("t=", 0) == 0) {
    try {
      size_t pos;
      int t = std::stoi(text.substr(2), &pos);
      if (pos == text.size() - 2) return MetricSelector::Truncated(t);
    } catch (const std::exception&) {
    }
  }
  throw Error(Error::invalid_parameter, "metric must be full, adj or t=<k>, got " + text);
}

struct Options {
  std::string file, file2, out;
  std::string metric = "full";
  std::string variant = "gamma";
  std::string op;
  std::string basis = "auto";
  std::string mode = "relabel";
  uint64_t seed = 0;
  uint64_t budget = SolverOptions{}.budget;
  int count = 5;
};

int run_dim(const Options& o, bool family) {
  MetricSelector m = parse_metric(o.metric);
  SolverOptions solver{o.budget};
  GraphFamily f = family ? family_from_file(o.file) : family_of({parse_graph_file(o.file)});
  MinResult r = min_generator(f, m, solver);
  std::cout << (family ? "sdim=" : "dim=") << r.k
            << " basis=" << format_set(f.members.front(), r.witness) << "\n";
  return 0;
}

int run_gamma(const Options& o) {
  SolverOptions solver{o.budget};
  if (o.variant == "sgamma") {
    GraphFamily f = family_from_file(o.file);
    std::cout << "sgamma=" << simultaneous_domination_number(f, solver) << "\n";
    return 0;
  }
  Graph g = parse_graph_file(o.file);
  if (o.variant == "gamma")
    std::cout << "gamma=" << domination_number(g, solver) << "\n";
  else if (o.variant == "gamma-prime")
    std::cout << "gamma-prime=" << gamma_prime(g, solver) << "\n";
  else
    throw Error(Error::invalid_parameter, "variant must be gamma, sgamma or gamma-prime");
  return 0;
}

int run_product(const Options& o) {
  GraphFamily gs = family_from_file(o.file);
  GraphFamily hs = family_from_file(o.file2);
  GraphFamily p;
  if (o.op == "corona")
    p = family_corona(gs, hs);
  else if (o.op == "join")
    p = family_join(gs, hs);
  else
    throw Error(Error::invalid_parameter, "op must be corona or join");
  write_family_file(o.out, p.members);
  return 0;
}

int run_family_gen(const Options& o) {
  Graph g = parse_graph_file(o.file);
  VertexSet b;
  if (o.basis == "auto")
    b = min_generator(family_of({g}), MetricSelector::Adjacency(), SolverOptions{o.budget})
            .witness;
  else
    b = parse_label_set(g, o.basis);
  SampleMode mode;
  if (o.mode == "relabel")
    mode = SampleMode::relabel;
  else if (o.mode == "free-outside")
    mode = SampleMode::free_outside;
  else
    throw Error(Error::invalid_parameter, "mode must be relabel or free-outside");
  GraphFamily fam = sample_members(g, b, mode, o.seed, o.count);
  write_family_file(o.out, fam.members);
  return 0;
}

int run_verify(const Options& o) {
  SuiteResult res = run_suite(o.file, SolverOptions{o.budget});
  for (const VerificationReport& r : res.reports) std::cout << format_report_line(r) << "\n";
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact metric/adjacency dimension toolkit for graph families"};
  app.require_subcommand(1);
  Options o;

  CLI::App* dim = app.add_subcommand("dim", "dimension of a single graph");
  dim->add_option("file", o.file, "graph file")->required();
  dim->add_option("--metric", o.metric, "full, adj or t=<k>");
  dim->add_option("--budget", o.budget, "candidate-check budget");

  CLI::App* sdim = app.add_subcommand("sdim", "simultaneous dimension of a family");
  sdim->add_option("file", o.file, "family file")->required();
  sdim->add_option("--metric", o.metric, "full, adj or t=<k>");
  sdim->add_option("--budget", o.budget, "candidate-check budget");

  CLI::App* gamma = app.add_subcommand("gamma", "domination numbers");
  gamma->add_option("file", o.file, "graph or family file")->required();
  gamma->add_option("--variant", o.variant, "gamma, sgamma or gamma-prime");
  gamma->add_option("--budget", o.budget, "candidate-check budget");

  CLI::App* product = app.add_subcommand("product", "corona or join of two inputs");
  product->add_option("fileG", o.file, "first factor file")->required();
  product->add_option("fileH", o.file2, "second factor file")->required();
  product->add_option("--op", o.op, "corona or join")->required();
  product->add_option("--out", o.out, "output family file")->required();

  CLI::App* family = app.add_subcommand("family", "permutation-generated families");
  CLI::App* gen = family->add_subcommand("gen", "sample members anchored at a vertex set");
  gen->add_option("file", o.file, "base graph file")->required();
  gen->add_option("--basis", o.basis, "auto or a label set like 1,3,7");
  gen->add_option("--mode", o.mode, "relabel or free-outside");
  gen->add_option("--seed", o.seed, "sampling seed");
  gen->add_option("--count", o.count, "number of members");
  gen->add_option("--out", o.out, "output family file")->required();
  family->require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a scenario suite");
  verify->add_option("file", o.file, "suite config file")->required();
  verify->add_option("--budget", o.budget, "candidate-check budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*dim) return run_dim(o, false);
    if (*sdim) return run_dim(o, true);
    if (*gamma) return run_gamma(o);
    if (*product) return run_product(o);
    if (*family) return *gen ? run_family_gen(o) : 2;
    if (*verify) return run_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
