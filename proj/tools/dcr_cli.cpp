// dcr: command-line front end over the C API.
//
//   dcr compute    INSTANCE [--method ...] [--mode ...] [--trace] [--output FILE]
//   dcr irrelevant INSTANCE [--condition c1|c2|c3|oracle]
//   dcr reduce     INSTANCE [--irrelevance c1|c2|c3|off]
//   dcr generate   --family FAMILY [parameters]
//
// Exit codes: 0 success, 1 internal error, 2 invalid input or parameters,
// 3 resource limit.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dcr/dcr.h"

namespace {

int exit_code(dcr_status status) {
  switch (status) {
    case DCR_OK:
      return 0;
    case DCR_ERROR_PARSE:
    case DCR_ERROR_INVALID_ARGUMENT:
      return 2;
    case DCR_ERROR_RESOURCE_LIMIT:
      return 3;
    case DCR_ERROR_INTERNAL:
      return 1;
  }
  return 1;
}

int report_failure(dcr_status status, const std::string& context) {
  std::cerr << "dcr: " << context << ": " << dcr_last_error() << "\n";
  return exit_code(status);
}

struct Instance {
  dcr_instance* handle = nullptr;
  ~Instance() { dcr_instance_destroy(handle); }
};

/// Writes `text` to `path`, or stdout when path is empty, then frees it.
int emit(char* text, const std::string& path) {
  std::string body(text);
  dcr_free(text);
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "dcr: cannot write '" << path << "'\n";
    return 2;
  }
  out << body;
  return 0;
}

int load(const std::string& path, Instance& inst) {
  dcr_status status = dcr_instance_load(path.c_str(), &inst.handle);
  if (status == DCR_OK) return 0;
  if (status == DCR_ERROR_PARSE)
    std::cerr << "dcr: " << path << ":" << dcr_last_error_line() << ":" << dcr_last_error_column()
              << ": " << dcr_last_error() << "\n";
  else
    std::cerr << "dcr: " << path << ": " << dcr_last_error() << "\n";
  return exit_code(status);
}

std::uint64_t max_states_from_env() {
  const char* raw = std::getenv("DCR_MAX_STATES");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    std::cerr << "dcr: ignoring malformed DCR_MAX_STATES='" << raw << "'\n";
    return 0;
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diameter-constrained two-terminal reliability"};
  app.require_subcommand(1);

  std::string input, output;

  dcr_compute_options compute_opts;
  dcr_compute_options_init(&compute_opts);
  std::string method = "auto", irrelevance = "c3", pivot = "random";
  std::optional<std::string> mode, p_value;
  bool trace = false;
  auto* compute = app.add_subcommand("compute", "Compute the reliability of an instance");
  compute->add_option("input", input, "Instance file")->required();
  compute->add_option("--method", method, "auto|ip5m|oracle|incl-excl|mc")
      ->check(CLI::IsMember({"auto", "ip5m", "oracle", "incl-excl", "mc"}));
  compute->add_option("--mode", mode, "float|rational|poly")
      ->check(CLI::IsMember({"float", "rational", "poly"}));
  compute->add_option("--irrelevance", irrelevance, "c1|c2|c3|off")
      ->check(CLI::IsMember({"c1", "c2", "c3", "off"}));
  compute->add_option("--pivot", pivot, "random|first|maxdeg")
      ->check(CLI::IsMember({"random", "first", "maxdeg"}));
  compute->add_option("--seed", compute_opts.seed, "PRNG seed for random pivots and sampling");
  compute->add_option("--samples", compute_opts.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  compute->add_option("--p", p_value, "Value substituted for the symbol p");
  compute->add_flag("--trace", trace, "Include the reduction and pivot trace");
  compute->add_option("--output,-o", output, "Write the result document here");

  std::string condition = "c3";
  auto* irrelevant = app.add_subcommand("irrelevant", "Certify irrelevant links");
  irrelevant->add_option("input", input, "Instance file")->required();
  irrelevant->add_option("--condition", condition, "c1|c2|c3|oracle")
      ->check(CLI::IsMember({"c1", "c2", "c3", "oracle"}));
  irrelevant->add_option("--output,-o", output, "Write the result document here");

  std::string reduce_level = "c3";
  auto* reduce = app.add_subcommand("reduce", "Prune irrelevant links and apply the reductions");
  reduce->add_option("input", input, "Instance file")->required();
  reduce->add_option("--irrelevance", reduce_level, "c1|c2|c3|off")
      ->check(CLI::IsMember({"c1", "c2", "c3", "off"}));
  reduce->add_option("--output,-o", output, "Write the result document here");

  dcr_generate_options gen_opts;
  dcr_generate_options_init(&gen_opts);
  std::string family;
  std::optional<std::string> gen_p;
  std::string bipartite = "cycle:6", outer = "cycle:3", inner = "cycle:4";
  auto* generate = app.add_subcommand("generate", "Emit an instance file from a graph family");
  generate->add_option("--family", family, "Graph family")
      ->required()
      ->check(CLI::IsMember(
          {"path", "cycle", "complete", "grid", "cancela-petingi", "replacement", "figred"}));
  generate->add_option("--n", gen_opts.n, "Node count (path, cycle, complete)");
  generate->add_option("--rows", gen_opts.rows, "Grid rows");
  generate->add_option("--cols", gen_opts.cols, "Grid columns");
  generate->add_option("--d", gen_opts.diameter, "Diameter (default: family specific)");
  generate->add_option("--p", gen_p, "Reliability of imperfect links (p, 1/2, 0.9, ...)");
  generate->add_option("--bipartite", bipartite, "cancela-petingi core: cycle:2k, complete:a,b, edge");
  generate->add_option("--outer", outer, "replacement outer graph, family:n");
  generate->add_option("--inner", inner, "replacement inner graph, family:n");
  generate->add_option("--output,-o", output, "Write the instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  char* text = nullptr;
  if (*generate) {
    gen_opts.family = family.c_str();
    gen_opts.p = gen_p ? gen_p->c_str() : nullptr;
    gen_opts.bipartite = bipartite.c_str();
    gen_opts.outer = outer.c_str();
    gen_opts.inner = inner.c_str();
    dcr_status status = dcr_generate(&gen_opts, &text);
    if (status != DCR_OK) return report_failure(status, "generate");
    return emit(text, output);
  }

  Instance inst;
  if (int code = load(input, inst)) return code;

  dcr_status status = DCR_OK;
  if (*compute) {
    compute_opts.method = method.c_str();
    compute_opts.mode = mode ? mode->c_str() : nullptr;
    compute_opts.irrelevance = irrelevance.c_str();
    compute_opts.pivot = pivot.c_str();
    compute_opts.p_value = p_value ? p_value->c_str() : nullptr;
    compute_opts.trace = trace ? 1 : 0;
    compute_opts.max_states = max_states_from_env();
    status = dcr_compute(inst.handle, &compute_opts, &text);
  } else if (*irrelevant) {
    status = dcr_irrelevant(inst.handle, condition.c_str(), &text);
  } else {
    status = dcr_reduce(inst.handle, reduce_level.c_str(), &text);
  }
  if (status != DCR_OK) return report_failure(status, input);
  return emit(text, output);
}
