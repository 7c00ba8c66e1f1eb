#include "dcr/dcr.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "dcr/error.hpp"
#include "dcr/generators.hpp"
#include "dcr/instance_file.hpp"
#include "dcr/report.hpp"

struct dcr_instance {
  dcr::InstanceFile file;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Body>
dcr_status guarded(Body&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return DCR_OK;
  } catch (const dcr::ParseError& err) {
    last_line = err.line();
    last_column = err.column();
    last_error = err.what();
    return DCR_ERROR_PARSE;
  } catch (const dcr::ResourceLimit& err) {
    last_error = err.what();
    return DCR_ERROR_RESOURCE_LIMIT;
  } catch (const dcr::InvalidArgument& err) {
    last_error = err.what();
    return DCR_ERROR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& err) {
    last_error = err.what();
    return DCR_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& err) {
    last_error = err.what();
    return DCR_ERROR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DCR_ERROR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw dcr::InvalidArgument(what);
}

}  // namespace

extern "C" {

const char* dcr_version(void) { return "1.0.0"; }
const char* dcr_last_error(void) { return last_error.c_str(); }
size_t dcr_last_error_line(void) { return last_line; }
size_t dcr_last_error_column(void) { return last_column; }

void dcr_free(char* text) { std::free(text); }

dcr_status dcr_instance_parse(const char* text, dcr_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new dcr_instance{dcr::parse_instance_file(text)};
  });
}

dcr_status dcr_instance_load(const char* path, dcr_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new dcr_instance{dcr::load_instance_file(path)};
  });
}

void dcr_instance_destroy(dcr_instance* inst) { delete inst; }

dcr_status dcr_instance_text(const dcr_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = copy_out(dcr::to_text(inst->file));
  });
}

size_t dcr_instance_node_count(const dcr_instance* inst) { return inst ? inst->file.nodes : 0; }
size_t dcr_instance_link_count(const dcr_instance* inst) { return inst ? inst->file.links.size() : 0; }
int dcr_instance_diameter(const dcr_instance* inst) { return inst ? inst->file.diameter : 0; }

void dcr_compute_options_init(dcr_compute_options* options) {
  if (!options) return;
  *options = dcr_compute_options{};
  options->method = "auto";
  options->irrelevance = "c3";
  options->pivot = "random";
  options->seed = dcr::kDefaultSeed;
  options->samples = 1'000'000;
}

dcr_status dcr_compute(const dcr_instance* inst, const dcr_compute_options* options,
                       char** json_out) {
  return guarded([&] {
    require(inst && json_out, "null argument");
    dcr_compute_options defaults;
    dcr_compute_options_init(&defaults);
    const dcr_compute_options& in = options ? *options : defaults;

    dcr::ComputeOptions opts;
    opts.method = in.method ? in.method : "auto";
    if (in.mode) opts.mode = dcr::parse_mode(in.mode);
    if (in.irrelevance) opts.irrelevance = dcr::parse_irrelevance_level(in.irrelevance);
    if (opts.irrelevance == dcr::IrrelevanceLevel::Oracle)
      throw dcr::InvalidArgument("irrelevance level must be c1, c2, c3 or off");
    if (in.pivot) opts.pivot = dcr::parse_pivot_policy(in.pivot);
    if (in.p_value) opts.p_value = dcr::parse_rational(in.p_value);
    opts.seed = in.seed;
    require(in.samples >= 1, "samples must be positive");
    opts.samples = in.samples;
    opts.trace = in.trace != 0;
    if (in.max_states) {
      std::size_t links = 0;
      while (links < 63 && (std::uint64_t{1} << (links + 1)) <= in.max_states) ++links;
      opts.limits.max_links = links;
    }
    *json_out = copy_out(dcr::serialize(dcr::compute_document(inst->file, opts)));
  });
}

dcr_status dcr_irrelevant(const dcr_instance* inst, const char* condition, char** json_out) {
  return guarded([&] {
    require(inst && json_out, "null argument");
    auto level = dcr::parse_irrelevance_level(condition ? condition : "c3");
    *json_out = copy_out(dcr::serialize(dcr::irrelevant_document(inst->file, level)));
  });
}

dcr_status dcr_reduce(const dcr_instance* inst, const char* irrelevance, char** json_out) {
  return guarded([&] {
    require(inst && json_out, "null argument");
    auto level = dcr::parse_irrelevance_level(irrelevance ? irrelevance : "c3");
    *json_out = copy_out(dcr::serialize(dcr::reduce_document(inst->file, level)));
  });
}

void dcr_generate_options_init(dcr_generate_options* options) {
  if (!options) return;
  *options = dcr_generate_options{};
  options->family = "figred";
}

dcr_status dcr_generate(const dcr_generate_options* options, char** text_out) {
  return guarded([&] {
    require(options && text_out && options->family, "null argument");
    dcr::GenerateOptions opts;
    opts.family = options->family;
    opts.n = options->n;
    opts.rows = options->rows;
    opts.cols = options->cols;
    if (options->diameter != 0) opts.diameter = options->diameter;
    if (options->p) opts.reliability = options->p;
    if (options->bipartite) opts.bipartite = options->bipartite;
    if (options->outer) opts.outer = options->outer;
    if (options->inner) opts.inner = options->inner;
    *text_out = copy_out(dcr::to_text(dcr::generate(opts)));
  });
}

}  // extern "C"
