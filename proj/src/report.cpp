#include "dcr/report.hpp"

#include "dcr/error.hpp"

namespace dcr {

using nlohmann::json;

namespace {

json hops_json(Hops h) {
  if (h.is_infinite()) return "inf";
  return h.count();
}

json header(const char* command, const InstanceFile& file, const Instance& inst) {
  json doc;
  doc["command"] = command;
  doc["digest"] = "sha256:" + digest(file);
  doc["mode"] = std::string(to_string(inst.mode));
  doc["instance"] = {{"nodes", inst.graph.node_count()},
                     {"links", inst.graph.link_count()},
                     {"diameter", inst.diameter},
                     {"source", inst.source.value},
                     {"target", inst.target.value}};
  return doc;
}

}  // namespace

json value_json(const Prob& value) {
  switch (value.mode()) {
    case Mode::Float:
      return value.as_double();
    case Mode::Rational:
      return value.as_rational().get_str();
    case Mode::Poly: {
      json coefficients = json::array();
      for (const auto& c : value.as_polynomial().coefficients()) coefficients.push_back(c.get_str());
      return coefficients;
    }
  }
  return nullptr;
}

json stats_json(const FactorStats& stats) {
  json reductions = json::object();
  for (const auto& [kind, count] : stats.reductions) reductions[std::string(to_string(kind))] = count;
  return {{"calls", stats.calls},
          {"perfect_path_leaves", stats.perfect_path_leaves},
          {"too_far_leaves", stats.too_far_leaves},
          {"links_pruned", stats.links_pruned},
          {"zero_links_deleted", stats.zero_links_deleted},
          {"max_depth", stats.max_depth_reached},
          {"reductions", reductions}};
}

json step_json(const ReductionStep& step) {
  json nodes = json::array(), links = json::array();
  for (NodeId v : step.nodes) nodes.push_back(v.value);
  for (LinkId e : step.links) links.push_back(e.value);
  return {{"kind", std::string(to_string(step.kind))},
          {"nodes", nodes},
          {"links", links},
          {"multiplier", value_json(step.multiplier)},
          {"diameter_delta", step.diameter_delta},
          {"depth", step.depth}};
}

json certificate_json(const Graph& g, const IrrelevanceCertificate& c) {
  const Link& l = g.link(c.link);
  return {{"link", c.link.value},
          {"endpoints", {l.u.value, l.v.value}},
          {"condition", std::string(to_string(c.condition))},
          {"forward_sum", hops_json(c.forward_sum)},
          {"backward_sum", hops_json(c.backward_sum)}};
}

json compute_document(const InstanceFile& file, const ComputeOptions& options) {
  std::string method = options.method;
  IrrelevanceLevel level = options.irrelevance;
  if (method == "auto") {
    method = "ip5m";
    level = IrrelevanceLevel::C3;
  }
  if (method != "ip5m" && method != "oracle" && method != "incl-excl" && method != "mc")
    throw InvalidArgument("unknown method '" + method + "'");

  Mode mode = options.mode.value_or(method == "mc" ? Mode::Float : natural_mode(file));
  if (method == "mc" && mode != Mode::Float)
    throw InvalidArgument("method mc requires float mode");
  Instance inst = to_instance(file, mode, options.p_value);

  json doc = header("compute", file, inst);
  doc["method"] = method;
  doc["prng"] = {{"algorithm", std::string(kMonteCarloPrng)}, {"seed", options.seed}};
  if (options.p_value) doc["p"] = options.p_value->get_str();

  if (method == "ip5m") {
    FactorConfig cfg;
    cfg.pivot = options.pivot;
    cfg.seed = options.seed;
    cfg.irrelevance = level;
    cfg.trace_limit = options.trace ? options.trace_limit : 0;
    FactorResult result = ip5m(inst, cfg);
    doc["irrelevance"] = std::string(to_string(level));
    doc["pivot"] = std::string(to_string(options.pivot));
    doc["value"] = value_json(result.value);
    doc["value_text"] = result.value.to_string();
    doc["stats"] = stats_json(result.stats);
    json certificates = json::array();
    for (const auto& c : prune_irrelevant(inst, level).second)
      certificates.push_back(certificate_json(inst.graph, c));
    doc["certificates"] = certificates;
    if (options.trace) {
      json trace = json::array();
      for (const auto& step : result.trace) trace.push_back(step_json(step));
      doc["trace"] = trace;
      doc["trace_truncated"] = result.trace_truncated;
    }
  } else if (method == "oracle") {
    Prob value = dcr_bruteforce(inst, options.limits);
    doc["value"] = value_json(value);
    doc["value_text"] = value.to_string();
    doc["stats"] = {{"states", std::uint64_t{1} << inst.graph.link_count()}};
  } else if (method == "incl-excl") {
    Prob value = dcr_inclusion_exclusion(inst, options.limits);
    doc["value"] = value_json(value);
    doc["value_text"] = value.to_string();
    doc["stats"] = {{"minpaths", enumerate_minpaths(inst).size()}};
  } else {
    MonteCarloEstimate mc = monte_carlo_estimate(inst, options.samples, options.seed);
    doc["value"] = mc.estimate;
    doc["value_text"] = format_double(mc.estimate);
    doc["std_error"] = mc.std_error;
    doc["stats"] = {{"samples", mc.samples}};
  }
  return doc;
}

json irrelevant_document(const InstanceFile& file, IrrelevanceLevel condition) {
  if (condition == IrrelevanceLevel::Off) throw InvalidArgument("condition must be c1, c2, c3 or oracle");
  Instance inst = to_instance(file, natural_mode(file), std::nullopt);
  json doc = header("irrelevant", file, inst);
  doc["condition"] = std::string(to_string(condition));
  json links = json::array(), flagged = json::array();
  for (LinkId e : inst.graph.links()) {
    const Link& l = inst.graph.link(e);
    json entry = {{"link", e.value}, {"endpoints", {l.u.value, l.v.value}}};
    if (auto c = check_link(inst, e, condition)) {
      entry["status"] = "irrelevant";
      entry["forward_sum"] = hops_json(c->forward_sum);
      entry["backward_sum"] = hops_json(c->backward_sum);
      flagged.push_back(e.value);
    } else {
      entry["status"] = condition == IrrelevanceLevel::Oracle ? "relevant" : "unknown";
    }
    links.push_back(entry);
  }
  doc["links"] = links;
  doc["flagged"] = flagged;
  return doc;
}

json reduce_document(const InstanceFile& file, IrrelevanceLevel prune_first) {
  Instance inst = to_instance(file, natural_mode(file), std::nullopt);
  json doc = header("reduce", file, inst);
  auto [pruned, certificates] = prune_irrelevant(inst, prune_first);
  ReducedForm form = apply_5p(pruned);

  json certs = json::array();
  for (const auto& c : certificates) certs.push_back(certificate_json(inst.graph, c));
  json trace = json::array();
  for (const auto& step : form.trace) trace.push_back(step_json(step));
  std::vector<NodeId> node_map;
  InstanceFile reduced = from_instance(form.instance, &node_map);
  json map = json::array();
  for (NodeId v : node_map) map.push_back(v.value);

  doc["irrelevance"] = std::string(to_string(prune_first));
  doc["certificates"] = certs;
  doc["multiplier"] = value_json(form.multiplier);
  doc["multiplier_text"] = form.multiplier.to_string();
  doc["reduced"] = {{"text", to_text(reduced)},
                    {"node_map", map},
                    {"nodes", form.instance.graph.node_count()},
                    {"links", form.instance.graph.link_count()},
                    {"diameter", form.instance.diameter}};
  doc["trace"] = trace;
  return doc;
}

std::string serialize(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace dcr
