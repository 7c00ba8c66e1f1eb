#include "dcr/generators.hpp"

#include <charconv>
#include <utility>

#include "dcr/composition.hpp"
#include "dcr/error.hpp"

namespace dcr {

namespace {

struct Shape {
  Graph graph;
  NodeId source, target;
};

Polynomial reliability_value(const std::string& text) {
  Polynomial value;
  try {
    value = parse_polynomial(text);
  } catch (const std::invalid_argument& err) {
    throw InvalidArgument("bad reliability '" + text + "': " + err.what());
  }
  if (value.degree() < 1 && (value.evaluate(Rational(0)) < 0 || value.evaluate(Rational(0)) > 1))
    throw InvalidArgument("reliability '" + text + "' outside [0,1]");
  return value;
}

Shape make_shape(const std::string& family, int n, int rows, int cols, const Prob& r) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(family + ": " + what);
  };
  Shape out;
  if (family == "path") {
    need(n >= 2, "needs n >= 2");
    out.graph = Graph(n);
    for (int i = 0; i + 1 < n; ++i) out.graph.add_link(NodeId(i), NodeId(i + 1), r);
    out.source = NodeId{0};
    out.target = NodeId(n - 1);
  } else if (family == "cycle") {
    need(n >= 3, "needs n >= 3");
    out.graph = Graph(n);
    for (int i = 0; i < n; ++i) out.graph.add_link(NodeId(i), NodeId((i + 1) % n), r);
    out.source = NodeId{0};
    out.target = NodeId(n / 2);
  } else if (family == "complete") {
    need(n >= 2, "needs n >= 2");
    out.graph = Graph(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.graph.add_link(NodeId(i), NodeId(j), r);
    out.source = NodeId{0};
    out.target = NodeId(n - 1);
  } else if (family == "grid") {
    need(rows >= 1 && cols >= 1 && rows * cols >= 2, "needs rows*cols >= 2");
    out.graph = Graph(rows * cols);
    auto at = [&](int i, int j) { return NodeId(i * cols + j); };
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (j + 1 < cols) out.graph.add_link(at(i, j), at(i, j + 1), r);
        if (i + 1 < rows) out.graph.add_link(at(i, j), at(i + 1, j), r);
      }
    out.source = at(0, 0);
    out.target = at(rows - 1, cols - 1);
  } else {
    throw InvalidArgument("unknown graph family '" + family + "'");
  }
  return out;
}

/// `family:n` as used by the replacement generator.
std::pair<std::string, int> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("expected family:n, got '" + spec + "'");
  int n = 0;
  const char* first = spec.data() + colon + 1;
  const char* last = spec.data() + spec.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) throw InvalidArgument("bad size in '" + spec + "'");
  return {spec.substr(0, colon), n};
}

BipartiteGraph bipartite_core(const std::string& spec) {
  BipartiteGraph b;
  if (spec == "edge") {
    b.graph = Graph(2);
    b.graph.add_link(NodeId{0}, NodeId{1}, Prob::one(Mode::Rational));
    b.side = {false, true};
    return b;
  }
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  if (family == "cycle") {
    auto [_, n] = split_spec(spec);
    if (n < 4 || n % 2 != 0) throw InvalidArgument("bipartite cycle needs an even length >= 4");
    // a_1..a_k are even positions, b_1..b_k odd positions
    b.graph = Graph(n);
    for (int i = 0; i < n; ++i) {
      b.graph.add_link(NodeId(i), NodeId((i + 1) % n), Prob::one(Mode::Rational));
      b.side.push_back(i % 2 == 1);
    }
    return b;
  }
  if (family == "complete" && colon != std::string::npos) {
    auto comma = spec.find(',', colon);
    if (comma == std::string::npos) throw InvalidArgument("expected complete:a,b");
    int a = std::stoi(spec.substr(colon + 1, comma - colon - 1));
    int c = std::stoi(spec.substr(comma + 1));
    if (a < 1 || c < 1) throw InvalidArgument("complete bipartite parts must be nonempty");
    b.graph = Graph(a + c);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < c; ++j) b.graph.add_link(NodeId(i), NodeId(a + j), Prob::one(Mode::Rational));
    for (int i = 0; i < a + c; ++i) b.side.push_back(i >= a);
    return b;
  }
  throw InvalidArgument("unknown bipartite core '" + spec + "'");
}

}  // namespace

InstanceFile figred(const std::string& reliability) {
  InstanceFile file;
  file.nodes = 8;
  file.diameter = 6;
  file.source = 0;
  file.target = 7;
  Polynomial r = reliability_value(reliability);
  const std::pair<std::uint32_t, std::uint32_t> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                                           {5, 6}, {6, 7}, {1, 4}, {1, 7}};
  for (auto [u, v] : edges) file.links.push_back({u, v, r});
  return file;
}

InstanceFile generate(const GenerateOptions& options) {
  const std::string& family = options.family;
  if (family == "figred") {
    InstanceFile file = figred(options.reliability.value_or("p"));
    if (options.diameter) {
      if (*options.diameter < 1) throw InvalidArgument("diameter must be >= 1");
      file.diameter = *options.diameter;
    }
    return file;
  }

  // Build in poly mode so symbolic and numeric values share one carrier.
  Polynomial r = reliability_value(options.reliability.value_or(
      family == "cancela-petingi" ? "1/2" : "p"));
  const Prob value(r);

  if (family == "cancela-petingi") {
    if (!options.diameter) throw InvalidArgument("cancela-petingi needs a diameter (>= 3)");
    Instance inst = cancela_petingi(bipartite_core(options.bipartite), *options.diameter, Mode::Rational);
    InstanceFile file = from_instance(inst);
    for (auto& e : file.links)
      if (!e.reliability.is_constant(1)) e.reliability = r;
    file.diameter = *options.diameter;
    return file;
  }

  Shape shape;
  if (family == "replacement") {
    auto [outer_family, outer_n] = split_spec(options.outer);
    auto [inner_family, inner_n] = split_spec(options.inner);
    Shape outer = make_shape(outer_family, outer_n, 0, 0, value);
    Shape inner = make_shape(inner_family, inner_n, 0, 0, value);
    shape.graph = replace_all(outer.graph, inner.graph, inner.source, inner.target);
    shape.source = outer.source;
    shape.target = outer.target;
  } else {
    shape = make_shape(family, options.n, options.rows, options.cols, value);
  }

  int d = static_cast<int>(shape.graph.node_count()) - 1;
  if (options.diameter) {
    if (*options.diameter < 1) throw InvalidArgument("diameter must be >= 1");
    d = *options.diameter;
  }
  Instance inst{std::move(shape.graph), shape.source, shape.target, d, Mode::Poly};
  return from_instance(inst);
}

}  // namespace dcr
