#include "dcr/instance_file.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dcr/error.hpp"

namespace dcr {

bool InstanceFile::symbolic() const {
  for (const auto& e : links)
    if (e.reliability.degree() >= 1) return true;
  return false;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <typename Int>
Int parse_int(const Token& tok, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" +
                                           std::string(tok.text) + "'");
  return value;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  InstanceFile file;
  std::size_t line_no = 0;
  std::size_t declared_links = 0;
  int stage = 0;  // 0 header, 1 terminals, 2 links
  bool any_symbolic = false;
  // first numeric entry outside {0,1}, for the mixing diagnostic
  std::optional<std::pair<std::size_t, std::size_t>> numeric_at;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    auto tokens = split(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto expect = [&](std::size_t count, const char* shape) {
      if (tokens.size() != count) {
        std::size_t column = tokens.size() > count ? tokens[count].column : line.size() + 1;
        throw ParseError(line_no, column, std::string("expected '") + shape + "'");
      }
    };

    if (stage == 0) {
      expect(3, "n m d");
      file.nodes = parse_int<std::uint32_t>(tokens[0], line_no, "node count");
      declared_links = parse_int<std::size_t>(tokens[1], line_no, "link count");
      file.diameter = parse_int<int>(tokens[2], line_no, "diameter");
      if (file.nodes < 2) throw ParseError(line_no, tokens[0].column, "need at least two nodes");
      if (file.diameter < 1) throw ParseError(line_no, tokens[2].column, "diameter must be >= 1");
      stage = 1;
    } else if (stage == 1) {
      expect(2, "s t");
      file.source = parse_int<std::uint32_t>(tokens[0], line_no, "source id");
      file.target = parse_int<std::uint32_t>(tokens[1], line_no, "target id");
      if (file.source >= file.nodes) throw ParseError(line_no, tokens[0].column, "source out of range");
      if (file.target >= file.nodes) throw ParseError(line_no, tokens[1].column, "target out of range");
      if (file.source == file.target)
        throw ParseError(line_no, tokens[1].column, "source and target coincide");
      stage = 2;
    } else {
      if (file.links.size() == declared_links)
        throw ParseError(line_no, tokens[0].column,
                         "more link lines than the " + std::to_string(declared_links) + " declared");
      expect(3, "u v r");
      InstanceFile::Entry entry;
      entry.u = parse_int<std::uint32_t>(tokens[0], line_no, "node id");
      entry.v = parse_int<std::uint32_t>(tokens[1], line_no, "node id");
      if (entry.u >= file.nodes) throw ParseError(line_no, tokens[0].column, "node id out of range");
      if (entry.v >= file.nodes) throw ParseError(line_no, tokens[1].column, "node id out of range");
      if (entry.u == entry.v) throw ParseError(line_no, tokens[1].column, "self-loop");
      try {
        entry.reliability = parse_polynomial(tokens[2].text);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, tokens[2].column, err.what());
      }
      const Polynomial& r = entry.reliability;
      if (r.degree() >= 1) {
        any_symbolic = true;
      } else {
        Rational value = r.degree() < 0 ? Rational(0) : r.coefficients()[0];
        if (value < 0 || value > 1)
          throw ParseError(line_no, tokens[2].column, "reliability outside [0,1]");
        if (value != 0 && value != 1 && !numeric_at) numeric_at.emplace(line_no, tokens[2].column);
      }
      if (any_symbolic && numeric_at)
        throw ParseError(r.degree() >= 1 ? line_no : numeric_at->first,
                         r.degree() >= 1 ? tokens[2].column : numeric_at->second,
                         "symbolic and numeric reliabilities other than 0/1 cannot be mixed");
      file.links.push_back(std::move(entry));
    }
    if (end == text.size()) break;
  }
  if (stage < 2) throw ParseError(line_no, 1, stage == 0 ? "missing header 'n m d'" : "missing 's t'");
  if (file.links.size() != declared_links)
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(declared_links) + " link lines, found " +
                         std::to_string(file.links.size()));
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_file(buf.str());
}

std::string to_text(const InstanceFile& file) {
  std::string out = std::to_string(file.nodes) + " " + std::to_string(file.links.size()) + " " +
                    std::to_string(file.diameter) + "\n" + std::to_string(file.source) + " " +
                    std::to_string(file.target) + "\n";
  for (const auto& e : file.links)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + e.reliability.to_string() + "\n";
  return out;
}

Mode natural_mode(const InstanceFile& file) {
  return file.symbolic() ? Mode::Poly : Mode::Rational;
}

Instance to_instance(const InstanceFile& file, Mode mode, const std::optional<Rational>& p_value) {
  if (p_value && (*p_value < 0 || *p_value > 1))
    throw InvalidArgument("value for p must lie in [0,1]");
  Graph g(file.nodes);
  for (const auto& e : file.links) {
    const Polynomial& r = e.reliability;
    Prob value;
    if (mode == Mode::Poly) {
      if (r.degree() < 1 && !(r.is_constant(0) || r.is_constant(1)))
        throw InvalidArgument("poly mode needs every imperfect reliability to be the symbol p");
      value = Prob(r);
    } else if (r.degree() >= 1) {
      if (!p_value) throw InvalidArgument("symbolic instance needs a value for p outside poly mode");
      value = Prob::from_rational(r.evaluate(*p_value), mode);
    } else {
      value = Prob::from_rational(r.degree() < 0 ? Rational(0) : r.coefficients()[0], mode);
    }
    g.add_link(NodeId{e.u}, NodeId{e.v}, std::move(value));
  }
  return make_instance(std::move(g), NodeId{file.source}, NodeId{file.target}, file.diameter, mode);
}

InstanceFile from_instance(const Instance& inst, std::vector<NodeId>* node_map) {
  const Graph& g = inst.graph;
  std::vector<std::uint32_t> dense(g.node_capacity(), 0);
  std::vector<NodeId> originals = g.nodes();
  for (std::uint32_t i = 0; i < originals.size(); ++i) dense[originals[i].value] = i;
  InstanceFile file;
  file.nodes = static_cast<std::uint32_t>(originals.size());
  file.diameter = inst.diameter;
  file.source = dense[inst.source.value];
  file.target = dense[inst.target.value];
  for (LinkId e : g.links()) {
    const Link& l = g.link(e);
    Polynomial value;
    switch (l.reliability.mode()) {
      case Mode::Float:
        value = Polynomial(parse_rational(format_double(l.reliability.as_double())));
        break;
      case Mode::Rational:
        value = Polynomial(l.reliability.as_rational());
        break;
      case Mode::Poly:
        value = l.reliability.as_polynomial();
        break;
    }
    file.links.push_back({dense[l.u.value], dense[l.v.value], std::move(value)});
  }
  if (node_map) *node_map = std::move(originals);
  return file;
}

std::string digest(const InstanceFile& file) {
  const std::string text = to_text(file);
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[hash[i] >> 4];
    out += kHex[hash[i] & 0xF];
  }
  return out;
}

}  // namespace dcr
