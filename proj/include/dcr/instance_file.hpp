#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcr/instance.hpp"

namespace dcr {

/// Text instance format:
///
///   # comment
///   n m d
///   s t
///   u v r        (m lines)
///
/// Node ids are 0..n-1. A reliability r is `0`, `1`, a decimal, `num/den`,
/// or a polynomial in the symbol `p` (`p`, `p^4`, `2*p-p^2`). Symbolic and
/// numeric values other than 0/1 cannot be mixed in one file.
struct InstanceFile {
  struct Entry {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    Polynomial reliability;  ///< constants for numeric entries
  };
  std::uint32_t nodes = 0;
  int diameter = 1;
  std::uint32_t source = 0;
  std::uint32_t target = 1;
  std::vector<Entry> links;

  bool symbolic() const;
};

/// Throws ParseError carrying a 1-based line and column.
InstanceFile parse_instance_file(std::string_view text);
InstanceFile load_instance_file(const std::string& path);

/// Canonical text: no comments, single spaces, one trailing newline.
std::string to_text(const InstanceFile& file);

/// Poly when the file is symbolic, Rational otherwise.
Mode natural_mode(const InstanceFile& file);

/// Builds the instance in `mode`. Symbolic files need `p_value` unless mode
/// is Poly; numeric files other than 0/1 cannot be read in Poly mode.
Instance to_instance(const InstanceFile& file, Mode mode,
                     const std::optional<Rational>& p_value = std::nullopt);

/// Renumbers live nodes densely in NodeId order; links keep LinkId order.
/// `node_map`, when given, receives the original NodeId of each file node.
InstanceFile from_instance(const Instance& inst, std::vector<NodeId>* node_map = nullptr);

/// Hex SHA-256 of the canonical text.
std::string digest(const InstanceFile& file);

}  // namespace dcr
