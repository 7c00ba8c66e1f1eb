#pragma once

#include <optional>
#include <string>

#include "dcr/instance_file.hpp"

namespace dcr {

struct GenerateOptions {
  std::string family;        ///< path|cycle|complete|grid|cancela-petingi|replacement|figred
  int n = 0;                 ///< node count for path/cycle/complete
  int rows = 0, cols = 0;    ///< grid
  std::optional<int> diameter;
  std::optional<std::string> reliability;  ///< text of the imperfect link value
  std::string bipartite = "cycle:6";       ///< cancela-petingi core: cycle:2k | complete:a,b | edge
  std::string outer = "cycle:3";           ///< replacement: family:n
  std::string inner = "cycle:4";
};

/// Throws InvalidArgument on bad parameters.
InstanceFile generate(const GenerateOptions& options);

/// The 8-node sample graph with irrelevant links: s=0, nodes 1..6, t=7,
/// links s1 12 23 34 45 56 6t 14 1t (LinkIds 0..8), d = 6.
InstanceFile figred(const std::string& reliability = "p");

}  // namespace dcr
