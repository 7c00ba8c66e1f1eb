#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dcr/instance.hpp"

namespace dcr {

/// Distance tests that certify a link lies on no s-t path of at most d
/// links. Each level is at least as strong as the previous one:
///   C1  d(s,x) + d(y,t)                 in G
///   C2  d(s,x) + d(y,t)                 in G - e
///   C3  d_{G-y-t}(s,x) + d_{G-s-x}(y,t) with endpoint exclusions
/// and symmetrically with x and y swapped. Oracle is the exhaustive search.
enum class IrrelevanceLevel { Off, C1, C2, C3, Oracle };

std::string_view to_string(IrrelevanceLevel level);
IrrelevanceLevel parse_irrelevance_level(std::string_view text);

struct IrrelevanceCertificate {
  LinkId link;
  IrrelevanceLevel condition = IrrelevanceLevel::C1;
  Hops forward_sum;   ///< orientation x->y, with e = {x,y} as stored
  Hops backward_sum;  ///< orientation y->x
};

std::optional<IrrelevanceCertificate> condition1(const Instance& inst, LinkId e);
std::optional<IrrelevanceCertificate> condition2(const Instance& inst, LinkId e);
std::optional<IrrelevanceCertificate> condition3(const Instance& inst, LinkId e);
/// Exhaustive ground truth. Witness sums are the shortest detours through e.
std::optional<IrrelevanceCertificate> condition_oracle(const Instance& inst, LinkId e);

std::optional<IrrelevanceCertificate> check_link(const Instance& inst, LinkId e,
                                                 IrrelevanceLevel level);

/// Deletes every certified link, rescanning until a scan certifies nothing.
/// Certificates are returned in deletion order. Level Off is the identity.
std::pair<Instance, std::vector<IrrelevanceCertificate>> prune_irrelevant(
    const Instance& inst, IrrelevanceLevel level);

}  // namespace dcr
