#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrb/group.hpp"

namespace rrb {

/// Z_n as the group generated by one n-cycle.
GroupPtr cyclic_group(std::size_t n);

/// Small groups by name: Z1..Z12, V4, S3, Z2xZ4, Z2^3, D4, Q8, A4, D6.
/// Throws InvalidArgument for an unknown name.
GroupPtr catalog_group(std::string_view name);
const std::vector<std::string>& catalog_names();

/// One representative per isomorphism class of order at most 8, in order
/// of increasing order.
const std::vector<std::string>& groups_up_to_order_8();

}  // namespace rrb
