#pragma once

#include <cstdint>

namespace wittforge {

/// Largest group order the library will enumerate element-by-element.
/// Read once from WITTFORGE_MAX_GROUP_ORDER (default 4096).
std::int64_t max_group_order();

/// Overrides the cap for the current process; intended for tests and tools.
void set_max_group_order(std::int64_t cap);

/// Throws ErrorKind::TooLarge when `order` exceeds max_group_order().
void require_enumerable(std::int64_t order, const char* what);

} // namespace wittforge
