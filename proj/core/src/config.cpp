#include "wittforge/config.hpp"

#include "wittforge/error.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace wittforge {

namespace {

std::int64_t read_env_cap() {
    constexpr std::int64_t fallback = 4096;
    const char* raw = std::getenv("WITTFORGE_MAX_GROUP_ORDER");
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    std::int64_t value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value < 1) {
        return fallback;
    }
    return value;
}

std::atomic<std::int64_t>& cap_storage() {
    static std::atomic<std::int64_t> cap{read_env_cap()};
    return cap;
}

} // namespace

std::int64_t max_group_order() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_group_order(std::int64_t cap) {
    if (cap < 1) {
        fail(ErrorKind::Argument, "group-order cap must be positive");
    }
    cap_storage().store(cap, std::memory_order_relaxed);
}

void require_enumerable(std::int64_t order, const char* what) {
    if (order > max_group_order()) {
        fail(ErrorKind::TooLarge, std::string(what) + ": group order " + std::to_string(order) +
                                      " exceeds enumeration cap " +
                                      std::to_string(max_group_order()) +
                                      " (WITTFORGE_MAX_GROUP_ORDER)");
    }
}

} // namespace wittforge
