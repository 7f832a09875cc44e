#include "wittforge/lie.hpp"

#include "wittforge/error.hpp"

namespace wittforge {

char to_char(LieFamily f) noexcept { return static_cast<char>('A' + static_cast<int>(f)); }

bool SimpleLieType::valid(LieFamily family, std::int64_t rank) noexcept {
    switch (family) {
    case LieFamily::A: return rank >= 1;
    case LieFamily::B:
    case LieFamily::C: return rank >= 2;
    case LieFamily::D: return rank >= 3;
    case LieFamily::E: return rank >= 6 && rank <= 8;
    case LieFamily::F: return rank == 4;
    case LieFamily::G: return rank == 2;
    }
    return false;
}

SimpleLieType SimpleLieType::make(LieFamily family, std::int64_t rank) {
    if (!valid(family, rank)) {
        fail(ErrorKind::Argument,
             std::string(1, to_char(family)) + std::to_string(rank) + " is not a simple Lie type");
    }
    return SimpleLieType(family, rank);
}

std::string SimpleLieType::to_string() const { return std::string(1, to_char(family_)) + std::to_string(rank_); }

std::int64_t lie_dim(const SimpleLieType& t) {
    const std::int64_t n = t.rank();
    switch (t.family()) {
    case LieFamily::A: return n * (n + 2);
    case LieFamily::B:
    case LieFamily::C: return n * (2 * n + 1);
    case LieFamily::D: return n * (2 * n - 1);
    case LieFamily::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case LieFamily::F: return 52;
    case LieFamily::G: return 14;
    }
    return 0;
}

std::int64_t dual_coxeter(const SimpleLieType& t) {
    const std::int64_t n = t.rank();
    switch (t.family()) {
    case LieFamily::A: return n + 1;
    case LieFamily::B: return 2 * n - 1;
    case LieFamily::C: return n + 1;
    case LieFamily::D: return 2 * n - 2;
    case LieFamily::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case LieFamily::F: return 9;
    case LieFamily::G: return 4;
    }
    return 0;
}

} // namespace wittforge
