#pragma once

#include <cstdint>
#include <string>

namespace wittforge {

enum class LieFamily { A, B, C, D, E, F, G };

char to_char(LieFamily f) noexcept;

/// Simple Lie algebra by Cartan type. Low ranks that coincide with other
/// types (B1, C1, D1, D2) are rejected; they only enter through aliases.
class SimpleLieType {
public:
    /// Throws ErrorKind::Argument for ranks outside the family.
    static SimpleLieType make(LieFamily family, std::int64_t rank);
    static bool valid(LieFamily family, std::int64_t rank) noexcept;

    LieFamily family() const noexcept { return family_; }
    std::int64_t rank() const noexcept { return rank_; }

    /// "A1", "E8", ...
    std::string to_string() const;

    friend bool operator==(const SimpleLieType&, const SimpleLieType&) = default;

private:
    SimpleLieType(LieFamily f, std::int64_t r) : family_(f), rank_(r) {}

    LieFamily family_;
    std::int64_t rank_;
};

std::int64_t lie_dim(const SimpleLieType& t);
std::int64_t dual_coxeter(const SimpleLieType& t);

} // namespace wittforge
