#pragma once

#include "wittforge/charge.hpp"
#include "wittforge/qform.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace wittforge {

enum class PivotOrder {
    Lexicographic, // first isotropic element in index order
    Reversed,      // last isotropic element in index order
};

/// Repeatedly quotients by ⟨x⟩ for an isotropic x ≠ 0 until no such x is
/// left. Each step strictly lowers the order, so this terminates.
PreMetricGroup reduce_anisotropic(const PreMetricGroup& pm, PivotOrder order = PivotOrder::Lexicographic);

/// Witt class of a metric group, held by its anisotropic representative.
class WittClass {
public:
    /// The zero class (trivial group).
    WittClass();

    /// Throws Precondition on a degenerate form.
    static WittClass of(const PreMetricGroup& pm);

    const PreMetricGroup& representative() const noexcept { return rep_; }
    const CentralCharge& charge() const noexcept { return charge_; }
    bool is_zero() const noexcept { return rep_.order() == 1; }

private:
    explicit WittClass(PreMetricGroup anisotropic);

    PreMetricGroup rep_;
    CentralCharge charge_;
};

inline WittClass witt_class(const PreMetricGroup& pm) { return WittClass::of(pm); }

WittClass add(const WittClass& a, const WittClass& b);
WittClass neg(const WittClass& w);
/// Isometry of the anisotropic representatives.
bool equals(const WittClass& a, const WittClass& b);

/// Smallest n >= 1 with n·w = 0. Exceeding 16 raises Internal: the pointed
/// Witt group has exponent 8.
std::int64_t order(const WittClass& w);

/// Witt class of each prime part of the representative.
std::map<std::int64_t, WittClass> decompose(const WittClass& w);

/// Closure of `gens` under add and neg, one entry per distinct class, in
/// discovery order (breadth-first from zero). Throws TooLarge past `cap`.
std::vector<WittClass> generated_subgroup(std::span<const WittClass> gens, std::size_t cap = 256);

} // namespace wittforge
