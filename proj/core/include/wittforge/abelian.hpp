#pragma once

#include "wittforge/integer.hpp"
#include "wittforge/smith.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wittforge {

/// Element of ⊕ ℤ/n_i as reduced coordinates 0 <= x_i < n_i.
struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    std::string to_string() const;
};

/// Finite abelian group ⊕_i ℤ/n_i, kept in the presentation it was built with.
///
/// Elements are addressed either by coordinates or by a dense index in
/// [0, order). The index is mixed-radix with the first factor most
/// significant, so index order coincides with lexicographic coordinate order.
class FiniteAbelianGroup {
public:
    /// The trivial group (no cyclic factors).
    FiniteAbelianGroup() = default;

    /// Throws ErrorKind::InvalidGroup if any order is < 1.
    static FiniteAbelianGroup make(std::vector<std::int64_t> cyclic_orders);

    std::span<const std::int64_t> cyclic_orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    std::int64_t order() const noexcept { return order_; }
    bool is_trivial() const noexcept { return order_ == 1; }

    GroupElement zero() const;
    /// Unit vector e_i of the i-th cyclic factor.
    GroupElement generator(std::size_t i) const;
    /// Reduces arbitrary integer coordinates into canonical form.
    GroupElement element(std::span<const std::int64_t> coords) const;

    bool contains(const GroupElement& x) const noexcept;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement negate(const GroupElement& x) const;
    GroupElement scale(std::int64_t n, const GroupElement& x) const;
    GroupElement subtract(const GroupElement& x, const GroupElement& y) const {
        return add(x, negate(y));
    }
    std::int64_t element_order(const GroupElement& x) const;

    std::size_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::size_t index) const;

    // Index-level arithmetic for hot loops; no allocation.
    std::size_t add_index(std::size_t a, std::size_t b) const noexcept;
    std::size_t negate_index(std::size_t a) const noexcept;

    /// All elements in index order. Subject to the enumeration cap.
    std::vector<GroupElement> elements() const;

    /// Invariant factors d_1 | d_2 | ... (all > 1) via Smith normal form.
    std::vector<std::int64_t> invariant_factors() const;

    /// Same cyclic presentation (not merely isomorphic).
    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

    std::string to_string() const;

private:
    void require_element(const GroupElement& x) const;

    std::vector<std::int64_t> orders_;
    std::vector<std::size_t> strides_;
    std::int64_t order_ = 1;
};

/// Subgroup stored as an explicit member set together with generators.
class Subgroup {
public:
    /// Closure of `gens` under addition. Empty `gens` gives {0}.
    static Subgroup generated(const FiniteAbelianGroup& g, std::span<const GroupElement> gens);

    /// Validates that `members` is a subgroup and derives a generating set
    /// greedily in index order.
    static Subgroup from_members(const FiniteAbelianGroup& g, std::span<const GroupElement> members);

    static Subgroup trivial(const FiniteAbelianGroup& g);
    static Subgroup whole(const FiniteAbelianGroup& g);

    const FiniteAbelianGroup& parent() const noexcept { return parent_; }
    std::int64_t order() const noexcept { return static_cast<std::int64_t>(member_indices_.size()); }
    const std::vector<GroupElement>& generators() const noexcept { return generators_; }
    /// Members sorted by index.
    std::vector<GroupElement> members() const;
    const std::vector<std::size_t>& member_indices() const noexcept { return member_indices_; }

    bool contains(const GroupElement& x) const;
    bool contains_index(std::size_t index) const noexcept { return mask_[index]; }

private:
    Subgroup(FiniteAbelianGroup parent, std::vector<bool> mask, std::vector<GroupElement> gens);

    FiniteAbelianGroup parent_;
    std::vector<bool> mask_;
    std::vector<std::size_t> member_indices_;
    std::vector<GroupElement> generators_;
};

/// g/h in invariant-factor form together with the projection g -> g/h.
class Quotient {
public:
    const FiniteAbelianGroup& group() const noexcept { return group_; }
    GroupElement project(const GroupElement& x) const;

private:
    friend Quotient quotient(const FiniteAbelianGroup& g, const Subgroup& h);

    FiniteAbelianGroup group_;
    IntegerMatrix transform_; // rows of U kept for the non-trivial factors
};

/// Computed from the Smith form of [diag(n_i) | generator coordinates of h].
Quotient quotient(const FiniteAbelianGroup& g, const Subgroup& h);

/// A subgroup re-presented as a standalone group in invariant-factor form,
/// with the embedding back into its parent.
class SubgroupPresentation {
public:
    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const FiniteAbelianGroup& parent() const noexcept { return parent_; }
    /// Image of the i-th cyclic generator of group() in the parent.
    const std::vector<GroupElement>& generator_images() const noexcept { return images_; }
    GroupElement embed(const GroupElement& y) const;

private:
    friend SubgroupPresentation present(const Subgroup& h);

    FiniteAbelianGroup group_;
    FiniteAbelianGroup parent_;
    std::vector<GroupElement> images_;
};

SubgroupPresentation present(const Subgroup& h);

/// Homomorphism determined by the images of the source's cyclic generators.
class GroupHomomorphism {
public:
    GroupHomomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                      std::vector<GroupElement> generator_images);

    const FiniteAbelianGroup& source() const noexcept { return source_; }
    const FiniteAbelianGroup& target() const noexcept { return target_; }
    const std::vector<GroupElement>& generator_images() const noexcept { return images_; }

    GroupElement operator()(const GroupElement& x) const;
    bool is_bijective() const;

    /// (this ∘ inner): apply inner first.
    GroupHomomorphism compose(const GroupHomomorphism& inner) const;

private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup target_;
    std::vector<GroupElement> images_;
};

/// Lazy enumeration of all isomorphisms a -> b. Each generator of `a` is sent
/// to an element of `b` of the same order; candidates that fail to be
/// bijective are skipped.
class IsomorphismSearch {
public:
    IsomorphismSearch(FiniteAbelianGroup a, FiniteAbelianGroup b);

    std::optional<GroupHomomorphism> next();

private:
    bool advance();

    FiniteAbelianGroup a_;
    FiniteAbelianGroup b_;
    std::vector<std::vector<GroupElement>> candidates_;
    std::vector<std::size_t> cursor_;
    bool exhausted_ = false;
    bool started_ = false;
};

} // namespace wittforge
