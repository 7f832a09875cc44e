#include "wittforge/witt.hpp"

#include "wittforge/error.hpp"

namespace wittforge {

PreMetricGroup reduce_anisotropic(const PreMetricGroup& pm, PivotOrder order) {
    if (!pm.is_nondegenerate()) {
        fail(ErrorKind::Precondition, "anisotropic reduction requires a non-degenerate form on " +
                                          pm.group().to_string());
    }
    PreMetricGroup current = pm;
    for (;;) {
        const auto n = static_cast<std::size_t>(current.order());
        std::size_t pivot = 0;
        if (order == PivotOrder::Lexicographic) {
            for (std::size_t i = 1; i < n && pivot == 0; ++i) {
                if (current.q_at(i).is_zero()) {
                    pivot = i;
                }
            }
        } else {
            for (std::size_t i = n; i-- > 1 && pivot == 0;) {
                if (current.q_at(i).is_zero()) {
                    pivot = i;
                }
            }
        }
        if (pivot == 0) {
            return current;
        }
        const GroupElement x = current.group().element_at(pivot);
        const Subgroup h = Subgroup::generated(current.group(), std::span(&x, 1));
        current = m_subquotient(current, h);
    }
}

WittClass::WittClass() : rep_(), charge_() {}

WittClass::WittClass(PreMetricGroup anisotropic)
    : rep_(std::move(anisotropic)), charge_(additive_charge(rep_)) {}

WittClass WittClass::of(const PreMetricGroup& pm) { return WittClass(reduce_anisotropic(pm)); }

WittClass add(const WittClass& a, const WittClass& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    return WittClass::of(direct_sum(a.representative(), b.representative()));
}

WittClass neg(const WittClass& w) { return WittClass::of(reverse(w.representative())); }

bool equals(const WittClass& a, const WittClass& b) {
    if (a.representative().order() != b.representative().order() || !(a.charge() == b.charge())) {
        return false;
    }
    return isometric(a.representative(), b.representative());
}

std::int64_t order(const WittClass& w) {
    constexpr std::int64_t bound = 16;
    WittClass acc = w;
    std::int64_t n = 1;
    while (!acc.is_zero()) {
        if (++n > bound) {
            fail(ErrorKind::Internal, "Witt class order exceeds " + std::to_string(bound) +
                                          " for " + w.representative().to_string());
        }
        acc = add(acc, w);
    }
    return n;
}

std::map<std::int64_t, WittClass> decompose(const WittClass& w) {
    std::map<std::int64_t, WittClass> parts;
    for (std::int64_t p : prime_divisors(w.representative().order())) {
        parts.emplace(p, WittClass::of(prime_part(w.representative(), p)));
    }
    return parts;
}

std::vector<WittClass> generated_subgroup(std::span<const WittClass> gens, std::size_t cap) {
    std::vector<WittClass> steps;
    for (const auto& g : gens) {
        steps.push_back(g);
        steps.push_back(neg(g));
    }
    std::vector<WittClass> found{WittClass()};
    auto known = [&](const WittClass& w) {
        for (const auto& f : found) {
            if (equals(f, w)) {
                return true;
            }
        }
        return false;
    };
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto& s : steps) {
            WittClass next = add(found[head], s);
            if (!known(next)) {
                if (found.size() >= cap) {
                    fail(ErrorKind::TooLarge, "generated Witt subgroup exceeds " +
                                                  std::to_string(cap) + " classes");
                }
                found.push_back(std::move(next));
            }
        }
    }
    return found;
}

} // namespace wittforge
