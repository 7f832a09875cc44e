#include "wittforge/abelian.hpp"

#include "wittforge/config.hpp"
#include "wittforge/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace wittforge {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) {
        fail(ErrorKind::TooLarge, "integer does not fit in 64 bits: " + z.get_str());
    }
    return z.get_si();
}

} // namespace

std::string GroupElement::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out << (i ? "," : "") << coords[i];
    }
    out << ')';
    return out.str();
}

FiniteAbelianGroup FiniteAbelianGroup::make(std::vector<std::int64_t> cyclic_orders) {
    FiniteAbelianGroup g;
    std::int64_t order = 1;
    for (std::int64_t n : cyclic_orders) {
        if (n < 1) {
            fail(ErrorKind::InvalidGroup,
                 "cyclic factor order must be >= 1, got " + std::to_string(n));
        }
        order = checked_mul(order, n);
    }
    g.orders_ = std::move(cyclic_orders);
    g.order_ = order;
    g.strides_.assign(g.orders_.size(), 1);
    std::size_t stride = 1;
    for (std::size_t i = g.orders_.size(); i-- > 0;) {
        g.strides_[i] = stride;
        stride *= static_cast<std::size_t>(g.orders_[i]);
    }
    return g;
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement{std::vector<std::int64_t>(orders_.size(), 0)};
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
    if (i >= orders_.size()) {
        fail(ErrorKind::Dimension, "generator index out of range");
    }
    GroupElement e = zero();
    e.coords[i] = reduce(1, orders_[i]);
    return e;
}

GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> coords) const {
    if (coords.size() != orders_.size()) {
        fail(ErrorKind::Dimension, "expected " + std::to_string(orders_.size()) +
                                       " coordinates, got " + std::to_string(coords.size()));
    }
    GroupElement x{std::vector<std::int64_t>(coords.begin(), coords.end())};
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        x.coords[i] = reduce(x.coords[i], orders_[i]);
    }
    return x;
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const noexcept {
    if (x.coords.size() != orders_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (x.coords[i] < 0 || x.coords[i] >= orders_[i]) {
            return false;
        }
    }
    return true;
}

void FiniteAbelianGroup::require_element(const GroupElement& x) const {
    if (x.coords.size() != orders_.size()) {
        fail(ErrorKind::Dimension, "element " + x.to_string() + " has " +
                                       std::to_string(x.coords.size()) +
                                       " coordinates; group " + to_string() + " has rank " +
                                       std::to_string(orders_.size()));
    }
    if (!contains(x)) {
        fail(ErrorKind::Argument, "element " + x.to_string() + " is not reduced in " + to_string());
    }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    require_element(x);
    require_element(y);
    GroupElement out = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        out.coords[i] = (x.coords[i] + y.coords[i]) % orders_[i];
    }
    return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& x) const {
    require_element(x);
    GroupElement out = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        out.coords[i] = reduce(-x.coords[i], orders_[i]);
    }
    return out;
}

GroupElement FiniteAbelianGroup::scale(std::int64_t n, const GroupElement& x) const {
    require_element(x);
    GroupElement out = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::int64_t m = reduce(n, orders_[i]);
        out.coords[i] = static_cast<std::int64_t>(
            (static_cast<Int128>(m) * x.coords[i]) % orders_[i]);
    }
    return out;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& x) const {
    require_element(x);
    std::int64_t result = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::int64_t n = orders_[i];
        const std::int64_t o = n / std::gcd(n, x.coords[i]);
        result = std::lcm(result, o);
    }
    return result;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    require_element(x);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        idx += static_cast<std::size_t>(x.coords[i]) * strides_[i];
    }
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
    if (index >= static_cast<std::size_t>(order_)) {
        fail(ErrorKind::Argument, "element index out of range");
    }
    GroupElement x = zero();
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        x.coords[i] = static_cast<std::int64_t>(index / strides_[i]);
        index %= strides_[i];
    }
    return x;
}

std::size_t FiniteAbelianGroup::add_index(std::size_t a, std::size_t b) const noexcept {
    std::size_t out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::size_t n = static_cast<std::size_t>(orders_[i]);
        const std::size_t xa = (a / strides_[i]) % n;
        const std::size_t xb = (b / strides_[i]) % n;
        std::size_t s = xa + xb;
        if (s >= n) {
            s -= n;
        }
        out += s * strides_[i];
    }
    return out;
}

std::size_t FiniteAbelianGroup::negate_index(std::size_t a) const noexcept {
    std::size_t out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const std::size_t n = static_cast<std::size_t>(orders_[i]);
        const std::size_t xa = (a / strides_[i]) % n;
        out += (xa == 0 ? 0 : n - xa) * strides_[i];
    }
    return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    require_enumerable(order_, "element enumeration");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) {
        out.push_back(element_at(i));
    }
    return out;
}

std::vector<std::int64_t> FiniteAbelianGroup::invariant_factors() const {
    const std::size_t r = orders_.size();
    IntegerMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        m(i, i) = orders_[i];
    }
    std::vector<std::int64_t> out;
    for (const Integer& d : smith_normal_form(m).diagonal()) {
        if (d > 1) {
            out.push_back(to_int64(d));
        }
    }
    return out;
}

std::string FiniteAbelianGroup::to_string() const {
    if (orders_.empty()) {
        return "0";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        out << (i ? "+" : "") << "Z/" << orders_[i];
    }
    return out.str();
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<bool> mask, std::vector<GroupElement> gens)
    : parent_(std::move(parent)), mask_(std::move(mask)), generators_(std::move(gens)) {
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i]) {
            member_indices_.push_back(i);
        }
    }
}

Subgroup Subgroup::generated(const FiniteAbelianGroup& g, std::span<const GroupElement> gens) {
    require_enumerable(g.order(), "subgroup closure");
    std::vector<std::size_t> gen_idx;
    gen_idx.reserve(gens.size());
    for (const auto& x : gens) {
        gen_idx.push_back(g.index_of(x));
    }
    std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
    std::deque<std::size_t> queue{0};
    mask[0] = true;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t gi : gen_idx) {
            const std::size_t nxt = g.add_index(cur, gi);
            if (!mask[nxt]) {
                mask[nxt] = true;
                queue.push_back(nxt);
            }
        }
    }
    return Subgroup(g, std::move(mask), std::vector<GroupElement>(gens.begin(), gens.end()));
}

Subgroup Subgroup::from_members(const FiniteAbelianGroup& g, std::span<const GroupElement> members) {
    require_enumerable(g.order(), "subgroup membership");
    std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
    std::vector<std::size_t> idx;
    for (const auto& x : members) {
        const std::size_t i = g.index_of(x);
        if (!mask[i]) {
            mask[i] = true;
            idx.push_back(i);
        }
    }
    if (!mask[0]) {
        fail(ErrorKind::Argument, "member set does not contain the identity");
    }
    for (std::size_t a : idx) {
        for (std::size_t b : idx) {
            if (!mask[g.add_index(a, b)]) {
                fail(ErrorKind::Argument, "member set is not closed under addition");
            }
        }
    }
    std::sort(idx.begin(), idx.end());
    // Greedy generating set: take each member not yet in the running closure.
    std::vector<GroupElement> gens;
    std::vector<bool> closure(mask.size(), false);
    closure[0] = true;
    std::vector<std::size_t> closure_members{0};
    for (std::size_t i : idx) {
        if (closure[i]) {
            continue;
        }
        gens.push_back(g.element_at(i));
        std::deque<std::size_t> queue(closure_members.begin(), closure_members.end());
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            const std::size_t nxt = g.add_index(cur, i);
            if (!closure[nxt]) {
                closure[nxt] = true;
                closure_members.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    return Subgroup(g, std::move(mask), std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) { return generated(g, {}); }

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        gens.push_back(g.generator(i));
    }
    return generated(g, gens);
}

std::vector<GroupElement> Subgroup::members() const {
    std::vector<GroupElement> out;
    out.reserve(member_indices_.size());
    for (std::size_t i : member_indices_) {
        out.push_back(parent_.element_at(i));
    }
    return out;
}

bool Subgroup::contains(const GroupElement& x) const {
    if (!parent_.contains(x)) {
        return false;
    }
    return mask_[parent_.index_of(x)];
}

// ---------------------------------------------------------------------------

GroupElement Quotient::project(const GroupElement& x) const {
    std::vector<std::int64_t> coords(group_.rank(), 0);
    const auto orders = group_.cyclic_orders();
    for (std::size_t i = 0; i < group_.rank(); ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < x.coords.size(); ++j) {
            acc += transform_(i, j) * x.coords[j];
        }
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(orders[i]));
        coords[i] = r.get_si();
    }
    return GroupElement{std::move(coords)};
}

Quotient quotient(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (!(h.parent() == g)) {
        fail(ErrorKind::Argument, "subgroup does not belong to " + g.to_string());
    }
    const std::size_t r = g.rank();
    const auto& gens = h.generators();
    IntegerMatrix rel(r, r + gens.size());
    for (std::size_t i = 0; i < r; ++i) {
        rel(i, i) = g.cyclic_orders()[i];
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            rel(i, r + j) = gens[j].coords[i];
        }
    }
    const SmithForm snf = smith_normal_form(rel);
    std::vector<std::int64_t> orders;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& d = snf.d(i, i);
        if (d > 1) {
            orders.push_back(to_int64(d));
            kept.push_back(i);
        }
    }
    Quotient q;
    q.group_ = FiniteAbelianGroup::make(std::move(orders));
    q.transform_ = IntegerMatrix(kept.size(), r);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        for (std::size_t j = 0; j < r; ++j) {
            q.transform_(k, j) = snf.u(kept[k], j);
        }
    }
    return q;
}

// ---------------------------------------------------------------------------

GroupElement SubgroupPresentation::embed(const GroupElement& y) const {
    if (y.coords.size() != images_.size()) {
        fail(ErrorKind::Dimension, "element rank does not match subgroup presentation");
    }
    GroupElement acc = parent_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) {
        acc = parent_.add(acc, parent_.scale(y.coords[i], images_[i]));
    }
    return acc;
}

SubgroupPresentation present(const Subgroup& h) {
    const FiniteAbelianGroup& a = h.parent();
    const auto& gens = h.generators();
    const std::size_t r = a.rank();
    const std::size_t s = gens.size();

    SubgroupPresentation out;
    out.parent_ = a;
    if (s == 0) {
        out.group_ = FiniteAbelianGroup::make({});
        return out;
    }

    // Relations among the generators: kernel of c -> Σ c_j h_j in ℤ^r / diag(n)ℤ^r,
    // read off from the Smith form of [H | diag(n)].
    IntegerMatrix m(r, s + r);
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            m(i, j) = gens[j].coords[i];
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        m(i, s + i) = a.cyclic_orders()[i];
    }
    const SmithForm snf = smith_normal_form(m);
    IntegerMatrix kernel(s, s);
    for (std::size_t col = 0; col < s; ++col) {
        for (std::size_t row = 0; row < s; ++row) {
            kernel(row, col) = snf.v(row, r + col);
        }
    }
    const SmithForm ksnf = smith_normal_form(kernel);
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < s; ++i) {
        const Integer& d = ksnf.d(i, i);
        if (d == 0) {
            fail(ErrorKind::Internal, "relation lattice of a finite subgroup is not full rank");
        }
        if (d == 1) {
            continue;
        }
        orders.push_back(to_int64(d));
        // New generator i corresponds to column i of U^{-1}.
        GroupElement img = a.zero();
        for (std::size_t j = 0; j < s; ++j) {
            Integer c = ksnf.u_inverse(j, i);
            Integer cm;
            mpz_fdiv_r_ui(cm.get_mpz_t(), c.get_mpz_t(),
                          static_cast<unsigned long>(a.element_order(gens[j])));
            img = a.add(img, a.scale(cm.get_si(), gens[j]));
        }
        out.images_.push_back(std::move(img));
    }
    out.group_ = FiniteAbelianGroup::make(std::move(orders));
    if (out.group_.order() != h.order()) {
        fail(ErrorKind::Internal, "subgroup presentation has order " +
                                      std::to_string(out.group_.order()) + ", expected " +
                                      std::to_string(h.order()));
    }
    return out;
}

// ---------------------------------------------------------------------------

GroupHomomorphism::GroupHomomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                                     std::vector<GroupElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
    if (images_.size() != source_.rank()) {
        fail(ErrorKind::Dimension, "one image per source generator is required");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const std::int64_t n = source_.cyclic_orders()[i];
        if (!target_.contains(images_[i]) || n % target_.element_order(images_[i]) != 0) {
            fail(ErrorKind::Argument, "generator image " + images_[i].to_string() +
                                          " does not respect the relation of order " +
                                          std::to_string(n));
        }
    }
}

GroupElement GroupHomomorphism::operator()(const GroupElement& x) const {
    if (!source_.contains(x)) {
        fail(ErrorKind::Dimension, "element outside homomorphism source");
    }
    GroupElement acc = target_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) {
        acc = target_.add(acc, target_.scale(x.coords[i], images_[i]));
    }
    return acc;
}

bool GroupHomomorphism::is_bijective() const {
    if (source_.order() != target_.order()) {
        return false;
    }
    return Subgroup::generated(target_, images_).order() == target_.order();
}

GroupHomomorphism GroupHomomorphism::compose(const GroupHomomorphism& inner) const {
    if (!(inner.target() == source_)) {
        fail(ErrorKind::Dimension, "composition of homomorphisms with mismatched groups");
    }
    std::vector<GroupElement> imgs;
    imgs.reserve(inner.images_.size());
    for (const auto& x : inner.images_) {
        imgs.push_back((*this)(x));
    }
    return GroupHomomorphism(inner.source_, target_, std::move(imgs));
}

IsomorphismSearch::IsomorphismSearch(FiniteAbelianGroup a, FiniteAbelianGroup b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.order() != b_.order()) {
        exhausted_ = true;
        return;
    }
    const auto elems = b_.elements();
    for (std::size_t i = 0; i < a_.rank(); ++i) {
        const std::int64_t n = a_.cyclic_orders()[i];
        std::vector<GroupElement> cands;
        for (const auto& y : elems) {
            if (b_.element_order(y) == n) {
                cands.push_back(y);
            }
        }
        if (cands.empty()) {
            exhausted_ = true;
            return;
        }
        candidates_.push_back(std::move(cands));
    }
    cursor_.assign(a_.rank(), 0);
}

bool IsomorphismSearch::advance() {
    for (std::size_t i = cursor_.size(); i-- > 0;) {
        if (++cursor_[i] < candidates_[i].size()) {
            return true;
        }
        cursor_[i] = 0;
    }
    return false;
}

std::optional<GroupHomomorphism> IsomorphismSearch::next() {
    while (!exhausted_) {
        if (started_ && !advance()) {
            exhausted_ = true;
            break;
        }
        started_ = true;
        std::vector<GroupElement> imgs;
        imgs.reserve(cursor_.size());
        for (std::size_t i = 0; i < cursor_.size(); ++i) {
            imgs.push_back(candidates_[i][cursor_[i]]);
        }
        GroupHomomorphism f(a_, b_, std::move(imgs));
        if (f.is_bijective()) {
            return f;
        }
        if (cursor_.empty()) {
            exhausted_ = true;
        }
    }
    return std::nullopt;
}

} // namespace wittforge
