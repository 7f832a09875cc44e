#include "wittforge/qform.hpp"

#include "wittforge/config.hpp"
#include "wittforge/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wittforge {

namespace {

constexpr Int128 kMaxDenominator = (static_cast<Int128>(1) << 62);

QmodZ make_reduced(Int128 num, Int128 den) {
    if (den <= 0) {
        fail(ErrorKind::Argument, "QmodZ denominator must be positive");
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    Int128 a = num;
    Int128 b = den;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    const Int128 g = a == 0 ? den : a;
    num /= g;
    den /= g;
    if (den > kMaxDenominator) {
        fail(ErrorKind::TooLarge, "QmodZ denominator overflow");
    }
    return QmodZ(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

QmodZ::QmodZ(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
        fail(ErrorKind::Argument, "QmodZ denominator must be positive");
    }
    num = mod_floor(num, den);
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

QmodZ QmodZ::from_rational(const Rational& r) {
    Rational frac = mod(r, Rational(1));
    if (!frac.get_den().fits_slong_p()) {
        fail(ErrorKind::TooLarge, "denominator too large for a quadratic-form value");
    }
    return QmodZ(frac.get_num().get_si(), frac.get_den().get_si());
}

QmodZ QmodZ::parse(std::string_view text) { return from_rational(parse_rational(text)); }

std::string QmodZ::to_string() const {
    if (den_ == 1) {
        return "0";
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    const Int128 g = std::gcd(a.den_, b.den_);
    const Int128 den = static_cast<Int128>(a.den_) / g * b.den_;
    const Int128 num = static_cast<Int128>(a.num_) * (den / a.den_) +
                         static_cast<Int128>(b.num_) * (den / b.den_);
    return make_reduced(num, den);
}

QmodZ operator-(const QmodZ& a) { return QmodZ(-a.num_, a.den_); }

QmodZ operator-(const QmodZ& a, const QmodZ& b) { return a + (-b); }

QmodZ operator*(std::int64_t n, const QmodZ& a) {
    const Int128 num = (static_cast<Int128>(n) % a.den_) * a.num_;
    return make_reduced(num, a.den_);
}

// ---------------------------------------------------------------------------

PreMetricGroup::PreMetricGroup() : group_(FiniteAbelianGroup::make({})), den_(1), nums_{0} {}

PreMetricGroup::PreMetricGroup(FiniteAbelianGroup g, std::int64_t den, std::vector<std::int64_t> nums)
    : group_(std::move(g)), den_(den), nums_(std::move(nums)) {}

PreMetricGroup PreMetricGroup::validated(const FiniteAbelianGroup& g, const std::vector<QmodZ>& table,
                                         bool scan_bilinear) {
    require_enumerable(g.order(), "quadratic form table");
    const auto n = static_cast<std::size_t>(g.order());
    if (table.size() != n) {
        fail(ErrorKind::Argument, "quadratic form table has " + std::to_string(table.size()) +
                                      " entries; group " + g.to_string() + " has order " +
                                      std::to_string(n));
    }

    auto triple_error = [&](std::size_t x, std::size_t y, std::size_t z) {
        std::ostringstream msg;
        msg << "not a quadratic form on " << g.to_string() << ": b(x+y,z) != b(x,z)+b(y,z) at x="
            << g.element_at(x).to_string() << ", y=" << g.element_at(y).to_string()
            << ", z=" << g.element_at(z).to_string();
        fail(ErrorKind::NotQuadraticForm, msg.str());
    };

    if (!table[0].is_zero()) {
        fail(ErrorKind::NotQuadraticForm, "not a quadratic form on " + g.to_string() + ": q(0) = " +
                                              table[0].to_string() + ", must be 0");
    }

    // Every value must have denominator dividing 2*ord(x). When it does not,
    // locate the concrete failing triple (k·x, x, x) in exact arithmetic.
    for (std::size_t xi = 0; xi < n; ++xi) {
        const GroupElement x = g.element_at(xi);
        const std::int64_t o = g.element_order(x);
        if ((2 * o) % table[xi].denominator() == 0) {
            continue;
        }
        auto qv = [&](std::size_t i) { return table[i]; };
        auto b = [&](std::size_t u, std::size_t v) {
            return qv(g.add_index(u, v)) - qv(u) - qv(v);
        };
        std::size_t kx = 0;
        for (std::int64_t k = 0; k < o; ++k) {
            if (b(g.add_index(kx, xi), xi) != b(kx, xi) + b(xi, xi)) {
                triple_error(kx, xi, xi);
            }
            kx = g.add_index(kx, xi);
        }
        fail(ErrorKind::Internal, "denominator check and bilinearity scan disagree");
    }

    std::int64_t den = 1;
    for (const auto& v : table) {
        den = std::lcm(den, v.denominator());
    }
    std::vector<std::int64_t> nums(n);
    for (std::size_t i = 0; i < n; ++i) {
        nums[i] = table[i].numerator() * (den / table[i].denominator());
    }
    PreMetricGroup pm(g, den, std::move(nums));

    for (std::size_t xi = 0; xi < n; ++xi) {
        const std::size_t neg = g.negate_index(xi);
        if (pm.nums_[xi] != pm.nums_[neg]) {
            fail(ErrorKind::NotQuadraticForm,
                 "not a quadratic form on " + g.to_string() + ": q(-x) != q(x) at x=" +
                     g.element_at(xi).to_string());
        }
    }

    if (!scan_bilinear) {
        return pm;
    }
    // Additivity of b in its first argument along each generator implies
    // bilinearity (induction on word length plus symmetry of b).
    // b(x+e,z) - b(x,z) - b(e,z) = q(x+z+e) - q(x+e) - q(x+z) + q(x) - q(e+z) + q(e) + q(z)
    const auto& v = pm.nums_;
    std::vector<std::size_t> shift(n);
    std::vector<std::int64_t> b_e(n);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::size_t e = g.index_of(g.generator(i));
        for (std::size_t y = 0; y < n; ++y) {
            shift[y] = g.add_index(y, e);
            b_e[y] = v[shift[y]] - v[e] - v[y];
        }
        for (std::size_t x = 0; x < n; ++x) {
            const std::int64_t base = v[x] - v[shift[x]];
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t xz = g.add_index(x, z);
                if ((v[shift[xz]] - v[xz] + base - b_e[z]) % den != 0) {
                    triple_error(x, e, z);
                }
            }
        }
    }
    return pm;
}

PreMetricGroup PreMetricGroup::from_table(const FiniteAbelianGroup& g, const std::vector<QmodZ>& table) {
    return validated(g, table);
}

PreMetricGroup PreMetricGroup::from_table(const FiniteAbelianGroup& g,
                                          const std::map<GroupElement, QmodZ>& table) {
    require_enumerable(g.order(), "quadratic form table");
    std::vector<QmodZ> dense(static_cast<std::size_t>(g.order()));
    std::vector<bool> seen(dense.size(), false);
    for (const auto& [x, v] : table) {
        const std::size_t i = g.index_of(x);
        dense[i] = v;
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            fail(ErrorKind::Argument, "quadratic form table misses element " +
                                          g.element_at(i).to_string());
        }
    }
    return validated(g, dense);
}

PreMetricGroup PreMetricGroup::from_gram(const FiniteAbelianGroup& g, const std::vector<QmodZ>& q_diagonal,
                                         const std::map<std::pair<std::size_t, std::size_t>, QmodZ>& off_diagonal) {
    const std::size_t r = g.rank();
    if (q_diagonal.size() != r) {
        fail(ErrorKind::Dimension, "expected " + std::to_string(r) + " diagonal values, got " +
                                       std::to_string(q_diagonal.size()));
    }
    for (const auto& [ij, v] : off_diagonal) {
        if (ij.first >= ij.second || ij.second >= r) {
            fail(ErrorKind::Dimension, "off-diagonal entry (" + std::to_string(ij.first + 1) + "," +
                                           std::to_string(ij.second + 1) +
                                           ") must satisfy 1 <= i < j <= rank");
        }
    }
    require_enumerable(g.order(), "quadratic form table");
    std::vector<QmodZ> table;
    table.reserve(static_cast<std::size_t>(g.order()));
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(g.order()); ++idx) {
        const GroupElement x = g.element_at(idx);
        QmodZ v;
        for (std::size_t i = 0; i < r; ++i) {
            const std::int64_t c = x.coords[i];
            v = v + checked_mul(c, c) * q_diagonal[i];
        }
        for (const auto& [ij, bij] : off_diagonal) {
            v = v + checked_mul(x.coords[ij.first], x.coords[ij.second]) * bij;
        }
        table.push_back(v);
    }
    return validated(g, table);
}

std::int64_t PreMetricGroup::b_num(std::size_t a, std::size_t b) const noexcept {
    return mod_floor(nums_[group_.add_index(a, b)] - nums_[a] - nums_[b], den_);
}

QmodZ PreMetricGroup::q(const GroupElement& x) const { return q_at(group_.index_of(x)); }

QmodZ PreMetricGroup::q_at(std::size_t index) const { return QmodZ(nums_.at(index), den_); }

QmodZ PreMetricGroup::bilinear(const GroupElement& x, const GroupElement& y) const {
    return bilinear_at(group_.index_of(x), group_.index_of(y));
}

QmodZ PreMetricGroup::bilinear_at(std::size_t a, std::size_t b) const {
    return QmodZ(b_num(a, b), den_);
}

std::vector<QmodZ> PreMetricGroup::table() const {
    std::vector<QmodZ> out;
    out.reserve(nums_.size());
    for (std::int64_t v : nums_) {
        out.emplace_back(v, den_);
    }
    return out;
}

Subgroup PreMetricGroup::radical() const {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < group_.rank(); ++i) {
        gens.push_back(group_.index_of(group_.generator(i)));
    }
    std::vector<GroupElement> members;
    for (std::size_t x = 0; x < nums_.size(); ++x) {
        bool in = true;
        for (std::size_t e : gens) {
            if (b_num(x, e) != 0) {
                in = false;
                break;
            }
        }
        if (in) {
            members.push_back(group_.element_at(x));
        }
    }
    return Subgroup::from_members(group_, members);
}

bool PreMetricGroup::is_nondegenerate() const {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < group_.rank(); ++i) {
        gens.push_back(group_.index_of(group_.generator(i)));
    }
    for (std::size_t x = 1; x < nums_.size(); ++x) {
        bool in_radical = true;
        for (std::size_t e : gens) {
            if (b_num(x, e) != 0) {
                in_radical = false;
                break;
            }
        }
        if (in_radical) {
            return false;
        }
    }
    return true;
}

bool PreMetricGroup::is_anisotropic() const {
    for (std::size_t x = 1; x < nums_.size(); ++x) {
        if (nums_[x] == 0) {
            return false;
        }
    }
    return true;
}

std::string PreMetricGroup::to_string() const {
    if (group_.is_trivial()) {
        return "trivial";
    }
    std::ostringstream out;
    out << group_.to_string() << " q=[";
    const std::size_t r = group_.rank();
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < r; ++i) {
        gens.push_back(group_.index_of(group_.generator(i)));
        out << (i ? "," : "") << q_at(gens.back()).to_string();
    }
    out << ']';
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const QmodZ b = bilinear_at(gens[i], gens[j]);
            if (!b.is_zero()) {
                out << " b(" << i + 1 << ',' << j + 1 << ")=" << b.to_string();
            }
        }
    }
    return out.str();
}

std::string PreMetricGroup::to_spec() const {
    if (group_.rank() == 0) {
        return "1:0";
    }
    std::ostringstream out;
    const std::size_t r = group_.rank();
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < r; ++i) {
        out << (i ? "," : "") << group_.cyclic_orders()[i];
        gens.push_back(group_.index_of(group_.generator(i)));
    }
    out << ':';
    for (std::size_t i = 0; i < r; ++i) {
        out << (i ? "," : "") << q_at(gens[i]).to_string();
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const QmodZ b = bilinear_at(gens[i], gens[j]);
            if (!b.is_zero()) {
                out << ';' << i + 1 << ',' << j + 1 << '=' << b.to_string();
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------

QmodZ bilinear(const PreMetricGroup& pm, const GroupElement& x, const GroupElement& y) {
    return pm.bilinear(x, y);
}

bool is_nondegenerate(const PreMetricGroup& pm) { return pm.is_nondegenerate(); }

bool is_anisotropic(const PreMetricGroup& pm) { return pm.is_anisotropic(); }

namespace {

void require_same_group(const PreMetricGroup& pm, const Subgroup& h) {
    if (!(h.parent() == pm.group())) {
        fail(ErrorKind::Argument, "subgroup of " + h.parent().to_string() +
                                      " used with a form on " + pm.group().to_string());
    }
}

} // namespace

Subgroup orthogonal_complement(const PreMetricGroup& pm, const Subgroup& h) {
    require_same_group(pm, h);
    const auto& g = pm.group();
    std::vector<std::size_t> gens;
    for (const auto& x : h.generators()) {
        gens.push_back(g.index_of(x));
    }
    std::vector<GroupElement> members;
    for (std::size_t x = 0; x < static_cast<std::size_t>(g.order()); ++x) {
        bool orthogonal = true;
        for (std::size_t e : gens) {
            if (!pm.bilinear_at(x, e).is_zero()) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) {
            members.push_back(g.element_at(x));
        }
    }
    return Subgroup::from_members(g, members);
}

bool is_isotropic(const PreMetricGroup& pm, const Subgroup& h) {
    require_same_group(pm, h);
    for (std::size_t i : h.member_indices()) {
        if (!pm.q_at(i).is_zero()) {
            return false;
        }
    }
    return true;
}

PreMetricGroup m_subquotient(const PreMetricGroup& pm, const Subgroup& h) {
    require_same_group(pm, h);
    if (!pm.is_nondegenerate()) {
        fail(ErrorKind::Precondition, "m-subquotient requires a non-degenerate form");
    }
    if (!is_isotropic(pm, h)) {
        fail(ErrorKind::Precondition, "m-subquotient requires an isotropic subgroup");
    }
    const auto& g = pm.group();
    const Subgroup perp = orthogonal_complement(pm, h);
    const SubgroupPresentation p = present(perp);

    std::vector<GroupElement> h_in_p;
    const auto p_elements = p.group().elements();
    std::vector<GroupElement> images;
    images.reserve(p_elements.size());
    for (const auto& y : p_elements) {
        images.push_back(p.embed(y));
        if (h.contains(images.back())) {
            h_in_p.push_back(y);
        }
    }
    const Subgroup h_local = Subgroup::from_members(p.group(), h_in_p);
    const Quotient quot = quotient(p.group(), h_local);

    const auto& qg = quot.group();
    std::vector<QmodZ> table(static_cast<std::size_t>(qg.order()));
    std::vector<bool> seen(table.size(), false);
    for (std::size_t k = 0; k < p_elements.size(); ++k) {
        const std::size_t target = qg.index_of(quot.project(p_elements[k]));
        const QmodZ v = pm.q(images[k]);
        if (!seen[target]) {
            table[target] = v;
            seen[target] = true;
        } else if (table[target] != v) {
            fail(ErrorKind::Internal, "q is not constant on a coset of the isotropic subgroup in " +
                                          g.to_string());
        }
    }
    return PreMetricGroup::validated(qg, table, false);
}

PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b) {
    std::vector<std::int64_t> orders(a.group().cyclic_orders().begin(), a.group().cyclic_orders().end());
    orders.insert(orders.end(), b.group().cyclic_orders().begin(), b.group().cyclic_orders().end());
    FiniteAbelianGroup g = FiniteAbelianGroup::make(std::move(orders));
    require_enumerable(g.order(), "direct sum");
    const auto ta = a.table();
    const auto tb = b.table();
    std::vector<QmodZ> table;
    table.reserve(static_cast<std::size_t>(g.order()));
    for (const auto& va : ta) {
        for (const auto& vb : tb) {
            table.push_back(va + vb);
        }
    }
    return PreMetricGroup::validated(g, table, false);
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

PreMetricGroup prime_part(const PreMetricGroup& pm, std::int64_t p) {
    if (!is_prime(p)) {
        fail(ErrorKind::Argument, std::to_string(p) + " is not prime");
    }
    const auto& g = pm.group();
    std::vector<GroupElement> sylow;
    for (const auto& x : g.elements()) {
        std::int64_t o = g.element_order(x);
        while (o % p == 0) {
            o /= p;
        }
        if (o == 1) {
            sylow.push_back(x);
        }
    }
    const SubgroupPresentation pres = present(Subgroup::from_members(g, sylow));
    std::vector<QmodZ> table;
    for (const auto& y : pres.group().elements()) {
        table.push_back(pm.q(pres.embed(y)));
    }
    return PreMetricGroup::from_table(pres.group(), table);
}

namespace {

class IsometrySearch {
public:
    IsometrySearch(const PreMetricGroup& a, const PreMetricGroup& b) : a_(a), b_(b) {}

    bool run() {
        const auto& ga = a_.group();
        const auto& gb = b_.group();
        for (std::size_t i = 0; i < ga.rank(); ++i) {
            gen_idx_.push_back(ga.index_of(ga.generator(i)));
        }
        const auto elems = gb.elements();
        for (std::size_t i = 0; i < ga.rank(); ++i) {
            const std::int64_t n = ga.cyclic_orders()[i];
            const QmodZ target = a_.q_at(gen_idx_[i]);
            std::vector<std::size_t> cands;
            for (std::size_t y = 0; y < elems.size(); ++y) {
                if (gb.element_order(elems[y]) == n && b_.q_at(y) == target) {
                    cands.push_back(y);
                }
            }
            if (cands.empty()) {
                return false;
            }
            candidates_.push_back(std::move(cands));
        }
        chosen_.assign(ga.rank(), 0);
        return search(0);
    }

private:
    bool search(std::size_t depth) {
        if (depth == chosen_.size()) {
            return accept();
        }
        for (std::size_t y : candidates_[depth]) {
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                ok = b_.bilinear_at(y, chosen_[j]) == a_.bilinear_at(gen_idx_[depth], gen_idx_[j]);
            }
            if (!ok) {
                continue;
            }
            chosen_[depth] = y;
            if (search(depth + 1)) {
                return true;
            }
        }
        return false;
    }

    bool accept() const {
        const auto& ga = a_.group();
        const auto& gb = b_.group();
        std::vector<GroupElement> imgs;
        for (std::size_t y : chosen_) {
            imgs.push_back(gb.element_at(y));
        }
        const GroupHomomorphism f(ga, gb, imgs);
        if (!f.is_bijective()) {
            return false;
        }
        for (std::size_t x = 0; x < static_cast<std::size_t>(ga.order()); ++x) {
            if (a_.q_at(x) != b_.q(f(ga.element_at(x)))) {
                fail(ErrorKind::Internal, "generator-level isometry does not extend to the full table");
            }
        }
        return true;
    }

    const PreMetricGroup& a_;
    const PreMetricGroup& b_;
    std::vector<std::size_t> gen_idx_;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> chosen_;
};

} // namespace

bool isometric(const PreMetricGroup& a, const PreMetricGroup& b) {
    if (a.order() != b.order()) {
        return false;
    }
    require_enumerable(a.order(), "isometry search");
    if (a.group().invariant_factors() != b.group().invariant_factors()) {
        return false;
    }
    auto ta = a.table();
    auto tb = b.table();
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) {
        return false;
    }
    return IsometrySearch(a, b).run();
}

PreMetricGroup reverse(const PreMetricGroup& pm) {
    std::vector<QmodZ> table = pm.table();
    for (auto& v : table) {
        v = -v;
    }
    return PreMetricGroup::from_table(pm.group(), table);
}

} // namespace wittforge
