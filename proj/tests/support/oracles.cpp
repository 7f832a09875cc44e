#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wittforge::testing {

namespace {

using Gram = std::vector<std::vector<std::int64_t>>;

Gram simple_root_gram(char family, int n) {
    Gram g(n, std::vector<std::int64_t>(n, 0));
    auto link = [&g](int i, int j, std::int64_t v) { g[i][j] = g[j][i] = v; };
    switch (family) {
    case 'A':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B': // long roots length² 4, last root short
        for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 4 : 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case 'C': // short roots length² 2, last root long
        for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        g[0][0] = g[1][1] = 4;
        g[2][2] = g[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        g[0][0] = 2;
        g[1][1] = 6;
        link(0, 1, -3);
        break;
    default: throw std::invalid_argument("unknown family");
    }
    return g;
}

} // namespace

RootData root_system(char family, int rank) {
    const Gram g = simple_root_gram(family, rank);
    const int n = rank;
    // Cartan integers a_ij = 2(α_i, α_j)/(α_i, α_i)
    auto pairing = [&](const std::vector<std::int64_t>& beta, int i) {
        std::int64_t s = 0;
        for (int j = 0; j < n; ++j) {
            s += beta[j] * g[i][j];
        }
        return 2 * s / g[i][i];
    };

    std::set<std::vector<std::int64_t>> roots;
    std::vector<std::vector<std::int64_t>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                auto down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!roots.count(down)) {
                        break;
                    }
                    ++p;
                }
                const std::int64_t q = p - pairing(beta, i);
                if (q > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) {
                        next.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }

    const auto height = [](const std::vector<std::int64_t>& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
    const auto highest = *std::max_element(roots.begin(), roots.end(),
                                           [&](const auto& a, const auto& b) { return height(a) < height(b); });
    std::int64_t theta_len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            theta_len += highest[i] * highest[j] * g[i][j];
        }
    }
    // θ∨ = Σ a_i (α_i,α_i)/(θ,θ) α_i∨
    std::int64_t comarks = 0;
    for (int i = 0; i < n; ++i) {
        comarks += highest[i] * g[i][i] / theta_len;
    }
    return {static_cast<std::int64_t>(n + 2 * roots.size()), 1 + comarks, roots.size()};
}

namespace {

std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
    // cofactor expansion; sizes here are tiny
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        total += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::int64_t> determinantal_invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> out;
    std::int64_t previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        std::int64_t g = 0;
        for (const auto& r : rs) {
            for (const auto& c : cs) {
                std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub[i][j] = m[r[i]][c[j]];
                    }
                }
                g = std::gcd(g, det(sub));
            }
        }
        if (g == 0) {
            out.push_back(0);
            previous = 0;
        } else {
            out.push_back(previous == 0 ? 0 : g / previous);
            previous = g;
        }
    }
    return out;
}

namespace {

struct Table {
    std::vector<std::int64_t> orders;
    std::vector<std::int64_t> num; // q as num/den
    std::int64_t den = 1;

    std::size_t size() const { return num.size(); }

    std::vector<std::int64_t> coords(std::size_t idx) const {
        std::vector<std::int64_t> c(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            c[i] = static_cast<std::int64_t>(idx % orders[i]);
            idx /= orders[i];
        }
        return c;
    }
    std::size_t index(const std::vector<std::int64_t>& c) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            idx = idx * orders[i] + ((c[i] % orders[i]) + orders[i]) % orders[i];
        }
        return idx;
    }
    std::size_t add(std::size_t a, std::size_t b) const {
        auto x = coords(a);
        const auto y = coords(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return index(x);
    }
    bool isotropic(std::size_t a) const { return num[a] % den == 0; }
    bool orthogonal(std::size_t a, std::size_t b) const {
        return (num[add(a, b)] - num[a] - num[b]) % den == 0;
    }
};

// A ⊕ B^rev with values q_A(x) − q_B(y) over a common denominator.
Table sum_with_reverse(const PreMetricGroup& a, const PreMetricGroup& b) {
    const auto ta = a.table();
    const auto tb = b.table();
    Table t;
    for (auto n : a.group().cyclic_orders()) t.orders.push_back(n);
    for (auto n : b.group().cyclic_orders()) t.orders.push_back(n);
    for (const auto& v : ta) t.den = std::lcm(t.den, v.denominator());
    for (const auto& v : tb) t.den = std::lcm(t.den, v.denominator());
    for (const auto& x : ta) {
        for (const auto& y : tb) {
            t.num.push_back(x.numerator() * (t.den / x.denominator()) - y.numerator() * (t.den / y.denominator()));
        }
    }
    return t;
}

Table single(const PreMetricGroup& a) {
    Table t;
    for (auto n : a.group().cyclic_orders()) t.orders.push_back(n);
    const auto ta = a.table();
    for (const auto& v : ta) t.den = std::lcm(t.den, v.denominator());
    for (const auto& v : ta) t.num.push_back(v.numerator() * (t.den / v.denominator()));
    return t;
}

bool search(const Table& t, std::vector<bool>& members, std::vector<std::size_t>& gens, std::size_t count,
            std::size_t target, std::set<std::vector<bool>>& seen) {
    if (count == target) {
        return true;
    }
    if (!seen.insert(members).second) {
        return false;
    }
    for (std::size_t x = 1; x < t.size(); ++x) {
        if (members[x] || !t.isotropic(x)) continue;
        bool ok = true;
        for (std::size_t g : gens) {
            if (!t.orthogonal(x, g)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // close H + <x>
        std::vector<bool> grown = members;
        std::vector<std::size_t> list;
        for (std::size_t i = 0; i < t.size(); ++i) if (members[i]) list.push_back(i);
        std::size_t multiple = x;
        std::vector<std::size_t> added;
        while (multiple != 0) {
            for (std::size_t h : list) {
                const std::size_t s = t.add(h, multiple);
                if (!grown[s]) {
                    grown[s] = true;
                    added.push_back(s);
                }
            }
            multiple = t.add(multiple, x);
        }
        const std::size_t new_count = count + added.size();
        if (new_count > target) continue;
        gens.push_back(x);
        if (search(t, grown, gens, new_count, target, seen)) return true;
        gens.pop_back();
    }
    return false;
}

bool lagrangian(const Table& t) {
    const auto n = static_cast<std::size_t>(t.size());
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (root * root != n) {
        return false;
    }
    std::vector<bool> members(n, false);
    members[0] = true;
    std::vector<std::size_t> gens;
    std::set<std::vector<bool>> seen;
    return search(t, members, gens, 1, root, seen);
}

} // namespace

bool has_lagrangian(const PreMetricGroup& pm) { return lagrangian(single(pm)); }

bool witt_equal_bruteforce(const PreMetricGroup& a, const PreMetricGroup& b) {
    return lagrangian(sum_with_reverse(a, b));
}

int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t base = ((a % p) + p) % p;
    if (base == 0) return 0;
    std::int64_t e = (p - 1) / 2;
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

int quadratic_gauss_index(std::int64_t a, std::int64_t p) {
    const int sign = legendre(a, p);
    const int eps = p % 4 == 1 ? 0 : 2; // 1 or i
    return (eps + (sign == 1 ? 0 : 4)) % 8;
}

std::vector<double> sl2_quantum_dimensions(std::int64_t k) {
    const double pi = std::acos(-1.0);
    std::vector<double> out;
    for (std::int64_t i = 0; i <= k; ++i) {
        out.push_back(std::sin(static_cast<double>(i + 1) * pi / static_cast<double>(k + 2)) /
                      std::sin(pi / static_cast<double>(k + 2)));
    }
    return out;
}

} // namespace wittforge::testing
