#include "wittforge/fusion_ring.hpp"

#include "wittforge/config.hpp"
#include "wittforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wittforge {

namespace {

constexpr double kCheckTolerance = 1e-9;
constexpr double kPowerTolerance = 1e-12;
constexpr int kPowerCap = 100000;

std::string idx(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

using Matrix = std::vector<std::vector<double>>;

std::vector<double> multiply(const Matrix& m, const std::vector<double>& v) {
    std::vector<double> out(v.size(), 0.0);
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[k] += m[k][j] * v[j];
        }
    }
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) {
        m = std::max(m, std::fabs(x));
    }
    return m;
}

// Dominant eigenvalue of a non-negative matrix with positive dominant
// eigenvector; returns false if the iteration does not settle.
bool power_iteration(const Matrix& m, double& eigenvalue, std::vector<double>& vec) {
    vec.assign(m.size(), 1.0);
    double previous = -1;
    for (int it = 0; it < kPowerCap; ++it) {
        std::vector<double> next = multiply(m, vec);
        const double norm = max_abs(next);
        if (norm == 0) {
            return false;
        }
        double moved = 0;
        for (std::size_t k = 0; k < next.size(); ++k) {
            next[k] /= norm;
            moved = std::max(moved, std::fabs(next[k] - vec[k]));
        }
        vec = std::move(next);
        // the norm alone can repeat while the vector is still moving
        if (moved < kPowerTolerance && std::fabs(norm - previous) < kPowerTolerance * std::max(1.0, norm)) {
            eigenvalue = norm;
            return true;
        }
        previous = norm;
    }
    return false;
}

} // namespace

FusionRing FusionRing::make(std::vector<std::string> labels, std::vector<std::int64_t> n, std::size_t unit) {
    const std::size_t r = labels.size();
    if (r == 0) {
        fail(ErrorKind::InconsistentRing, "a fusion ring needs at least the unit");
    }
    if (n.size() != r * r * r) {
        fail(ErrorKind::Dimension, "expected " + std::to_string(r * r * r) + " structure constants, got " +
                                       std::to_string(n.size()));
    }
    if (unit >= r) {
        fail(ErrorKind::InconsistentRing, "unit index out of range");
    }
    FusionRing ring;
    ring.labels_ = std::move(labels);
    ring.unit_ = unit;
    ring.n_ = std::move(n);
    const auto& L = ring.labels_;

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                if (ring.n(i, j, k) < 0) {
                    fail(ErrorKind::InconsistentRing, "negative structure constant N" + idx(i, j, k));
                }
                const std::int64_t delta = j == k ? 1 : 0;
                if (ring.n(unit, j, k) != delta || ring.n(j, unit, k) != delta) {
                    fail(ErrorKind::InconsistentRing,
                         "unit axiom fails for " + L[unit] + " * " + L[j] + " at " + L[k]);
                }
            }
        }
    }

    ring.dual_.assign(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const std::int64_t v = ring.n(i, j, unit);
            if (v > 1) {
                fail(ErrorKind::InconsistentRing, L[i] + " * " + L[j] + " contains the unit more than once");
            }
            if (v == 1) {
                if (ring.dual_[i] != r) {
                    fail(ErrorKind::InconsistentRing, L[i] + " has two duals");
                }
                ring.dual_[i] = j;
            }
        }
        if (ring.dual_[i] == r) {
            fail(ErrorKind::InconsistentRing, L[i] + " has no dual");
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (ring.dual_[ring.dual_[i]] != i) {
            fail(ErrorKind::InconsistentRing, "duality is not an involution at " + L[i]);
        }
    }

    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                for (std::size_t l = 0; l < r; ++l) {
                    std::int64_t lhs = 0;
                    std::int64_t rhs = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        lhs += ring.n(i, j, m) * ring.n(m, k, l);
                        rhs += ring.n(j, k, m) * ring.n(i, m, l);
                    }
                    if (lhs != rhs) {
                        fail(ErrorKind::InconsistentRing, "associativity fails at (i,j,k,l) = (" + L[i] + "," +
                                                              L[j] + "," + L[k] + "," + L[l] + "): " +
                                                              std::to_string(lhs) + " != " + std::to_string(rhs));
                    }
                }
            }
        }
    }
    return ring;
}

std::size_t FusionRing::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        fail(ErrorKind::Argument, "unknown basis label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<double>> FusionRing::left_matrix(std::size_t i) const {
    const std::size_t r = size();
    Matrix m(r, std::vector<double>(r, 0.0));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
            m[k][j] = static_cast<double>(n(i, j, k));
        }
    }
    return m;
}

namespace {

double eigen_residual(const FusionRing& r, const std::vector<double>& d) {
    double worst = 0;
    const double scale = std::max(1.0, max_abs(d));
    for (std::size_t j = 0; j < r.size(); ++j) {
        std::vector<double> lhs = multiply(r.left_matrix(j), d);
        for (std::size_t k = 0; k < d.size(); ++k) {
            worst = std::max(worst, std::fabs(lhs[k] - d[j] * d[k]) / (scale * std::max(1.0, d[j])));
        }
    }
    return worst;
}

} // namespace

FPData fpdims(const FusionRing& r) {
    const std::size_t n = r.size();
    std::vector<double> dims(n, 0.0);
    std::vector<bool> settled(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = r.left_matrix(i);
        for (std::size_t k = 0; k < n; ++k) {
            m[k][k] += 1.0;
        }
        double lambda = 0;
        std::vector<double> vec;
        if (power_iteration(m, lambda, vec)) {
            dims[i] = lambda - 1.0;
            settled[i] = true;
        }
    }
    if (std::find(settled.begin(), settled.end(), false) != settled.end()) {
        Matrix sum(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const Matrix m = r.left_matrix(i);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    sum[a][b] += m[a][b];
                }
            }
        }
        double lambda = 0;
        std::vector<double> vec;
        if (!power_iteration(sum, lambda, vec) || vec[r.unit()] <= 0) {
            fail(ErrorKind::InconsistentRing, "Perron-Frobenius iteration did not converge");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!settled[i]) {
                dims[i] = vec[i] / vec[r.unit()];
            }
        }
    }
    const double residual = eigen_residual(r, dims);
    if (!(residual <= kCheckTolerance)) {
        fail(ErrorKind::InconsistentRing,
             "FP dimensions are not a common eigenvector (residual " + std::to_string(residual) + ")");
    }
    FPData out;
    out.dims = std::move(dims);
    out.total = std::inner_product(out.dims.begin(), out.dims.end(), out.dims.begin(), 0.0);
    return out;
}

RegularObject regular_object(const FusionRing& r) {
    const FPData fp = fpdims(r);
    RegularObject reg;
    reg.coefficients = fp.dims;
    const auto& R = reg.coefficients;
    for (std::size_t j = 0; j < r.size(); ++j) {
        std::vector<double> lhs = multiply(r.left_matrix(j), R);
        double norm = 0;
        for (std::size_t k = 0; k < R.size(); ++k) {
            norm = std::max(norm, std::fabs(lhs[k] - fp.dims[j] * R[k]));
        }
        reg.residual = std::max(reg.residual, norm);
    }
    const double fp_of_r = std::inner_product(R.begin(), R.end(), fp.dims.begin(), 0.0);
    const double scale = std::max(1.0, fp.total);
    if (reg.residual > kCheckTolerance * scale || std::fabs(fp_of_r - fp.total) > kCheckTolerance * scale) {
        fail(ErrorKind::InconsistentRing, "regular object check failed");
    }
    return reg;
}

FusionRing product_ring(const FusionRing& a, const FusionRing& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t r = na * nb;
    std::vector<std::string> labels;
    labels.reserve(r);
    for (const auto& x : a.labels()) {
        for (const auto& y : b.labels()) {
            labels.push_back("(" + x + "," + y + ")");
        }
    }
    std::vector<std::int64_t> n(r * r * r, 0);
    for (std::size_t i1 = 0; i1 < na; ++i1) {
        for (std::size_t i2 = 0; i2 < nb; ++i2) {
            for (std::size_t j1 = 0; j1 < na; ++j1) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    for (std::size_t k1 = 0; k1 < na; ++k1) {
                        const std::int64_t c1 = a.n(i1, j1, k1);
                        if (c1 == 0) {
                            continue;
                        }
                        for (std::size_t k2 = 0; k2 < nb; ++k2) {
                            const std::size_t i = i1 * nb + i2;
                            const std::size_t j = j1 * nb + j2;
                            const std::size_t k = k1 * nb + k2;
                            n[(i * r + j) * r + k] = c1 * b.n(i2, j2, k2);
                        }
                    }
                }
            }
        }
    }
    return FusionRing::make(std::move(labels), std::move(n), a.unit() * nb + b.unit());
}

FusionRing verlinde_sl2(std::int64_t k) {
    if (k < 1) {
        fail(ErrorKind::Argument, "level must be >= 1, got " + std::to_string(k));
    }
    const std::size_t r = static_cast<std::size_t>(k + 1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) {
        labels.push_back(std::to_string(i));
    }
    std::vector<std::int64_t> n(r * r * r, 0);
    for (std::int64_t i = 0; i <= k; ++i) {
        for (std::int64_t j = 0; j <= k; ++j) {
            for (std::int64_t l = std::abs(i - j); l <= std::min(i + j, 2 * k - i - j); l += 2) {
                n[(static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(l)] = 1;
            }
        }
    }
    return FusionRing::make(std::move(labels), std::move(n));
}

FusionRing pointed_ring(const FiniteAbelianGroup& g) {
    require_enumerable(g.order(), "group ring");
    const std::size_t r = static_cast<std::size_t>(g.order());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) {
        labels.push_back(g.element_at(i).to_string());
    }
    std::vector<std::int64_t> n(r * r * r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            n[(i * r + j) * r + g.add_index(i, j)] = 1;
        }
    }
    return FusionRing::make(std::move(labels), std::move(n), g.index_of(g.zero()));
}

FusionRing fibonacci_ring() {
    // basis 1, tau
    return FusionRing::make({"1", "tau"}, {1, 0, 0, 1,   // 1*1, 1*tau
                                           0, 1, 1, 1}); // tau*1, tau*tau
}

FusionRing ising_ring() {
    // basis 1, epsilon, sigma
    return FusionRing::make({"1", "epsilon", "sigma"},
                            {1, 0, 0, 0, 1, 0, 0, 0, 1,  // 1*x
                             0, 1, 0, 1, 0, 0, 0, 0, 1,  // epsilon*x
                             0, 0, 1, 0, 0, 1, 1, 1, 0}); // sigma*x
}

FusionRing subring(const FusionRing& r, const std::vector<std::size_t>& members) {
    if (std::find(members.begin(), members.end(), r.unit()) == members.end()) {
        fail(ErrorKind::InconsistentRing, "subring must contain the unit");
    }
    const std::size_t s = members.size();
    std::vector<std::string> labels;
    for (std::size_t m : members) {
        labels.push_back(r.labels().at(m));
    }
    std::vector<std::int64_t> n(s * s * s, 0);
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
            std::int64_t inside = 0;
            std::int64_t all = 0;
            for (std::size_t k = 0; k < r.size(); ++k) {
                all += r.n(members[a], members[b], k);
            }
            for (std::size_t c = 0; c < s; ++c) {
                const std::int64_t v = r.n(members[a], members[b], members[c]);
                n[(a * s + b) * s + c] = v;
                inside += v;
            }
            if (inside != all) {
                fail(ErrorKind::InconsistentRing, "members are not closed under multiplication at " +
                                                      labels[a] + " * " + labels[b]);
            }
        }
    }
    const auto unit_pos = static_cast<std::size_t>(std::find(members.begin(), members.end(), r.unit()) -
                                                   members.begin());
    return FusionRing::make(std::move(labels), std::move(n), unit_pos);
}

bool isomorphic_rings(const FusionRing& a, const FusionRing& b) {
    const std::size_t r = a.size();
    if (b.size() != r) {
        return false;
    }
    if (r > 9) {
        fail(ErrorKind::TooLarge, "ring isomorphism search limited to 9 basis elements");
    }
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.unit()] != b.unit()) {
            continue;
        }
        bool same = true;
        for (std::size_t i = 0; i < r && same; ++i) {
            for (std::size_t j = 0; j < r && same; ++j) {
                for (std::size_t k = 0; k < r && same; ++k) {
                    same = a.n(i, j, k) == b.n(perm[i], perm[j], perm[k]);
                }
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

DimensionLedger etale_dimension_ledger(double fpdim_c, double fpdim_a) {
    if (!(fpdim_a >= 1.0) || !(fpdim_c >= fpdim_a)) {
        fail(ErrorKind::Precondition, "need FPdim(A) >= 1 and FPdim(C) >= FPdim(A)");
    }
    const double a2 = fpdim_a * fpdim_a;
    const double tol = kCheckTolerance * std::max(1.0, fpdim_c);
    if (a2 > fpdim_c + tol) {
        fail(ErrorKind::Precondition, "FPdim(A)^2 exceeds FPdim(C)");
    }
    DimensionLedger out;
    out.fpdim_ca = fpdim_c / fpdim_a;
    out.fpdim_ca0 = fpdim_c / a2;
    out.lagrangian = std::fabs(a2 - fpdim_c) <= tol;
    return out;
}

} // namespace wittforge
