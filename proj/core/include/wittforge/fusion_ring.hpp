#pragma once

#include "wittforge/abelian.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wittforge {

/// Based ring with non-negative structure constants N_{ij}^k.
class FusionRing {
public:
    /// `n` is flattened as n[(i*r + j)*r + k] = N_{ij}^k with r = labels.size().
    /// Validates non-negativity, the unit, duality and associativity; throws
    /// InconsistentRing naming the offending indices.
    static FusionRing make(std::vector<std::string> labels, std::vector<std::int64_t> n,
                           std::size_t unit = 0);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t unit() const noexcept { return unit_; }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    std::int64_t n(std::size_t i, std::size_t j, std::size_t k) const {
        return n_[(i * size() + j) * size() + k];
    }
    /// Label lookup; throws Argument if absent.
    std::size_t index_of(const std::string& label) const;

    /// Left multiplication by X_i as a dense matrix: L[k][j] = N_{ij}^k.
    std::vector<std::vector<double>> left_matrix(std::size_t i) const;

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.labels_ == b.labels_ && a.unit_ == b.unit_ && a.n_ == b.n_;
    }

private:
    std::vector<std::string> labels_;
    std::size_t unit_ = 0;
    std::vector<std::size_t> dual_;
    std::vector<std::int64_t> n_;
};

struct FPData {
    std::vector<double> dims;
    double total = 0; // Σ dims²
};

/// Perron–Frobenius dimensions. Per basis element, power iteration on N_i + I
/// from the all-ones vector; elements that do not converge take their value
/// from the PF vector of Σ_i N_i. The result is checked to be a common
/// eigenvector of every N_j (1e-9, scaled); failure throws InconsistentRing.
FPData fpdims(const FusionRing& r);

struct RegularObject {
    std::vector<double> coefficients; // R = Σ FPdim(X_i) [X_i]
    double residual = 0;              // max_j ‖N_j R − FPdim(X_j) R‖_∞
};

/// Throws InconsistentRing if the residual or |FPdim(R) − FPdim(r)| exceeds 1e-9 (scaled).
RegularObject regular_object(const FusionRing& r);

/// Deligne product at the Grothendieck level. Labels "(a,b)", index i1*|r2| + i2.
FusionRing product_ring(const FusionRing& a, const FusionRing& b);

/// Truncated Clebsch–Gordan rules at level k; labels "0".."k".
FusionRing verlinde_sl2(std::int64_t k);

/// Group ring; labels are element coordinates in index order.
FusionRing pointed_ring(const FiniteAbelianGroup& g);

FusionRing fibonacci_ring();
FusionRing ising_ring();

/// Subring spanned by `members` (must contain the unit and be closed).
FusionRing subring(const FusionRing& r, const std::vector<std::size_t>& members);

/// Same structure constants after some relabeling fixing the unit (brute force, small rings).
bool isomorphic_rings(const FusionRing& a, const FusionRing& b);

struct DimensionLedger {
    double fpdim_ca = 0;  // FPdim(C)/FPdim(A)
    double fpdim_ca0 = 0; // FPdim(C)/FPdim(A)²
    bool lagrangian = false;
};

/// Pure arithmetic on supplied dimensions. Throws Precondition if
/// fpdim_a < 1, fpdim_c < fpdim_a, or fpdim_a² > fpdim_c beyond 1e-9.
DimensionLedger etale_dimension_ledger(double fpdim_c, double fpdim_a);

} // namespace wittforge
