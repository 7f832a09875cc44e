#pragma once

#include "wittforge/abelian.hpp"
#include "wittforge/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittforge {

/// Element of ℚ/ℤ as a reduced fraction num/den with 0 <= num < den.
///
/// Values of a quadratic form on a finite group have denominators dividing
/// twice the exponent, so 64-bit storage with overflow-checked arithmetic is
/// exact here; overflow throws instead of wrapping.
class QmodZ {
public:
    constexpr QmodZ() = default;
    QmodZ(std::int64_t num, std::int64_t den);

    static QmodZ from_rational(const Rational& r);
    /// Accepts "p/q", "p" or "-p/q".
    static QmodZ parse(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    Rational to_rational() const { return Rational(num_, den_); }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a);
    friend QmodZ operator*(std::int64_t n, const QmodZ& a);

    friend bool operator==(const QmodZ&, const QmodZ&) = default;
    friend auto operator<=>(const QmodZ&, const QmodZ&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Finite abelian group with a quadratic form q: A -> ℚ/ℤ.
///
/// Stored additively: the multiplicative form e^{2πi q(x)} is never
/// materialised. Internally all values share one denominator so the axiom
/// checks run on plain integers.
class PreMetricGroup {
public:
    /// The trivial group with q = 0.
    PreMetricGroup();

    /// Table indexed by FiniteAbelianGroup::index_of. Validates q(0)=0,
    /// q(-x)=q(x) and bilinearity of b; throws NotQuadraticForm naming the
    /// failing element(s).
    static PreMetricGroup from_table(const FiniteAbelianGroup& g, const std::vector<QmodZ>& table);
    static PreMetricGroup from_table(const FiniteAbelianGroup& g,
                                     const std::map<GroupElement, QmodZ>& table);

    /// Expands q(Σ c_i e_i) = Σ c_i² q(e_i) + Σ_{i<j} c_i c_j b(e_i,e_j) over
    /// canonical residues c_i, then validates like from_table. Keys of
    /// `off_diagonal` are 0-based (i, j) with i < j.
    static PreMetricGroup from_gram(const FiniteAbelianGroup& g, const std::vector<QmodZ>& q_diagonal,
                                    const std::map<std::pair<std::size_t, std::size_t>, QmodZ>& off_diagonal = {});

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    std::int64_t order() const noexcept { return group_.order(); }

    QmodZ q(const GroupElement& x) const;
    QmodZ q_at(std::size_t index) const;
    /// b(x,y) = q(x+y) - q(x) - q(y).
    QmodZ bilinear(const GroupElement& x, const GroupElement& y) const;
    QmodZ bilinear_at(std::size_t a, std::size_t b) const;

    /// Full value table in index order.
    std::vector<QmodZ> table() const;

    bool is_nondegenerate() const;
    bool is_anisotropic() const;
    /// {x : b(x, y) = 0 for all y}
    Subgroup radical() const;

    friend bool operator==(const PreMetricGroup& a, const PreMetricGroup& b) {
        return a.group_ == b.group_ && a.table() == b.table();
    }

    /// "Z/2+Z/4 q=[1/4,1/8] b12=0" style summary of the Gram data.
    std::string to_string() const;
    /// Compact spec "n1,n2:q1,q2;i,j=b" accepted by the command-line parser.
    std::string to_spec() const;

private:
    PreMetricGroup(FiniteAbelianGroup g, std::int64_t den, std::vector<std::int64_t> nums);
    // `scan_bilinear` = false is for tables derived from forms already checked.
    static PreMetricGroup validated(const FiniteAbelianGroup& g, const std::vector<QmodZ>& table,
                                    bool scan_bilinear = true);

    friend PreMetricGroup m_subquotient(const PreMetricGroup& pm, const Subgroup& h);
    friend PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b);

    // b in units of 1/den_, reduced mod den_.
    std::int64_t b_num(std::size_t a, std::size_t b) const noexcept;

    FiniteAbelianGroup group_;
    std::int64_t den_ = 1;
    std::vector<std::int64_t> nums_;
};

QmodZ bilinear(const PreMetricGroup& pm, const GroupElement& x, const GroupElement& y);
bool is_nondegenerate(const PreMetricGroup& pm);
bool is_anisotropic(const PreMetricGroup& pm);

/// {x : b(x, h) = 0 for all h in H}
Subgroup orthogonal_complement(const PreMetricGroup& pm, const Subgroup& h);

/// q vanishes on every element of h.
bool is_isotropic(const PreMetricGroup& pm, const Subgroup& h);

/// (H^⊥/H, q̃) with q̃(x + H) = q(x). Requires pm non-degenerate and h isotropic.
PreMetricGroup m_subquotient(const PreMetricGroup& pm, const Subgroup& h);

/// A₁ ⊕ A₂ with q(x, y) = q₁(x) + q₂(y).
PreMetricGroup direct_sum(const PreMetricGroup& a, const PreMetricGroup& b);

/// Restriction of q to the Sylow p-subgroup, re-presented in invariant-factor form.
PreMetricGroup prime_part(const PreMetricGroup& pm, std::int64_t p);

/// Primes dividing the group order, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Some group isomorphism carries q₁ to q₂. Backtracking over generator
/// images with value and pairing constraints; subject to the enumeration cap.
bool isometric(const PreMetricGroup& a, const PreMetricGroup& b);

/// Same group, q ↦ -q.
PreMetricGroup reverse(const PreMetricGroup& pm);

} // namespace wittforge
