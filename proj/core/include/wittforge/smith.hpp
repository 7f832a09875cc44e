#pragma once

#include "wittforge/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wittforge {

/// Dense integer matrix with unbounded entries, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntegerMatrix& m);

/// U·M·V = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0, and U, V unimodular.
/// The inverses of U and V are tracked alongside so callers can map
/// coordinates in both directions.
struct SmithForm {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    IntegerMatrix u_inverse;
    IntegerMatrix v_inverse;

    /// Diagonal entries d_0 .. d_{min(rows,cols)-1}.
    std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

} // namespace wittforge
