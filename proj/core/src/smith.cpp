#include "wittforge/smith.hpp"

#include "wittforge/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace wittforge {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            fail(ErrorKind::Dimension, "ragged initializer for IntegerMatrix");
        }
        for (long x : row) {
            entries_.emplace_back(x);
        }
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            out << (j ? "," : "") << (*this)(i, j).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) {
        fail(ErrorKind::Dimension, "matrix product shape mismatch");
    }
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) {
        fail(ErrorKind::Dimension, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(swap_row, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(d(i, i));
    }
    return out;
}

namespace {

// Elementary operations applied to D while keeping U·M·V = D and the
// tracked inverses consistent.
class Reducer {
public:
    explicit Reducer(const IntegerMatrix& m)
        : form_{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols()),
                IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())} {}

    SmithForm run();

private:
    IntegerMatrix& d() { return form_.d; }

    // row_i += q * row_k
    void row_add(std::size_t i, std::size_t k, const Integer& q) {
        for (std::size_t j = 0; j < d().cols(); ++j) {
            d()(i, j) += q * d()(k, j);
        }
        for (std::size_t j = 0; j < form_.u.cols(); ++j) {
            form_.u(i, j) += q * form_.u(k, j);
        }
        for (std::size_t r = 0; r < form_.u_inverse.rows(); ++r) {
            form_.u_inverse(r, k) -= q * form_.u_inverse(r, i);
        }
    }

    void row_swap(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < d().cols(); ++j) {
            std::swap(d()(i, j), d()(k, j));
        }
        for (std::size_t j = 0; j < form_.u.cols(); ++j) {
            std::swap(form_.u(i, j), form_.u(k, j));
        }
        for (std::size_t r = 0; r < form_.u_inverse.rows(); ++r) {
            std::swap(form_.u_inverse(r, i), form_.u_inverse(r, k));
        }
    }

    void row_negate(std::size_t i) {
        for (std::size_t j = 0; j < d().cols(); ++j) {
            d()(i, j) = -d()(i, j);
        }
        for (std::size_t j = 0; j < form_.u.cols(); ++j) {
            form_.u(i, j) = -form_.u(i, j);
        }
        for (std::size_t r = 0; r < form_.u_inverse.rows(); ++r) {
            form_.u_inverse(r, i) = -form_.u_inverse(r, i);
        }
    }

    // col_j += q * col_k
    void col_add(std::size_t j, std::size_t k, const Integer& q) {
        for (std::size_t i = 0; i < d().rows(); ++i) {
            d()(i, j) += q * d()(i, k);
        }
        for (std::size_t i = 0; i < form_.v.rows(); ++i) {
            form_.v(i, j) += q * form_.v(i, k);
        }
        for (std::size_t c = 0; c < form_.v_inverse.cols(); ++c) {
            form_.v_inverse(k, c) -= q * form_.v_inverse(j, c);
        }
    }

    void col_swap(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < d().rows(); ++i) {
            std::swap(d()(i, j), d()(i, k));
        }
        for (std::size_t i = 0; i < form_.v.rows(); ++i) {
            std::swap(form_.v(i, j), form_.v(i, k));
        }
        for (std::size_t c = 0; c < form_.v_inverse.cols(); ++c) {
            std::swap(form_.v_inverse(j, c), form_.v_inverse(k, c));
        }
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < d().rows(); ++i) {
            for (std::size_t j = t; j < d().cols(); ++j) {
                const Integer& x = d()(i, j);
                if (x != 0 && (!found || abs(x) < best)) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        return found;
    }

    SmithForm form_;
};

SmithForm Reducer::run() {
    const std::size_t n = std::min(d().rows(), d().cols());
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = t;
        std::size_t pj = t;
        if (!find_pivot(t, pi, pj)) {
            break;
        }
        if (pi != t) {
            row_swap(pi, t);
        }
        if (pj != t) {
            col_swap(pj, t);
        }
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d().rows(); ++i) {
                while (d()(i, t) != 0) {
                    Integer q = d()(i, t) / d()(t, t);
                    row_add(i, t, -q);
                    if (d()(i, t) != 0) {
                        row_swap(i, t);
                    }
                }
            }
            for (std::size_t j = t + 1; j < d().cols(); ++j) {
                while (d()(t, j) != 0) {
                    Integer q = d()(t, j) / d()(t, t);
                    col_add(j, t, -q);
                    if (d()(t, j) != 0) {
                        col_swap(j, t);
                        clean = false;
                    }
                }
            }
            if (!clean) {
                continue;
            }
            // Enforce d_t | every remaining entry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < d().rows() && divisible; ++i) {
                for (std::size_t j = t + 1; j < d().cols(); ++j) {
                    if (d()(i, j) % d()(t, t) != 0) {
                        row_add(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (d()(t, t) < 0) {
            row_negate(t);
        }
    }
    return std::move(form_);
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) { return Reducer(m).run(); }

} // namespace wittforge
