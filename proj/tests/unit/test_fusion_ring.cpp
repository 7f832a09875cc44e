#include "oracles.hpp"

#include "wittforge/error.hpp"
#include "wittforge/fusion_ring.hpp"

#include <doctest.h>

#include <cmath>

using namespace wittforge;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

// d_i d_j = Σ_k N_ij^k d_k
void check_character(const FusionRing& r, const FPData& fp) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            double rhs = 0;
            for (std::size_t k = 0; k < r.size(); ++k) {
                rhs += static_cast<double>(r.n(i, j, k)) * fp.dims[k];
            }
            CHECK(fp.dims[i] * fp.dims[j] == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

} // namespace

TEST_CASE("Fibonacci and Ising dimensions") {
    const auto fib = fpdims(fibonacci_ring());
    CHECK(fib.dims[0] == doctest::Approx(1.0));
    CHECK(fib.dims[1] == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(fib.total == doctest::Approx(1 + kPhi * kPhi).epsilon(1e-12));
    check_character(fibonacci_ring(), fib);

    const auto ising = fpdims(ising_ring());
    const auto r = ising_ring();
    CHECK(ising.dims[r.index_of("sigma")] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ising.dims[r.index_of("epsilon")] == doctest::Approx(1.0));
    CHECK(ising.total == doctest::Approx(4.0).epsilon(1e-12));
    check_character(r, ising);
}

TEST_CASE("sl2 Verlinde rings against quantum dimensions") {
    for (std::int64_t k = 1; k <= 30; ++k) {
        const FusionRing r = verlinde_sl2(k);
        const FPData fp = fpdims(r);
        const auto expected = testing::sl2_quantum_dimensions(k);
        REQUIRE(fp.dims.size() == expected.size());
        double total = 0;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK_MESSAGE(fp.dims[i] == doctest::Approx(expected[i]).epsilon(1e-9), "k=" << k << " i=" << i);
            total += expected[i] * expected[i];
        }
        CHECK(fp.total == doctest::Approx(total).epsilon(1e-9));
        const double closed = (k + 2) / (2 * std::pow(std::sin(M_PI / (k + 2)), 2));
        CHECK(fp.total == doctest::Approx(closed).epsilon(1e-9));
        check_character(r, fp);
        CHECK(regular_object(r).residual < 1e-9);
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(r.dual(i) == i);
        }
    }
}

TEST_CASE("pointed rings") {
    const auto g = FiniteAbelianGroup::make({2, 4});
    const FusionRing r = pointed_ring(g);
    const FPData fp = fpdims(r);
    CHECK(fp.total == doctest::Approx(8.0));
    for (double d : fp.dims) {
        CHECK(d == doctest::Approx(1.0));
    }
    CHECK(isomorphic_rings(product_ring(pointed_ring(FiniteAbelianGroup::make({2})),
                                        pointed_ring(FiniteAbelianGroup::make({3}))),
                           pointed_ring(FiniteAbelianGroup::make({6}))));
    CHECK_FALSE(isomorphic_rings(pointed_ring(FiniteAbelianGroup::make({2, 2})),
                                 pointed_ring(FiniteAbelianGroup::make({4}))));
}

TEST_CASE("FP dimension is multiplicative under products") {
    const std::vector<FusionRing> rings{fibonacci_ring(), ising_ring(), verlinde_sl2(3), verlinde_sl2(5),
                                        pointed_ring(FiniteAbelianGroup::make({3}))};
    for (const auto& a : rings) {
        for (const auto& b : rings) {
            if (a.size() * b.size() > 24) {
                continue;
            }
            const FusionRing p = product_ring(a, b);
            const FPData fa = fpdims(a);
            const FPData fb = fpdims(b);
            const FPData fp = fpdims(p);
            CHECK(fp.total == doctest::Approx(fa.total * fb.total).epsilon(1e-9));
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    CHECK(fp.dims[i * b.size() + j] == doctest::Approx(fa.dims[i] * fb.dims[j]).epsilon(1e-9));
                }
            }
        }
    }
    const FPData ff = fpdims(product_ring(fibonacci_ring(), fibonacci_ring()));
    CHECK(ff.total == doctest::Approx(13.0901699437).epsilon(1e-9));

    const FusionRing trivial = pointed_ring(FiniteAbelianGroup{});
    CHECK(isomorphic_rings(product_ring(ising_ring(), trivial), ising_ring()));
}

TEST_CASE("small Verlinde rings") {
    CHECK(isomorphic_rings(verlinde_sl2(1), pointed_ring(FiniteAbelianGroup::make({2}))));
    CHECK(isomorphic_rings(verlinde_sl2(2), ising_ring()));
    CHECK(isomorphic_rings(subring(verlinde_sl2(3), {0, 2}), fibonacci_ring()));
    CHECK_FALSE(isomorphic_rings(verlinde_sl2(3), product_ring(fibonacci_ring(), pointed_ring(FiniteAbelianGroup::make({3})))));
    CHECK_THROWS_AS(subring(verlinde_sl2(3), {0, 1}), Error);
}

TEST_CASE("inconsistent rings are rejected") {
    // x*x = 1 + 2x is fine, x*x = 2 with a 1-dimensional unit row is not
    CHECK_NOTHROW(FusionRing::make({"1", "x"}, {1, 0, 0, 1, 0, 1, 1, 2}));
    try {
        // unit row broken
        FusionRing::make({"1", "x"}, {1, 0, 1, 1, 0, 1, 1, 1});
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InconsistentRing);
    }
    try {
        // a,b with a*a = b, b*b = b, a*b = a + b is not associative
        FusionRing::make({"1", "a", "b"}, {1, 0, 0, 0, 1, 0, 0, 0, 1,
                                           0, 1, 0, 0, 0, 1, 0, 1, 1,
                                           0, 0, 1, 0, 1, 1, 0, 0, 1});
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InconsistentRing);
    }
    CHECK_THROWS_AS(FusionRing::make({"1", "x"}, {1, 0, 0, 1, 0, 1, 1, -1}), Error);
}

TEST_CASE("dimension ledger") {
    auto l = etale_dimension_ledger(4, 2);
    CHECK(l.fpdim_ca == doctest::Approx(2));
    CHECK(l.fpdim_ca0 == doctest::Approx(1));
    CHECK(l.lagrangian);
    for (double d : {1.5, 2.0, kPhi, 3.7}) {
        l = etale_dimension_ledger(d * d, d);
        CHECK(l.fpdim_ca0 == doctest::Approx(1));
        CHECK(l.lagrangian);
    }
    l = etale_dimension_ledger(fpdims(verlinde_sl2(8)).total, 2);
    CHECK_FALSE(l.lagrangian);
    CHECK(l.fpdim_ca0 == doctest::Approx(fpdims(product_ring(fibonacci_ring(), fibonacci_ring())).total).epsilon(1e-9));
    CHECK_THROWS_AS(etale_dimension_ledger(4, 0.5), Error);
    CHECK_THROWS_AS(etale_dimension_ledger(2, 3), Error);
    CHECK_THROWS_AS(etale_dimension_ledger(3, 2), Error);
}
