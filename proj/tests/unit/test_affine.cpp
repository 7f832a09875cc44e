#include "oracles.hpp"

#include "wittforge/affine.hpp"
#include "wittforge/error.hpp"
#include "wittforge/lie.hpp"
#include "wittforge/parse.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace wittforge;

namespace {

SimpleLieType lie(char family, std::int64_t rank) {
    return SimpleLieType::make(static_cast<LieFamily>(family - 'A'), rank);
}

Rational frac(std::int64_t p, std::int64_t q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational c(std::string_view symbol) { return central_charge(parse_algebra(symbol)); }

VerificationReport embeddings(const std::string& text, const VerifyOptions& opt = {}) {
    std::istringstream in(text);
    return verify_embeddings(parse_embeddings(in, "inline"), opt);
}

VerificationReport cosets(const std::string& text, const VerifyOptions& opt = {}) {
    std::istringstream in(text);
    return verify_cosets(parse_cosets(in, "inline"), opt);
}

} // namespace

TEST_CASE("Lie data matches the root-system oracle up to rank 25") {
    for (char family : std::string("ABCDEFG")) {
        for (int rank = 1; rank <= 25; ++rank) {
            if (!SimpleLieType::valid(static_cast<LieFamily>(family - 'A'), rank)) {
                continue;
            }
            const auto t = lie(family, rank);
            const auto oracle = testing::root_system(family, rank);
            CHECK_MESSAGE(lie_dim(t) == oracle.dimension, t.to_string());
            CHECK_MESSAGE(dual_coxeter(t) == oracle.dual_coxeter, t.to_string());
        }
    }
    CHECK(lie_dim(lie('A', 1)) == 3);
    CHECK(dual_coxeter(lie('A', 1)) == 2);
    CHECK(lie_dim(lie('G', 2)) == 14);
    CHECK(dual_coxeter(lie('G', 2)) == 4);
    CHECK(lie_dim(lie('E', 8)) == 248);
    CHECK(dual_coxeter(lie('E', 8)) == 30);
}

TEST_CASE("invalid ranks are rejected") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'B', 1}, {'C', 1}, {'D', 2}, {'E', 5}, {'E', 9}, {'F', 3}, {'G', 3}, {'A', 0}}) {
        try {
            lie(f, r);
            FAIL("accepted " << f << r);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Argument);
        }
    }
}

TEST_CASE("central charges") {
    CHECK(c("A1:1") == 1);
    CHECK(c("A1:10") == frac(5, 2));
    CHECK(c("B2:1") == frac(5, 2));
    CHECK(c("G2:1") == frac(14, 5));
    CHECK(c("su(6):1") == 5);
    CHECK(c("so(9):1") == frac(9, 2));
    CHECK(c("sp(4):1") == frac(5, 2));
    CHECK(c("u1:1") == 1);
    CHECK(c("u1:7") == 1);
    CHECK(c("so(3):2") == c("A1:4"));
    CHECK(c("so(4):3") == 2 * c("A1:3"));
    CHECK(c("so(5):2") == c("C2:2"));
    CHECK(c("so(6):2") == c("A3:2"));
    CHECK(c("sp(2):5") == c("A1:5"));
    CHECK_THROWS_AS(central_charge(lie('A', 1), 0), Error);
}

TEST_CASE("alias resolution") {
    auto resolved = resolve_alias(parse_algebra("so(4):3"));
    REQUIRE(resolved.size() == 2);
    CHECK(resolved[0].type->to_string() == "A1");
    CHECK(resolved[0].level == 3);
    resolved = resolve_alias(parse_algebra("so(3):2"));
    CHECK(resolved[0].level == 4);
    CHECK(resolve_alias(parse_algebra("so(10):1"))[0].type->to_string() == "D5");
    CHECK(resolve_alias(parse_algebra("so(11):1"))[0].type->to_string() == "B5");
    CHECK(resolve_alias(parse_algebra("sp(8):1"))[0].type->to_string() == "C4");
    CHECK_FALSE(resolve_alias(parse_algebra("u1:3"))[0].type.has_value());
    for (const char* bad : {"so(1):1", "so(2):1", "su(1):1", "sp(3):1"}) {
        try {
            resolve_alias(parse_algebra(bad));
            FAIL(bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnsupportedSymbol);
        }
    }
}

TEST_CASE("central charge grows with the level and stays below the dimension") {
    for (char family : std::string("ABCDEFG")) {
        for (int rank = 1; rank <= 8; ++rank) {
            if (!SimpleLieType::valid(static_cast<LieFamily>(family - 'A'), rank)) {
                continue;
            }
            const auto t = lie(family, rank);
            Rational previous(0);
            for (int k = 1; k <= 50; ++k) {
                const Rational now = central_charge(t, k);
                CHECK(now > previous);
                CHECK(now < lie_dim(t));
                previous = now;
            }
        }
    }
}

TEST_CASE("Virasoro minimal charges") {
    CHECK(virasoro_charge(1) == frac(1, 2));
    CHECK(virasoro_charge(2) == frac(7, 10));
    Rational previous(0);
    for (int m = 1; m <= 100; ++m) {
        const Rational cm = virasoro_charge(m);
        CHECK(cm > previous);
        CHECK(cm < 1);
        previous = cm;
    }
    CHECK_THROWS_AS(virasoro_charge(0), Error);
}

TEST_CASE("GKO identity for n = 1..100") {
    for (int n = 1; n <= 100; ++n) {
        const Rational lhs = 1 + frac(3 * n, n + 2) - frac(3 * (n + 1), n + 3);
        CHECK(lhs == virasoro_charge(n));
        CHECK(central_charge(lie('A', 1), 1) + central_charge(lie('A', 1), n) - central_charge(lie('A', 1), n + 1) ==
              virasoro_charge(n));
    }
}

TEST_CASE("plus-sector charges") {
    CHECK(plus_sector_charge(3).value() == frac(14, 5));
    CHECK(plus_sector_charge(5).value() == frac(8, 7));
    CHECK(plus_sector_charge(7).value() == frac(10, 3));
    CHECK_THROWS_AS(plus_sector_charge(4), Error);
    CHECK_THROWS_AS(plus_sector_charge(1), Error);
}

TEST_CASE("relation charges") {
    CHECK(relation_charge(parse_relation("A1:6^2 * A1:2^-3")).is_zero());
    CHECK(relation_charge(parse_relation("A1:8 * sl2plus:3^2")).is_zero());
    CHECK(relation_charge(parse_relation("F4:6 * A2:2")).is_zero());
    CHECK(relation_charge(parse_relation("A1:10 * A1:2^-7")).is_zero());
    CHECK(relation_charge(parse_relation("A1:28 * sl2plus:3^-1")).is_zero());
    CHECK(relation_charge(parse_relation("A1:1 * pt[2:1/4]^-1")).is_zero());
    CHECK(relation_charge(parse_relation("Vir:m=1 * A1:2 * A1:1^-2")).is_zero());
    CHECK(relation_charge(parse_relation("A1:2")).value() == frac(3, 2));

    for (const char* text : {"A1:6^2 * A1:2^-3", "G2:1 * Vir:m=3^5", "pt[3:1/3] * sl2plus:5^2 * E7:3"}) {
        const RelationExpr r = parse_relation(text);
        CHECK(relation_charge(r.inverse()) == -relation_charge(r));
    }
}

TEST_CASE("embedding verification") {
    auto r = embeddings("A1:10 <= B2:1\n");
    REQUIRE(r.entries().size() == 1);
    CHECK(r.entries()[0].status == Status::Ok);
    CHECK(r.entries()[0].detail.find("5/2 = 5/2") != std::string::npos);

    r = embeddings("su(m):n x su(n):m <= su(m*n):1 | m=2..3, n=3..3\n");
    CHECK(r.entries()[0].status == Status::Ok);
    CHECK(r.entries()[0].detail.find("2/2 instantiations equal") != std::string::npos);

    r = embeddings("A1:2 <= B2:1\n");
    CHECK(r.entries()[0].status == Status::Fail);
    CHECK(r.entries()[0].detail.find("3/2 != 5/2") != std::string::npos);

    r = embeddings("D1:1 x D5:1 <= E6:1\n");
    CHECK(r.entries()[0].status == Status::Skipped);

    VerifyOptions per;
    per.per_instance = true;
    r = embeddings("so(m):4 x su(2):m <= sp(2m):1 | m=1..4\n", per);
    REQUIRE(r.entries().size() == 4);
    CHECK(r.count(Status::Skipped) == 2);
    CHECK(r.count(Status::Ok) == 2);
}

TEST_CASE("printed misprints fail, corrections pass") {
    CHECK(embeddings("A_{2n+1}:4n+5 <= B_{4n^2+7n+2}:1 | n\n").entries()[0].status == Status::Fail);
    CHECK(embeddings("B_{2n+1}:4n+5 <= B_{4n^2+7n+2}:1 | n\n").entries()[0].status == Status::Ok);
    CHECK(embeddings("D_i:1 x B_{n-1}:1 <= B_n:1 | n=5.., i=3..n-2\n").entries()[0].status == Status::Fail);
    CHECK(cosets("Vir:m=2 = (E8:2) / (A1:2 x E7:1)\n").entries()[0].status == Status::Fail);
    CHECK(cosets("Vir:m=2 = (E8:2) / (A1:2 x E7:2)\n").entries()[0].status == Status::Ok);
    CHECK(cosets("Vir:m=9 = (F4:1) / (C3:2 x A1:2)\n").entries()[0].status == Status::Fail);
    CHECK(cosets("Vir:m=9 = (F4:2) / (C3:2 x A1:2)\n").entries()[0].status == Status::Ok);
    CHECK(cosets("Vir:m=n = (A_{n+1}:2) / (A_n:2 x u1:1) | n\n").entries()[0].status == Status::Fail);
}

TEST_CASE("coset verification") {
    auto r = cosets("Vir:m=1 = (A1:1 x A1:1) / (A1:2)\n");
    CHECK(r.entries()[0].status == Status::Ok);
    CHECK(r.entries()[0].detail.find("1/2 = 1/2") != std::string::npos);
    CHECK(cosets("Vir:m=2 = (E7:2) / (A7:2)\n").entries()[0].status == Status::Ok);
    CHECK(cosets("Vir:m=2 = (F4:1) / (B4:1)\n").entries()[0].status == Status::Ok);
    CHECK(cosets("Vir:m=n = (A1:1 x A1:n) / (A1:n+1) | n=1..30\n").entries()[0].status == Status::Ok);
    // a difference of 0 is never a Virasoro charge
    CHECK(cosets("Vir:m=1 = (A1:1) / (A1:1)\n").entries()[0].status == Status::Fail);
}

TEST_CASE("range options") {
    VerifyOptions narrow;
    narrow.lo = 1;
    narrow.hi = 3;
    narrow.clip = true;
    auto r = cosets("Vir:m=n = (A1:1 x A1:n) / (A1:n+1) | n=1..30\n", narrow);
    CHECK(r.entries()[0].detail.find("3/3 instantiations") != std::string::npos);
    VerifyOptions open;
    open.hi = 5;
    r = cosets("Vir:m=n = (A1:1 x A1:n) / (A1:n+1) | n=1..30\n", open);
    CHECK(r.entries()[0].detail.find("30/30 instantiations") != std::string::npos);
}

TEST_CASE("shipped tables verify") {
    const std::string dir = WITTFORGE_TEST_DATA_DIR;
    std::ifstream e(dir + "/conformal_embeddings.txt");
    std::ifstream c(dir + "/cosets.txt");
    std::ifstream s(dir + "/sl2_relations.txt");
    const auto emb = verify_embeddings(parse_embeddings(e, "conformal_embeddings.txt"));
    const auto cos = verify_cosets(parse_cosets(c, "cosets.txt"));
    const auto rel = verify_relations(parse_relations(s, "sl2_relations.txt"));
    CHECK(emb.count(Status::Fail) == 0);
    CHECK(emb.count(Status::Error) == 0);
    CHECK(emb.count(Status::Skipped) == 8);
    CHECK(cos.passed(true));
    CHECK(rel.passed(true));
    for (const auto& entry : emb.entries()) {
        if (entry.status == Status::Skipped) {
            CHECK(entry.detail.find("D1") != std::string::npos);
        }
    }
    // serial output is identical to the threaded one
    std::ifstream e2(dir + "/conformal_embeddings.txt");
    VerifyOptions serial;
    serial.parallel = false;
    CHECK(verify_embeddings(parse_embeddings(e2, "conformal_embeddings.txt"), serial).render() == emb.render());
}

TEST_CASE("sl2 suite") {
    const VerificationReport r = sl2_suite();
    CHECK(r.count(Status::Fail) == 0);
    CHECK(r.count(Status::Error) == 0);
    CHECK(r.count(Status::Skipped) == 2);
    std::set<int> items;
    for (const auto& e : r.entries()) {
        items.insert(e.source.line);
    }
    CHECK(items == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}
