#pragma once

#include "wittforge/charge.hpp"
#include "wittforge/expr.hpp"
#include "wittforge/integer.hpp"
#include "wittforge/lie.hpp"
#include "wittforge/qform.hpp"
#include "wittforge/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wittforge {

enum class ClassicalSeries { SU, SO, SP };

/// su(n), so(n), sp(n) by matrix size n.
struct ClassicalAlias {
    ClassicalSeries series;
    std::int64_t n;

    friend bool operator==(const ClassicalAlias&, const ClassicalAlias&) = default;
};

struct U1 {
    friend bool operator==(const U1&, const U1&) = default;
};

using AffineSymbol = std::variant<SimpleLieType, ClassicalAlias, U1>;

struct LevelledAlgebra {
    AffineSymbol symbol;
    std::int64_t level = 1;

    /// "A1:10", "su(6):1", "u1:1".
    std::string to_string() const;

    friend bool operator==(const LevelledAlgebra&, const LevelledAlgebra&) = default;
};

struct ResolvedFactor {
    std::optional<SimpleLieType> type; // empty for u(1)
    std::int64_t level = 1;
};

/// su(n)→A_{n-1}; sp(2n)→C_n (sp(2)→A1); so(2n+1)→B_n, so(2n)→D_n (n≥4);
/// so(3)_k→A1 at 2k, so(4)_k→A1×A1 at k, so(5)→C2, so(6)→A3. Throws
/// UnsupportedSymbol for so(1), so(2), su(1) and odd sp.
std::vector<ResolvedFactor> resolve_alias(const LevelledAlgebra& a);

/// k·dim/(k+h∨) exactly; u(1) gives 1 at every level.
Rational central_charge(const SimpleLieType& t, std::int64_t level);
Rational central_charge(const LevelledAlgebra& a);

/// c_m = 1 − 6/((m+2)(m+3)), m ≥ 1.
Rational virasoro_charge(std::int64_t m);

/// Charge of the integer-spin part of sl(2) at odd level k ≥ 3:
/// 3k/(k+2) + (−1)^{(k+1)/2}.
CentralCharge plus_sector_charge(std::int64_t k);

struct VirasoroTerm {
    std::int64_t m;
};
struct PlusSectorTerm {
    std::int64_t k;
};

using RelationTerm = std::variant<LevelledAlgebra, PreMetricGroup, VirasoroTerm, PlusSectorTerm>;

struct RelationFactor {
    RelationTerm term;
    std::int64_t exponent = 1;
};

/// Formal product Π term^exponent of classes.
struct RelationExpr {
    std::vector<RelationFactor> factors;

    RelationExpr inverse() const;
    std::string to_string() const;
};

std::string term_to_string(const RelationTerm& t);
CentralCharge term_charge(const RelationTerm& t);
CentralCharge relation_charge(const RelationExpr& r);

// ---------------------------------------------------------------------------
// Data-file entries and verification

/// Algebra with symbolic rank/size and level, e.g. su(m*n):1 or A_{2n+1}:4n+1.
struct AlgebraTemplate {
    enum class Kind { Dynkin, SU, SO, SP, U1 };
    Kind kind = Kind::Dynkin;
    LieFamily family = LieFamily::A; // Dynkin only
    Expr size;                       // rank (Dynkin) or matrix size (aliases)
    Expr level;
    std::string text;

    /// Throws UnsupportedSymbol when the instantiated rank has no simple type.
    LevelledAlgebra instantiate(const Bindings& env) const;
};

struct ParamRange {
    std::string name;
    std::optional<Expr> lo;
    std::optional<Expr> hi;
};

struct EmbeddingEntry {
    SourceId source;
    std::string text;
    std::vector<AlgebraTemplate> parts;
    std::vector<AlgebraTemplate> target;
    std::vector<ParamRange> params;
};

struct CosetEntry {
    SourceId source;
    std::string text;
    Expr m;
    std::vector<AlgebraTemplate> numerator;
    std::vector<AlgebraTemplate> denominator;
    std::vector<ParamRange> params;
};

struct RelationEntry {
    SourceId source;
    std::string id;
    std::string text;
    RelationExpr expr;
    bool conjectural = false;
};

struct VerifyOptions {
    /// Open parameter bounds default to [lo, hi].
    std::int64_t lo = 1;
    std::int64_t hi = 20;
    /// Also clip bounds stated in the data to [lo, hi].
    bool clip = false;
    /// One report entry per instantiation instead of one per data line.
    bool per_instance = false;
    /// Check entries concurrently; output order is unaffected.
    bool parallel = true;
};

VerificationReport verify_embedding(const EmbeddingEntry& e, const VerifyOptions& opt = {});
VerificationReport verify_coset(const CosetEntry& e, const VerifyOptions& opt = {});
VerificationReport verify_relation(const RelationEntry& e);

VerificationReport verify_embeddings(const std::vector<EmbeddingEntry>& es, const VerifyOptions& opt = {});
VerificationReport verify_cosets(const std::vector<CosetEntry>& es, const VerifyOptions& opt = {});
VerificationReport verify_relations(const std::vector<RelationEntry>& es);

/// Central-charge consequences of the sl(2) relations, itemized.
VerificationReport sl2_suite();

} // namespace wittforge
