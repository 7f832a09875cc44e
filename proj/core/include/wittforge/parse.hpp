#pragma once

#include "wittforge/affine.hpp"
#include "wittforge/fusion_ring.hpp"
#include "wittforge/qform.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace wittforge {

// All functions throw ErrorKind::Parse on malformed text, with "source:line:"
// prefixes for file input.

/// "A1:10", "E8:2", "A_{2n+1}:4n+1", "su(m*n):1", "so(9):1", "sp(4):1", "u1:1", "u(1)".
AlgebraTemplate parse_algebra_template(std::string_view text);

/// A template without parameters, instantiated. Unsupported types raise
/// UnsupportedSymbol.
LevelledAlgebra parse_algebra(std::string_view text);

/// An algebra, "Vir:m=2", "sl2plus:3" or "pt[SPEC]" with a compact metric spec.
RelationTerm parse_relation_term(std::string_view text);

/// "A1:6^2 * A1:2^-3" (factors separated by '*', optional integer exponents).
RelationExpr parse_relation(std::string_view text);

/// Compact spec "ORDERS:QDIAG[;i,j=FRAC]..." with 1-based i, j, e.g. "2,2:0,0;1,2=1/2".
PreMetricGroup parse_metric_spec(std::string_view spec);

/// Gram data as given on the command line: group "2,4", q "1/4,1/8",
/// off-diagonal entries "1,2=1/2" (1-based).
PreMetricGroup parse_metric_inline(std::string_view group, std::string_view q,
                                   const std::vector<std::string>& b = {});

/// Lines "group: ...", "q: ...", "b: i,j=frac[; i,j=frac]"; '#' starts a comment.
PreMetricGroup parse_metric_file(std::istream& in, const std::string& source);

/// `PARTS <= TARGET [| PARAMS]` per line; parts separated by " x ".
std::vector<EmbeddingEntry> parse_embeddings(std::istream& in, const std::string& source);

/// `Vir:m=EXPR = (NUM) / (DEN) [| PARAMS]` per line.
std::vector<CosetEntry> parse_cosets(std::istream& in, const std::string& source);

/// `ID: EXPR [conjectural]` per line.
std::vector<RelationEntry> parse_relations(std::istream& in, const std::string& source);

/// "labels: 1 tau" then product rules "tau * tau = 1 + tau". The first label
/// is the unit; products with the unit are implied, and a missing b*a is
/// taken equal to a given a*b.
FusionRing parse_fusion_ring(std::istream& in, const std::string& source);

} // namespace wittforge
