#include "wittforge/parse.hpp"

#include "wittforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <set>

namespace wittforge {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorKind::Parse, what); }

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

bool open_bracket(char c) { return c == '(' || c == '{' || c == '['; }
bool close_bracket(char c) { return c == ')' || c == '}' || c == ']'; }

// Position of the first (or last) occurrence of `c` outside brackets.
std::size_t find_top(std::string_view s, char c, bool last = false) {
    int depth = 0;
    std::size_t found = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (depth == 0 && s[i] == c) {
            found = i;
            if (!last) {
                return i;
            }
        }
        if (open_bracket(s[i])) {
            ++depth;
        } else if (close_bracket(s[i])) {
            --depth;
        }
    }
    return found;
}

std::vector<std::string> split_top(std::string_view s, char c) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (open_bracket(s[i])) {
            ++depth;
        } else if (close_bracket(s[i])) {
            --depth;
        } else if (depth == 0 && s[i] == c) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

// Splits "a x b x c" on the standalone word x.
std::vector<std::string> split_product(const std::string& s) {
    static const std::regex sep(R"(\s+x\s+)");
    std::vector<std::string> out;
    for (std::sregex_token_iterator it(s.begin(), s.end(), sep, -1), end; it != end; ++it) {
        out.push_back(trim(it->str()));
    }
    return out;
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        parse_error("expected an integer for " + what + ", got '" + t + "'");
    }
    if (used != t.size()) {
        parse_error("expected an integer for " + what + ", got '" + t + "'");
    }
    return v;
}

Expr parse_expr(std::string_view text, const std::string& what) {
    const std::string t = trim(text);
    if (t.empty()) {
        parse_error("missing " + what);
    }
    return Expr::parse(t);
}

// Strips one pair of enclosing brackets if they match each other.
std::string unwrap(const std::string& s, char open, char close) {
    if (s.size() >= 2 && s.front() == open && s.back() == close && find_top(s.substr(1), close) == s.size() - 2) {
        return trim(s.substr(1, s.size() - 2));
    }
    return s;
}

} // namespace

AlgebraTemplate parse_algebra_template(std::string_view text) {
    const std::string s = trim(text);
    AlgebraTemplate t;
    t.text = s;
    const std::size_t colon = find_top(s, ':');
    const std::string head = trim(s.substr(0, colon));
    const std::optional<std::string> level =
        colon == std::string::npos ? std::nullopt : std::optional<std::string>(s.substr(colon + 1));

    if (head == "u1" || head == "u(1)") {
        t.kind = AlgebraTemplate::Kind::U1;
        t.size = Expr::constant(1);
        t.level = level ? parse_expr(*level, "level") : Expr::constant(1);
        return t;
    }
    if (!level) {
        parse_error("missing level in '" + s + "' (write e.g. A1:2)");
    }
    t.level = parse_expr(*level, "level");

    static const std::map<std::string, AlgebraTemplate::Kind> aliases{
        {"su", AlgebraTemplate::Kind::SU}, {"so", AlgebraTemplate::Kind::SO}, {"sp", AlgebraTemplate::Kind::SP}};
    if (head.size() > 3 && head[2] == '(' && head.back() == ')' && aliases.count(head.substr(0, 2))) {
        t.kind = aliases.at(head.substr(0, 2));
        t.size = parse_expr(head.substr(3, head.size() - 4), "matrix size");
        return t;
    }
    if (head.size() >= 2 && head[0] >= 'A' && head[0] <= 'G') {
        t.kind = AlgebraTemplate::Kind::Dynkin;
        t.family = static_cast<LieFamily>(head[0] - 'A');
        std::string rank = head.substr(1);
        if (!rank.empty() && rank[0] == '_') {
            rank = rank.substr(1);
        }
        rank = unwrap(rank, '{', '}');
        if (!rank.empty() && (std::isdigit(static_cast<unsigned char>(rank[0])) || head[1] == '_' || head[1] == '{')) {
            t.size = parse_expr(rank, "rank");
            return t;
        }
    }
    parse_error("unknown algebra symbol '" + head + "'");
}

LevelledAlgebra parse_algebra(std::string_view text) {
    const AlgebraTemplate t = parse_algebra_template(text);
    if (!t.size.is_constant() || !t.level.is_constant()) {
        parse_error("'" + t.text + "' has free parameters");
    }
    try {
        return t.instantiate({});
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Argument) {
            parse_error(e.what());
        }
        throw;
    }
}

RelationTerm parse_relation_term(std::string_view text) {
    const std::string s = trim(text);
    if (s.rfind("Vir:m=", 0) == 0) {
        return VirasoroTerm{parse_int(s.substr(6), "Virasoro m")};
    }
    if (s.rfind("sl2plus:", 0) == 0) {
        return PlusSectorTerm{parse_int(s.substr(8), "plus-sector level")};
    }
    if (s.rfind("pt[", 0) == 0 && s.back() == ']') {
        return parse_metric_spec(s.substr(3, s.size() - 4));
    }
    return parse_algebra(s);
}

RelationExpr parse_relation(std::string_view text) {
    RelationExpr r;
    for (const auto& part : split_top(text, '*')) {
        if (part.empty()) {
            parse_error("empty factor in relation '" + std::string(text) + "'");
        }
        const std::size_t caret = find_top(part, '^', true);
        if (caret == std::string::npos) {
            r.factors.push_back({parse_relation_term(part), 1});
            continue;
        }
        const std::int64_t exponent = parse_int(part.substr(caret + 1), "exponent");
        if (exponent == 0) {
            parse_error("zero exponent in '" + part + "'");
        }
        r.factors.push_back({parse_relation_term(part.substr(0, caret)), exponent});
    }
    return r;
}

namespace {

std::vector<std::int64_t> parse_int_list(std::string_view text, const std::string& what) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_top(text, ',')) {
        out.push_back(parse_int(item, what));
    }
    return out;
}

std::pair<std::pair<std::size_t, std::size_t>, QmodZ> parse_off_diagonal(std::string_view text, std::size_t rank) {
    const std::string s = trim(text);
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
        parse_error("expected i,j=frac, got '" + s + "'");
    }
    const auto ij = parse_int_list(s.substr(0, eq), "pairing index");
    if (ij.size() != 2) {
        parse_error("expected two indices in '" + s + "'");
    }
    std::int64_t i = ij[0];
    std::int64_t j = ij[1];
    if (i > j) {
        std::swap(i, j);
    }
    if (i < 1 || j > static_cast<std::int64_t>(rank) || i == j) {
        parse_error("pairing indices out of range in '" + s + "' (1-based, i != j, rank " + std::to_string(rank) +
                    ")");
    }
    return {{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)}, QmodZ::parse(trim(s.substr(eq + 1)))};
}

} // namespace

PreMetricGroup parse_metric_inline(std::string_view group, std::string_view q, const std::vector<std::string>& b) {
    std::vector<std::int64_t> orders = parse_int_list(group, "cyclic order");
    if (orders.size() == 1 && orders[0] == 1 && trim(q) == "0" && b.empty()) {
        return PreMetricGroup();
    }
    const FiniteAbelianGroup g = FiniteAbelianGroup::make(orders);
    std::vector<QmodZ> diag;
    for (const auto& item : split_top(q, ',')) {
        diag.push_back(QmodZ::parse(item));
    }
    if (diag.size() != orders.size()) {
        parse_error("expected " + std::to_string(orders.size()) + " q values, got " + std::to_string(diag.size()));
    }
    std::map<std::pair<std::size_t, std::size_t>, QmodZ> off;
    for (const auto& entry : b) {
        for (const auto& piece : split_top(entry, ';')) {
            if (piece.empty()) {
                continue;
            }
            auto [key, value] = parse_off_diagonal(piece, orders.size());
            if (off.count(key)) {
                parse_error("pairing " + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
                            " given twice");
            }
            off[key] = value;
        }
    }
    return PreMetricGroup::from_gram(g, diag, off);
}

PreMetricGroup parse_metric_spec(std::string_view spec) {
    const std::string s = trim(spec);
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
        parse_error("metric spec '" + s + "' must look like ORDERS:QDIAG[;i,j=b]");
    }
    const auto pieces = split_top(s.substr(colon + 1), ';');
    std::vector<std::string> b(pieces.begin() + 1, pieces.end());
    return parse_metric_inline(s.substr(0, colon), pieces.front(), b);
}

namespace {

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

std::string located(const std::string& source, int line, const std::string& what) {
    return source + ":" + std::to_string(line) + ": " + what;
}

// Runs `fn` and re-throws parse-type failures with a file location.
template <class Fn>
auto at_line(const std::string& source, int line, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) {
            fail(ErrorKind::Parse, located(source, line, e.what()));
        }
        throw;
    }
}

std::vector<ParamRange> parse_params(const std::string& text) {
    std::vector<ParamRange> out;
    if (trim(text).empty()) {
        return out;
    }
    static const std::regex name_re(R"([A-Za-z_][A-Za-z0-9_]*)");
    for (const auto& item : split_top(text, ',')) {
        ParamRange p;
        const std::size_t eq = item.find('=');
        p.name = trim(item.substr(0, eq));
        if (!std::regex_match(p.name, name_re)) {
            parse_error("bad parameter name '" + p.name + "'");
        }
        if (eq != std::string::npos) {
            const std::string range = item.substr(eq + 1);
            const std::size_t dots = range.find("..");
            if (dots == std::string::npos) {
                const Expr fixed = parse_expr(range, "parameter value");
                p.lo = fixed;
                p.hi = fixed;
            } else {
                const std::string lo = trim(range.substr(0, dots));
                const std::string hi = trim(range.substr(dots + 2));
                if (!lo.empty()) {
                    p.lo = parse_expr(lo, "lower bound");
                }
                if (!hi.empty()) {
                    p.hi = parse_expr(hi, "upper bound");
                }
            }
        }
        for (const auto& q : out) {
            if (q.name == p.name) {
                parse_error("parameter '" + p.name + "' declared twice");
            }
        }
        std::set<std::string> earlier;
        for (const auto& q : out) {
            earlier.insert(q.name);
        }
        for (const auto* bound : {&p.lo, &p.hi}) {
            if (*bound) {
                for (const auto& v : (*bound)->variables()) {
                    if (!earlier.count(v)) {
                        parse_error("bound of '" + p.name + "' uses '" + v + "' which is not declared before it");
                    }
                }
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

void require_declared(const std::vector<AlgebraTemplate>& ts, const std::vector<ParamRange>& params) {
    std::set<std::string> names;
    for (const auto& p : params) {
        names.insert(p.name);
    }
    for (const auto& t : ts) {
        for (const Expr* e : {&t.size, &t.level}) {
            for (const auto& v : e->variables()) {
                if (!names.count(v)) {
                    parse_error("'" + t.text + "' uses undeclared parameter '" + v + "'");
                }
            }
        }
    }
}

std::vector<AlgebraTemplate> parse_template_list(const std::string& text) {
    const std::string body = unwrap(trim(text), '(', ')');
    if (body.empty()) {
        parse_error("empty algebra list");
    }
    std::vector<AlgebraTemplate> out;
    for (const auto& part : split_product(body)) {
        out.push_back(parse_algebra_template(part));
    }
    return out;
}

template <class Fn>
void for_each_line(std::istream& in, Fn fn) {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::string line = strip_comment(raw);
        if (!line.empty()) {
            fn(line, number);
        }
    }
}

} // namespace

PreMetricGroup parse_metric_file(std::istream& in, const std::string& source) {
    std::optional<std::string> group;
    std::optional<std::string> q;
    std::vector<std::string> b;
    for_each_line(in, [&](const std::string& line, int number) {
        const std::size_t colon = line.find(':');
        const std::string key = trim(line.substr(0, colon));
        if (colon == std::string::npos || (key != "group" && key != "q" && key != "b")) {
            fail(ErrorKind::Parse, located(source, number, "expected 'group:', 'q:' or 'b:'"));
        }
        const std::string value = trim(line.substr(colon + 1));
        if (key == "group") {
            group = value;
        } else if (key == "q") {
            q = value;
        } else {
            b.push_back(value);
        }
    });
    if (!group || !q) {
        fail(ErrorKind::Parse, source + ": metric file needs 'group:' and 'q:' lines");
    }
    try {
        return parse_metric_inline(*group, *q, b);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) {
            fail(ErrorKind::Parse, source + ": " + e.what());
        }
        throw;
    }
}

std::vector<EmbeddingEntry> parse_embeddings(std::istream& in, const std::string& source) {
    std::vector<EmbeddingEntry> out;
    for_each_line(in, [&](const std::string& line, int number) {
        out.push_back(at_line(source, number, [&] {
            EmbeddingEntry e;
            e.source = {source, number};
            e.text = line;
            const std::size_t bar = find_top(line, '|');
            const std::string body = line.substr(0, bar);
            const std::size_t le = body.find("<=");
            if (le == std::string::npos) {
                parse_error("expected 'PARTS <= TARGET'");
            }
            e.parts = parse_template_list(body.substr(0, le));
            e.target = parse_template_list(body.substr(le + 2));
            if (bar != std::string::npos) {
                e.params = parse_params(line.substr(bar + 1));
            }
            require_declared(e.parts, e.params);
            require_declared(e.target, e.params);
            return e;
        }));
    });
    return out;
}

std::vector<CosetEntry> parse_cosets(std::istream& in, const std::string& source) {
    static const std::regex head(R"(^Vir:m=(.+?)\s+(=|<=)\s+(.*)$)");
    std::vector<CosetEntry> out;
    for_each_line(in, [&](const std::string& line, int number) {
        out.push_back(at_line(source, number, [&] {
            CosetEntry e;
            e.source = {source, number};
            e.text = line;
            const std::size_t bar = find_top(line, '|');
            const std::string body = trim(line.substr(0, bar));
            std::smatch m;
            if (!std::regex_match(body, m, head)) {
                parse_error("expected 'Vir:m=EXPR = (NUM) / (DEN)'");
            }
            e.m = parse_expr(m[1].str(), "Virasoro index");
            const std::string quotient = m[3].str();
            const std::size_t slash = find_top(quotient, '/');
            if (slash == std::string::npos) {
                parse_error("expected '(NUM) / (DEN)'");
            }
            e.numerator = parse_template_list(quotient.substr(0, slash));
            e.denominator = parse_template_list(quotient.substr(slash + 1));
            if (bar != std::string::npos) {
                e.params = parse_params(line.substr(bar + 1));
            }
            require_declared(e.numerator, e.params);
            require_declared(e.denominator, e.params);
            std::set<std::string> names;
            for (const auto& p : e.params) {
                names.insert(p.name);
            }
            for (const auto& v : e.m.variables()) {
                if (!names.count(v)) {
                    parse_error("Virasoro index uses undeclared parameter '" + v + "'");
                }
            }
            return e;
        }));
    });
    return out;
}

std::vector<RelationEntry> parse_relations(std::istream& in, const std::string& source) {
    static const std::string tag = "[conjectural]";
    std::vector<RelationEntry> out;
    for_each_line(in, [&](const std::string& line, int number) {
        out.push_back(at_line(source, number, [&] {
            RelationEntry e;
            e.source = {source, number};
            e.text = line;
            const std::size_t colon = line.find(':');
            if (colon == std::string::npos) {
                parse_error("expected 'ID: EXPR'");
            }
            e.id = trim(line.substr(0, colon));
            std::string body = trim(line.substr(colon + 1));
            if (body.size() >= tag.size() && body.compare(body.size() - tag.size(), tag.size(), tag) == 0) {
                e.conjectural = true;
                body = trim(body.substr(0, body.size() - tag.size()));
            }
            e.expr = parse_relation(body);
            return e;
        }));
    });
    return out;
}

FusionRing parse_fusion_ring(std::istream& in, const std::string& source) {
    std::vector<std::string> labels;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, std::int64_t>> rules;
    auto index = [&labels](const std::string& name) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            parse_error("unknown label '" + name + "'");
        }
        return static_cast<std::size_t>(it - labels.begin());
    };
    static const std::regex coefficient(R"(^(\d+)\s*\*?\s*(\S+)$)");
    for_each_line(in, [&](const std::string& line, int number) {
        at_line(source, number, [&] {
            if (line.rfind("labels:", 0) == 0) {
                if (!labels.empty()) {
                    parse_error("labels given twice");
                }
                static const std::regex ws(R"(\s+)");
                const std::string rest = trim(line.substr(7));
                for (std::sregex_token_iterator it(rest.begin(), rest.end(), ws, -1), end; it != end; ++it) {
                    if (!it->str().empty()) {
                        if (std::find(labels.begin(), labels.end(), it->str()) != labels.end()) {
                            parse_error("duplicate label '" + it->str() + "'");
                        }
                        labels.push_back(it->str());
                    }
                }
                if (labels.empty()) {
                    parse_error("no labels");
                }
                return 0;
            }
            if (labels.empty()) {
                parse_error("'labels:' must come first");
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                parse_error("expected 'a * b = ...'");
            }
            const auto lhs = split_top(line.substr(0, eq), '*');
            if (lhs.size() != 2) {
                parse_error("left side must be 'a * b'");
            }
            const auto key = std::make_pair(index(lhs[0]), index(lhs[1]));
            if (rules.count(key)) {
                parse_error("product " + lhs[0] + " * " + lhs[1] + " given twice");
            }
            auto& row = rules[key];
            const std::string rhs = trim(line.substr(eq + 1));
            if (rhs != "0") {
                for (const auto& term : split_top(rhs, '+')) {
                    std::smatch m;
                    std::int64_t c = 1;
                    std::string name = term;
                    if (std::regex_match(term, m, coefficient) && std::find(labels.begin(), labels.end(), term) == labels.end()) {
                        c = parse_int(m[1].str(), "coefficient");
                        name = m[2].str();
                    }
                    row[index(name)] += c;
                }
            }
            return 0;
        });
    });
    if (labels.empty()) {
        fail(ErrorKind::Parse, source + ": no 'labels:' line");
    }
    const std::size_t r = labels.size();
    std::vector<std::int64_t> n(r * r * r, 0);
    auto set_row = [&](std::size_t i, std::size_t j, const std::map<std::size_t, std::int64_t>& row) {
        for (const auto& [k, c] : row) {
            n[(i * r + j) * r + k] = c;
        }
    };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            auto it = rules.find({i, j});
            if (it != rules.end()) {
                set_row(i, j, it->second);
            } else if (auto jt = rules.find({j, i}); jt != rules.end()) {
                set_row(i, j, jt->second);
            } else if (i == 0) {
                n[(i * r + j) * r + j] = 1;
            } else if (j == 0) {
                n[(i * r + j) * r + i] = 1;
            }
        }
    }
    return FusionRing::make(std::move(labels), std::move(n));
}

} // namespace wittforge
