#include "cli.hpp"

#include "wittforge/wittforge.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace wittforge::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_data_dir() {
    if (const char* env = std::getenv("WITTFORGE_DATA_DIR"); env && *env) {
        return env;
    }
#ifdef WITTFORGE_DEFAULT_DATA_DIR
    return WITTFORGE_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return in;
}

// Metric group given inline, by compact spec, or by file.
struct MetricInput {
    std::string group;
    std::string q;
    std::vector<std::string> pairs;
    std::string file;
    std::string spec;

    void attach(CLI::App* cmd, const std::string& pair_flag) {
        cmd->add_option("--group", group, "cyclic orders, e.g. 2,4");
        cmd->add_option("--q", q, "q on the generators, e.g. 1/4,1/8");
        cmd->add_option(pair_flag, pairs, "pairing i,j=frac (1-based), repeatable");
        cmd->add_option("--file", file, "metric group file");
        cmd->add_option("--spec", spec, "compact spec ORDERS:QDIAG[;i,j=b]");
    }

    bool given() const { return !group.empty() || !file.empty() || !spec.empty(); }

    PreMetricGroup load() const {
        if (!file.empty()) {
            std::ifstream in = open_input(file);
            return parse_metric_file(in, file);
        }
        if (!spec.empty()) {
            return parse_metric_spec(spec);
        }
        if (group.empty()) {
            throw UsageError("give --group/--q, --spec or --file");
        }
        return parse_metric_inline(group, q.empty() ? std::string("0") : q, pairs);
    }
};

std::string charge_line(const PreMetricGroup& pm) {
    const CentralCharge c = additive_charge(pm);
    return "xi=" + eighth_root_label(c.value().get_num().get_si()) + ", c=" + c.to_string();
}

std::string numeric_xi(const PreMetricGroup& pm) {
    const ComplexValue xi = multiplicative_charge(pm);
    auto clean = [](double v) { return std::fabs(v) < 5e-10 ? 0.0 : v; };
    std::ostringstream s;
    s << std::fixed << std::setprecision(9) << clean(xi.real()) << (clean(xi.imag()) < 0 ? "-" : "+")
      << std::fabs(clean(xi.imag())) << "i";
    return s.str();
}

std::string class_line(const WittClass& w) {
    const auto& rep = w.representative();
    return (rep.order() == 1 ? std::string("trivial") : rep.to_string()) + "  c=" + w.charge().to_string() +
           " order=" + std::to_string(order(w));
}

VerifyOptions verify_options(const std::string& range, bool verbose, bool serial) {
    VerifyOptions opt;
    if (!range.empty()) {
        const auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                throw std::invalid_argument(range);
            }
            std::size_t used = 0;
            opt.lo = std::stoll(range.substr(0, dots), &used);
            const std::string hi = range.substr(dots + 2);
            opt.hi = std::stoll(hi, &used);
            if (used != hi.size() || opt.lo > opt.hi) {
                throw std::invalid_argument(range);
            }
        } catch (const std::exception&) {
            throw UsageError("--range expects LO..HI, got '" + range + "'");
        }
        opt.clip = true;
    }
    opt.per_instance = verbose;
    opt.parallel = !serial;
    return opt;
}

// Whether `expr` matches a relation tagged conjectural in the shipped file.
bool is_conjectural(const RelationExpr& expr, const std::string& data_dir) {
    const std::string path = data_dir + "/sl2_relations.txt";
    std::ifstream in(path);
    if (!in) {
        return false;
    }
    const std::string key = expr.to_string();
    for (const auto& e : parse_relations(in, path)) {
        if (e.conjectural && (e.expr.to_string() == key || e.expr.inverse().to_string() == key)) {
            return true;
        }
    }
    return false;
}

int report_exit(const VerificationReport& r, bool strict) {
    return r.passed(strict) ? kOk : kVerificationFailed;
}

} // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    std::string s = buf;
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Witt-group and central-charge arithmetic", "wittforge"};
    app.require_subcommand(1);
    std::string data_dir = default_data_dir();
    app.add_option("--data-dir", data_dir, "directory holding the shipped tables");
    std::function<int()> action;

    // metric ------------------------------------------------------------
    auto* metric = app.add_subcommand("metric", "inspect a pre-metric group");
    metric->require_subcommand(1);
    MetricInput m_in;
    std::string with_spec;
    {
        auto* classify = metric->add_subcommand("classify", "non-degeneracy, anisotropy, Witt data");
        m_in.attach(classify, "--b");
        classify->callback([&] {
            action = [&] {
                const PreMetricGroup pm = m_in.load();
                if (!pm.is_nondegenerate()) {
                    out << "degenerate, radical order " << pm.radical().order() << "\n";
                    return int(kOk);
                }
                const WittClass w = witt_class(pm);
                out << "nondegenerate, " << (pm.is_anisotropic() ? "anisotropic" : "isotropic")
                    << ", c=" << additive_charge(pm).to_string() << "\n";
                for (const auto& [p, part] : decompose(w)) {
                    out << "  p=" << p << ": " << class_line(part) << "\n";
                }
                out << "representative: " << class_line(w) << "\n";
                return int(kOk);
            };
        });
        auto* reduce = metric->add_subcommand("reduce", "anisotropic representative");
        m_in.attach(reduce, "--b");
        reduce->callback([&] {
            action = [&] {
                const PreMetricGroup rep = reduce_anisotropic(m_in.load());
                out << (rep.order() == 1 ? std::string("trivial") : rep.to_string()) << "\n";
                return int(kOk);
            };
        });
        auto* charge = metric->add_subcommand("charge", "Gauss-sum central charge");
        m_in.attach(charge, "--b");
        charge->callback([&] {
            action = [&] {
                const PreMetricGroup pm = m_in.load();
                out << charge_line(pm) << "\n";
                out << "xi=" << numeric_xi(pm) << "\n";
                return int(kOk);
            };
        });
        auto* iso = metric->add_subcommand("isometric", "compare with another group");
        m_in.attach(iso, "--b");
        iso->add_option("--with", with_spec, "compact spec of the other group")->required();
        iso->callback([&] {
            action = [&] {
                const bool same = isometric(m_in.load(), parse_metric_spec(with_spec));
                out << (same ? "isometric" : "not isometric") << "\n";
                return int(kOk);
            };
        });
    }

    // witt --------------------------------------------------------------
    auto* witt = app.add_subcommand("witt", "Witt-class arithmetic of metric groups");
    witt->require_subcommand(1);
    MetricInput w_in;
    std::string spec_a;
    std::string spec_b;
    std::vector<std::string> gens;
    auto operand_a = [&] {
        if (!spec_a.empty()) {
            return witt_class(parse_metric_spec(spec_a));
        }
        if (!w_in.given()) {
            throw UsageError("give --a SPEC or --group/--q");
        }
        return witt_class(w_in.load());
    };
    {
        auto* ord = witt->add_subcommand("order", "order of a class");
        w_in.attach(ord, "--pair");
        ord->add_option("--a", spec_a, "compact spec");
        ord->callback([&] {
            action = [&] {
                out << order(operand_a()) << "\n";
                return int(kOk);
            };
        });
        auto* add_cmd = witt->add_subcommand("add", "sum of two classes");
        add_cmd->add_option("--a", spec_a, "compact spec")->required();
        add_cmd->add_option("--b", spec_b, "compact spec")->required();
        add_cmd->callback([&] {
            action = [&] {
                out << class_line(add(witt_class(parse_metric_spec(spec_a)), witt_class(parse_metric_spec(spec_b))))
                    << "\n";
                return int(kOk);
            };
        });
        auto* eq = witt->add_subcommand("eq", "compare two classes");
        eq->add_option("--a", spec_a, "compact spec")->required();
        eq->add_option("--b", spec_b, "compact spec")->required();
        eq->callback([&] {
            action = [&] {
                const bool same = equals(witt_class(parse_metric_spec(spec_a)), witt_class(parse_metric_spec(spec_b)));
                out << (same ? "equal" : "distinct") << "\n";
                return int(kOk);
            };
        });
        auto* span = witt->add_subcommand("span", "subgroup generated by classes");
        span->add_option("--gen", gens, "compact spec, repeatable")->required();
        span->callback([&] {
            action = [&] {
                std::vector<WittClass> classes;
                for (const auto& g : gens) {
                    classes.push_back(witt_class(parse_metric_spec(g)));
                }
                const auto all = generated_subgroup(classes);
                out << all.size() << " classes\n";
                for (const auto& w : all) {
                    out << "  " << class_line(w) << "\n";
                }
                return int(kOk);
            };
        });
    }

    // affine ------------------------------------------------------------
    auto* affine = app.add_subcommand("affine", "central charges of affine and coset categories");
    affine->require_subcommand(1);
    std::string symbol;
    std::string relation;
    {
        auto* charge = affine->add_subcommand("charge", "exact central charge of a symbol");
        charge->add_option("symbol", symbol, "e.g. A1:10, su(6):1, u1:1, Vir:m=2, sl2plus:3")->required();
        charge->callback([&] {
            action = [&] {
                const RelationTerm t = parse_relation_term(symbol);
                if (const auto* a = std::get_if<LevelledAlgebra>(&t)) {
                    out << to_string(central_charge(*a)) << "\n";
                } else if (const auto* v = std::get_if<VirasoroTerm>(&t)) {
                    out << to_string(virasoro_charge(v->m)) << "\n";
                } else {
                    out << term_charge(t).to_string() << "\n";
                }
                return int(kOk);
            };
        });
        auto* rel = affine->add_subcommand("relation", "charge of a formal product, mod 8");
        rel->add_option("expr", relation, "e.g. \"A1:6^2 * A1:2^-3\"")->required();
        rel->callback([&] {
            action = [&] {
                const RelationExpr r = parse_relation(relation);
                const CentralCharge c = relation_charge(r);
                const std::string tag = is_conjectural(r, data_dir) ? " (conjectural)" : "";
                if (c.is_zero()) {
                    out << "0 mod 8 → OK" << tag << "\n";
                    return int(kOk);
                }
                out << c.to_string() << " mod 8 → FAIL" << tag << "\n";
                return int(kVerificationFailed);
            };
        });
        auto* suite = affine->add_subcommand("sl2-suite", "central-charge checks of the sl(2) relations");
        suite->callback([&] {
            action = [&] {
                const VerificationReport r = sl2_suite();
                out << r.render("sl2-suite");
                return report_exit(r, false);
            };
        });
    }

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check embedding, coset and relation tables");
    verify->require_subcommand(1);
    verify->fallthrough();
    std::string file;
    std::string range;
    bool strict = false;
    bool verbose = false;
    bool serial = false;
    verify->add_option("--range", range, "restrict every parameter to LO..HI");
    verify->add_flag("--strict", strict, "treat SKIPPED as failure");
    verify->add_flag("--verbose", verbose, "one line per instantiation");
    verify->add_flag("--serial", serial, "check entries one at a time");
    auto verify_kind = [&](const std::string& kind, const std::string& path) {
        const VerifyOptions opt = verify_options(range, verbose, serial);
        std::ifstream in = open_input(path);
        const std::string name = std::filesystem::path(path).filename().string();
        if (kind == "embeddings") {
            return verify_embeddings(parse_embeddings(in, name), opt);
        }
        if (kind == "cosets") {
            return verify_cosets(parse_cosets(in, name), opt);
        }
        return verify_relations(parse_relations(in, name));
    };
    for (const std::string kind : {"embeddings", "cosets", "relations"}) {
        auto* sub = verify->add_subcommand(kind, "verify a file of " + kind);
        sub->add_option("file", file, "data file")->required();
        sub->callback([&, kind] {
            action = [&, kind] {
                const VerificationReport r = verify_kind(kind, file);
                out << r.render(kind);
                return report_exit(r, strict);
            };
        });
    }
    auto* all = verify->add_subcommand("all", "verify every shipped table");
    all->callback([&] {
        action = [&] {
            VerificationReport total;
            const std::vector<std::pair<std::string, std::string>> files{
                {"embeddings", "conformal_embeddings.txt"}, {"cosets", "cosets.txt"}, {"relations", "sl2_relations.txt"}};
            for (const auto& [kind, name] : files) {
                const VerificationReport r = verify_kind(kind, data_dir + "/" + name);
                out << r.render(kind);
                total.append(r);
            }
            out << "total: " << total.count(Status::Ok) << " OK, " << total.count(Status::Fail) << " FAIL, "
                << total.count(Status::Skipped) << " SKIPPED, " << total.count(Status::Error) << " ERROR\n";
            return report_exit(total, strict);
        };
    });

    // fpdim -------------------------------------------------------------
    auto* fp = app.add_subcommand("fpdim", "Frobenius-Perron dimensions of a fusion ring");
    std::string ring_name;
    fp->add_option("ring", ring_name, "fib | ising | sl2:K | group:ORDERS | FILE")->required();
    fp->callback([&] {
        action = [&] {
            FusionRing ring = fibonacci_ring();
            if (ring_name == "fib") {
                ring = fibonacci_ring();
            } else if (ring_name == "ising") {
                ring = ising_ring();
            } else if (ring_name.rfind("sl2:", 0) == 0) {
                ring = verlinde_sl2(Expr::parse(ring_name.substr(4)).evaluate());
            } else if (ring_name.rfind("group:", 0) == 0) {
                std::vector<std::int64_t> orders;
                std::stringstream ss(ring_name.substr(6));
                for (std::string part; std::getline(ss, part, ',');) {
                    orders.push_back(Expr::parse(part).evaluate());
                }
                ring = pointed_ring(FiniteAbelianGroup::make(orders));
            } else {
                std::ifstream in = open_input(ring_name);
                ring = parse_fusion_ring(in, ring_name);
            }
            const FPData data = fpdims(ring);
            const RegularObject reg = regular_object(ring);
            const bool pointed = std::all_of(data.dims.begin(), data.dims.end(),
                                             [](double d) { return std::fabs(d - 1.0) < 1e-9; });
            if (pointed) {
                out << "total: " << format_real(data.total) << ", all dims 1\n";
            } else {
                for (std::size_t i = 0; i < ring.size(); ++i) {
                    if (i != ring.unit()) {
                        out << ring.labels()[i] << ": " << format_real(data.dims[i]) << ", ";
                    }
                }
                out << "total: " << format_real(data.total) << "\n";
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2e", reg.residual);
            out << "regular object residual: " << buf << "\n";
            return int(kOk);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (!action) {
        err << "error: no command given\n";
        return kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnsupportedSymbol ? kUsage : kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

} // namespace wittforge::cli
