#include "stiefel/cli.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stiefel/enumerate.hpp"
#include "stiefel/parity.hpp"
#include "stiefel/relations.hpp"
#include "stiefel/report.hpp"
#include "stiefel/steenrod.hpp"
#include "stiefel/stunted.hpp"

namespace stiefel::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Context {
    Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

    std::ostream& out;
    std::ostream& err;
    bool json = false;
    std::optional<int> n;
    std::optional<int> k;
    std::uint64_t budget = std::uint64_t{1} << 24;
    std::ostringstream text;
};

StiefelRing require_ring(const Context& ctx) {
    if (!ctx.n || !ctx.k) throw UsageError("--n and --k are required for this command");
    return make_ring(*ctx.n, *ctx.k);
}

void add_ring_parameters(const Context& ctx, Report& report) {
    if (ctx.n) report.parameters["n"] = *ctx.n;
    if (ctx.k) report.parameters["k"] = *ctx.k;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::string system_text(const CharClassSystem& s) {
    std::vector<std::string> parts;
    for (std::int64_t d = 1; d <= s.ring().top_degree(); ++d) {
        if (!s.w(d).is_zero()) parts.push_back("w" + std::to_string(d) + "=" + format(s.ring(), s.w(d)));
    }
    return parts.empty() ? "trivial" : join(parts, " ");
}

std::string system_line_text(const CharClassSystem& s) {
    const auto first = first_nonzero_degree(s);
    const auto thm = theorem2_status(s);
    return system_text(s) + "  wu=" + (is_wu_consistent(s).consistent ? "yes" : "no") +
           " first=" + (first ? std::to_string(*first) : std::string("-")) +
           " theorem2=" + (thm ? (*thm ? "ok" : "fail") : "n/a") + "\n";
}

// --- subcommands -----------------------------------------------------------

struct BasisArgs {
    std::optional<std::int64_t> degree;
};

void cmd_basis(Context& ctx, Report& report, const BasisArgs& args) {
    add_ring_parameters(ctx, report);
    const StiefelRing ring = require_ring(ctx);
    auto listing = [&](std::int64_t d) {
        std::vector<std::string> names;
        for (Monomial m : basis(ring, d)) names.push_back(format(ring, m));
        return names;
    };
    if (args.degree) {
        report.parameters["degree"] = *args.degree;
        const auto names = listing(*args.degree);
        report.results["degree"] = *args.degree;
        report.results["basis"] = names;
        for (const auto& s : names) ctx.text << s << "\n";
        return;
    }
    Json degrees = Json::array();
    std::uint64_t total = 0;
    for (std::int64_t d = 0; d <= ring.top_degree(); ++d) {
        const auto names = listing(d);
        if (names.empty()) continue;
        total += names.size();
        degrees.push_back(Json{{"degree", d}, {"basis", names}});
        ctx.text << d << ": " << join(names, " ") << "\n";
    }
    report.results["top_degree"] = ring.top_degree();
    report.results["degrees"] = std::move(degrees);
    report.results["total"] = total;
}

struct MulArgs {
    std::string x;
    std::string y;
};

void cmd_mul(Context& ctx, Report& report, const MulArgs& args) {
    add_ring_parameters(ctx, report);
    report.parameters["x"] = args.x;
    report.parameters["y"] = args.y;
    const StiefelRing ring = require_ring(ctx);
    const CohomologyClass product = multiply(ring, parse_class(ring, args.x), parse_class(ring, args.y));
    report.results["product"] = format(ring, product);
    report.results["terms"] = class_to_json(ring, product);
    ctx.text << format(ring, product) << "\n";
}

struct SqArgs {
    std::int64_t i = 0;
    std::string x;
};

void cmd_sq(Context& ctx, Report& report, const SqArgs& args) {
    add_ring_parameters(ctx, report);
    report.parameters["i"] = args.i;
    report.parameters["x"] = args.x;
    const StiefelRing ring = require_ring(ctx);
    const CohomologyClass result = sq(ring, args.i, parse_class(ring, args.x));
    report.results["result"] = format(ring, result);
    report.results["terms"] = class_to_json(ring, result);
    ctx.text << format(ring, result) << "\n";
}

struct PhiArgs {
    std::uint64_t m = 0;
};

void cmd_phi(Context& ctx, Report& report, const PhiArgs& args) {
    report.parameters["m"] = args.m;
    const PhiValue v = phi(args.m);
    report.results["m"] = v.m;
    report.results["phi"] = v.phi;
    report.results["power"] = bigint_to_json(v.power);
    ctx.text << "phi(" << v.m << ") = " << v.phi << "\n2^phi = " << v.power.str() << "\n";
}

struct BinomArgs {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

void cmd_binom(Context& ctx, Report& report, const BinomArgs& args) {
    report.parameters["a"] = args.a;
    report.parameters["b"] = args.b;
    const Parity p = binom_parity(args.a, args.b);
    report.results["a"] = args.a;
    report.results["b"] = args.b;
    report.results["parity"] = std::string(to_string(p));
    ctx.text << to_string(p) << "\n";
}

void cmd_tbands(Context& ctx, Report& report) {
    add_ring_parameters(ctx, report);
    const StiefelRing ring = require_ring(ctx);
    Json bands = Json::array();
    bool narrow = true;
    for (int p = 0; p <= ring.k(); ++p) {
        const DegreeBand b = t_band(ring, p);
        narrow = narrow && b.width() < ring.n() - ring.k();
        bands.push_back(Json{{"p", b.p}, {"lo", b.lo}, {"hi", b.hi}});
        ctx.text << "T_" << p << " = [" << b.lo << ", " << b.hi << "]\n";
    }
    report.results["bands"] = std::move(bands);
    report.results["widths_below_gap"] = narrow;
    report.results["product_theorem_applies"] = product_theorem_applies(ring.n(), ring.k());
}

struct WuArgs {
    std::vector<std::string> assignments;
};

CharClassSystem parse_system(const StiefelRing& ring, const std::vector<std::string>& assignments) {
    CharClassSystem system(ring);
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw ParseError("expected DEGREE=CLASS, got '" + a + "'");
        std::int64_t degree = 0;
        try {
            std::size_t used = 0;
            degree = std::stoll(a.substr(0, eq), &used);
            if (used != eq) throw ParseError("bad degree in '" + a + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad degree in '" + a + "'");
        }
        system.set(degree, parse_class(ring, a.substr(eq + 1)));
    }
    return system;
}

void cmd_wu_check(Context& ctx, Report& report, const WuArgs& args) {
    add_ring_parameters(ctx, report);
    report.parameters["w"] = args.assignments;
    const StiefelRing ring = require_ring(ctx);
    const CharClassSystem system = parse_system(ring, args.assignments);
    const WuCheck check = is_wu_consistent(system);
    Json violations = Json::array();
    for (const auto& v : check.violations) {
        violations.push_back(Json{{"i", v.i},
                                  {"j", v.j},
                                  {"lhs", format(ring, v.lhs)},
                                  {"rhs", format(ring, v.rhs)}});
        ctx.text << "Sq^" << v.i << "(w" << v.j << ") = " << format(ring, v.lhs)
                 << " but Wu's formula gives " << format(ring, v.rhs) << "\n";
    }
    report.results["system"] = system_to_json(system);
    report.results["consistent"] = check.consistent;
    report.results["violations"] = std::move(violations);
    if (check.consistent) ctx.text << "consistent\n";
    report.status = check.consistent ? Status::ok : Status::violation;
}

struct EnumerateArgs {
    bool wu = false;
    bool cor22 = false;
    std::optional<std::int64_t> first_nonzero;
    bool brute_force = false;
    bool jsonl = false;
    unsigned threads = 1;
};

void cmd_enumerate(Context& ctx, Report& report, const EnumerateArgs& args) {
    if (args.jsonl) ctx.json = true;  // summary line is always JSON
    add_ring_parameters(ctx, report);
    report.parameters["wu"] = args.wu;
    report.parameters["cor22"] = args.cor22;
    report.parameters["first_nonzero"] = args.first_nonzero ? Json(*args.first_nonzero) : Json(nullptr);
    report.parameters["brute_force"] = args.brute_force;
    report.parameters["budget"] = ctx.budget;
    const StiefelRing ring = require_ring(ctx);

    EnumerateOptions options;
    options.require_wu = args.wu;
    options.require_cor22 = args.cor22;
    options.first_nonzero = args.first_nonzero;
    options.budget = ctx.budget;
    options.prune = !args.brute_force;

    Json systems = Json::array();
    std::uint64_t count = 0;
    auto sink = [&](const CharClassSystem& s) {
        ++count;
        if (args.jsonl) {
            ctx.out << system_to_json(s).dump() << "\n";
        } else if (ctx.json) {
            systems.push_back(system_to_json(s));
        } else {
            ctx.out << system_line_text(s);
        }
    };
    if (args.threads > 1) {
        for (const auto& s : collect_systems(ring, options, args.threads)) sink(s);
    } else {
        enumerate_systems(ring, options, sink);
    }
    report.results["state_space"] = bigint_to_json(state_space_size(ring));
    report.results["count"] = count;
    if (ctx.json && !args.jsonl) report.results["systems"] = std::move(systems);
    ctx.text << "count: " << count << "\n";
}

struct DeriveArgs {
    int q = 0;
};

void cmd_derive(Context& ctx, Report& report, const DeriveArgs& args) {
    add_ring_parameters(ctx, report);
    report.parameters["q"] = args.q;
    const StiefelRing ring = require_ring(ctx);
    const RelationTable table = derive_relations(ring, args.q);
    Json relations = Json::array();
    for (const Relation& rel : table.relations) {
        relations.push_back(Json{{"degree", rel.degree},
                                 {"verdict", std::string(to_string(rel.verdict))},
                                 {"factors", rel.factors}});
        ctx.text << rel.degree << ": " << to_string(rel.verdict);
        if (!rel.factors.empty()) {
            std::vector<std::string> names;
            for (auto f : rel.factors) names.push_back("w" + std::to_string(f));
            ctx.text << " " << join(names, "*");
        }
        ctx.text << "\n";
    }
    report.results["relations"] = std::move(relations);
}

struct Thm1Args {
    int max_n = 20;
    std::uint64_t max_d = 16;
};

void cmd_verify_thm1(Context& ctx, Report& report, const Thm1Args& args) {
    add_ring_parameters(ctx, report);
    std::vector<std::pair<int, int>> pairs;
    if (ctx.n || ctx.k) {
        const StiefelRing ring = require_ring(ctx);
        pairs.emplace_back(ring.n(), ring.k());
    } else {
        report.parameters["max_n"] = args.max_n;
        for (int n = 2; n <= args.max_n; ++n) {
            for (int k = 1; k < n; ++k) pairs.emplace_back(n, k);
        }
    }
    report.parameters["max_d"] = args.max_d;

    auto to_json_set = [](const AdmissibleSet& s) { return Json(s.degrees); };
    Json rows = Json::array();
    std::uint64_t total_violations = 0;
    for (auto [n, k] : pairs) {
        const AdmissibleSet thm1 = admissible_degrees(n, k, AdmissibleMode::theorem1);
        std::optional<AdmissibleSet> cor22;
        if (n >= 2 * k) cor22 = admissible_degrees(n, k, AdmissibleMode::corollary22);
        const BigInt generator = image_multiple(n, k);
        const std::int64_t gap = n - k;
        Json violations = Json::array();
        for (std::uint64_t d = 0; d <= args.max_d; ++d) {
            const TruncatedPoly w = total_sw_multiple_gamma(n, generator * d);
            for (std::int64_t e : w.nonzero_exponents()) {
                if (e < gap) continue;
                if (e <= std::min<std::int64_t>(n - 1, 2 * gap) && !thm1.contains(e)) {
                    violations.push_back(Json{{"d", d}, {"degree", e}, {"mode", "theorem1"}});
                }
                if (cor22 && e <= n - 1 && !cor22->contains(e)) {
                    violations.push_back(Json{{"d", d}, {"degree", e}, {"mode", "corollary22"}});
                }
            }
        }
        total_violations += violations.size();
        ctx.text << "V_" << k << "(R^" << n << "): theorem1 {" ;
        std::vector<std::string> t1;
        for (auto e : thm1.degrees) t1.push_back(std::to_string(e));
        ctx.text << join(t1, ",") << "}";
        if (cor22) {
            std::vector<std::string> c2;
            for (auto e : cor22->degrees) c2.push_back(std::to_string(e));
            ctx.text << " corollary22 {" << join(c2, ",") << "}";
        }
        ctx.text << " violations " << violations.size() << "\n";
        rows.push_back(Json{{"n", n},
                            {"k", k},
                            {"image_multiple", bigint_to_json(generator)},
                            {"theorem1", to_json_set(thm1)},
                            {"corollary22", cor22 ? to_json_set(*cor22) : Json(nullptr)},
                            {"violations", std::move(violations)}});
    }
    report.results["pairs"] = std::move(rows);
    report.results["violations"] = total_violations;
    report.status = total_violations == 0 ? Status::ok : Status::violation;
}

struct Thm2Args {
    unsigned threads = 1;
};

struct Thm2Tally {
    std::uint64_t systems = 0;
    std::uint64_t trivial = 0;
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> per_q;  // q -> (systems, violations)
    Json counterexamples = Json::array();

    std::uint64_t failures() const { return counterexamples.size(); }
};

Thm2Tally tally_theorem2(const StiefelRing& ring, const EnumerateOptions& options, unsigned threads) {
    Thm2Tally tally;
    for (std::int64_t q = 0; q < 62 && (std::int64_t{1} << q) <= ring.top_degree(); ++q) {
        tally.per_q[static_cast<int>(q)] = {0, 0};
    }
    for (const auto& s : collect_systems(ring, options, threads)) {
        ++tally.systems;
        const auto first = first_nonzero_degree(s);
        if (!first) {
            ++tally.trivial;
            continue;
        }
        const auto degree = static_cast<std::uint64_t>(*first);
        if (!std::has_single_bit(degree)) {
            Json c = system_to_json(s);
            c["reason"] = "first nonzero degree is not a power of two";
            tally.counterexamples.push_back(std::move(c));
            continue;
        }
        const int q = std::countr_zero(degree);
        auto& [systems, violations] = tally.per_q[q];
        ++systems;
        const RelationCheck check = check_theorem2(s, q);
        if (!check.ok) {
            ++violations;
            Json c = system_to_json(s);
            Json where = Json::array();
            for (const auto& v : check.violations) {
                where.push_back(Json{{"degree", v.degree},
                                     {"expected", format(ring, v.expected)},
                                     {"actual", format(ring, v.actual)}});
            }
            c["violations"] = std::move(where);
            tally.counterexamples.push_back(std::move(c));
        }
    }
    return tally;
}

Json tally_json(const Thm2Tally& t) {
    Json per_q = Json::array();
    for (const auto& [q, counts] : t.per_q) {
        per_q.push_back(Json{{"q", q},
                             {"degree", std::int64_t{1} << q},
                             {"systems", counts.first},
                             {"violations", counts.second}});
    }
    return Json{{"systems", t.systems},
                {"trivial", t.trivial},
                {"per_q", std::move(per_q)},
                {"counterexamples", t.counterexamples}};
}

void cmd_verify_thm2(Context& ctx, Report& report, const Thm2Args& args) {
    add_ring_parameters(ctx, report);
    report.parameters["budget"] = ctx.budget;
    const StiefelRing ring = require_ring(ctx);
    if (!product_theorem_applies(ring.n(), ring.k())) {
        throw HypothesisError("verify-thm2 needs n > k(k+4)/4, got n=" + std::to_string(ring.n()) +
                              " k=" + std::to_string(ring.k()));
    }
    EnumerateOptions options;
    options.require_wu = true;
    options.require_cor22 = true;
    options.budget = ctx.budget;
    const Thm2Tally main = tally_theorem2(ring, options, args.threads);

    options.require_cor22 = false;
    const Thm2Tally wu_only = tally_theorem2(ring, options, args.threads);

    report.results = tally_json(main);
    report.results["wu_only"] = tally_json(wu_only);
    report.results["wu_only_sufficient"] = wu_only.failures() == 0;
    report.status = main.failures() == 0 ? Status::ok : Status::violation;

    ctx.text << "V_" << ring.k() << "(R^" << ring.n() << "): " << main.systems
             << " Wu-consistent systems under the degree constraint (" << main.trivial
             << " trivial)\n";
    for (const auto& [q, counts] : main.per_q) {
        ctx.text << "  q=" << q << " (w" << (std::int64_t{1} << q) << "): " << counts.first
                 << " systems, " << counts.second << " violations\n";
    }
    ctx.text << "  counterexamples: " << main.failures() << "\n";
    ctx.text << "Wu only: " << wu_only.systems << " systems, " << wu_only.failures()
             << " counterexamples\n";
}

struct AxiomArgs {
    int max_n = 12;
    int max_k = 4;
};

void cmd_axioms(Context& ctx, Report& report, const AxiomArgs& args) {
    add_ring_parameters(ctx, report);
    std::vector<StiefelRing> rings;
    if (ctx.n || ctx.k) {
        rings.push_back(require_ring(ctx));
    } else {
        report.parameters["max_n"] = args.max_n;
        report.parameters["max_k"] = args.max_k;
        for (int k = 1; k <= args.max_k; ++k) {
            for (int n = k + 1; n <= args.max_n; ++n) rings.push_back(make_ring(n, k));
        }
    }
    Json rows = Json::array();
    std::uint64_t failed = 0;
    for (const auto& ring : rings) {
        const AxiomReport r = verify_axioms(ring);
        Json tallies = Json::object();
        ctx.text << "V_" << ring.k() << "(R^" << ring.n() << "):";
        for (const auto& t : r.tallies) {
            tallies[t.name] = Json{{"checked", t.checked}, {"failed", t.failed}};
            failed += t.failed;
            ctx.text << " " << t.name << " " << (t.checked - t.failed) << "/" << t.checked;
        }
        ctx.text << "\n";
        Json failures = Json::array();
        for (const auto& f : r.failures) {
            failures.push_back(Json{{"axiom", f.axiom}, {"detail", f.detail}});
            ctx.text << "  FAIL " << f.axiom << ": " << f.detail << "\n";
        }
        rows.push_back(Json{{"n", ring.n()}, {"k", ring.k()}, {"tallies", std::move(tallies)},
                            {"failures", std::move(failures)}});
    }
    report.results["rings"] = std::move(rows);
    report.results["failed"] = failed;
    report.status = failed == 0 ? Status::ok : Status::violation;
}

void emit(Context& ctx, const Report& report) {
    if (ctx.json) {
        ctx.out << to_json(report).dump() << "\n";
    } else {
        ctx.out << ctx.text.str();
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx(out, err);
    CLI::App app{"Mod-2 cohomology of real Stiefel manifolds, Steenrod squares and "
                 "Stiefel-Whitney class systems"};
    app.name("stiefel");
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "Emit a JSON report");
    app.add_option("--n", ctx.n, "Ambient dimension n of V_k(R^n)");
    app.add_option("--k", ctx.k, "Frame count k of V_k(R^n)");
    app.add_option("--budget", ctx.budget, "Maximum raw enumeration state space")
        ->capture_default_str();

    std::vector<std::pair<CLI::App*, std::function<void(Report&)>>> commands;
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    BasisArgs basis_args;
    auto* basis_cmd = add("basis", "List the monomial basis of H^degree (all degrees by default)");
    basis_cmd->add_option("--degree", basis_args.degree, "Degree");
    commands.emplace_back(basis_cmd, [&](Report& r) { cmd_basis(ctx, r, basis_args); });

    MulArgs mul_args;
    auto* mul_cmd = add("mul", "Multiply two classes, e.g. mul a2 a2*a3");
    mul_cmd->add_option("x", mul_args.x, "Left factor")->required();
    mul_cmd->add_option("y", mul_args.y, "Right factor")->required();
    commands.emplace_back(mul_cmd, [&](Report& r) { cmd_mul(ctx, r, mul_args); });

    SqArgs sq_args;
    auto* sq_cmd = add("sq", "Apply Sq^i to a class");
    sq_cmd->add_option("--i", sq_args.i, "Square index")->required()->check(CLI::NonNegativeNumber);
    sq_cmd->add_option("x", sq_args.x, "Class, e.g. a4*a5+a9")->required();
    commands.emplace_back(sq_cmd, [&](Report& r) { cmd_sq(ctx, r, sq_args); });

    PhiArgs phi_args;
    auto* phi_cmd = add("phi", "Count 0 < l <= m with l = 0,1,2,4 mod 8");
    phi_cmd->add_option("m", phi_args.m, "m >= 0")->required();
    commands.emplace_back(phi_cmd, [&](Report& r) { cmd_phi(ctx, r, phi_args); });

    BinomArgs binom_args;
    auto* binom_cmd = add("binom", "Parity of C(a,b)");
    binom_cmd->add_option("a", binom_args.a, "Top (>= -1)")->required();
    binom_cmd->add_option("b", binom_args.b, "Bottom (>= 0)")->required();
    commands.emplace_back(binom_cmd, [&](Report& r) { cmd_binom(ctx, r, binom_args); });

    auto* tbands_cmd = add("tbands", "Degree bands T_0..T_k");
    commands.emplace_back(tbands_cmd, [&](Report& r) { cmd_tbands(ctx, r); });

    WuArgs wu_args;
    auto* wu_cmd = add("wu-check", "Check Wu's formula for a system given as --w DEGREE=CLASS");
    wu_cmd->add_option("--w", wu_args.assignments, "Assignment such as 3=a3 (repeatable)");
    commands.emplace_back(wu_cmd, [&](Report& r) { cmd_wu_check(ctx, r, wu_args); });

    EnumerateArgs enum_args;
    auto* enum_cmd = add("enumerate", "Enumerate Stiefel-Whitney class systems");
    enum_cmd->add_flag("--wu", enum_args.wu, "Keep Wu-consistent systems only");
    enum_cmd->add_flag("--cor22", enum_args.cor22,
                       "Force w_i = 0 for i <= n-1, i != 2^phi(n-k-1) (needs n >= 2k)");
    enum_cmd->add_option("--first-nonzero", enum_args.first_nonzero, "Required first nonzero degree");
    enum_cmd->add_flag("--brute-force", enum_args.brute_force, "Disable pruning");
    enum_cmd->add_flag("--jsonl", enum_args.jsonl, "Stream one JSON line per system, summary last");
    enum_cmd->add_option("--threads", enum_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    commands.emplace_back(enum_cmd, [&](Report& r) { cmd_enumerate(ctx, r, enum_args); });

    DeriveArgs derive_args;
    auto* derive_cmd = add("derive", "Per-degree relations when the first nonzero class is w_{2^q}");
    derive_cmd->add_option("--q", derive_args.q, "Exponent q")->required()->check(CLI::NonNegativeNumber);
    commands.emplace_back(derive_cmd, [&](Report& r) { cmd_derive(ctx, r, derive_args); });

    Thm1Args thm1_args;
    auto* thm1_cmd = add("verify-thm1",
                         "Cross-check admissible degrees against (1+t)^(d 2^phi(n-k-1))");
    thm1_cmd->add_option("--max-n", thm1_args.max_n, "Sweep bound when --n/--k are absent")
        ->capture_default_str();
    thm1_cmd->add_option("--max-d", thm1_args.max_d, "Largest multiple d")->capture_default_str();
    commands.emplace_back(thm1_cmd, [&](Report& r) { cmd_verify_thm1(ctx, r, thm1_args); });

    Thm2Args thm2_args;
    auto* thm2_cmd = add("verify-thm2", "Exhaustively check the product relations on one ring");
    thm2_cmd->add_option("--threads", thm2_args.threads, "Worker threads")->check(CLI::PositiveNumber);
    commands.emplace_back(thm2_cmd, [&](Report& r) { cmd_verify_thm2(ctx, r, thm2_args); });

    AxiomArgs axiom_args;
    auto* axioms_cmd = add("axioms", "Check Steenrod axioms on every basis class");
    axioms_cmd->add_option("--max-n", axiom_args.max_n, "Sweep bound on n")->capture_default_str();
    axioms_cmd->add_option("--max-k", axiom_args.max_k, "Sweep bound on k")->capture_default_str();
    commands.emplace_back(axioms_cmd, [&](Report& r) { cmd_axioms(ctx, r, axiom_args); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        Report report;
        report.command = sub->get_name();
        try {
            handler(report);
        } catch (const HypothesisError& e) {
            report.status = Status::hypothesis_unmet;
            report.results = Json{{"error", e.what()}};
            ctx.text.str("");
            ctx.text << "hypothesis unmet: " << e.what() << "\n";
            err << "error: " << e.what() << "\n";
        } catch (const BudgetExceeded& e) {
            report.status = Status::budget_exceeded;
            report.results = Json{{"error", e.what()},
                                  {"state_space", bigint_to_json(e.state_space())},
                                  {"budget", bigint_to_json(e.budget())}};
            ctx.text.str("");
            ctx.text << "budget exceeded: state space " << e.state_space().str() << "\n";
            err << "error: " << e.what() << "\n";
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        emit(ctx, report);
        return exit_code(report.status);
    }
    err << "error: no subcommand given\n\n" << app.help();
    return 2;
}

}  // namespace stiefel::cli
