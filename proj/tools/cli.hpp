#pragma once

// Command implementations for the ideal-forge executable. Every command
// writes exactly one JSON document to `out`; diagnostics go to `err`.
// Exit codes: 0 success, 1 property/check failure, 2 input or resource error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ideal_forge/ideal_forge.hpp"

namespace ideal_forge::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct GlobalOptions
{
    bool pretty = false;
    int indent = -1;
    unsigned jobs = 1;
    std::size_t cap = kDefaultIdealCap;
    std::uint64_t search_cap = kDefaultSearchCap;
    std::uint64_t sweep_budget = SweepOptions{}.budget;

    int json_indent() const { return indent >= 0 ? indent : (pretty ? 2 : -1); }
    EnumerationOptions enumeration() const { return {cap, jobs}; }
};

inline json bigint_json(const BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline BigInt parse_bigint(const std::string& name, const std::string& text)
{
    static const std::regex integer(R"(\s*[-+]?[0-9]+\s*)");
    if (!std::regex_match(text, integer))
        throw InputError("-" + name + " expects an integer, got '" + text + "'");
    std::string t = text;
    t.erase(0, t.find_first_not_of(" \t+"));
    return BigInt(t);
}

inline json labels_json(const FiniteRing& r, const std::vector<Element>& elems)
{
    json out = json::array();
    for (Element e : elems)
        out.push_back(e < r.order() ? json(r.label(e)) : json(nullptr));
    return out;
}

inline json axiom_report_json(const AxiomReport& report, const std::vector<std::string>& labels)
{
    json v = json::array();
    for (const auto& viol : report.violations) {
        json w = json::array();
        for (Element e : viol.witness)
            w.push_back(e < labels.size() ? json(labels[e]) : json(nullptr));
        v.push_back({{"axiom", viol.axiom}, {"witness", viol.witness}, {"witness_labels", w}});
    }
    return {{"passed", report.passed}, {"violations", v}};
}

inline int cmd_ring_verify(const std::string& expr, json& doc)
{
    const RingExpression parsed = parse_ring_expression(expr);
    doc["ring"] = expr;
    if (const auto* file = std::get_if<RingExpression::File>(&parsed.node)) {
        const RingTables tables = load_ring_spec(file->path);
        const AxiomReport report = verify_axioms(tables);
        doc["order"] = tables.order;
        doc.update(axiom_report_json(report, tables.labels));
        return report.passed ? kOk : kCheckFailed;
    }
    try {
        const RingPtr r = evaluate(parsed);
        const AxiomReport report = verify_axioms(*r);
        doc["order"] = r->order();
        doc["commutative"] = r->is_commutative();
        doc["unitary"] = r->one().has_value();
        doc.update(axiom_report_json(report, r->labels()));
        return report.passed ? kOk : kCheckFailed;
    } catch (const AxiomError& e) {
        // A nested file component failed validation.
        doc.update(axiom_report_json(e.report(), {}));
        return kCheckFailed;
    }
}

inline int cmd_ring_dump(const std::string& expr, json& doc)
{
    doc = dump_ring_spec(*evaluate_ring_expression(expr));
    return kOk;
}

inline int cmd_ideals(const std::string& expr, const GlobalOptions& g, json& doc)
{
    const RingPtr r = evaluate_ring_expression(expr);
    const IdealLattice lattice = lattice_of_ideals(r, g.enumeration());
    json ideals = json::array();
    for (const Ideal& i : lattice.ideals())
        ideals.push_back(i.labels());
    json nodes = json::array();
    for (std::size_t k = 0; k < lattice.size(); ++k)
        nodes.push_back(k);
    json covers = json::array();
    for (auto [a, b] : lattice.covers())
        covers.push_back({a, b});

    doc["ring"] = expr;
    doc["order"] = r->order();
    doc["count"] = lattice.size();
    doc["ideals"] = ideals;
    doc["lattice"] = {{"nodes", nodes}, {"covers", covers}, {"bottom", lattice.bottom()}, {"top", lattice.top()}};
    doc["distributive"] = is_distributive(lattice);
    doc["modular"] = is_modular(lattice);
    return kOk;
}

inline int cmd_skew(const std::string& left, const std::string& right, const GlobalOptions& g, json& doc)
{
    const ProductRing p(evaluate_ring_expression(left), evaluate_ring_expression(right));
    const ProductAnalysis a = analyze_product(p, g.enumeration());
    const FiniteRing& carrier = *p.carrier();

    json skew = json::array();
    json witnesses = json::array();
    for (const SkewEntry& s : a.skew) {
        skew.push_back(s.ideal.labels());
        auto [x, y] = p.decode(s.witness);
        witnesses.push_back({{"ideal", s.ideal.labels()},
                             {"witness", carrier.label(s.witness)},
                             {"witness_pair", {p.left()->label(x), p.right()->label(y)}}});
    }
    doc["factors"] = {left, right};
    doc["order"] = carrier.order();
    doc["ideal_count"] = a.ideal_count;
    doc["skew_count"] = a.skew.size();
    doc["skew_ideals"] = skew;
    doc["skew_witnesses"] = witnesses;
    doc["theorem1_agreement"] = a.theorem1_agreement;
    return a.theorem1_agreement ? kOk : kCheckFailed;
}

inline int cmd_malcev(const std::string& expr, std::optional<std::uint64_t> degree, const GlobalOptions& g,
                      json& doc)
{
    const RingPtr r = evaluate_ring_expression(expr);
    MalcevOptions opts;
    opts.degree_bound = degree;
    opts.search_cap = g.search_cap;
    opts.jobs = g.jobs;
    const MalcevSearchOutcome o = find_malcev(*r, opts);

    doc["ring"] = expr;
    doc["exponent"] = o.searched_coefficient_modulus;
    doc["degree_bound"] = o.searched_degree_bound;
    doc["complete"] = o.complete;
    doc["found"] = o.found;
    doc["noncommutative"] = o.noncommutative;
    bool verified = true;
    if (o.witness) {
        doc["coefficients"] = o.witness->coeffs;
        doc["polynomial"] = o.witness->to_string();
        verified = satisfies_malcev(*r, *o.witness);
    }
    doc["verified"] = verified;
    return verified ? kOk : kCheckFailed;
}

struct ZZArgs
{
    std::string a = "0", b = "0", c = "0", d = "0", u = "0", v = "0";
};

inline int cmd_zz_member(const ZZArgs& z, json& doc)
{
    const ZZPrincipalIdeal i(parse_bigint("a", z.a), parse_bigint("b", z.b), parse_bigint("c", z.c),
                             parse_bigint("d", z.d));
    const BigInt u = parse_bigint("u", z.u), v = parse_bigint("v", z.v);
    doc = {{"a", bigint_json(i.a())}, {"b", bigint_json(i.b())}, {"c", bigint_json(i.c())},
           {"d", bigint_json(i.d())}, {"u", bigint_json(u)},     {"v", bigint_json(v)},
           {"member", zz_member(i, u, v)}};
    return kOk;
}

inline int cmd_zz_decompose(const ZZArgs& z, json& doc)
{
    const ZZPrincipalIdeal i(parse_bigint("a", z.a), parse_bigint("b", z.b), parse_bigint("c", z.c),
                             parse_bigint("d", z.d));
    const bool decomposable = zz_is_decomposable(i);
    const bool predicate = theorem3_predicate(i.a(), i.b(), i.c(), i.d());
    const auto cert = xgcd(i.c(), i.d());
    doc = {{"a", bigint_json(i.a())},
           {"b", bigint_json(i.b())},
           {"c", bigint_json(i.c())},
           {"d", bigint_json(i.d())},
           {"decomposable", decomposable},
           {"predicate", predicate},
           {"bezout", {{"g", bigint_json(cert.g)}, {"e", bigint_json(cert.e)}, {"f", bigint_json(cert.f)}}}};
    return decomposable == predicate ? kOk : kCheckFailed;
}

inline int cmd_zz_sweep(std::int64_t bound, const GlobalOptions& g, json& doc)
{
    const SweepReport r = theorem3_sweep({bound, g.jobs, g.sweep_budget});
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back(
            {{"kind", m.kind}, {"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}, {"u", m.u}, {"v", m.v}});
    doc = {{"bound", r.bound},           {"cases", r.cases},           {"skew_cases", r.skew_cases},
           {"grid_points", r.grid_points}, {"mismatches", mismatches}};
    return r.mismatches.empty() ? kOk : kCheckFailed;
}

/// Entry point shared by the executable and the tests. args excludes argv[0].
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    GlobalOptions g;
    if (const char* env = std::getenv("IDEAL_FORGE_CAP")) {
        try {
            g.cap = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: IDEAL_FORGE_CAP must be a positive integer\n";
            return kInputError;
        }
    }

    CLI::App app{"Decide direct decomposability of ideals in direct products of rings", "ideal-forge"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--pretty", g.pretty, "Indent JSON output");
    app.add_option("--json-indent", g.indent, "Indent JSON output by N spaces");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    app.add_option("--cap", g.cap, "Maximum number of ideals to enumerate (env IDEAL_FORGE_CAP)")
        ->check(CLI::PositiveNumber);
    app.add_option("--search-cap", g.search_cap, "Maximum Mal'cev search space")->check(CLI::PositiveNumber);
    app.add_option("--budget", g.sweep_budget, "Maximum sweep grid evaluations")->check(CLI::PositiveNumber);

    std::string expr, expr2;
    std::optional<std::uint64_t> degree;
    std::int64_t bound = 6;
    ZZArgs z;
    std::function<int(json&)> action;

    auto* ring = app.add_subcommand("ring", "Ring ingestion");
    ring->require_subcommand(1);
    auto* verify = ring->add_subcommand("verify", "Check the ring axioms");
    verify->add_option("ring", expr, "Ring expression")->required();
    verify->callback([&] { action = [&](json& d) { return cmd_ring_verify(expr, d); }; });
    auto* dump = ring->add_subcommand("dump", "Print the ring-spec document of a ring");
    dump->add_option("ring", expr, "Ring expression")->required();
    dump->callback([&] { action = [&](json& d) { return cmd_ring_dump(expr, d); }; });

    auto* ideals = app.add_subcommand("ideals", "Enumerate the ideal lattice");
    ideals->add_option("ring", expr, "Ring expression")->required();
    ideals->callback([&] { action = [&](json& d) { return cmd_ideals(expr, g, d); }; });

    auto* skew = app.add_subcommand("skew", "Classify the ideals of a direct product");
    skew->add_option("left", expr, "First factor")->required();
    skew->add_option("right", expr2, "Second factor")->required();
    skew->callback([&] { action = [&](json& d) { return cmd_skew(expr, expr2, g, d); }; });

    auto* malcev = app.add_subcommand("malcev", "Search for t with x t(x) = x");
    malcev->add_option("ring", expr, "Ring expression")->required();
    malcev->add_option("--degree-bound", degree, "Largest degree searched")->check(CLI::PositiveNumber);
    malcev->callback([&] { action = [&](json& d) { return cmd_malcev(expr, degree, g, d); }; });

    auto* zz = app.add_subcommand("zz", "Principal ideals of cZ x dZ");
    zz->require_subcommand(1);
    auto add_abcd = [&](CLI::App* sub) {
        sub->add_option("-a", z.a, "First generator coordinate")->required();
        sub->add_option("-b", z.b, "Second generator coordinate")->required();
        sub->add_option("-c", z.c, "First factor modulus")->required();
        sub->add_option("-d", z.d, "Second factor modulus")->required();
    };
    auto* member = zz->add_subcommand("member", "Membership of (u, v) in I(a, b)");
    add_abcd(member);
    member->add_option("-u", z.u, "First coordinate")->required();
    member->add_option("-v", z.v, "Second coordinate")->required();
    member->callback([&] { action = [&](json& d) { return cmd_zz_member(z, d); }; });
    auto* decompose = zz->add_subcommand("decompose", "Direct decomposability of I(a, b)");
    add_abcd(decompose);
    decompose->callback([&] { action = [&](json& d) { return cmd_zz_decompose(z, d); }; });
    auto* sweep = zz->add_subcommand("sweep", "Cross-check every small parameter tuple");
    sweep->add_option("--bound", bound, "Largest |a|,|b|,|c|,|d|")->check(CLI::NonNegativeNumber);
    sweep->callback([&] { action = [&](json& d) { return cmd_zz_sweep(bound, g, d); }; });

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
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    json doc = json::object();
    int code = kOk;
    try {
        code = action(doc);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    out << doc.dump(g.json_indent()) << "\n";
    return code;
}

} // namespace ideal_forge::cli
