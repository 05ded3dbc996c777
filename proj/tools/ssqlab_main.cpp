// ssqlab command line front end.
//
//   ssqlab analyze --group <name|file> [--json]
//   ssqlab series  --group <name|file> --pred <kind> [--subnormal] [--json]
//   ssqlab check   --group <name|file> --subgroup "<gens>" --pred <kind>
//   ssqlab verify  --suite <id|all> [--corpus <file>] [--extended] --out <path>
//
// Exit status: analyze 0; series 0 when a series exists, 1 otherwise; check 0
// when the predicate holds, 1 otherwise; verify 0 when every record passes,
// 1 otherwise. Usage and input errors exit with 2.

#include "ssqlab/ssqlab.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace ssqlab;

namespace {

std::vector<GroupPtr> resolve_groups(const std::string& name_or_path, std::size_t cap) {
    if (is_builtin_name(name_or_path)) return {corpus_builtin(name_or_path, cap)};
    std::vector<GroupPtr> out;
    for (GroupSpec& spec : read_group_file(name_or_path))
        out.push_back(Group::generate(std::move(spec), cap));
    if (out.empty()) throw Error("file '" + name_or_path + "' contains no group records");
    return out;
}

const std::map<std::string, SeriesKind> kKindNames = {
    {"central", SeriesKind::central},        {"normal", SeriesKind::normal},
    {"subnormal", SeriesKind::subnormal},    {"s-perm", SeriesKind::s_permutable},
    {"ss", SeriesKind::ss_quasinormal},      {"cc", SeriesKind::cc_permutable},
};

std::string join_strings(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string subgroup_brief(const Subgroup& s) {
    return "order " + std::to_string(s.order()) + ", generated by " +
           join_strings(s.generator_strings(), ", ");
}

// ---- analyze ----

Json analyze_json(const Group& g) {
    Json j;
    j["name"] = g.name();
    j["degree"] = g.degree();
    j["order"] = g.order();
    j["abelian"] = is_abelian(g);
    j["nilpotent"] = is_nilpotent(g);
    j["supersolvable"] = is_supersolvable(g);
    j["solvable"] = is_solvable(g);
    j["simple"] = is_nonabelian_simple(g) || (g.order() > 1 && is_prime(g.order()));

    j["center"] = subgroup_json(center(g));
    j["frattini"] = subgroup_json(frattini(g));
    j["fitting"] = subgroup_json(fitting(g));

    Json derived = Json::array();
    for (const Subgroup& s : derived_series(g).chain) derived.push_back(s.order());
    j["derived_series_orders"] = std::move(derived);
    j["chief_factors"] = chief_series(g).factors;

    Json minimal = Json::array();
    for (const Subgroup& n : minimal_normal_subgroups(g)) minimal.push_back(subgroup_json(n));
    j["minimal_normal_subgroups"] = std::move(minimal);

    Json sylow = Json::array();
    for (std::uint64_t p : prime_divisors(g.order())) {
        Json e;
        e["p"] = p;
        auto all = sylow_subgroups_all(g, p);
        e["order"] = all.front().order();
        e["count"] = all.size();
        sylow.push_back(std::move(e));
    }
    j["sylow"] = std::move(sylow);

    j["subgroup_count"] = g.subgroups().size();
    Json maxima = Json::array();
    for (const Subgroup& m : maximal_subgroups(g)) {
        Json e;
        e["order"] = m.order();
        e["index"] = g.order() / m.order();
        maxima.push_back(std::move(e));
    }
    j["maximal_subgroups"] = std::move(maxima);
    return j;
}

void print_analysis(const Group& g) {
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "name: " << g.name() << "\n";
    std::cout << "degree: " << g.degree() << "\n";
    std::cout << "order: " << g.order() << "\n";
    std::cout << "abelian: " << yesno(is_abelian(g)) << "\n";
    std::cout << "nilpotent: " << yesno(is_nilpotent(g)) << "\n";
    std::cout << "supersolvable: " << yesno(is_supersolvable(g)) << "\n";
    std::cout << "solvable: " << yesno(is_solvable(g)) << "\n";

    std::cout << "center: order " << center(g).order() << "\n";
    std::cout << "frattini: order " << frattini(g).order() << "\n";
    std::cout << "fitting: " << subgroup_brief(fitting(g)) << "\n";

    std::cout << "derived series orders:";
    for (const Subgroup& s : derived_series(g).chain) std::cout << " " << s.order();
    std::cout << "\n";

    std::cout << "chief factors:";
    for (std::size_t f : chief_series(g).factors) std::cout << " " << f;
    std::cout << "\n";

    std::cout << "minimal normal subgroup orders:";
    for (const Subgroup& n : minimal_normal_subgroups(g)) std::cout << " " << n.order();
    std::cout << "\n";

    for (std::uint64_t p : prime_divisors(g.order())) {
        auto all = sylow_subgroups_all(g, p);
        std::cout << "sylow " << p << ": count " << all.size() << ", order "
                  << all.front().order() << "\n";
    }

    std::cout << "subgroups: " << g.subgroups().size() << "\n";
    std::cout << "maximal subgroup indices:";
    for (const Subgroup& m : maximal_subgroups(g)) std::cout << " " << g.order() / m.order();
    std::cout << "\n";
}

// ---- series ----

void print_certificate(const SeriesCertificate& cert) {
    const auto& chain = cert.series.chain;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        std::cout << "  [" << i << "] order " << chain[i].order();
        if (i > 0 && !chain[i].is_trivial())
            std::cout << ", generated by " << join_strings(chain[i].generator_strings(), ", ");
        std::cout << "\n";
        if (i == 0 || cert.evidence.size() < i) continue;
        const TermEvidence& ev = cert.evidence[i - 1];
        if (ev.ss_witness) {
            std::cout << "      ss-witness B: " << subgroup_brief(ev.ss_witness->subgroup_b)
                      << " (" << ev.ss_witness->checked_sylows.size()
                      << " sylow subgroups checked)\n";
        }
        if (ev.subnormal_chain) {
            std::cout << "      subnormal descent orders:";
            for (const Subgroup& s : *ev.subnormal_chain) std::cout << " " << s.order();
            std::cout << "\n";
        }
    }
}

int run_series(const Group& g, SeriesPredicate pred, bool json) {
    auto cert = find_series(g, pred);
    if (json) {
        Json j;
        j["group"] = g.name();
        j["order"] = g.order();
        j["predicate"] = pred.describe();
        j["found"] = cert.has_value();
        j["certificate"] = cert ? certificate_json(*cert) : Json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (cert) {
        std::cout << pred.describe() << " maximal series found for " << g.name() << ":\n";
        print_certificate(*cert);
    } else {
        std::cout << "none: " << g.name() << " has no " << pred.describe()
                  << " maximal series\n";
    }
    return cert ? 0 : 1;
}

// ---- check ----

int run_check(const Group& g, const std::string& gens_text, const std::string& pred) {
    std::vector<ElemId> ids;
    std::istringstream in(gens_text);
    std::string piece;
    while (std::getline(in, piece, ';')) {
        std::string trimmed = detail::strip(piece);
        if (trimmed.empty()) continue;
        Permutation p = parse_permutation(trimmed, g.degree());
        auto id = g.find(p);
        if (!id) throw Error("'" + trimmed + "' is not an element of " + g.name());
        ids.push_back(*id);
    }
    if (ids.empty()) throw Error("no generators given for --subgroup");
    Subgroup h = generated_subgroup(g, ids);
    std::cout << "subgroup: " << subgroup_brief(h) << "\n";

    bool verdict = false;
    if (pred == "normal") {
        verdict = is_normal(h, g);
    } else if (pred == "s-perm") {
        verdict = is_s_permutable(h, g.whole());
    } else if (pred == "ss") {
        SSResult r = is_ss_quasinormal(h, g.whole());
        verdict = r.ok;
        if (r.witness) {
            std::cout << "witness B: " << subgroup_brief(r.witness->subgroup_b) << "\n";
            for (const auto& [p, syl] : r.witness->checked_sylows)
                std::cout << "  permutes with sylow " << p << "-subgroup of order "
                          << syl.order() << ": " << join_strings(syl.generator_strings(), ", ")
                          << "\n";
        }
    } else if (pred == "cc") {
        verdict = is_cc_permutable(h, g.whole());
    } else {
        throw Error("unknown predicate '" + pred + "' (want normal|s-perm|ss|cc)");
    }
    std::cout << pred << " in " << g.name() << ": " << (verdict ? "yes" : "no") << "\n";
    return verdict ? 0 : 1;
}

// ---- verify ----

int run_verify(const std::string& suite_arg, const std::string& corpus_path, bool extended,
               const std::string& out_path, std::size_t cap) {
    std::vector<SuiteId> suites;
    if (suite_arg == "all") {
        suites = all_suites();
    } else {
        auto id = parse_suite_id(suite_arg);
        if (!id) {
            std::vector<std::string> names;
            for (SuiteId s : all_suites()) names.push_back(to_string(s));
            throw Error("unknown suite '" + suite_arg + "'; known: all, " +
                        join_strings(names, ", "));
        }
        suites.push_back(*id);
    }

    std::vector<CorpusEntry> corpus = corpus_default(extended, cap);
    if (!corpus_path.empty()) {
        auto extra = ingest_groups(corpus_path, cap);
        corpus.insert(corpus.end(), extra.begin(), extra.end());
    }

    std::vector<ReportRecord> all;
    bool ok = true;
    for (SuiteId id : suites) {
        auto records = run_suite(id, corpus);
        std::size_t failed = 0;
        for (const auto& r : records)
            if (!r.pass) ++failed;
        ok = ok && failed == 0;
        std::cout << to_string(id) << ": " << records.size() << " groups, "
                  << (failed == 0 ? "all pass" : std::to_string(failed) + " FAILED") << "\n";
        for (const auto& r : records)
            if (!r.pass)
                std::cout << "  FAIL " << r.group << ": " << r.counterexample.dump() << "\n";
        all.insert(all.end(), records.begin(), records.end());
    }
    emit_report(all, out_path);
    std::cout << (ok ? "RESULT: pass" : "RESULT: FAIL") << " (" << all.size()
              << " records written to " << out_path << ")\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ssqlab: permutability properties of maximal subgroup series"};
    app.require_subcommand(1);

    std::string group_arg, pred_arg, subgroup_arg, suite_arg = "all", corpus_arg, out_arg;
    bool json = false, flag_subnormal = false, extended = false;

    CLI::App* analyze = app.add_subcommand("analyze", "orders, predicates, characteristic subgroups");
    analyze->add_option("--group", group_arg, "builtin name or group file")->required();
    analyze->add_flag("--json", json, "emit JSON");

    CLI::App* series = app.add_subcommand("series", "search for a maximal subgroup series");
    series->add_option("--group", group_arg, "builtin name or group file")->required();
    series->add_option("--pred", pred_arg, "central|normal|subnormal|s-perm|ss|cc")->required();
    series->add_flag("--subnormal", flag_subnormal, "require terms subnormal in G");
    series->add_flag("--json", json, "emit JSON");

    CLI::App* check = app.add_subcommand("check", "test one subgroup predicate, with witness");
    check->add_option("--group", group_arg, "builtin name or group file")->required();
    check->add_option("--subgroup", subgroup_arg, "generators, ';'-separated cycles")->required();
    check->add_option("--pred", pred_arg, "normal|s-perm|ss|cc")->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites, write NDJSON report");
    verify->add_option("--suite", suite_arg, "suite id or 'all'");
    verify->add_option("--corpus", corpus_arg, "extra group file appended to the corpus");
    verify->add_flag("--extended", extended, "include the heavyweight groups (A6, PGL(2,7))");
    verify->add_option("--out", out_arg, "NDJSON report path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::size_t cap = order_cap_from_env();
        if (app.got_subcommand(analyze)) {
            for (const GroupPtr& g : resolve_groups(group_arg, cap)) {
                if (json)
                    std::cout << analyze_json(*g).dump(2) << "\n";
                else
                    print_analysis(*g);
            }
            return 0;
        }
        if (app.got_subcommand(series)) {
            auto kind = kKindNames.find(pred_arg);
            if (kind == kKindNames.end())
                throw Error("unknown predicate '" + pred_arg +
                            "' (want central|normal|subnormal|s-perm|ss|cc)");
            int rc = 0;
            for (const GroupPtr& g : resolve_groups(group_arg, cap))
                rc |= run_series(*g, {kind->second, flag_subnormal}, json);
            return rc;
        }
        if (app.got_subcommand(check)) {
            auto groups = resolve_groups(group_arg, cap);
            if (groups.size() != 1)
                throw Error("check needs exactly one group, got " +
                            std::to_string(groups.size()));
            return run_check(*groups[0], subgroup_arg, pred_arg);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(suite_arg, corpus_arg, extended, out_arg, cap);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
