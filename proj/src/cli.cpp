#include "latlevel/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latlevel/corpus.hpp"
#include "latlevel/errors.hpp"
#include "latlevel/json_io.hpp"

namespace latlevel {

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    bool json = false;
    bool force = false;
    int max_ground = kMaxGround;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
    auto* in = cmd->add_option("-i,--input", opts.input, "input file (JSON)");
    if (needs_input) in->required();
    cmd->add_option("--format", opts.format, "input schema: covers|sets (default: auto-detect)")
        ->check(CLI::IsMember({"auto", "covers", "sets"}));
    cmd->add_flag("--json", opts.json, "emit JSON instead of text");
    cmd->add_flag("--force", opts.force, "run h-vector machinery on non-meet-distributive input");
    cmd->add_option("--max-ground", opts.max_ground, "reject inputs with more elements than this")
        ->envname("LATLEVEL_MAX_GROUND");
}

MeetSemilattice load(const CommonOpts& opts) {
    std::ifstream in(opts.input);
    if (!in) throw InvalidInput("cannot open input file: " + opts.input);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("invalid JSON in " + opts.input + ": " + e.what());
    }
    const InputFormat fmt = opts.format == "covers" ? InputFormat::Covers
                            : opts.format == "sets" ? InputFormat::Sets
                                                    : InputFormat::Auto;
    const int cap = std::min(opts.max_ground, kMaxGround);
    return load_semilattice(j, fmt, cap);
}

std::string render_vec(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

std::string render_facets(const std::vector<Subset>& facets) {
    std::string out;
    for (Subset f : facets) out += (out.empty() ? "" : " ") + subset_to_string(f);
    return out;
}

void warn_not_md(const MeetSemilattice& L, bool force, std::ostream& err) {
    if (!L.meet_distributive() && force)
        err << "warning: input is not meet-distributive (witness "
            << L.order().id(L.md_witness()) << "); results are not certified\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alexander duals of finite meet-semilattices: Stanley-Reisner "
                 "generators, h-vectors, S-complexes and levelness"};
    app.require_subcommand(1);

    CommonOpts opts;
    int scan_n = 3;
    std::string corpus_name, corpus_out;

    auto* validate = app.add_subcommand("validate", "validate a meet-semilattice input");
    add_common(validate, opts);
    auto* dual = app.add_subcommand("dual-ideal", "minimal generators of the dual Stanley-Reisner ideal");
    add_common(dual, opts);
    auto* hvec = app.add_subcommand("hvector", "h-vector of the Alexander dual");
    add_common(hvec, opts);
    auto* scomp = app.add_subcommand("scomplex", "the S(alpha) complex and its facets");
    add_common(scomp, opts);
    auto* level = app.add_subcommand("level", "levelness report (h, f, a-invariant, S-facets)");
    add_common(level, opts);
    auto* oracle = app.add_subcommand("oracle-check", "brute-force cross-checks of every formula");
    add_common(oracle, opts);
    auto* closure = app.add_subcommand("closure", "distributive closure J(P) as a covers file");
    add_common(closure, opts);
    auto* scan = app.add_subcommand("scan", "h-vectors of duals of all J(P) on n unlabeled points");
    scan->add_option("-n,--size", scan_n, "number of poset elements (1..5)")->default_val(3);
    scan->add_flag("--json", opts.json, "emit JSON instead of text");
    auto* corpus = app.add_subcommand("corpus", "write a bundled example input file");
    corpus->add_option("name", corpus_name, "L1 | L2 | B3-minus-13 | Bn(k) | JP(seed)")->required();
    corpus->add_option("-o,--out", corpus_out, "output path (default: stdout)");

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (corpus->parsed()) {
            const nlohmann::json j = corpus_emit(corpus_name);
            if (corpus_out.empty()) {
                out << j.dump(2) << "\n";
            } else {
                std::ofstream f(corpus_out);
                if (!f) throw InvalidInput("cannot write: " + corpus_out);
                f << j.dump(2) << "\n";
            }
            return 0;
        }
        if (scan->parsed()) {
            const ScanResult r = realizability_scan(scan_n);
            if (opts.json) {
                out << scan_json(r).dump(2) << "\n";
            } else {
                out << "n = " << r.n << ", posets = " << r.poset_count << "\n";
                out << "h-vectors of duals of distributive lattices J(P):\n";
                for (const auto& h : r.h_vectors) out << "  " << render_vec(h) << "\n";
            }
            return 0;
        }

        const MeetSemilattice L = load(opts);
        if (validate->parsed()) {
            if (opts.json) {
                out << validation_report_json(L).dump(2) << "\n";
            } else {
                out << "valid: yes\n";
                out << "elements: " << L.size() << "\n";
                out << "join_irreducibles:";
                for (int a : L.join_irreducibles()) out << " " << L.order().id(a);
                out << "\nmeet_distributive: " << (L.meet_distributive() ? "yes" : "no") << "\n";
                if (!L.meet_distributive())
                    out << "witness: " << L.order().id(L.md_witness()) << "\n";
            }
            return 0;
        }
        if (dual->parsed()) {
            warn_not_md(L, true, err);  // theorem applies to arbitrary meet-semilattices
            const auto gens = theorem_generators(L);
            if (opts.json) {
                out << generators_json(gens).dump(2) << "\n";
            } else {
                out << gens.size() << " minimal generators:\n";
                for (const auto& g : gens)
                    out << "  (" << gen_family_name(g.family) << ") " << g.render() << "\n";
            }
            return 0;
        }
        if (hvec->parsed()) {
            warn_not_md(L, opts.force, err);
            const HVector h = h_vector(L, opts.force);
            if (opts.json)
                out << nlohmann::json{{"h", h.trimmed()}}.dump(2) << "\n";
            else
                out << "h = " << render_vec(h.trimmed()) << "\n";
            return 0;
        }
        if (scomp->parsed()) {
            warn_not_md(L, opts.force, err);
            const SComplex s = s_complex(L, opts.force);
            if (opts.json) {
                out << s_complex_json(L, s).dump(2) << "\n";
            } else {
                for (int a = 0; a < L.size(); ++a)
                    out << "S(" << L.order().id(a) << ") = " << subset_to_string(s.faces[a]) << "\n";
                out << "S-facets: " << render_facets(s.facets) << "\n";
            }
            return 0;
        }
        if (level->parsed()) {
            warn_not_md(L, opts.force, err);
            const LevelReport r = is_level(L, opts.force);
            if (opts.json) {
                out << level_report_json(r).dump(2) << "\n";
            } else {
                out << "h = " << render_vec(r.h.trimmed()) << "\n";
                out << "f_dual = " << render_vec(r.f_dual) << "\n";
                out << "a_invariant = " << r.a_invariant << "\n";
                out << "S-facets: " << render_facets(r.s_facets) << "\n";
                out << "LEVEL: " << (r.is_level ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (oracle->parsed()) {
            const CheckReport r = cross_check(L);
            if (opts.json) {
                out << check_report_json(r).dump(2) << "\n";
            } else {
                for (const auto& c : r.checks) {
                    out << "check " << c.name << ": "
                        << (c.skipped ? "skipped (" + c.skip_reason + ")" : c.pass ? "pass" : "FAIL");
                    if (!c.counterexample.empty()) out << "  [" << c.counterexample << "]";
                    out << "\n";
                }
                out << (r.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n");
            }
            return r.all_pass() ? 0 : 1;
        }
        if (closure->parsed()) {
            const MeetSemilattice J = distributive_closure(L);
            if (opts.json) {
                out << poset_json(J.order()).dump(2) << "\n";
            } else {
                out << "J(P) has " << J.size() << " elements over " << L.ji_count()
                    << " join-irreducibles\n";
                out << poset_json(J.order()).dump(2) << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (opts.json && validate->parsed())
            out << nlohmann::json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}

}  // namespace latlevel
