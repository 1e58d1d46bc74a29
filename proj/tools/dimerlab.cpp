// dimerlab — exact computations for dimer quivers on the two-torus:
// perfect and simple matchings, path labelings, cancellativity, contractions,
// cycle algebras and centers, representations, and SVG diagrams.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dimerlab/contraction.hpp"
#include "dimerlab/fixtures.hpp"
#include "dimerlab/io.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/monoid.hpp"
#include "dimerlab/path_algebra.hpp"
#include "dimerlab/render.hpp"
#include "dimerlab/representations.hpp"

using namespace dimerlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBound = 3;

// human-readable lines plus the machine key<TAB>value form
struct Report {
    std::ostringstream human;
    std::vector<std::pair<std::string, std::string>> machine;

    void kv(const std::string& key, const std::string& value) { machine.push_back({key, value}); }
    void print(bool machine_only) const {
        if (machine_only) {
            for (auto& [k, v] : machine) std::cout << k << "\t" << v << "\n";
        } else {
            std::cout << human.str();
        }
    }
};

DimerQuiver load(const std::string& spec) {
    for (const std::string& name : fixture_names())
        if (name == spec) return fixture(name);
    return parse_dimer_file(spec);
}

std::string arrow_names(const DimerQuiver& q, const std::vector<ArrowId>& ids) {
    std::string s;
    for (size_t k = 0; k < ids.size(); ++k) {
        if (k) s += ",";
        s += q.arrow(ids[k]).name;
    }
    return s;
}

std::vector<ArrowId> parse_arrow_list(const DimerQuiver& q, const std::string& csv) {
    std::vector<ArrowId> ids;
    if (csv.empty() || csv == "none") return ids;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) ids.push_back(q.arrow_id(tok));
    }
    return ids;
}

std::string monomials_summary(const MonoidDescription& m, const std::vector<std::string>& names) {
    std::ostringstream out;
    auto gens = m.generators.empty() ? minimal_generators(m) : m.generators;
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) out << ", ";
        out << monomial_to_string(gens[k], names);
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for dimer quivers on the torus"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "print only the machine-readable key\\tvalue lines");

    std::string file, out, arrows_csv, values_csv, match_csv, contracted_csv, emit;
    int degree_bound = 8, box = 3, max_len = 12;
    bool reduce2 = false, list = false;

    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--degree-bound", degree_bound, "monomial degree bound")
            ->capture_default_str();
        cmd->add_option("--box", box, "lift window half-width")->capture_default_str();
        cmd->add_option("--max-len", max_len, "cycle length bound")->capture_default_str();
    };

    auto* c_validate = app.add_subcommand("validate", "check the dimer quiver invariants");
    c_validate->add_option("file", file)->required();

    auto* c_match = app.add_subcommand("matchings", "enumerate perfect matchings");
    c_match->add_option("file", file)->required();

    auto* c_simple = app.add_subcommand("simple", "enumerate simple matchings");
    c_simple->add_option("file", file)->required();

    auto* c_canc =
        app.add_subcommand("cancellative", "decide cancellativity by simple-matching coverage");
    c_canc->add_option("file", file)->required();

    auto* c_pairs = app.add_subcommand("pairs", "search non-cancellative path pairs");
    c_pairs->add_option("file", file)->required();
    c_pairs->add_option("--max-len", max_len, "path length bound")->capture_default_str();

    auto* c_contract = app.add_subcommand("contract", "contract a set of arrows");
    c_contract->add_option("file", file)->required();
    c_contract->add_option("--arrows", arrows_csv, "comma-separated arrow names")->required();
    c_contract->add_option("--out", out, "write the target quiver here");
    c_contract->add_flag("--reduce-2cycles", reduce2, "also delete removable 2-cycles");

    auto* c_cyclic =
        app.add_subcommand("check-cyclic", "verify a contraction is cyclic up to a degree bound");
    c_cyclic->add_option("file", file)->required();
    c_cyclic->add_option("arrows", arrows_csv, "comma-separated arrow names (or 'none')")
        ->required();
    add_bounds(c_cyclic);

    auto* c_cycalg = app.add_subcommand("cycle-algebra", "cycle algebra of a contraction");
    c_cycalg->add_option("file", file)->required();
    c_cycalg->add_option("arrows", arrows_csv, "comma-separated arrow names (or 'none')")
        ->required();
    add_bounds(c_cycalg);

    auto* c_center =
        app.add_subcommand("center", "center of the homotopy algebra of a contraction");
    c_center->add_option("file", file)->required();
    c_center->add_option("arrows", arrows_csv, "comma-separated arrow names (or 'none')")
        ->required();
    add_bounds(c_center);

    auto* c_rep = app.add_subcommand("rep", "evaluate a point to a representation");
    c_rep->add_option("mapspec", file, "fixture map name, or <file>:<arrows>")->required();
    c_rep->add_option("--values", values_csv, "name=rational,... for the target variables")
        ->required();

    auto* c_render = app.add_subcommand("render", "draw the fundamental domain as SVG");
    c_render->add_option("file", file)->required();
    c_render->add_option("--out", out, "output SVG path")->required();
    c_render->add_option("--matching", match_csv, "highlight these arrows as a matching");
    c_render->add_option("--contracted", contracted_csv, "highlight these arrows as contracted");

    auto* c_fixtures = app.add_subcommand("fixtures", "list or emit the bundled fixtures");
    c_fixtures->add_flag("--list", list);
    c_fixtures->add_option("--emit", emit, "print the canonical file for this fixture");

    CLI11_PARSE(app, argc, argv);
    Report rep;

    try {
        if (*c_validate) {
            DimerQuiver q = load(file);
            ValidationReport vr = validate(q);
            rep.kv("valid", vr.valid() ? "1" : "0");
            if (vr.valid()) {
                rep.human << "valid\n";
            } else {
                rep.human << "invalid:\n";
                for (const std::string& v : vr.violations) {
                    rep.human << "  " << v << "\n";
                    rep.kv("violation", v);
                }
            }
        } else if (*c_match || *c_simple) {
            DimerQuiver q = load(file);
            MatchingFamily fam = *c_match ? enumerate_perfect_matchings(q) : simple_matchings(q);
            rep.kv("count", std::to_string(fam.size()));
            rep.human << (*c_match ? "perfect matchings: " : "simple matchings: ") << fam.size()
                      << "\n";
            for (size_t k = 0; k < fam.size(); ++k) {
                std::string names = arrow_names(q, fam.matchings[k].arrows);
                rep.human << "  " << fam.variable_names[k] << " = {" << names << "}\n";
                rep.kv(fam.variable_names[k], names);
            }
        } else if (*c_canc) {
            DimerQuiver q = load(file);
            CancellativityResult r = is_cancellative(q);
            rep.kv("cancellative", r.cancellative ? "1" : "0");
            if (r.cancellative) {
                rep.human << "cancellative\n";
            } else {
                rep.human << "non-cancellative; uncovered arrows: " << arrow_names(q, r.uncovered)
                          << "\n";
                rep.kv("uncovered", arrow_names(q, r.uncovered));
            }
        } else if (*c_pairs) {
            DimerQuiver q = load(file);
            PathAlgebra alg(q);
            PairSearchResult r = alg.find_non_cancellative_pairs(max_len);
            rep.kv("pairs", std::to_string(r.pairs.size()));
            rep.kv("max_len", std::to_string(max_len));
            rep.kv("complete", r.complete ? "1" : "0");
            rep.kv("truncated", r.truncated ? "1" : "0");
            if (r.pairs.empty()) {
                rep.human << "none found <= " << max_len << "\n";
            } else {
                rep.human << r.pairs.size() << " pair(s) of distinct path classes <= " << max_len
                          << (r.truncated ? " (list truncated)" : "") << ":\n";
                for (const auto& pr : r.pairs) {
                    rep.human << "  [" << path_to_string(q, pr.p) << "]  vs  ["
                              << path_to_string(q, pr.r) << "]  (unit-cycle power "
                              << pr.sigma_power << ")\n";
                    rep.kv("pair", path_to_string(q, pr.p) + " | " + path_to_string(q, pr.r) +
                                       " | m=" + std::to_string(pr.sigma_power));
                }
            }
            if (!r.complete) {
                rep.human << "warning: classification incomplete at internal caps\n";
                rep.print(machine);
                return kExitBound;
            }
        } else if (*c_contract) {
            DimerQuiver q = load(file);
            ContractionMap m = contract(q, parse_arrow_list(q, arrows_csv));
            DimerQuiver target = reduce2 ? reduce_removable_two_cycles(m.target) : m.target;
            rep.kv("vertices", std::to_string(target.vertex_count));
            rep.kv("arrows", std::to_string(target.arrows.size()));
            rep.kv("faces", std::to_string(target.faces.size()));
            rep.human << "target: " << target.vertex_count << " vertices, "
                      << target.arrows.size() << " arrows, " << target.faces.size() << " faces\n";
            if (!out.empty()) {
                write_dimer_file(target, out);
                rep.human << "wrote " << out << "\n";
                rep.kv("out", out);
            } else {
                rep.human << serialize(target);
            }
        } else if (*c_cyclic) {
            DimerQuiver q = load(file);
            ContractionMap m = contract(q, parse_arrow_list(q, arrows_csv));
            CyclicReport r = is_cyclic(m, degree_bound, {box, max_len});
            rep.kv("cyclic", r.cyclic ? "1" : "0");
            rep.kv("saturated", r.saturated ? "1" : "0");
            rep.kv("degree_bound", std::to_string(degree_bound));
            if (r.cyclic)
                rep.human << "cyclic: yes (up to degree " << degree_bound << ")\n";
            else
                rep.human << "cyclic: no; " << r.summary << "\n";
            if (r.discrepancy) {
                MatchingFamily simple = simple_matchings(m.target);
                rep.kv("discrepancy", monomial_to_string(*r.discrepancy, simple.variable_names));
            }
            if (!r.saturated) {
                rep.human << "warning: unsaturated at max-len " << max_len << "\n";
                rep.print(machine);
                return kExitBound;
            }
        } else if (*c_cycalg || *c_center) {
            DimerQuiver q = load(file);
            ContractionMap m = contract(q, parse_arrow_list(q, arrows_csv));
            MatchingFamily simple = simple_matchings(m.target);
            MonoidDescription mon = *c_cycalg ? cycle_algebra(m, degree_bound, {box, max_len})
                                              : center(m, degree_bound, {box, max_len});
            rep.human << (*c_cycalg ? "cycle algebra" : "center") << " up to degree "
                      << degree_bound << " (" << mon.monomials.size() << " monomials)\n";
            rep.human << "  minimal generators: " << monomials_summary(mon, simple.variable_names)
                      << "\n";
            rep.kv("monomials", std::to_string(mon.monomials.size()));
            rep.kv("degree_bound", std::to_string(degree_bound));
            auto gens = mon.generators.empty() ? minimal_generators(mon) : mon.generators;
            for (const auto& g : gens)
                rep.kv("generator", monomial_to_string(g, simple.variable_names));
            rep.kv("saturated", mon.saturated ? "1" : "0");
            if (!mon.saturated) {
                rep.human << "warning: unsaturated at max-len " << max_len << "\n";
                rep.print(machine);
                return kExitBound;
            }
        } else if (*c_rep) {
            ContractionMap m = [&]() {
                auto colon = file.find(':');
                if (colon == std::string::npos) return fixture_contraction(file);
                DimerQuiver q = load(file.substr(0, colon));
                return contract(q, parse_arrow_list(q, file.substr(colon + 1)));
            }();
            PointAssignment b;
            std::istringstream in(values_csv);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw QuiverError("bad value " + tok);
                b.values[tok.substr(0, eq)] = Rational(tok.substr(eq + 1));
            }
            Representation r = build_representation(m, b);
            for (const Arrow& a : m.source.arrows) {
                rep.human << "  " << a.name << " -> " << r.arrow_values[static_cast<size_t>(a.id)]
                          << "\n";
                rep.kv(a.name, r.arrow_values[static_cast<size_t>(a.id)].str());
            }
            bool simple = is_simple(m, r);
            rep.human << (simple ? "simple\n" : "not simple\n");
            rep.kv("simple", simple ? "1" : "0");
        } else if (*c_render) {
            DimerQuiver q = load(file);
            RenderOptions opts;
            if (!match_csv.empty()) opts.highlight_matching = parse_arrow_list(q, match_csv);
            if (!contracted_csv.empty())
                opts.highlight_contracted = parse_arrow_list(q, contracted_csv);
            std::ofstream os(out, std::ios::binary);
            if (!os) throw QuiverError("cannot write " + out);
            os << render_svg(q, opts);
            rep.human << "wrote " << out << "\n";
            rep.kv("out", out);
        } else if (*c_fixtures) {
            if (!emit.empty()) {
                std::cout << serialize(fixture(emit));
                return kExitOk;
            }
            for (const std::string& name : fixture_names()) {
                rep.human << name << "\n";
                rep.kv("fixture", name);
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const QuiverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    rep.print(machine);
    return kExitOk;
}
