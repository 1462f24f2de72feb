#include "qd/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace qd;

struct CommonOpts {
    std::string spec_path;
    std::string out_path;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--spec", o.spec_path, "Instance specification file (JSON)")
        ->required();
    cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

Json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw std::invalid_argument("spec file is not valid JSON: " +
                                    std::string(e.what()));
    }
    return j;
}

GroupHom load_pair(const std::string& path) {
    auto phi = pair_from_json(load_spec(path));
    phi.require_injective();
    return phi;
}

void emit(const CommonOpts& o, const std::string& content) {
    if (o.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out_path);
    out << content;
}

/// Parses "g:M" with g an element index or an element name of G, and M a
/// character-table row index of F_g; g must be an orbit representative.
SimpleLabel parse_label(const IrrepCatalog& cat, const std::string& s) {
    auto colon = s.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw std::invalid_argument("malformed label \"" + s + "\": expected g:M");
    std::string gpart = s.substr(0, colon), mpart = s.substr(colon + 1);
    int g;
    if (gpart.find_first_not_of("0123456789") == std::string::npos) {
        g = std::stoi(gpart);
        if (g < 0 || g >= cat.num_g())
            throw std::invalid_argument("label \"" + s + "\": element index out of range");
    } else {
        g = cat.phi.target->element_by_name(gpart);
        if (g < 0)
            throw std::invalid_argument("label \"" + s + "\": unknown element \"" +
                                        gpart + "\"");
    }
    if (mpart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed label \"" + s +
                                    "\": M must be a row index");
    int m = std::stoi(mpart);
    if (cat.gamma_index(g) < 0)
        throw std::invalid_argument("label \"" + s +
                                    "\": element is not an orbit representative");
    int l = cat.find_label(g, m);
    if (l < 0)
        throw std::invalid_argument("label \"" + s + "\": row index out of range");
    return cat.labels[l];
}

void append(Report& total, const std::string& prefix, const Report& part) {
    for (const auto& c : part.checks)
        total.add(prefix + ": " + c.name, c.pass, c.witness);
}

int cmd_classify(const CommonOpts& o, bool with_tables) {
    auto cat = catalog(load_pair(o.spec_path));
    auto rep = verify_catalog(cat);
    if (!rep.ok()) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::cerr << "verification failure: " << c.name << " (" << c.witness
                          << ")\n";
        return 1;
    }
    emit(o, dump_json(catalog_json(cat, with_tables)));
    return 0;
}

int cmd_chartable(const CommonOpts& o, const std::string& which) {
    auto phi = load_pair(o.spec_path);
    const GroupPtr& g = which == "F" ? phi.source : phi.target;
    emit(o, o.format == "csv" ? chartable_csv(g) : dump_json(chartable_json(g)));
    return 0;
}

int cmd_fusion(const CommonOpts& o, bool all, const std::string& left,
               const std::string& right, bool fast) {
    auto phi = load_pair(o.spec_path);
    auto cat = catalog(phi);
    std::vector<std::pair<SimpleLabel, SimpleLabel>> pairs;
    if (all) {
        for (const auto& a : cat.labels)
            for (const auto& b : cat.labels) pairs.emplace_back(a, b);
    } else {
        if (left.empty() || right.empty())
            throw std::invalid_argument("fusion needs --all or both --left and --right");
        pairs.emplace_back(parse_label(cat, left), parse_label(cat, right));
    }
    Json products = Json::array();
    std::optional<FusionOracle> oracle;
    if (!fast) oracle.emplace(cat);
    for (const auto& [a, b] : pairs) {
        auto out = fuse(cat, a, b);
        if (!fast && !(out == oracle->fuse(a, b))) {
            std::cerr << "verification failure: fusion formula disagrees with the "
                         "character oracle for "
                      << label_string(cat, a) << " x " << label_string(cat, b) << "\n";
            return 1;
        }
        products.push_back(fusion_json(cat, out));
    }
    if (o.format == "csv") {
        if (!all)
            throw std::invalid_argument("csv fusion output requires --all");
        emit(o, fusion_csv(build_ring(cat)));
    } else {
        emit(o, dump_json(Json{{"context", context_json(phi)},
                               {"products", products}}));
    }
    return 0;
}

int cmd_ring(const CommonOpts& o) {
    auto ring = build_ring(catalog(load_pair(o.spec_path)));
    emit(o, o.format == "csv" ? fusion_csv(ring) : dump_json(ring_json(ring)));
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, int cap, bool corrupt) {
    auto phi = load_pair(o.spec_path);
    Report total;
    bool run_all = suite == "all";
    if (run_all || suite == "hopf") {
        long dim = static_cast<long>(phi.target->order()) * phi.source->order();
        if (dim > cap) {
            total.add("hopf: skipped (dimension " + std::to_string(dim) +
                          " exceeds cap " + std::to_string(cap) + ")",
                      true);
        } else {
            auto d = make_double(phi);
            total.add("hopf: twisted and direct constructions agree", true);
            if (corrupt) d.algebra.mult[{0, 0}] = {{1, Rational(1)}};
            append(total, "hopf", verify_hopf_axioms(d.algebra));
            append(total, "hopf", verify_skew_pairing(d.pairing));
            append(total, "hopf", verify_cocycle(cocycle_from_pairing(d.pairing)));
            append(total, "hopf", verify_normality_KU(d));
            append(total, "hopf", verify_swap_duality(d));
        }
    }
    if (run_all || suite == "clifford" || suite == "fusion" || suite == "ring") {
        auto cat = catalog(phi);
        if (run_all || suite == "clifford") {
            for (int g : cat.gamma)
                append(total, "clifford", clifford_multiplicity_check(cat, g));
            for (const auto& l : cat.labels)
                append(total, "clifford", restrict_to_KU(cat, l));
        }
        if (run_all || suite == "fusion") {
            append(total, "fusion", verify_catalog(cat));
            append(total, "fusion", verify_fusion_table(cat));
        }
        if (run_all || suite == "ring") {
            append(total, "ring", verify_orbit_sum_products(phi));
            auto ring = build_ring(cat);
            append(total, "ring", verify_ring_surjection(ring));
            append(total, "ring", witherspoon_maps(ring));
        }
    }
    emit(o, dump_json(report_json(total)));
    return total.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact representation theory of generalized quantum doubles "
                 "built from finite-group data (G, F, phi)"};
    app.require_subcommand(1);

    CommonOpts classify_o, chartable_o, fusion_o, ring_o, verify_o;
    bool with_tables = false;
    auto* classify = app.add_subcommand(
        "classify", "Enumerate the simple modules with degrees and characters");
    add_common(classify, classify_o);
    classify->add_flag("--tables", with_tables,
                       "Include the stabilizer character tables");

    std::string which_group = "G";
    auto* chartable = app.add_subcommand(
        "chartable", "Irreducible character table of G (or F)");
    add_common(chartable, chartable_o);
    chartable->add_option("--group", which_group, "Which group (G or F)")
        ->check(CLI::IsMember({"G", "F"}));

    bool all = false, fast = false;
    std::string left, right;
    auto* fusion = app.add_subcommand(
        "fusion", "Tensor-product decompositions of simple modules");
    add_common(fusion, fusion_o);
    fusion->add_flag("--all", all, "All ordered pairs of simples");
    fusion->add_option("--left", left, "Left label g:M");
    fusion->add_option("--right", right, "Right label h:N");
    fusion->add_flag("--fast", fast, "Skip the character-oracle cross-check");

    auto* ring = app.add_subcommand(
        "ring", "Grothendieck ring structure constants and ZG images");
    add_common(ring, ring_o);

    std::string suite = "all";
    int cap = 1024;
    bool corrupt = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify, verify_o);
    verify->add_option("--suite", suite, "Which suite")
        ->check(CLI::IsMember({"hopf", "clifford", "fusion", "ring", "all"}));
    verify->add_option("--cap", cap, "Dimension cap for the hopf suite");
    verify
        ->add_flag("--corrupt", corrupt,
                   "Test hook: corrupt a structure constant before checking")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(classify_o, with_tables);
        if (chartable->parsed()) return cmd_chartable(chartable_o, which_group);
        if (fusion->parsed()) return cmd_fusion(fusion_o, all, left, right, fast);
        if (ring->parsed()) return cmd_ring(ring_o);
        if (verify->parsed()) return cmd_verify(verify_o, suite, cap, corrupt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
