#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maniplex/catalog.hpp"
#include "maniplex/error.hpp"
#include "maniplex/flagcore.hpp"
#include "maniplex/io.hpp"
#include "maniplex/mixing.hpp"
#include "maniplex/polyvariance.hpp"
#include "maniplex/symmetry.hpp"

namespace {

using namespace maniplex;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> catalog;
    std::optional<int> rank;
    std::optional<Flag> base;
    std::string colors;
    std::string output;
    std::string mode;
};

ColorSet parse_colors(const std::string& text) {
    ColorSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int color = -1;
        try {
            color = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || color < 0 || color >= kMaxRank)
            throw Error(ErrorCode::BadParameter, "bad color '" + item + "' in -I");
        out = out.with(color);
    }
    return out;
}

/// Files first, then catalog specs; --base rebases the first operand.
std::vector<Document> load_operands(const Options& opt, std::size_t expected) {
    std::vector<Document> docs;
    for (const auto& path : opt.files) docs.push_back(read_document(path));
    for (const auto& spec : opt.catalog) {
        auto entry = build_catalog_entry(spec);
        docs.push_back(Document{entry.name, entry.premaniplex});
    }
    if (docs.size() < expected)
        throw Error(ErrorCode::BadParameter, "expected " + std::to_string(expected) + " operands, got " + std::to_string(docs.size()));
    if (opt.base) {
        if (*opt.base >= docs[0].premaniplex.flag_count()) throw Error(ErrorCode::OutOfRange, "--base exceeds flag_count");
        docs[0].premaniplex = docs[0].premaniplex.rebased(*opt.base);
    }
    if (opt.rank) {
        for (const auto& d : docs)
            if (d.premaniplex.rank() != *opt.rank)
                throw Error(ErrorCode::RankMismatch, "operand has rank " + std::to_string(d.premaniplex.rank()) + ", --rank is " +
                                                         std::to_string(*opt.rank));
    }
    return docs;
}

void emit(const Document& doc, const Options& opt) {
    if (opt.output.empty())
        std::cout << serialize(doc);
    else
        write_document(doc, opt.output);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Options& opt) {
    auto docs = load_operands(opt, 1);
    for (const auto& d : docs) {
        std::cout << "valid premaniplex: rank " << d.premaniplex.rank() << ", " << d.premaniplex.flag_count()
                  << " flags, maniplex " << yes_no(is_maniplex(d.premaniplex.premaniplex())) << "\n";
    }
    return kExitOk;
}

int cmd_info(const Options& opt) {
    const auto rp = load_operands(opt, 1)[0].premaniplex;
    const auto& p = rp.premaniplex();
    const auto cls = two_orbit_class(p);
    std::cout << p.flag_count() << " flags, " << cls.orbit_count << (cls.orbit_count == 1 ? " orbit, class " : " orbits, class ") << cls.to_string() << "\n";
    std::cout << "rank " << p.rank() << ", maniplex " << yes_no(is_maniplex(p)) << "\n";
    if (p.rank() >= 2)
        std::cout << "chain-transitive on {0," << p.rank() - 1 << "}: "
                  << yes_no(chain_transitive(p, ColorSet{0, p.rank() - 1})) << "\n";
    return kExitOk;
}

int cmd_mix(const Options& opt) {
    auto docs = load_operands(opt, 2);
    std::vector<RootedPremaniplex> inputs;
    for (const auto& d : docs) inputs.push_back(d.premaniplex);
    auto chain = mix_many(inputs);
    emit(Document{"", chain.mix}, opt);
    return kExitOk;
}

int cmd_dual(const Options& opt) {
    emit(Document{"", dual(load_operands(opt, 1)[0].premaniplex)}, opt);
    return kExitOk;
}

int cmd_double(const Options& opt) {
    emit(Document{"", i_double(load_operands(opt, 1)[0].premaniplex, parse_colors(opt.colors))}, opt);
    return kExitOk;
}

std::optional<PipMode> parse_mode(const std::string& mode) {
    if (mode.empty()) return std::nullopt;
    if (mode == "facet") return PipMode::FacetOnly;
    if (mode == "facet-vertex") return PipMode::FacetAndVertex;
    if (mode == "medial") return PipMode::MedialTransitive;
    throw Error(ErrorCode::BadParameter, "--mode must be facet, facet-vertex or medial");
}

int cmd_pip(const Options& opt) {
    const auto rp = load_operands(opt, 1)[0].premaniplex;
    if (auto mode = parse_mode(opt.mode)) {
        const bool verdict = pip_check_recursive(rp, *mode);
        std::cout << "polytope: " << (verdict ? "true" : "false") << "\n";
        return verdict ? kExitOk : kExitNegative;
    }
    const auto result = pip_check(rp.premaniplex());
    std::cout << "polytope: " << (result.polytopal ? "true" : "false") << "\n";
    if (result.witness) {
        const auto& w = *result.witness;
        std::cout << "witness: flags " << w.first << " and " << w.second << " joined in [0," << w.hi << "] and [" << w.lo << ","
                  << rp.rank() - 1 << "] but not in [" << w.lo << "," << w.hi << "]\n";
    }
    return result.polytopal ? kExitOk : kExitNegative;
}

int cmd_variance(const Options& opt) {
    auto docs = load_operands(opt, 2);
    const auto group = variance_group_lower(docs[0].premaniplex, docs[1].premaniplex);
    std::cout << "order " << group.order() << ", well-defined " << yes_no(group.well_defined) << "\n";
    if (group.witness) std::cout << "witness flag: " << *group.witness << "\n";
    return kExitOk;
}

void print_report(const CoverReport& cover, std::ostream& out) {
    const auto& r = cover.report;
    out << "I = " << cover.I.to_string() << ", part " << cover.part << ", opposite rooting across color "
              << cover.rebase_color << "\n";
    if (cover.containment_only) {
        out << "facets and vertex-figures: not required\n";
    } else {
        out << "facets polytopal: " << yes_no(r.facets_polytopal) << "\n";
        out << "vertex-figures polytopal: " << yes_no(r.vertex_figures_polytopal) << "\n";
    }
    out << "variance containment: " << yes_no(r.variance_condition) << "\n";
    out << "cover is a polytope: " << (r.verdict ? "true" : "false") << "\n";
}

int cmd_src(const Options& opt) {
    const auto rp = load_operands(opt, 1)[0].premaniplex;
    const auto cover = smallest_regular_cover(rp);
    if (opt.output.empty())
        std::cout << serialize(cover);
    else
        write_document(Document{"", cover}, opt.output);
    const auto cls = two_orbit_class(rp.premaniplex());
    std::ostream& log = opt.output.empty() ? std::cerr : std::cout;
    log << cover.flag_count() << " flags in the cover\n";
    if (cls.kind != TwoOrbitClass::Kind::TwoOrbit) {
        log << "no polytopality report: input has class " << cls.to_string() << "\n";
        return kExitOk;
    }
    print_report(src_polytopality_report(rp), log);
    return kExitOk;
}

int cmd_admissible(const Options& opt) {
    auto docs = load_operands(opt, 2);
    const bool ok = is_admissible(docs[0].premaniplex, docs[1].premaniplex);
    std::cout << "admissible: " << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitNegative;
}

int cmd_export_dot(const Options& opt) {
    const auto rp = load_operands(opt, 1)[0].premaniplex;
    if (opt.output.empty())
        std::cout << dot_string(rp);
    else
        export_dot(rp, opt.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations on premaniplexes given as JSON documents or catalog entries"};
    app.require_subcommand(1);
    Options opt;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"validate", "check the premaniplex axioms", cmd_validate},
        {"info", "flag count, orbits, two-orbit class and transitivity", cmd_info},
        {"mix", "mix of two or more operands", cmd_mix},
        {"dual", "dual premaniplex", cmd_dual},
        {"double", "I-double (requires -I)", cmd_double},
        {"pip", "path intersection test (exit 1 when not a polytope)", cmd_pip},
        {"variance", "lower variance group of the first operand against the second", cmd_variance},
        {"src", "smallest regular cover and its polytopality report", cmd_src},
        {"admissible", "whether the second operand is a symmetry type graph of the first (exit 1 when not)", cmd_admissible},
        {"export-dot", "DOT graph of the operand", cmd_export_dot},
    };
    int (*selected)(const Options&) = nullptr;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("files", opt.files, "premaniplex documents");
        sub->add_option("--catalog", opt.catalog, "built-in entry such as polygon(5) or torus44(1,2)")->take_all();
        sub->add_option("--rank", opt.rank, "required rank of every operand");
        sub->add_option("--base", opt.base, "base flag of the first operand");
        sub->add_option("-I", opt.colors, "color set as a comma list");
        sub->add_option("-o", opt.output, "output path");
        sub->add_option("--mode", opt.mode, "recursive pip mode: facet, facet-vertex or medial");
        sub->callback([&selected, run = c.run] { selected = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }
    try {
        return selected(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitError;
}
