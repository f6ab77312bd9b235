// Command-line front end. Everything substantive happens behind the C API in
// libpolyprod; this file only parses arguments, reads the input document and
// prints the chosen rendering.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyprod.h"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string format = "text";
    int cap = 20;
    bool timing = false;
    std::string input = "-";
};

int emit(pp_report* rep, const std::string& format) {
    std::cout << (format == "json" ? pp_report_json(rep) : pp_report_text(rep));
    int code = pp_report_exit_code(rep);
    pp_report_free(rep);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyprod: exact invariants and homotopy decompositions of "
                 "polyhedral products"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonArgs common;
    app.add_option("--format", common.format, "output rendering")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap", common.cap,
                   "largest vertex count for subset enumerations")
        ->capture_default_str();
    app.add_flag("--timing", common.timing, "append elapsed time to the report");

    struct Sub {
        CLI::App* app = nullptr;
        bool takes_input = true;
    };
    std::vector<std::pair<std::string, Sub>> subs;
    auto add_sub = [&](const std::string& name, const std::string& desc) -> CLI::App* {
        CLI::App* s = app.add_subcommand(name, desc);
        s->add_option("input", common.input, "document file, - for stdin");
        subs.push_back({name, {s, true}});
        return s;
    };

    add_sub("classify", "pseudomanifold classification and f-vector");
    add_sub("homology", "reduced simplicial homology over Z");
    add_sub("mac", "moment-angle complex homology by the subset sum");
    add_sub("rz", "real coordinate subspace arrangement homology");
    add_sub("skeleton-mac", "subset sum with the full vertex set omitted");
    add_sub("golod", "Golod / minimally-non-Golod decision");

    std::vector<int> facet;
    CLI::App* dec = add_sub("decompose", "split one facet off the polyhedral product");
    dec->add_option("--facet", facet, "vertices of the facet to remove")
        ->required()
        ->delimiter(',');

    add_sub("skeleton-decompose",
            "wedge decomposition over the codimension-one skeleton");

    std::optional<int> cutoff;
    CLI::App* loops = add_sub("loops", "loop-space factors via Hilton-Milnor");
    loops->add_option("--cutoff", cutoff, "largest factor dimension kept");

    add_sub("prove-p", "certify that the loop space lies in the class P");

    int half_dim = 0;
    CLI::App* qt = add_sub("quasitoric", "loop-space splitting of a quasitoric manifold");
    qt->add_option("--n", half_dim, "half the manifold dimension")->required();

    std::string corpus_name;
    CLI::App* corpus = app.add_subcommand("corpus", "print a named example complex");
    corpus->add_option("name", corpus_name, "NAME or NAME(p1,p2,...)")->required();
    subs.push_back({"corpus", {corpus, false}});

    CLI11_PARSE(app, argc, argv);

    nlohmann::json opts;
    opts["format"] = common.format;
    opts["cap"] = common.cap;
    opts["timing"] = common.timing;
    if (cutoff) opts["cutoff"] = *cutoff;
    if (!facet.empty()) opts["facet"] = facet;
    if (qt->parsed()) opts["n"] = half_dim;
    const std::string opts_json = opts.dump();

    try {
        for (const auto& [name, sub] : subs) {
            if (!sub.app->parsed()) continue;
            pp_report* rep = nullptr;
            int rc;
            if (name == "corpus") {
                rc = pp_run_corpus(corpus_name.c_str(), opts_json.c_str(), &rep);
            } else {
                const std::string doc = read_input(common.input);
                rc = pp_run(name.c_str(), doc.c_str(), opts_json.c_str(), &rep);
            }
            if (rc != PP_OK) {
                std::cerr << "error: " << pp_last_error() << "\n";
                return 1;
            }
            return emit(rep, common.format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command\n";
    return 1;
}
