#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    using namespace z2z4xi::cli;

    CLI::App app{"Arithmetic and code constructions over Z2[xi_bar] x Z4[xi]"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string format = "table";
    std::optional<int> t;

    const std::map<std::string, std::string> help = {
        {"ctx-info", "validate h and print ring sizes, unit count and the order of xi"},
        {"skew-mul", "multiply two skew polynomials f * g"},
        {"std-form", "reduce a generator matrix to standard form"},
        {"dual", "parity-check matrix of a code, checked against its generator matrix"},
        {"validate-gens", "check the divisibility and degree conditions of a generator tuple"},
        {"cofactors", "right-division cofactors of a generator tuple"},
        {"span", "spanning-set matrix and cardinality of a generator tuple"},
        {"enumerate", "enumerate the span of a matrix or generator tuple"},
        {"is-skew-cyclic", "test whether the span of a matrix is closed under the theta-shift"},
        {"classify-z4", "classify a skew cyclic code over Z4[xi] and recover its generators"},
        {"verify-paper", "run the reference checks for the worked examples"},
    };

    for (auto name : kCommands) {
        const std::string n(name);
        auto* sub = app.add_subcommand(n, help.at(n));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--budget", cfg.budget, "maximum number of words an oracle may enumerate")
            ->check(CLI::PositiveNumber);
        sub->add_option("-t,--t", t, "power of the Frobenius automorphism")->check(CLI::PositiveNumber);
        if (n == "ctx-info") {
            sub->add_option("modulus", cfg.h, "basic primitive polynomial over Z4, e.g. x^2+x+1")->required();
        } else if (n == "skew-mul") {
            sub->add_option("--modulus", cfg.h, "basic primitive polynomial over Z4")->capture_default_str();
            sub->add_option("--ring", cfg.ring, "coefficient ring")->check(CLI::IsMember({"z4", "z2"}))->capture_default_str();
            sub->add_option("operands", cfg.inputs, "polynomials f and g")->expected(2)->required();
        } else if (n != "verify-paper") {
            sub->add_option("input", cfg.inputs, "document path, or the document itself with --inline")
                ->expected(1)
                ->required();
            sub->add_flag("--inline", cfg.inline_text, "treat the input argument as document text");
        }
        if (n == "enumerate") {
            sub->add_flag("--list", cfg.list, "print every word");
            sub->add_flag("--skew", cfg.skew, "also close under the theta-shift");
        }
        if (n == "classify-z4") sub->add_flag("--close", cfg.close, "take the skew closure of the rows first");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kParseFailure;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Table;
    cfg.t = t;
    return run(cfg, std::cout, std::cerr);
}
