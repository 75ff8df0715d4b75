#pragma once

// Batch command-line front end. `run` never exits the process and never lets a
// domain error escape: exit code 0 on success, 1 on usage errors, 2 on domain
// errors with "<ErrorName>: <message>" as a single stderr line.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "continuum/bijection.hpp"
#include "continuum/binary_streams.hpp"
#include "continuum/dyadic.hpp"
#include "continuum/errors.hpp"
#include "continuum/finite_sets.hpp"
#include "continuum/trace.hpp"

namespace continuum::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline FiniteSet parse_label_list(const std::string& text) {
    std::vector<Label> labels;
    if (!text.empty()) {
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) labels.push_back(item);
        if (text.back() == ',') labels.emplace_back();
    }
    return make_set(labels);
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Covering-set arithmetic, exact binary expansions and the B_X ~ B shift map", "continuum"};
    app.require_subcommand(1);

    std::ostringstream out;
    std::string exp_labels, base_labels;
    auto* coverings = app.add_subcommand("coverings", "List the covering-set (exp | base), one covering per line");
    coverings->add_option("--exp", exp_labels, "Comma-separated domain labels")->required();
    coverings->add_option("--base", base_labels, "Comma-separated codomain labels")->required();

    std::string law_name;
    std::uint64_t a = 0, b = 0, c = 0, budget = EnumerationBudget{}.max_items;
    auto* laws = app.add_subcommand("laws", "Build and validate exponent-law bijections");
    laws->add_option("--check", law_name, "ADD_EXP, MUL_EXP, CURRY or all")
        ->required()
        ->check(CLI::IsMember({"ADD_EXP", "MUL_EXP", "CURRY", "all"}));
    laws->add_option("--a", a, "|M|")->required();
    laws->add_option("--b", b, "|N|")->required();
    laws->add_option("--c", c, "|P|")->required();
    laws->add_option("--budget", budget, "Maximum enumerated items")->capture_default_str();

    std::string rational_text;
    auto* expand = app.add_subcommand("expand", "Binary expansions of a rational in [0,1]");
    expand->add_option("rational", rational_text, "p/q")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Classify a rational in [0,1]");
    classify_cmd->add_option("rational", rational_text, "p/q")->required();

    std::string action, literal;
    auto* stream = app.add_subcommand("stream", "Inspect a stream literal preamble(period)");
    stream->add_option("action", action, "value, canon, member or dual")
        ->required()
        ->check(CLI::IsMember({"value", "canon", "member", "dual"}));
    stream->add_option("literal", literal, "Stream literal")->required();

    std::string direction;
    auto* map = app.add_subcommand("map", "Apply the B_X -> B shift map or its inverse");
    map->add_option("direction", direction, "forward or inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    map->add_option("literal", literal, "Stream literal")->required();

    unsigned mu_max = 0;
    std::string format = "text";
    auto* trace = app.add_subcommand("trace", "Checked derivation that B_X ~ B");
    trace->add_option("--mu-max", mu_max, "Bound on |preamble|+|period| for exhaustive checks")
        ->required()
        ->check(CLI::Range(1u, 24u));
    trace->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv{"continuum"};
    for (const auto& arg : args) argv.push_back(arg.c_str());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream cli_out, cli_err;
        const int code = app.exit(e, cli_out, cli_err);
        result.out = cli_out.str();
        result.err = cli_err.str();
        result.exit_code = code == 0 ? 0 : 1;
        return result;
    }

    try {
        if (*coverings) {
            auto set = covering_set(detail::parse_label_list(exp_labels), detail::parse_label_list(base_labels));
            for (const auto& label : set.as_set()) out << label << '\n';
        } else if (*laws) {
            std::vector<ExponentLaw> selected;
            if (law_name == "all")
                selected = {ExponentLaw::AddExp, ExponentLaw::MulExp, ExponentLaw::Curry};
            else
                selected = {*parse_exponent_law(law_name)};
            for (auto law : selected) {
                auto w = verify_exponent_law(law, Cardinal{a}, Cardinal{b}, Cardinal{c}, EnumerationBudget{budget});
                out << to_string(law) << " a=" << a << " b=" << b << " c=" << c << ": |left|=" << w.left_set.size()
                    << " |right|=" << w.right_set.size() << " pairs=" << w.pairs.size()
                    << (w.is_bijection() ? " bijection validated" : " NOT a bijection") << '\n';
            }
        } else if (*expand) {
            for (const auto& e : expansions_of(parse_rational(rational_text))) out << format_stream(e) << '\n';
        } else if (*classify_cmd) {
            out << to_string(classify(parse_rational(rational_text))) << '\n';
        } else if (*stream) {
            const BinaryStream e = parse_stream(literal);
            if (action == "value") {
                out << to_string(value(e)) << '\n';
            } else if (action == "canon") {
                out << format_stream(canonicalize(e)) << '\n';
            } else if (action == "member") {
                out << to_string(classify_stream(e)) << '\n';
            } else {
                auto d = dual_of(e);
                out << (d ? format_stream(*d) : std::string("none")) << '\n';
            }
        } else if (*map) {
            const BinaryStream e = parse_stream(literal);
            out << format_stream(direction == "forward" ? forward(e) : inverse(e)) << '\n';
        } else if (*trace) {
            const DerivationTrace t = derivation_trace(mu_max);
            if (format == "json")
                out << to_json(t).dump(2) << '\n';
            else
                out << to_text(t);
        }
    } catch (const Error& e) {
        result.exit_code = 2;
        result.err = std::string(e.name()) + ": " + e.what() + "\n";
        return result;
    }
    result.out = out.str();
    return result;
}

} // namespace continuum::cli
