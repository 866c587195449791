#include "ciliate/cli.hpp"

#include <CLI11.hpp>

#include <istream>
#include <sstream>

#include "ciliate/decision.hpp"
#include "ciliate/errors.hpp"
#include "ciliate/pattern.hpp"
#include "ciliate/reduction_graph.hpp"
#include "ciliate/rules.hpp"
#include "ciliate/search.hpp"

namespace ciliate::cli {

namespace {

constexpr const char* kFooter =
    "Strings are whitespace separated signed integers: \"3 2 -3 -2\" stands for 3 2 3' 2'\n"
    "(a leading minus marks the barred pointer). Patterns are tokens Mi or ~Mi.\n"
    "Rules are written snr:P, spr:P, sdr:P,Q. Reductions are ';'-separated lists in\n"
    "application order: \"spr:2; snr:3\" applies spr_2 first, i.e. the composition\n"
    "usually written right to left as snr_3 spr_2.\n"
    "Rule sets are comma lists of snr,spr,sdr (default: all three).\n"
    "Exit codes: 0 affirmative, 1 negative verdict, 2 input error, 3 capacity error.";

struct Options {
    bool from_stdin = false;
    std::string string_arg;
    std::string second_arg;
    std::string rules = "snr,spr,sdr";
    std::string reduction;
    std::string removed;
    bool dot = false;
    bool witness = false;
    std::size_t limit = 1000;
    std::size_t bound = kDefaultSearchBound;
};

std::string read_line(std::istream& in) {
    std::string line;
    std::getline(in, line);
    return line;
}

std::string line(const std::string& text) { return text + "\n"; }

}  // namespace

Result run(const std::vector<std::string>& args, std::istream& in) {
    CLI::App app{"Pointer reduction toolkit for gene assembly in ciliates", "ciliate"};
    app.footer(kFooter);
    app.require_subcommand(1);
    Options o;

    auto add_stdin = [&](CLI::App* sub, const char* what) {
        sub->add_flag("--stdin", o.from_stdin, std::string("Read ") + what + " from standard input, one per line");
    };
    auto add_string = [&](CLI::App* sub) { sub->add_option("STRING", o.string_arg, "Pointer string"); };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound", o.bound, "Largest domain the brute-force search accepts")->capture_default_str();
    };

    auto* parse = app.add_subcommand("parse", "Normalize a pointer string");
    add_string(parse);
    add_stdin(parse, "the string");

    auto* encode = app.add_subcommand("encode", "Encode a micronuclear pattern as a realistic string");
    encode->add_option("PATTERN", o.string_arg, "Pattern such as \"M3 M4 ~M2 M1\"");
    add_stdin(encode, "the pattern");

    auto* apply = app.add_subcommand("apply", "Apply a reduction to a legal string");
    add_string(apply);
    apply->add_option("--rules", o.reduction, "Reduction in application order, e.g. \"spr:3; snr:-2\"")->required();
    add_stdin(apply, "the string");

    auto* graph = app.add_subcommand("graph", "Reduction graph component summary or DOT");
    add_string(graph);
    graph->add_option("--remove", o.removed, "Comma list D of identities kept as edge labels");
    graph->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of the summary");
    add_stdin(graph, "the string");

    auto* reduct_cmd = app.add_subcommand("reduct", "Reduct red(u,D)");
    add_string(reduct_cmd);
    reduct_cmd->add_option("--remove", o.removed, "Comma list D of identities")->required();
    add_stdin(reduct_cmd, "the string");

    auto* reducible = app.add_subcommand("reducible", "Is U reducible to V in the rule set?");
    reducible->add_option("U", o.string_arg, "Source string");
    reducible->add_option("V", o.second_arg, "Target string");
    reducible->add_option("--rules", o.rules, "Rule set, comma list of snr,spr,sdr")->capture_default_str();
    reducible->add_flag("--witness", o.witness, "Print a witness reduction when within the search bound");
    add_bound(reducible);
    add_stdin(reducible, "U and V");

    auto* snr = app.add_subcommand("snr-count", "Number of snr steps in every reduction to domain D");
    add_string(snr);
    snr->add_option("--remove", o.removed, "Comma list D of identities");
    add_stdin(snr, "the string");

    auto* successful = app.add_subcommand("successful", "Is the string successful in the rule set?");
    add_string(successful);
    successful->add_option("--rules", o.rules, "Rule set, comma list of snr,spr,sdr")->capture_default_str();
    add_stdin(successful, "the string");

    auto* enumerate = app.add_subcommand("enumerate", "List successful reductions in canonical order");
    add_string(enumerate);
    enumerate->add_option("--rules", o.rules, "Rule set, comma list of snr,spr,sdr")->capture_default_str();
    enumerate->add_option("--limit", o.limit, "Maximum number of reductions")->capture_default_str();
    add_bound(enumerate);
    add_stdin(enumerate, "the string");

    auto* realizable = app.add_subcommand("realizable", "Can the string be renamed into a realistic one?");
    add_string(realizable);
    add_bound(realizable);
    add_stdin(realizable, "the string");

    Result result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kInputError;
        result.err = std::string(e.what()) + "\n\n" + app.help();
        return result;
    }

    try {
        if (o.from_stdin) {
            o.string_arg = read_line(in);
            if (reducible->parsed()) o.second_arg = read_line(in);
        }
        const RuleSet rules = parse_rule_set(o.rules);
        const PointerIdSet removed = parse_id_set(o.removed);

        if (parse->parsed()) {
            result.out = line(format_string(parse_string(o.string_arg)));
        } else if (encode->parsed()) {
            result.out = line(format_string(encode_pattern(parse_pattern(o.string_arg))));
        } else if (apply->parsed()) {
            const LegalString u = parse_legal(o.string_arg);
            const Reduction phi = parse_reduction(o.reduction);
            try {
                result.out = line(format_string(apply_reduction(phi, u)));
            } catch (const ReductionError& e) {
                result.exit_code = kNegative;
                result.out = line("not applicable: step " + std::to_string(e.step()) + " (" + format_rule(e.rule()) +
                                  ") on \"" + format_string(e.intermediate()) + "\"");
            }
        } else if (graph->parsed()) {
            const ReductionGraph g = build_reduction_graph(parse_legal(o.string_arg), removed);
            result.out = o.dot ? export_dot(g) : format_components(g);
        } else if (reduct_cmd->parsed()) {
            result.out = line(format_string(reduct_of(parse_legal(o.string_arg), removed)));
        } else if (reducible->parsed()) {
            const LegalString u = parse_legal(o.string_arg);
            const LegalString v = parse_legal(o.second_arg);
            const ReducibilityVerdict verdict = is_reducible(u, v, rules, o.witness, o.bound);
            if (verdict.reducible) {
                result.out = line("reducible");
                if (verdict.witness) result.out += line("witness: " + format_reduction(*verdict.witness));
            } else {
                result.exit_code = kNegative;
                result.out = line("not reducible: " + to_string(verdict.reason));
            }
        } else if (snr->parsed()) {
            result.out = line(std::to_string(snr_count(parse_legal(o.string_arg), removed)));
        } else if (successful->parsed()) {
            const bool ok = successful_in(parse_legal(o.string_arg), rules);
            result.out = line(ok ? "successful" : "not successful");
            result.exit_code = ok ? kAffirmative : kNegative;
        } else if (enumerate->parsed()) {
            const auto found = enumerate_successful_reductions(parse_legal(o.string_arg), rules, o.limit, o.bound);
            for (const Reduction& phi : found) result.out += line(format_reduction(phi));
            result.exit_code = found.empty() ? kNegative : kAffirmative;
        } else if (realizable->parsed()) {
            const bool ok = is_realizable(parse_legal(o.string_arg), o.bound);
            result.out = line(ok ? "realizable" : "not realizable");
            result.exit_code = ok ? kAffirmative : kNegative;
        }
    } catch (const CapacityError& e) {
        result = {kCapacityError, "", line(std::string("capacity error: ") + e.what())};
    } catch (const Error& e) {
        result = {kInputError, "", line(std::string("error: ") + e.what())};
    }
    return result;
}

}  // namespace ciliate::cli
