#ifndef LCISR_TOOLS_CLI_HPP
#define LCISR_TOOLS_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "document.hpp"
#include "lcisr/classify.hpp"
#include "lcisr/local_cohomology.hpp"
#include "lcisr/multiplicity.hpp"

namespace lcisr::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kPreconditionError = 3 };

inline Field parse_field(const std::string& name) {
    if (name == "q" || name == "Q") return Field::rationals();
    if (name.rfind("p:", 0) == 0) {
        const std::string digits = name.substr(2);
        if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("--field", "expected p:<prime>");
        return Field::prime(static_cast<std::uint32_t>(std::stoull(digits)));
    }
    throw InputError("--field", "expected 'q' or 'p:<prime>', got '" + name + "'");
}

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally complete intersection Stanley-Reisner toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "json";
    unsigned power = 1;
    unsigned max_power = 1;
    unsigned threads = 1;
    std::string field_name = "q";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "input document path, '-' for standard input");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    };
    auto* classify_cmd = app.add_subcommand("classify", "structure classification with CM/Buchsbaum verdicts");
    add_common(classify_cmd);
    auto* power_cmd = app.add_subcommand("power", "minimal generators of I^l");
    add_common(power_cmd);
    power_cmd->add_option("--power", power, "exponent l")->required()->check(CLI::Range(1u, 64u));
    auto* cohomology_cmd = app.add_subcommand("cohomology", "graded local cohomology of S/I^l below the top degree");
    add_common(cohomology_cmd);
    cohomology_cmd->add_option("--power", power, "exponent l")->check(CLI::Range(1u, 64u));
    cohomology_cmd->add_option("--field", field_name, "coefficient field: q or p:<prime>");
    cohomology_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    auto* screen_cmd = app.add_subcommand("screen", "multiplicity screen against Buchsbaum powers");
    add_common(screen_cmd);
    screen_cmd->add_option("--max-power", max_power, "largest l to screen")->required()->check(CLI::Range(1u, 100000u));
    auto* complex_cmd = app.add_subcommand("complex", "normalize the input to a {vertices, facets} document");
    add_common(complex_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        std::string text;
        if (input == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            std::ifstream file(input);
            if (!file) throw InputError("input", "cannot open '" + input + "'");
            text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        const InputDocument doc = parse_document(text);

        Json report;
        if (*classify_cmd) {
            SimplicialComplex complex = doc.as_complex();
            report = classification_json(complex, classify(complex));
        } else if (*power_cmd) {
            report = power_json(power_generators(doc.as_ideal(), power), power);
        } else if (*cohomology_cmd) {
            Field field = parse_field(field_name);
            report = cohomology_json(cohomology(doc.as_complex(), power, field, threads));
        } else if (*screen_cmd) {
            SimplicialComplex complex = doc.as_complex();
            auto rows = screen_buchsbaum_powers(complex, max_power);
            report = screen_json(numerics(complex), rows);
        } else {
            report = complex_document(doc.as_complex());
        }

        if (format == "json") {
            out << report.dump(2) << '\n';
        } else {
            write_text(out, report);
        }
        return kOk;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::PreconditionFailed:
            case ErrorKind::NotCI:
            case ErrorKind::InfiniteCohomology:
            case ErrorKind::WrongDimension:
                return kPreconditionError;
            default:
                return kInputError;
        }
    }
}

}  // namespace lcisr::cli

#endif
