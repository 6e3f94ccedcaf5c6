#include "matsos/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using matsos::cli::RunConfig;
    namespace ec = matsos::cli::exit_code;

    CLI::App app{"Exact sum-of-squares certificates for positive semidefinite polynomial matrices"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_common = [&](CLI::App* sub, bool store) {
        sub->add_option("--input", config.input_path, "Matrix file")->required();
        sub->add_option("--samples", config.samples, "Random points for the PSD check")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", config.seed, "Seed for the PSD check");
        if (store) sub->add_option("--store", config.store_path, "Certificate store for scalar coefficients");
    };

    auto* certify = app.add_subcommand("certify", "Build and verify a matrix certificate");
    add_common(certify, true);
    certify->add_option("--output", config.output_path, "Where to write the certificate (JSON)");

    auto* verify = app.add_subcommand("verify", "Check a certificate against a matrix");
    verify->add_option("--input", config.input_path, "Matrix file")->required();
    verify->add_option("--cert", config.cert_path, "Certificate file")->required();

    auto* minpoly = app.add_subcommand("minpoly", "Print the minimal polynomial coefficients a_d .. a_0");
    minpoly->add_option("--input", config.input_path, "Matrix file")->required();

    auto* minors = app.add_subcommand("minors", "Print every principal minor");
    minors->add_option("--input", config.input_path, "Matrix file")->required();

    auto* check_psd = app.add_subcommand("check-psd", "Look for a point where a principal minor is negative");
    add_common(check_psd, false);

    auto* four = app.add_subcommand("four-squares", "Write a nonnegative rational as four rational squares");
    four->add_option("value", config.value, "Nonnegative integer or fraction a/b")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ec::kOk : ec::kUsage;
    }
    config.command = app.get_subcommands().front()->get_name();
    return matsos::cli::run(config, std::cout, std::cerr);
}
