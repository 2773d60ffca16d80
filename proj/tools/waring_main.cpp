#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "waring/json_io.hpp"
#include "waring/selfcheck.hpp"

namespace {

using waring::errc;
using waring::Error;

// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 order cap exceeded, 4 no applicable construction, 5 band violation.
int exit_code_for(errc code) {
    switch (code) {
        case errc::order_exceeds_cap:
            return 3;
        case errc::order_out_of_range:
        case errc::zero_on_r_diagonal:
        case errc::order_mismatch:
            return 4;
        case errc::target_not_in_band:
            return 5;
        case errc::internal_verification_failure:
        case errc::pivot_zero:
        case errc::target_zero:
        case errc::degenerate_side_form:
            return 1;
        default:
            return 2;
    }
}

void report_error(const char* name, const std::string& message, const char* hint = nullptr) {
    waring::json j{{"error", name}, {"message", message}};
    if (hint != nullptr) j["hint"] = hint;
    std::cerr << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::bad_input, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const waring::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(errc::bad_input, "cannot write file '" + out_path + "'");
    out << text;
}

waring::UTMatrix load_matrix(const std::string& path) {
    return waring::matrix_from_json(waring::parse_json_text(read_file(path)));
}

std::string self_path(const char* argv0) {
    std::error_code ec;
    auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) return p.string();
    return argv0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"order and image computations for polynomials on upper triangular matrices"};
    app.require_subcommand(1);

    std::string poly_text, target_path, out_path, bundle_path;
    int n = 0;
    int order_cap = 12;
    std::uint64_t seed = 0;
    int trials = 1;

    auto* order_cmd = app.add_subcommand("order", "compute the order and a certificate word");
    order_cmd->add_option("--poly", poly_text, "polynomial expression")->required();
    order_cmd->add_option("--order-cap", order_cap, "largest word length scanned");

    auto* witness_cmd =
        app.add_subcommand("witness", "single-tuple witness for a band target");
    witness_cmd->add_option("--poly", poly_text, "polynomial expression")->required();
    witness_cmd->add_option("--n", n, "matrix size")->required();
    witness_cmd->add_option("--target", target_path, "target matrix JSON file")->required();
    witness_cmd->add_option("--out", out_path, "bundle output path (default stdout)");
    witness_cmd->add_option("--seed", seed, "search seed");
    witness_cmd->add_option("--order-cap", order_cap, "largest word length scanned");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "two-tuple sum decomposition of a band target");
    decompose_cmd->add_option("--poly", poly_text, "polynomial expression")->required();
    decompose_cmd->add_option("--n", n, "matrix size")->required();
    decompose_cmd->add_option("--target", target_path, "target matrix JSON file")->required();
    decompose_cmd->add_option("--out", out_path, "bundle output path (default stdout)");
    decompose_cmd->add_option("--seed", seed, "search seed");
    decompose_cmd->add_option("--order-cap", order_cap, "largest word length scanned");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a stored witness bundle");
    verify_cmd->add_option("--bundle", bundle_path, "bundle JSON file")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance battery");
    selftest_cmd->add_option("--trials", trials, "number of battery repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::stringstream dummy;
        app.exit(e, dummy, dummy);
        report_error("UsageError", e.what());
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : 2;
    }

    try {
        if (order_cmd->parsed()) {
            const auto report = waring::compute_order(waring::NcPoly::parse(poly_text), order_cap);
            write_output(waring::order_report_to_json(report), "");
            return 0;
        }

        if (witness_cmd->parsed()) {
            const auto p = waring::NcPoly::parse(poly_text);
            const auto target = load_matrix(target_path);
            waring::WitnessBundle bundle;
            try {
                bundle = waring::image_witness(p, n, target, seed, order_cap);
            } catch (const Error& e) {
                if (e.code() != errc::zero_on_r_diagonal) throw;
                try {
                    bundle = waring::witness_corner_case(p, n, target, seed, order_cap);
                } catch (const Error& corner) {
                    if (corner.code() == errc::order_mismatch ||
                        corner.code() == errc::order_out_of_range ||
                        corner.code() == errc::bad_input) {
                        report_error(waring::errc_name(errc::zero_on_r_diagonal), e.what(),
                                     "decompose");
                        return 4;
                    }
                    throw;
                }
            }
            write_output(waring::bundle_to_json(bundle), out_path);
            return 0;
        }

        if (decompose_cmd->parsed()) {
            const auto p = waring::NcPoly::parse(poly_text);
            const auto target = load_matrix(target_path);
            const auto bundle = waring::decompose_sum(p, n, target, seed, order_cap);
            write_output(waring::bundle_to_json(bundle), out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto bundle = waring::bundle_from_json(waring::parse_json_text(read_file(bundle_path)));
            if (waring::verify_bundle(bundle)) {
                write_output(waring::json{{"verified", true}}, "");
                return 0;
            }
            waring::UTMatrix sum(bundle.n);
            for (const auto& tuple : bundle.tuples) sum += waring::mat_eval(bundle.poly, tuple);
            waring::json mismatches = waring::json::array();
            for (int row = 1; row <= bundle.n; ++row)
                for (int col = row; col <= bundle.n; ++col)
                    if (sum.get(row, col) != bundle.target.get(row, col))
                        mismatches.push_back(
                            waring::json{{"row", row},
                                         {"col", col},
                                         {"expected", bundle.target.get(row, col).to_string()},
                                         {"actual", sum.get(row, col).to_string()}});
            write_output(waring::json{{"verified", false}, {"mismatches", mismatches}}, "");
            return 1;
        }

        if (selftest_cmd->parsed()) {
            if (trials < 1) throw Error(errc::bad_input, "--trials must be >= 1");
            waring::SelfCheckOptions options{self_path(argv[0])};
            int rc = 0;
            for (int round = 0; round < trials; ++round)
                rc |= waring::print_selfcheck(waring::run_selfcheck(options), std::cout);
            return rc;
        }
    } catch (const Error& e) {
        report_error(waring::errc_name(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report_error("InternalError", e.what());
        return 1;
    }
    return 2;
}
