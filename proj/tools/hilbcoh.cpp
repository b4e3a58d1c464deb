// hilbcoh: exact invariants of Hilbert schemes of points on surfaces.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hilbcoh/cherncalc.hpp"
#include "hilbcoh/goettsche.hpp"
#include "hilbcoh/kunneth.hpp"
#include "hilbcoh/stablering.hpp"
#include "hilbcoh/surface.hpp"
#include "hilbcoh/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hilbcoh::DomainError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

hilbcoh::surface::SurfaceConfig load_surface(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("HILBCOH_SURFACE"))
            path = env;
    }
    if (path.empty())
        return hilbcoh::surface::default_surface_config();
    return hilbcoh::surface::surface_config_from_json(read_file(path));
}

} // namespace

int main(int argc, char** argv) {
    using namespace hilbcoh;

    CLI::App app{"Exact cohomology calculator for Hilbert schemes of points on surfaces"};
    app.require_subcommand(1);

    // betti
    auto* cmd_betti = app.add_subcommand("betti", "Betti number b_k(S^[n])");
    int betti_b2 = 22, betti_n = 0, betti_k = 0;
    cmd_betti->add_option("--b2", betti_b2, "second Betti number of S")->check(CLI::NonNegativeNumber);
    cmd_betti->add_option("--n", betti_n, "number of points")->required()->check(CLI::NonNegativeNumber);
    cmd_betti->add_option("--k", betti_k, "cohomological degree")->required()->check(CLI::NonNegativeNumber);

    // table
    auto* cmd_table = app.add_subcommand("table", "Betti table of S^[n], appendix layout");
    int table_b2 = 22, table_max_n = 9, table_max_k = 18;
    std::string table_format = "csv";
    cmd_table->add_option("--b2", table_b2)->check(CLI::NonNegativeNumber);
    cmd_table->add_option("--max-n", table_max_n)->check(CLI::PositiveNumber);
    cmd_table->add_option("--max-k", table_max_k)->check(CLI::NonNegativeNumber);
    cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    // stable-dim
    auto* cmd_stable = app.add_subcommand("stable-dim", "dimension of the stable ring in degree k");
    int stable_b2 = 22, stable_k = 0;
    cmd_stable->add_option("--b2", stable_b2)->check(CLI::NonNegativeNumber);
    cmd_stable->add_option("--k", stable_k)->required()->check(CLI::NonNegativeNumber);

    // ideal-dim
    auto* cmd_ideal = app.add_subcommand("ideal-dim", "dimension of the relation ideal in degree k");
    int ideal_b2 = 22, ideal_n = 0, ideal_k = 0;
    bool ideal_oracle = false;
    cmd_ideal->add_option("--b2", ideal_b2)->check(CLI::NonNegativeNumber);
    cmd_ideal->add_option("--n", ideal_n)->required()->check(CLI::PositiveNumber);
    cmd_ideal->add_option("--k", ideal_k)->required()->check(CLI::NonNegativeNumber);
    cmd_ideal->add_flag("--oracle", ideal_oracle,
                        "compute directly as dim R^[n]_k - b_k instead of the closed form");

    // ckq
    auto* cmd_ckq = app.add_subcommand("ckq", "coefficient of t^k of the rewritten product, as a "
                                              "polynomial in q");
    int ckq_b2 = 22, ckq_k = 0;
    std::string ckq_format = "text";
    cmd_ckq->add_option("--b2", ckq_b2)->check(CLI::NonNegativeNumber);
    cmd_ckq->add_option("--k", ckq_k)->required()->check(CLI::NonNegativeNumber);
    cmd_ckq->add_option("--format", ckq_format)->check(CLI::IsMember({"text", "json"}));

    // chern
    auto* cmd_chern = app.add_subcommand("chern", "characteristic-class calculus");
    cmd_chern->require_subcommand(1);
    auto* chern_ch_to_c = cmd_chern->add_subcommand("ch-to-c", "Chern character to total Chern class");
    std::string ch_to_c_input;
    chern_ch_to_c->add_option("--input", ch_to_c_input, "k-vector JSON file")->required();
    auto* chern_c_to_ch = cmd_chern->add_subcommand("c-to-ch", "total Chern class to Chern character");
    std::string c_to_ch_input, c_to_ch_rank = "0";
    chern_c_to_ch->add_option("--input", c_to_ch_input, "k-vector JSON file")->required();
    chern_c_to_ch->add_option("--rank", c_to_ch_rank, "rank of the recovered character");
    auto* chern_delta = cmd_chern->add_subcommand("delta", "Toeplitz determinant of Chern classes");
    std::string delta_input;
    int delta_t = 1, delta_size = 1;
    chern_delta->add_option("--input", delta_input, "k-vector JSON file")->required();
    chern_delta->add_option("--t", delta_t)->check(CLI::PositiveNumber);
    chern_delta->add_option("--size", delta_size)->required()->check(CLI::PositiveNumber);

    // diag-check
    auto* cmd_diag = app.add_subcommand("diag-check", "Kuenneth diagonal against the gamma formula");
    std::string diag_surface;
    std::uint64_t diag_seed = 1;
    int diag_trials = 5;
    cmd_diag->add_option("--surface", diag_surface, "surface config JSON (default: built-in K3)");
    cmd_diag->add_option("--seed", diag_seed);
    cmd_diag->add_option("--trials", diag_trials, "random Gram matrices to test")
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    int verify_b2 = 22;
    std::uint64_t verify_seed = 1;
    std::string verify_format = "text";
    std::string verify_surface;
    cmd_verify->add_option("suite", verify_suite, "one of: table, stable, ideal, chern, diagonal, example3, all")
        ->required();
    cmd_verify->add_option("--b2", verify_b2)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--seed", verify_seed);
    cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--surface", verify_surface, "surface config JSON for the diagonal suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*cmd_betti) {
            goettsche::SurfaceProfile profile{betti_b2, "S"};
            std::cout << goettsche::betti(profile, betti_n, betti_k).get_str() << "\n";
        } else if (*cmd_table) {
            goettsche::SurfaceProfile profile{table_b2, "S"};
            const auto table = goettsche::betti_table(profile, table_max_n, table_max_k);
            if (table_format == "csv")
                std::cout << table.to_csv();
            else
                std::cout << table.to_json() << "\n";
        } else if (*cmd_stable) {
            std::cout << stablering::stable_dim(stable_b2, stable_k).get_str() << "\n";
        } else if (*cmd_ideal) {
            const Integer dim = ideal_oracle
                                    ? stablering::ideal_dim_oracle(ideal_b2, ideal_n, ideal_k)
                                    : stablering::ideal_dim(ideal_b2, ideal_n, ideal_k);
            std::cout << dim.get_str() << "\n";
        } else if (*cmd_ckq) {
            const auto ck = stablering::c_k_poly(ckq_b2, ckq_k);
            if (ckq_format == "json") {
                std::cout << ck.to_json(ckq_b2) << "\n";
            } else {
                std::cout << "c_" << ck.k << "(q) =";
                for (std::size_t i = 0; i < ck.coefficients.size(); ++i) {
                    const int power = ck.k - static_cast<int>(i);
                    if (ck.coefficients[i] == 0)
                        continue;
                    std::cout << (i == 0 ? " " : " + ") << ck.coefficients[i].get_str();
                    if (power > 0)
                        std::cout << "*q^" << power;
                }
                std::cout << "\n";
            }
        } else if (*chern_ch_to_c) {
            const auto v = chern::kvector_from_json(read_file(ch_to_c_input));
            std::cout << chern::kvector_to_json(chern::ell(v)) << "\n";
        } else if (*chern_c_to_ch) {
            const auto v = chern::kvector_from_json(read_file(c_to_ch_input));
            std::cout << chern::kvector_to_json(
                             chern::ell_inverse(v, rational_from_string(c_to_ch_rank)))
                      << "\n";
        } else if (*chern_delta) {
            const auto v = chern::kvector_from_json(read_file(delta_input));
            std::cout << chern::element_to_json(chern::delta_det(delta_t, delta_size, v)) << "\n";
        } else if (*cmd_diag) {
            verify::RunOptions opts;
            opts.surface = load_surface(diag_surface);
            opts.b2 = opts.surface.b2;
            opts.seed = diag_seed;
            opts.gram_trials = diag_trials;

            const auto ring = surface::ring_from_config(opts.surface);
            const auto e = kunneth::ch_ideal_of_diagonal(ring);
            const auto result = kunneth::gamma(e, e, 2);
            const auto diag = kunneth::diagonal_class(ring);
            std::cout << "computed c_m:      " << result.cm.to_json() << "\n";
            std::cout << "Kuenneth diagonal: " << diag.to_json() << "\n";
            std::cout << "difference:        " << (result.cm - diag).to_json() << "\n";
            std::cout << "c_{m-1}:           " << result.cm_minus_1.to_json() << "\n";
            const auto report = verify::verify_diagonal(opts);
            std::cout << verify::render_text(report);
            return report.all_pass() ? kExitOk : kExitVerificationFailure;
        } else if (*cmd_verify) {
            verify::RunOptions opts;
            opts.b2 = verify_b2;
            opts.seed = verify_seed;
            opts.surface = load_surface(verify_surface);
            const auto report = verify::run_suite(verify_suite, opts);
            if (verify_format == "json")
                std::cout << verify::render_json(report) << "\n";
            else
                std::cout << verify::render_text(report);
            return report.all_pass() ? kExitOk : kExitVerificationFailure;
        }
        return kExitOk;
    } catch (const OutOfWindowError& e) {
        std::cerr << "error: " << e.what() << " (use --oracle for the direct computation)\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
