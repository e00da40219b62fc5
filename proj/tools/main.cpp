#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadamard/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "hadamard: construct, verify and search Hadamard matrices built from cyclic "
        "difference families plugged into the Goethals-Seidel and propus arrays"};
    app.require_subcommand(1);

    // catalog
    auto* catalog = app.add_subcommand("catalog", "embedded difference families");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "list all entries");
    auto* catalog_show = catalog->add_subcommand("show", "print one entry as a family file");
    std::string show_id;
    catalog_show->add_option("id", show_id, "catalog id")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a difference family");
    hadamard::cli::VerifyOptions vopt;
    std::string split, lambdas;
    verify->add_option("family", vopt.family, "family file or catalog id")->required();
    auto* split_opt = verify->add_option("--split", split, "two-piece partition, e.g. 0,1/2,3");
    auto* lambdas_opt =
        verify->add_option("--lambdas", lambdas, "lambda of each piece, e.g. 33,24");

    // build
    auto* build = app.add_subcommand("build", "plug a family into an array");
    hadamard::cli::BuildOptions bopt;
    std::string out_path;
    build->add_option("family", bopt.family, "family file or catalog id")->required();
    build->add_option("--array", bopt.array, "gs or propus")->required();
    auto* build_out = build->add_option("--out", out_path, "write the matrix file here");

    // check
    auto* check = app.add_subcommand("check", "check a matrix file");
    hadamard::cli::CheckOptions copt;
    check->add_option("--matrix", copt.matrix_path, "matrix file")->required();
    check->add_flag("--hadamard", copt.hadamard, "require H Ht = n I");
    check->add_flag("--skew", copt.skew, "require skew-Hadamard");
    check->add_flag("--symmetric", copt.symmetric, "require H = Ht");

    // search
    auto* search = app.add_subcommand("search", "search for difference families");
    hadamard::cli::SearchOptions sopt;
    std::string split_lambdas;
    std::string out_dir;
    double time_budget = 0.0;
    search->add_option("--v", sopt.v, "modulus")->required();
    search->add_option("--k", sopt.k, "block sizes, e.g. 2,2,1,1")->required()->delimiter(',');
    search->add_option("--lambda", sopt.lambda, "target lambda")->required();
    search->add_option("--constraint", sopt.constraints,
                       "per-block constraint i=skew|sym|orbit:<elements>; repeatable");
    search->add_option("--tie", sopt.ties, "force block i equal to block j as i=j; repeatable");
    auto* split_lambdas_opt = search->add_option(
        "--split-lambdas", split_lambdas, "search pieces {0,1} and {2,3} with these lambdas");
    search->add_option("--max-results", sopt.max_results, "stop after this many families");
    search->add_option("--workers", sopt.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    auto* budget_opt =
        search->add_option("--time-budget", time_budget, "wall-clock budget in seconds");
    auto* out_dir_opt =
        search->add_option("--out", out_dir, "write each family into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (catalog->parsed()) {
        hadamard::cli::CatalogOptions opt;
        opt.list = catalog_list->parsed();
        if (catalog_show->parsed()) opt.show_id = show_id;
        return hadamard::cli::cmd_catalog(opt, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        if (*split_opt) vopt.split = split;
        if (*lambdas_opt) vopt.lambdas = lambdas;
        return hadamard::cli::cmd_verify(vopt, std::cout, std::cerr);
    }
    if (build->parsed()) {
        if (*build_out) bopt.out_path = out_path;
        return hadamard::cli::cmd_build(bopt, std::cout, std::cerr);
    }
    if (check->parsed()) return hadamard::cli::cmd_check(copt, std::cout, std::cerr);
    if (search->parsed()) {
        if (*split_lambdas_opt) sopt.split_lambdas = split_lambdas;
        if (*budget_opt) sopt.time_budget_seconds = time_budget;
        if (*out_dir_opt) sopt.out_dir = out_dir;
        return hadamard::cli::cmd_search(sopt, std::cout, std::cerr);
    }
    return 2;
}
