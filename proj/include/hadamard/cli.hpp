#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

// Subcommand implementations behind the command-line tool. Each returns
// the process exit code: 0 on success, 1 when a requested check or search
// fails, 2 on malformed input (files, ids, flag payloads).

namespace hadamard::cli {

struct CatalogOptions {
    bool list = false;
    std::string show_id;  // nonempty for `catalog show <id>`
};

struct VerifyOptions {
    std::string family;  // path to a FamilyFile, or a catalog id
    std::optional<std::string> split;    // "0,1/2,3"
    std::optional<std::string> lambdas;  // "33,24"
};

struct BuildOptions {
    std::string family;
    std::string array;  // "gs" or "propus"
    std::optional<std::string> out_path;
};

struct CheckOptions {
    std::string matrix_path;
    bool hadamard = false;
    bool skew = false;
    bool symmetric = false;
};

struct SearchOptions {
    int v = 0;
    std::vector<int> k;
    int lambda = 0;
    std::vector<std::string> constraints;  // "0=skew", "1=sym", "2=orbit:1,25,67"
    std::vector<std::string> ties;         // "2=1"
    std::optional<std::string> split_lambdas;  // "33,24" (pieces {0,1} and {2,3})
    std::size_t max_results = 0;               // 0 means unlimited
    int workers = 1;
    std::optional<double> time_budget_seconds;
    std::optional<std::string> out_dir;
};

int cmd_catalog(const CatalogOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_build(const BuildOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace hadamard::cli
