#include "hadamard/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hadamard/catalog.hpp"
#include "hadamard/plug.hpp"
#include "hadamard/search.hpp"
#include "hadamard/textio.hpp"

namespace hadamard::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ParseError("expected integers in " + what + ", got '" + piece + "'");
        }
    }
    if (out.empty()) throw ParseError(what + " must not be empty");
    return out;
}

DifferenceFamily load_family(const std::string& ref, std::string& label) {
    if (std::filesystem::exists(ref)) {
        std::ifstream in(ref);
        if (!in) throw ParseError("cannot open '" + ref + "'");
        label = ref;
        return parse_family(in);
    }
    if (has_entry(ref)) {
        label = "catalog:" + ref;
        return get_family(ref);
    }
    throw ParseError("'" + ref + "' is neither a readable file nor a catalog id");
}

std::string params_string(const FamilyParams& p) {
    std::string out = "(" + std::to_string(p.v.value()) + "; ";
    for (std::size_t i = 0; i < p.k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.k[i]);
    }
    out += "; " + std::to_string(p.lambda) + ")";
    return out;
}

void print_report(const DifferenceFamily& f, const VerificationReport& report,
                  std::ostream& out) {
    const FamilyParams& p = f.params();
    long long lhs = 0;
    for (int ki : p.k) lhs += static_cast<long long>(ki) * (ki - 1);
    out << "family " << params_string(p) << "\n";
    out << "counting identity: " << (report.params_ok ? "ok" : "FAIL") << " (sum k(k-1) = " << lhs
        << ", lambda(v-1) = " << static_cast<long long>(p.lambda) * (p.v.value() - 1) << ")\n";
    if (report.failures.empty()) {
        out << "difference sums: ok (all " << p.v.value() - 1 << " nonzero shifts equal "
            << p.lambda << ")\n";
    } else {
        out << "difference sums: FAIL (" << report.failures.size() << " of " << p.v.value() - 1
            << " shifts wrong; first: s=" << report.failures.front().shift << " sum="
            << report.failures.front().observed << " expected " << p.lambda << ")\n";
        out << "  failing shifts:";
        for (const ShiftFailure& fail : report.failures)
            out << " s=" << fail.shift << "(sum " << fail.observed << ")";
        out << "\n";
    }
    bool any_tag = false;
    std::ostringstream tagline;
    for (int i = 0; i < f.m(); ++i) {
        if (f.tag(i) == BlockTag::none) continue;
        any_tag = true;
        bool bad = std::find(report.bad_tags.begin(), report.bad_tags.end(), i) !=
                   report.bad_tags.end();
        tagline << " X" << i << "[" << tag_name(f.tag(i)) << "] " << (bad ? "FAIL" : "ok") << ";";
    }
    if (any_tag)
        out << "tags:" << tagline.str() << "\n";
    else
        out << "tags: none declared\n";
    if (f.m() == 4) {
        long long ksum = 0;
        for (int ki : p.k) ksum += ki;
        out << "gs-feasible: " << (gs_feasible(p) ? "yes" : "no") << " (sum k - lambda = "
            << ksum - p.lambda << ", v = " << p.v.value() << ")\n";
    }
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

BlockConstraint::Shape parse_shape(const std::string& word) {
    if (word == "skew") return BlockConstraint::Shape::skew;
    if (word == "sym") return BlockConstraint::Shape::symmetric;
    throw ParseError("unknown constraint '" + word + "' (use skew, sym, or orbit:<elements>)");
}

}  // namespace

int cmd_catalog(const CatalogOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.list) {
        out << std::left << std::setw(16) << "id" << std::setw(18) << "kind" << std::setw(7)
            << "order" << "class\n";
        for (const CatalogEntry& e : list_entries()) {
            out << std::left << std::setw(16) << e.id << std::setw(18) << kind_name(e.kind)
                << std::setw(7);
            if (e.expected_order > 0)
                out << e.expected_order;
            else
                out << "-";
            out << class_name(e.expected_class) << "\n";
        }
        return kOk;
    }
    if (!has_entry(opt.show_id)) {
        err << "unknown catalog id: " << opt.show_id << "\n";
        return kInputError;
    }
    const CatalogEntry e = get_entry(opt.show_id);
    out << "# " << e.id << " (" << kind_name(e.kind) << ", " << e.provenance << ")\n";
    out << serialize_family(get_family(opt.show_id));
    return kOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        std::string label;
        DifferenceFamily family = load_family(opt.family, label);
        out << "verifying " << label << "\n";
        VerificationReport report = verify_family(family);
        print_report(family, report, out);

        bool split_ok = true;
        if (opt.split || opt.lambdas) {
            if (!opt.split || !opt.lambdas)
                throw ParseError("--split and --lambdas must be given together");
            std::stringstream ss(*opt.split);
            std::string first, second;
            if (!std::getline(ss, first, '/') || !std::getline(ss, second) || second.empty())
                throw ParseError("--split needs the form i,j/k,l");
            std::array<std::vector<int>, 2> parts{parse_csv_ints(first, "--split"),
                                                  parse_csv_ints(second, "--split")};
            std::vector<int> lambdas = parse_csv_ints(*opt.lambdas, "--lambdas");
            if (lambdas.size() != 2) throw ParseError("--lambdas needs exactly two values");
            try {
                split_ok = split_check(family, parts, {lambdas[0], lambdas[1]});
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            out << "split " << first << " / " << second << " with lambdas " << lambdas[0] << ","
                << lambdas[1] << ": " << (split_ok ? "ok" : "FAIL") << "\n";
        }

        const bool passed = report.passed() && split_ok;
        out << "RESULT: " << (passed ? "PASS" : "FAIL") << "\n";
        return passed ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_build(const BuildOptions& opt, std::ostream& out, std::ostream& err) {
    ArrayKind kind;
    if (opt.array == "gs")
        kind = ArrayKind::goethals_seidel;
    else if (opt.array == "propus")
        kind = ArrayKind::propus;
    else {
        err << "error: --array must be gs or propus, got '" << opt.array << "'\n";
        return kInputError;
    }

    try {
        std::string label;
        DifferenceFamily family = load_family(opt.family, label);

        VerificationReport report = verify_family(family);
        if (!report.passed()) {
            err << "family does not verify:";
            if (!report.params_ok) err << " counting identity fails;";
            if (!report.failures.empty())
                err << " " << report.failures.size() << " shifts wrong (first s="
                    << report.failures.front().shift << ", sum "
                    << report.failures.front().observed << " != " << family.params().lambda
                    << ");";
            for (int i : report.bad_tags)
                err << " X" << i << " violates tag " << tag_name(family.tag(i)) << ";";
            err << "\n";
            return kCheckFailed;
        }
        if (family.m() != 4) {
            err << "the " << opt.array << " array needs exactly 4 blocks, family has "
                << family.m() << "\n";
            return kCheckFailed;
        }
        if (kind == ArrayKind::propus && !(family.block(1) == family.block(2))) {
            err << "propus array requires blocks X1 = X2\n";
            return kCheckFailed;
        }

        std::array<SignRow, 4> rows{row_from_block(family.block(0)), row_from_block(family.block(1)),
                                    row_from_block(family.block(2)),
                                    row_from_block(family.block(3))};
        SquareSignMatrix matrix = build_array(kind, rows);

        const bool hadamard = is_hadamard(matrix);
        const bool skew = is_skew_hadamard(matrix);
        const bool symmetric = is_symmetric_matrix(matrix);
        out << "built " << matrix.order() << "x" << matrix.order() << " matrix from " << label
            << " via " << (kind == ArrayKind::goethals_seidel ? "goethals-seidel" : "propus")
            << "\n";
        out << "hadamard: " << (hadamard ? "yes" : "NO") << "\n";
        out << "skew: " << (skew ? "yes" : "no") << "\n";
        out << "symmetric: " << (symmetric ? "yes" : "no") << "\n";

        if (opt.out_path) {
            std::ofstream file(*opt.out_path);
            if (!file) {
                err << "error: cannot write '" << *opt.out_path << "'\n";
                return kInputError;
            }
            file << serialize_matrix(matrix);
            out << "wrote " << *opt.out_path << "\n";
        }

        bool class_ok = true;
        if (kind == ArrayKind::propus)
            class_ok = symmetric;
        else if (family.tag(0) == BlockTag::skew)
            class_ok = skew;
        return hadamard && class_ok ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(opt.matrix_path);
        if (!in) throw ParseError("cannot open '" + opt.matrix_path + "'");
        SquareSignMatrix matrix = parse_matrix(in);
        out << "matrix of order " << matrix.order() << "\n";

        bool hadamard = opt.hadamard;
        bool skew = opt.skew;
        bool symmetric = opt.symmetric;
        if (!hadamard && !skew && !symmetric) hadamard = true;  // default predicate

        bool all_ok = true;
        if (hadamard) {
            const bool ok = is_hadamard(matrix);
            out << "hadamard: " << (ok ? "yes" : "NO") << "\n";
            all_ok = all_ok && ok;
        }
        if (skew) {
            const bool ok = is_skew_hadamard(matrix);
            out << "skew-hadamard: " << (ok ? "yes" : "NO") << "\n";
            all_ok = all_ok && ok;
        }
        if (symmetric) {
            const bool ok = is_symmetric_matrix(matrix);
            out << "symmetric: " << (ok ? "yes" : "NO") << "\n";
            all_ok = all_ok && ok;
        }
        return all_ok ? kOk : kCheckFailed;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
    SearchSpec spec{FamilyParams(Modulus(1), {0}, 0), {}, {}, std::nullopt, false, {}};
    try {
        if (opt.v < 1) throw ParseError("--v must be >= 1");
        spec.params = FamilyParams(Modulus(opt.v), opt.k, opt.lambda);
        const int m = spec.params.m();
        spec.constraints.assign(static_cast<std::size_t>(m), BlockConstraint{});
        spec.ties.assign(static_cast<std::size_t>(m), -1);

        for (const std::string& c : opt.constraints) {
            std::size_t eq = c.find('=');
            if (eq == std::string::npos)
                throw ParseError("constraint needs the form i=skew|sym|orbit:<elements>");
            int idx = 0;
            try {
                idx = std::stoi(c.substr(0, eq));
            } catch (const std::exception&) {
                throw ParseError("bad constraint index in '" + c + "'");
            }
            if (idx < 0 || idx >= m) throw ParseError("constraint index out of range in '" + c + "'");
            std::string body = c.substr(eq + 1);
            BlockConstraint& target = spec.constraints[static_cast<std::size_t>(idx)];
            if (body.rfind("orbit:", 0) == 0) {
                if (target.orbit_subgroup)
                    throw ParseError("block " + std::to_string(idx) + " given two orbit subgroups");
                std::vector<int> subgroup = parse_csv_ints(body.substr(6), "orbit subgroup");
                try {
                    validate_subgroup(spec.params.v, subgroup);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                target.orbit_subgroup = std::move(subgroup);
            } else {
                BlockConstraint::Shape shape = parse_shape(body);
                if (target.shape != BlockConstraint::Shape::none && target.shape != shape)
                    throw ParseError("block " + std::to_string(idx) +
                                     " given two different shape constraints");
                target.shape = shape;
            }
        }

        for (const std::string& t : opt.ties) {
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) throw ParseError("tie needs the form i=j");
            int i = 0, j = 0;
            try {
                i = std::stoi(t.substr(0, eq));
                j = std::stoi(t.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParseError("bad tie '" + t + "'");
            }
            if (i < 0 || i >= m || j < 0 || j >= m) throw ParseError("tie index out of range");
            spec.ties[static_cast<std::size_t>(i)] = j;
        }

        if (opt.split_lambdas) {
            std::vector<int> lambdas = parse_csv_ints(*opt.split_lambdas, "--split-lambdas");
            if (lambdas.size() != 2) throw ParseError("--split-lambdas needs two values");
            if (m != 4) throw ParseError("--split-lambdas applies to four-block searches");
            spec.split = PieceSplit{{std::vector<int>{0, 1}, std::vector<int>{2, 3}},
                                    {lambdas[0], lambdas[1]}};
        }

        spec.require_gs_feasible = (m == 4);
        if (opt.max_results > 0) spec.limits.max_results = opt.max_results;
        spec.limits.workers = opt.workers;
        if (opt.time_budget_seconds)
            spec.limits.time_budget = std::chrono::milliseconds(
                static_cast<long long>(*opt.time_budget_seconds * 1000.0));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    SearchResult result;
    try {
        result = run_search(spec);
    } catch (const std::invalid_argument& e) {
        err << "infeasible search: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::runtime_error& e) {
        err << "search aborted: " << e.what() << "\n";
        return kCheckFailed;
    }

    out << "found " << result.families.size() << " famil"
        << (result.families.size() == 1 ? "y" : "ies") << " ("
        << (result.exhausted ? "exhausted" : "truncated") << ", "
        << result.candidates_examined << " candidates, " << result.elapsed.count() << " ms, "
        << std::max(1, spec.limits.workers) << " worker"
        << (spec.limits.workers > 1 ? "s" : "") << ")\n";

    if (opt.out_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*opt.out_dir, ec);
        if (ec) {
            err << "error: cannot create directory '" << *opt.out_dir << "'\n";
            return kInputError;
        }
    }
    for (const DifferenceFamily& f : result.families) {
        const std::string text = serialize_family(f);
        if (opt.out_dir) {
            std::ostringstream name;
            name << "fam-" << std::hex << std::setw(16) << std::setfill('0')
                 << fnv1a(serialize_family(canonical_form(f))) << ".txt";
            const std::filesystem::path path = std::filesystem::path(*opt.out_dir) / name.str();
            std::ofstream file(path);
            if (!file) {
                err << "error: cannot write '" << path.string() << "'\n";
                return kInputError;
            }
            file << text;
            out << "wrote " << path.string() << "\n";
        } else {
            out << "\n" << text;
        }
    }
    return kOk;
}

}  // namespace hadamard::cli
