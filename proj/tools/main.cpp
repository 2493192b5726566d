#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grasscode/codefile.hpp"
#include "grasscode/constructions.hpp"
#include "grasscode/skeleton.hpp"
#include "grasscode/verifier.hpp"

namespace {

using namespace grasscode;

SubspaceCode read_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    return read_code_file(in);
}

void write_code(const std::string& path, const SubspaceCode& code) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open " + path + " for writing");
    write_code_file(out, code);
    out.flush();
    if (!out) throw domain_error("short write to " + path);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ConstructArgs {
    std::string family;
    uint32_t q = 2;
    size_t n = 0;
    size_t k = 0;
    size_t delta = 2;
    std::string recipe_path;
    std::string in_path;
    std::string out_path;
};

std::vector<SkeletonEntry> entries_from_vector_list(const std::string& text,
                                                    size_t delta) {
    std::vector<SkeletonEntry> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        SkeletonEntry e;
        e.v = id_from_string(line);
        e.delta = delta;
        e.label = "entry " + std::to_string(entries.size());
        entries.push_back(std::move(e));
    }
    require(!entries.empty(), "skeleton file has no identifying vectors");
    return entries;
}

int run_construct(const ConstructArgs& a) {
    auto started = std::chrono::steady_clock::now();
    Field f(a.q);
    auto code = [&]() -> SubspaceCode {
        if (a.family == "c0") {
            require(a.k == 0 || a.k == 3, "family c0 fixes k=3");
            return construction_0(a.n, f);
        }
        if (a.family == "ia") {
            if (!a.recipe_path.empty())
                return construction_recipe(a.n, a.k, f,
                                           parse_recipe(slurp(a.recipe_path)));
            return construction_Ia(a.n, a.k, f);
        }
        if (a.family == "ib") return construction_Ib(a.n, a.k, f);
        if (a.family == "ii") return construction_II(a.n, a.k, f);
        if (a.family == "ml") {
            require(!a.recipe_path.empty(),
                    "family ml needs --recipe with one identifying vector per line");
            return multilevel(f, entries_from_vector_list(slurp(a.recipe_path), a.delta),
                              a.delta);
        }
        if (a.family == "extend") {
            require(!a.in_path.empty(), "family extend needs --in");
            return extend_code(read_code(a.in_path), a.delta);
        }
        throw domain_error("unknown family " + a.family +
                           " (expected ml, c0, ia, ib, ii, or extend)");
    }();
    write_code(a.out_path, code);
    std::cout << "family=" << a.family << " q=" << code.field.q() << " n=" << code.n
              << " k=" << code.k << "\n"
              << "M=" << code.size() << "\n"
              << "d=" << code.d << "\n"
              << "strata=" << code.strata.size() << "\n"
              << "wrote " << a.out_path << "\n";
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "construct elapsed " << std::fixed << std::setprecision(3)
              << elapsed.count() << "s\n";
    return 0;
}

struct VerifyArgs {
    std::string in_path;
    std::string mode = "auto";
    int64_t expect = -1;
};

int run_verify(const VerifyArgs& a) {
    auto code = read_code(a.in_path);
    std::string mode = a.mode;
    if (mode == "auto") mode = code.size() <= 20000 ? "exhaustive" : "stratified";
    VerificationReport report;
    if (mode == "exhaustive")
        report = verify_exhaustive(code, std::max<uint64_t>(code.size(), 20000));
    else if (mode == "stratified")
        report = verify_stratified(code);
    else
        throw domain_error("unknown mode " + a.mode +
                           " (expected auto, exhaustive, or stratified)");
    std::cout << report.to_text();
    std::cerr << "verify elapsed " << std::fixed << std::setprecision(3)
              << report.elapsed_seconds << "s\n";
    size_t expected = a.expect >= 0 ? static_cast<size_t>(a.expect) : code.d;
    if (!report.ok(expected)) {
        std::cout << "expectation failed: certified " << report.certified_min_distance
                  << ", expected >= " << expected << ", duplicates "
                  << report.duplicates << ", failures " << report.failures.size()
                  << "\n";
        return 1;
    }
    std::cout << "distance expectation met: >= " << expected << "\n";
    return 0;
}

struct BoundsArgs {
    uint32_t q = 2;
    size_t k = 0;
    size_t d = 4;
    size_t n_from = 0;
    size_t n_to = 0;
    bool csv = false;
};

std::string terms_text(const BoundValue& b) {
    std::string out;
    for (const auto& [name, value] : b.terms) {
        if (!out.empty()) out += " + ";
        out += name + "=" + std::to_string(value);
    }
    return out;
}

int run_bounds(const BoundsArgs& a) {
    require(a.k >= 1, "k >= 1 violated");
    require(a.n_from >= 1 && a.n_to >= a.n_from, "n range is empty");
    Field f(a.q);
    if (a.csv) std::cout << "n,family,value,best,detail\n";
    for (size_t n = a.n_from; n <= a.n_to; ++n) {
        std::vector<BoundValue> rows;
        if (a.d == 4) {
            uint64_t residual = 0;
            if (n >= 2 * a.k + 2 && a.k >= 4)
                residual = residual_registry(n - a.k, 4, a.k, f).size();
            rows.push_back(bound_Ia(n, a.k, a.q, residual));
            rows.push_back(bound_Ib(n, a.k, a.q, residual));
        }
        if (a.k >= 2 && a.d == 2 * (a.k - 1)) rows.push_back(bound_II(n, a.k, a.q));
        rows.push_back(bound_lifted_mrd(n, a.d, a.k, a.q));
        size_t best = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].applicable) continue;
            if (best == rows.size() || rows[i].value > rows[best].value) best = i;
        }
        if (!a.csv) std::cout << "n=" << n << " k=" << a.k << " d=" << a.d
                              << " q=" << a.q << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const BoundValue& b = rows[i];
            const char* mark = i == best ? "*" : " ";
            if (a.csv) {
                std::cout << n << "," << b.family << ","
                          << (b.applicable ? std::to_string(b.value) : "n/a") << ","
                          << (i == best ? 1 : 0) << ","
                          << (b.applicable ? terms_text(b) : b.reason) << "\n";
            } else if (b.applicable) {
                std::cout << "  " << mark << " " << std::left << std::setw(16)
                          << b.family << std::right << std::setw(14) << b.value
                          << "  [" << terms_text(b) << "]\n";
            } else {
                std::cout << "    " << std::left << std::setw(16) << b.family
                          << std::right << std::setw(14) << "n/a"
                          << "  (" << b.reason << ")\n";
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification toolkit for constant-dimension "
                 "subspace codes"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand(
        "construct", "build a code and write it to a file");
    construct->add_option("--family", ca.family, "ml, c0, ia, ib, ii, or extend")
        ->required();
    construct->add_option("--q", ca.q, "field size");
    construct->add_option("--n", ca.n, "ambient dimension");
    construct->add_option("--k", ca.k, "codeword dimension");
    construct->add_option("--delta", ca.delta,
                          "rank distance per entry (ml) or appended columns (extend)");
    construct->add_option("--recipe", ca.recipe_path,
                          "recipe file (ia) or identifying-vector list (ml)");
    construct->add_option("--in", ca.in_path, "base code file (extend)");
    construct->add_option("--out", ca.out_path, "output code file")->required();

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand(
        "verify", "check the minimum distance of a code file");
    verify->add_option("--in", va.in_path, "code file")->required();
    verify->add_option("--mode", va.mode, "auto, exhaustive, or stratified");
    verify->add_option("--expect-distance", va.expect,
                       "fail unless this distance is certified (default: header d)");

    BoundsArgs ba;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "tabulate cardinality bounds over a range of n");
    bounds->add_option("--q", ba.q, "field size");
    bounds->add_option("--k", ba.k, "codeword dimension")->required();
    bounds->add_option("--d", ba.d, "subspace distance");
    bounds->add_option("--n-from", ba.n_from, "first ambient dimension")->required();
    bounds->add_option("--n-to", ba.n_to, "last ambient dimension")->required();
    bounds->add_flag("--csv", ba.csv, "machine-readable output");

    int rc = 0;
    construct->callback([&] { rc = run_construct(ca); });
    verify->callback([&] { rc = run_verify(va); });
    bounds->callback([&] { rc = run_bounds(ba); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const grasscode::domain_error& e) {
        std::string msg = e.what();
        if (msg.find("below bound") != std::string::npos) {
            std::cerr << "internal error: " << msg << "\n";
            return 3;
        }
        std::cerr << "error: " << msg << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
