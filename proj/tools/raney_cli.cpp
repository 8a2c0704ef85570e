// raney: command-line front end for the libraney C API.
//
// Subcommands: raney, catalan, enumerate, webs, verify, conjecture.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 size-cap / I/O / internal error.

#include "raney.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

constexpr std::uint64_t kDefaultCap = 1000000;

// Owning wrapper for strings handed out by the library.
struct ApiString {
    char* value = nullptr;

    ~ApiString() { raney_string_free(value); }
    std::string str() const { return value == nullptr ? "" : value; }
};

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "raney: " << message << '\n';
    std::exit(code);
}

// Maps a library failure onto the CLI exit code contract.
[[noreturn]] void fail_api(raney_status status) {
    const std::string message = raney_last_error();
    switch (status) {
        case RANEY_ERROR_INVALID_ARGUMENT:
        case RANEY_ERROR_PARAMETER_MISMATCH:
            fail(kExitUsage, message);
        default:
            fail(kExitRuntime, message);
    }
}

std::string call_nat(raney_status (*fn)(uint32_t, uint32_t, uint32_t, char**),
                     uint32_t a, uint32_t b, uint32_t c) {
    ApiString out;
    if (raney_status status = fn(a, b, c, &out.value); status != RANEY_OK) {
        fail_api(status);
    }
    return out.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        fail(kExitRuntime, "cannot open output file: " + out_path);
    }
    file << text;
    if (!file) {
        fail(kExitRuntime, "write failed: " + out_path);
    }
}

// Writes one graphviz file per object into a directory.
void write_dot_files(const std::string& dir, const std::string& stem,
                     std::uint64_t count,
                     const std::function<std::string(std::uint64_t)>& dot_of) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        fail(kExitRuntime, "cannot create output directory: " + dir);
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        std::ostringstream name;
        name << stem << '_';
        name.fill('0');
        name.width(6);
        name << i;
        name << ".dot";
        const std::filesystem::path path =
            std::filesystem::path(dir) / name.str();
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            fail(kExitRuntime, "cannot open output file: " + path.string());
        }
        file << dot_of(i);
        if (!file) {
            fail(kExitRuntime, "write failed: " + path.string());
        }
    }
    std::cout << "wrote " << count << " files to " << dir << '\n';
}

std::uint64_t default_cap_from_env() {
    const char* env = std::getenv("RANEY_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultCap;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
        fail(kExitUsage, std::string("RANEY_CAP is not a positive integer: ") +
                             env);
    }
    return value;
}

// --- subcommand implementations -----------------------------------------

void run_raney_table(uint32_t p, uint32_t r, uint32_t k_max, bool identities,
                     const std::string& out_path) {
    std::ostringstream out;
    out << "# R(p=" << p << ",r=" << r << ") for k = 0.." << k_max << '\n';
    if (identities) {
        out << "k\tclosed\tcomposition_sum\tconvolution\tagree\n";
    } else {
        out << "k\tR\n";
    }
    for (uint32_t k = 0; k <= k_max; ++k) {
        const std::string closed = call_nat(raney_number, p, r, k);
        if (!identities) {
            out << k << '\t' << closed << '\n';
            continue;
        }
        const std::string by_sum =
            call_nat(raney_number_composition_sum, p, r, k);
        const std::string by_conv = call_nat(raney_number_convolution, p, r, k);
        const bool agree = closed == by_sum && closed == by_conv;
        out << k << '\t' << closed << '\t' << by_sum << '\t' << by_conv << '\t'
            << (agree ? "ok" : "MISMATCH") << '\n';
    }
    write_output(out.str(), out_path);
}

void run_catalan_table(uint32_t p, uint32_t k_max, const std::string& out_path) {
    std::ostringstream out;
    out << "# pC(p=" << p << ") for k = 0.." << k_max << '\n';
    out << "k\tC\n";
    for (uint32_t k = 0; k <= k_max; ++k) {
        ApiString value;
        if (raney_status status = raney_p_catalan(p, k, &value.value);
            status != RANEY_OK) {
            fail_api(status);
        }
        out << k << '\t' << value.str() << '\n';
    }
    write_output(out.str(), out_path);
}

void run_enumerate(uint32_t p, uint32_t r, uint32_t k, const std::string& method,
                   const std::string& format, std::uint64_t cap,
                   const std::string& out_path) {
    raney_corals* handle = nullptr;
    const raney_coral_method m =
        method == "tiered" ? RANEY_CORAL_TIERED : RANEY_CORAL_TUPLE;
    if (raney_status status = raney_corals_enumerate(p, r, k, cap, m, &handle);
        status != RANEY_OK) {
        fail_api(status);
    }
    std::unique_ptr<raney_corals, void (*)(raney_corals*)> guard(
        handle, raney_corals_free);
    const std::uint64_t count = raney_corals_count(handle);
    if (format == "dot") {
        write_dot_files(out_path, "coral", count, [&](std::uint64_t i) {
            ApiString dot;
            if (raney_status status = raney_corals_dot(handle, i, &dot.value);
                status != RANEY_OK) {
                fail_api(status);
            }
            return dot.str();
        });
        return;
    }
    std::ostringstream out;
    for (std::uint64_t i = 0; i < count; ++i) {
        ApiString line;
        if (raney_status status = raney_corals_record(handle, i, &line.value);
            status != RANEY_OK) {
            fail_api(status);
        }
        out << line.str() << '\n';
    }
    write_output(out.str(), out_path);
}

void run_webs(const std::string& variant, uint32_t p, uint32_t k,
              const std::string& format, std::uint64_t cap,
              const std::string& out_path) {
    raney_webs* handle = nullptr;
    raney_status status = variant == "minus"
                              ? raney_webs_minus(k, cap, &handle)
                              : raney_webs_sourcesink(p, k, cap, &handle);
    if (status != RANEY_OK) {
        fail_api(status);
    }
    std::unique_ptr<raney_webs, void (*)(raney_webs*)> guard(handle,
                                                             raney_webs_free);
    const std::uint64_t count = raney_webs_count(handle);
    if (format == "dot") {
        write_dot_files(out_path, "web", count, [&](std::uint64_t i) {
            ApiString dot;
            if (raney_status st = raney_webs_dot(handle, i, &dot.value);
                st != RANEY_OK) {
                fail_api(st);
            }
            return dot.str();
        });
        return;
    }
    std::ostringstream out;
    for (std::uint64_t i = 0; i < count; ++i) {
        ApiString line;
        if (raney_status st = raney_webs_record(handle, i, &line.value);
            st != RANEY_OK) {
            fail_api(st);
        }
        out << line.str() << '\n';
    }
    write_output(out.str(), out_path);
}

int run_verify(uint32_t p_max, uint32_t r_max, uint32_t k_max,
               std::uint64_t cap, const std::string& out_path) {
    ApiString report;
    int all_passed = 0;
    if (raney_status status =
            raney_verify(p_max, r_max, k_max, cap, &report.value, &all_passed);
        status != RANEY_OK) {
        fail_api(status);
    }
    write_output(report.str(), out_path);
    return all_passed == 1 ? kExitOk : kExitVerifyFailed;
}

void run_conjecture(uint32_t n, uint32_t j, uint32_t k_max,
                    const std::string& out_path) {
    std::ostringstream out;
    out << "# UNVERIFIED conjecture values; closed-form predictions only,\n";
    out << "# nothing below is checked by an enumeration.\n";
    out << "# a(k) = (n-2)^k * R(n+1,n-1,k)   boundary: n*(k+1) ones\n";
    out << "# b(k) = (n-2)^k * R(n-1,n-j,k)   boundary: one j, then n*k+n-j "
           "ones\n";
    out << "# n=" << n << " j=" << j << '\n';
    out << "k\ta\tb\n";
    for (uint32_t k = 0; k <= k_max; ++k) {
        ApiString a;
        ApiString b;
        if (raney_status status =
                raney_conjecture_values(n, j, k, &a.value, &b.value);
            status != RANEY_OK) {
            fail_api(status);
        }
        out << k << '\t' << a.str() << '\t' << b.str() << '\n';
    }
    write_output(out.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Raney-number enumeration: sequence tables, coral "
                 "diagram and tree-web enumeration, identity verification."};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() {
        return std::string(raney_version());
    }());

    const std::uint64_t env_cap = default_cap_from_env();

    // raney
    auto* cmd_raney = app.add_subcommand(
        "raney", "Print R(p,r,k) for k = 0..k-max as a table");
    uint32_t p = 2;
    uint32_t r = 1;
    uint32_t k = 0;
    uint32_t k_max = 0;
    uint32_t n = 3;
    uint32_t j = 1;
    bool identities = false;
    std::string format = "records";
    std::string method = "tuple";
    std::string variant;
    std::string out_path;
    std::uint64_t cap = env_cap;

    cmd_raney->add_option("--p", p, "Star arity p (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_raney->add_option("--r", r, "Base parameter r (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_raney->add_option("--k-max", k_max, "Largest k (table covers 0..k-max)")
        ->required();
    cmd_raney->add_flag("--identities", identities,
                        "Also print the composition-sum and convolution "
                        "columns with an agreement marker");
    std::string table_format = "table";
    cmd_raney->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"table"}));
    cmd_raney->add_option("--out", out_path, "Write the table to this file");

    // catalan
    auto* cmd_catalan = app.add_subcommand(
        "catalan", "Print the p-Catalan numbers for k = 0..k-max");
    cmd_catalan->add_option("--p", p, "Arity p (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_catalan->add_option("--k-max", k_max, "Largest k")->required();
    cmd_catalan->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"table"}));
    cmd_catalan->add_option("--out", out_path, "Write the table to this file");

    // enumerate
    auto* cmd_enumerate = app.add_subcommand(
        "enumerate", "List every (p,r) coral diagram with k stars");
    cmd_enumerate->add_option("--p", p, "Star arity p (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--r", r, "Base parameter r (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--k", k, "Number of stars")->required();
    cmd_enumerate
        ->add_option("--method", method, "Construction route (default tuple)")
        ->check(CLI::IsMember({"tuple", "tiered"}));
    cmd_enumerate
        ->add_option("--format", format,
                     "records (one line per diagram) or dot (one Graphviz "
                     "file per diagram, requires --out DIR)")
        ->check(CLI::IsMember({"records", "dot"}));
    cmd_enumerate->add_option("--cap", cap,
                              "Refuse enumerations larger than this")
        ->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--out", out_path,
                              "Output file (records) or directory (dot)");

    // webs
    auto* cmd_webs = app.add_subcommand(
        "webs", "List oriented tree webs (records or Graphviz)");
    cmd_webs
        ->add_option("--variant", variant,
                     "constant: all-'+' boundary, counted by R(p^2,p,k); "
                     "minus: boundary '-' then 3k+1 '+', counted by R(4,1,k)")
        ->required()
        ->check(CLI::IsMember({"constant", "minus"}));
    cmd_webs->add_option("--p", p, "Constant variant only: p >= 2 (default 2)");
    cmd_webs->add_option("--k", k, "Number of expanded stars")->required();
    cmd_webs
        ->add_option("--format", format,
                     "records or dot (dot requires --out DIR)")
        ->check(CLI::IsMember({"records", "dot"}));
    cmd_webs->add_option("--cap", cap, "Refuse enumerations larger than this")
        ->check(CLI::PositiveNumber);
    cmd_webs->add_option("--out", out_path,
                         "Output file (records) or directory (dot)");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify",
        "Run every identity/bijection/enumeration suite; exit 1 on failure");
    uint32_t p_max = 5;
    uint32_t r_max = 5;
    uint32_t verify_k_max = 8;
    cmd_verify->add_option("--p-max", p_max, "Identity-suite p range (def 5)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--r-max", r_max, "Identity-suite r range (def 5)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--k-max", verify_k_max,
                           "Identity-suite k range (def 8)");
    cmd_verify->add_option("--cap", cap,
                           "Brute-force filter ceiling (def 1000000)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--out", out_path, "Write the report to this file");

    // conjecture
    auto* cmd_conjecture = app.add_subcommand(
        "conjecture",
        "Print the UNVERIFIED conjectural web-count sequences");
    cmd_conjecture->add_option("--n", n, "Web family parameter n (>= 3)")
        ->required();
    cmd_conjecture->add_option("--j", j, "Boundary label j (1 <= j <= n-1)")
        ->required();
    cmd_conjecture->add_option("--k-max", k_max, "Largest k")->required();
    cmd_conjecture->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"table"}));
    cmd_conjecture->add_option("--out", out_path, "Write the table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_raney->parsed()) {
        run_raney_table(p, r, k_max, identities, out_path);
        return kExitOk;
    }
    if (cmd_catalan->parsed()) {
        run_catalan_table(p, k_max, out_path);
        return kExitOk;
    }
    if (cmd_enumerate->parsed()) {
        if (format == "dot" && out_path.empty()) {
            fail(kExitUsage, "--format dot requires --out DIR");
        }
        run_enumerate(p, r, k, method, format, cap, out_path);
        return kExitOk;
    }
    if (cmd_webs->parsed()) {
        if (format == "dot" && out_path.empty()) {
            fail(kExitUsage, "--format dot requires --out DIR");
        }
        if (variant == "minus" && cmd_webs->count("--p") > 0) {
            fail(kExitUsage, "--p applies to the constant variant only");
        }
        if (variant == "constant" && p < 2) {
            fail(kExitUsage, "constant webs need --p >= 2");
        }
        run_webs(variant, cmd_webs->count("--p") > 0 ? p : 2, k, format, cap,
                 out_path);
        return kExitOk;
    }
    if (cmd_verify->parsed()) {
        return run_verify(p_max, r_max, verify_k_max, cap, out_path);
    }
    if (cmd_conjecture->parsed()) {
        run_conjecture(n, j, k_max, out_path);
        return kExitOk;
    }
    fail(kExitUsage, "no subcommand given");
}
