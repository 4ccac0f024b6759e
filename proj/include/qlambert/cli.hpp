#pragma once

// Command-line front end: `expand`, `verify` and `bench`.
//
// Exit codes: 0 success, 1 some identity FAILED (verify only), 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qlambert/constructors.hpp>
#include <qlambert/harness.hpp>
#include <qlambert/series.hpp>

namespace qlambert::cli
{

enum class output_format { table, json, csv };

inline constexpr std::size_t default_order = 200;
// Seed for the pseudo-random operands of `bench --op mul`.
inline constexpr std::uint64_t bench_seed = 20260101;

inline std::optional<output_format> parse_format(const std::string &s)
{
    if (s == "table") {
        return output_format::table;
    }
    if (s == "json") {
        return output_format::json;
    }
    if (s == "csv") {
        return output_format::csv;
    }
    return std::nullopt;
}

inline nlohmann::json to_json(series_id id, const truncated_series &f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"series", std::string(to_string(id))}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

inline nlohmann::json to_json(const identity_report &r)
{
    nlohmann::json j{{"identity", std::string(to_string(r.identity))},
                     {"order", r.order_checked},
                     {"status", std::string(to_string(r.status))}};
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs.get_str()},
                               {"rhs", r.first_mismatch->rhs.get_str()}};
    }
    j["elapsed_ms"] = r.elapsed.count();
    if (r.unproven_conjecture) {
        j["annotation"] = "unproven conjecture";
    }
    if (r.resolved_sign) {
        j["sign"] = *r.resolved_sign;
    }
    if (r.sign_witness) {
        j["sign_witness"] = *r.sign_witness;
    }
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    if (r.error) {
        j["error"] = *r.error;
    }
    return j;
}

inline void write_expand(std::ostream &out, series_id id, const truncated_series &f, output_format fmt)
{
    switch (fmt) {
        case output_format::csv:
            out << "n,coefficient\n";
            for (std::size_t i = 0; i < f.order(); ++i) {
                out << i << ',' << f[i] << '\n';
            }
            return;
        case output_format::json:
            out << to_json(id, f).dump(2) << '\n';
            return;
        case output_format::table:
            out << to_string(id) << " = " << f << '\n';
            out << std::setw(6) << "n" << "  coefficient\n";
            for (std::size_t i = 0; i < f.order(); ++i) {
                out << std::setw(6) << i << "  " << f[i] << '\n';
            }
            return;
    }
}

inline std::string note_of(const identity_report &r)
{
    std::string note;
    auto append = [&note](const std::string &s) {
        if (!note.empty()) {
            note += "; ";
        }
        note += s;
    };
    if (r.unproven_conjecture) {
        append("unproven conjecture");
    }
    if (r.resolved_sign) {
        append("sign " + std::string(*r.resolved_sign > 0 ? "+1" : "-1") + " witness q^"
               + std::to_string(r.sign_witness.value_or(0)));
    }
    if (!r.detail.empty() && r.status == check_status::failed) {
        append(r.detail);
    }
    if (r.error) {
        append("error: " + *r.error);
    }
    return note;
}

inline void write_reports(std::ostream &out, const std::vector<identity_report> &reports, output_format fmt)
{
    switch (fmt) {
        case output_format::json: {
            auto arr = nlohmann::json::array();
            for (const auto &r : reports) {
                arr.push_back(to_json(r));
            }
            out << arr.dump(2) << '\n';
            return;
        }
        case output_format::csv:
            out << "identity,order,status,mismatch_index,lhs,rhs,elapsed_ms,note\n";
            for (const auto &r : reports) {
                out << to_string(r.identity) << ',' << r.order_checked << ',' << to_string(r.status) << ',';
                if (r.first_mismatch) {
                    out << r.first_mismatch->index << ',' << r.first_mismatch->lhs << ',' << r.first_mismatch->rhs;
                } else {
                    out << ",,";
                }
                out << ',' << std::fixed << std::setprecision(3) << r.elapsed.count() << ",\"" << note_of(r)
                    << "\"\n";
            }
            return;
        case output_format::table:
            out << std::left << std::setw(24) << "identity" << std::setw(8) << "order" << std::setw(26) << "status"
                << std::setw(12) << "ms" << "notes\n";
            for (const auto &r : reports) {
                std::ostringstream ms;
                ms << std::fixed << std::setprecision(1) << r.elapsed.count();
                out << std::left << std::setw(24) << to_string(r.identity) << std::setw(8) << r.order_checked
                    << std::setw(26) << to_string(r.status) << std::setw(12) << ms.str() << note_of(r);
                if (r.first_mismatch) {
                    out << (note_of(r).empty() ? "" : "; ") << "first mismatch at q^" << r.first_mismatch->index
                        << ": " << r.first_mismatch->lhs << " vs " << r.first_mismatch->rhs;
                }
                out << '\n';
            }
            out << std::right;
            return;
    }
}

struct bench_row {
    std::size_t size;
    double elapsed_ms;
};

inline truncated_series random_series(std::size_t order, std::mt19937_64 &rng)
{
    std::vector<integer> v(order);
    for (auto &c : v) {
        c = static_cast<long>(rng() % 19) - 9;
    }
    return truncated_series(std::move(v));
}

inline void write_bench(std::ostream &out, const std::string &op, const std::string &algo,
                        const std::vector<bench_row> &rows, output_format fmt)
{
    switch (fmt) {
        case output_format::json: {
            auto arr = nlohmann::json::array();
            for (const auto &r : rows) {
                nlohmann::json j{{"op", op}, {"size", r.size}, {"elapsed_ms", r.elapsed_ms}};
                if (op == "mul") {
                    j["algorithm"] = algo;
                }
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << '\n';
            return;
        }
        case output_format::csv:
            out << "size,elapsed_ms\n";
            for (const auto &r : rows) {
                out << r.size << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
            }
            return;
        case output_format::table:
            out << "bench " << op << (op == "mul" ? " (" + algo + ")" : std::string()) << '\n';
            out << std::setw(8) << "size" << std::setw(14) << "elapsed_ms" << '\n';
            for (const auto &r : rows) {
                out << std::setw(8) << r.size << std::setw(14) << std::fixed << std::setprecision(3) << r.elapsed_ms
                    << '\n';
            }
            return;
    }
}

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series expansion and identity verification for a double Lambert series"};
    app.require_subcommand(1);

    std::string format_name = "table";
    long long order = static_cast<long long>(default_order);

    auto *expand = app.add_subcommand("expand", "Print coefficients q^0 .. q^(N-1) of a named series");
    std::string series_name;
    expand->add_option("series", series_name, "Series id (Y_DEF, Y_EQ1, Y_EQ2, Z, A, B, B1, D1, D2, S, L1, L2, L3, PHI)")
        ->required();
    expand->add_option("--order", order, "Truncation order N");
    expand->add_option("--format", format_name, "table | json | csv");

    auto *verify = app.add_subcommand("verify", "Check identities coefficient by coefficient");
    bool verify_all = false;
    std::string identity_name;
    auto *all_flag = verify->add_flag("--all", verify_all, "Check every identity");
    verify->add_option("--identity", identity_name, "Single identity id")->excludes(all_flag);
    verify->add_option("--order", order, "Truncation order N (>= 8)");
    verify->add_option("--format", format_name, "table | json | csv");

    auto *bench = app.add_subcommand("bench", "Time dense multiplication or the full suite");
    std::string op = "mul";
    std::string algo_name = "schoolbook";
    std::vector<long long> sizes;
    bench->add_option("--op", op, "mul | suite");
    bench->add_option("--sizes", sizes, "Comma separated orders (each >= 8)")->delimiter(',')->required();
    bench->add_option("--mul-algorithm", algo_name, "schoolbook | karatsuba");
    bench->add_option("--format", format_name, "table | json | csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const auto fmt = parse_format(format_name);
        if (!fmt) {
            throw usage_error("unknown format '" + format_name + "' (expected table, json or csv)");
        }

        if (expand->parsed()) {
            const auto id = parse_series_id(series_name);
            if (!id) {
                throw usage_error("unknown series '" + series_name + "'");
            }
            if (order < 1) {
                throw usage_error("--order must be >= 1");
            }
            write_expand(out, *id, named_series(*id, static_cast<std::size_t>(order)), *fmt);
            return 0;
        }

        if (verify->parsed()) {
            if (order < static_cast<long long>(minimum_check_order)) {
                throw usage_error("--order must be >= " + std::to_string(minimum_check_order));
            }
            identity_harness harness;
            std::vector<identity_report> reports;
            if (!identity_name.empty()) {
                const auto id = parse_identity_id(identity_name);
                if (!id) {
                    throw usage_error("unknown identity '" + identity_name + "'");
                }
                reports.push_back(harness.check(*id, static_cast<std::size_t>(order)));
            } else {
                reports = harness.run_suite(static_cast<std::size_t>(order));
            }
            write_reports(out, reports, *fmt);
            return all_passed(reports) ? 0 : 1;
        }

        // bench
        if (sizes.empty()) {
            throw usage_error("--sizes needs at least one order");
        }
        if (std::any_of(sizes.begin(), sizes.end(), [](long long s) { return s < 8; })) {
            throw usage_error("every bench size must be >= 8");
        }
        if (op != "mul" && op != "suite") {
            throw usage_error("unknown --op '" + op + "' (expected mul or suite)");
        }
        mul_algorithm algo;
        if (algo_name == "schoolbook") {
            algo = mul_algorithm::schoolbook;
        } else if (algo_name == "karatsuba") {
            algo = mul_algorithm::karatsuba;
        } else {
            throw usage_error("unknown --mul-algorithm '" + algo_name + "'");
        }

        std::vector<bench_row> rows;
        for (auto s : sizes) {
            const auto n = static_cast<std::size_t>(s);
            std::chrono::duration<double, std::milli> dt{};
            if (op == "mul") {
                std::mt19937_64 rng(bench_seed);
                const auto f = random_series(n, rng);
                const auto g = random_series(n, rng);
                const auto t0 = std::chrono::steady_clock::now();
                const auto h = mul(f, g, algo);
                dt = std::chrono::steady_clock::now() - t0;
                (void)h;
            } else {
                const auto t0 = std::chrono::steady_clock::now();
                identity_harness harness;
                const auto reports = harness.run_suite(n);
                dt = std::chrono::steady_clock::now() - t0;
                (void)reports;
            }
            rows.push_back({n, dt.count()});
        }
        write_bench(out, op, algo_name, rows, *fmt);
        return 0;
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qlambert::cli
