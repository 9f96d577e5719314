#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "popov/error.hpp"
#include "popov/report.hpp"

using namespace popov;

namespace {

int exit_code(const Error& e) {
    switch (e.code()) {
        case Errc::invalid_argument:
        case Errc::invalid_pair:
        case Errc::smooth_case_unsupported:
        case Errc::out_of_range: return 2;
        case Errc::budget_exceeded: return 3;
        default: return 1;
    }
}

struct PairArgs {
    long long p = 0, q = 0, m = 0;
};

void add_pair(CLI::App* cmd, PairArgs& args) {
    cmd->add_option("P", args.p, "numerator of the height")->required();
    cmd->add_option("Q", args.q, "denominator of the height")->required();
    cmd->add_option("M", args.m, "degree")->required();
}

int run_analyze(const PairArgs& args, bool json) {
    const PopovPair pair = validate_pair(args.p, args.q, args.m);
    if (pair.smooth) {
        if (json) {
            std::cout << classification_json(pair).dump(2) << "\n";
        } else {
            std::cout << "pair (" << pair.p << ", " << pair.q << ", " << pair.m
                      << "): height 1, smooth; the resolution pipeline does not apply\n";
        }
        return 0;
    }
    PairAnalysis an(prepare_pair(args.p, args.q, args.m));
    const VerifyReport report = verify(an);
    if (json) {
        std::cout << analysis_json(an, report).dump(2) << "\n";
    } else {
        std::cout << analysis_text(an, report);
    }
    return report.ok() ? 0 : 1;
}

int run_verify(const PairArgs& args, const VerifyOptions& opts, bool json) {
    PairAnalysis an(prepare_pair(args.p, args.q, args.m));
    const VerifyReport report = verify(an, opts);
    if (json) {
        Json out;
        out["schema"] = "1";
        out["pair"] = pair_json(an.data.pair);
        out["verification"] = verify_json(report);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << verify_text(an, report);
    }
    return report.ok() ? 0 : 1;
}

struct SweepRow {
    long long p = 0, q = 0, m = 0;
    std::size_t r = 0;
    bool toric = false;
    bool ok = false;
    std::size_t checks = 0;
    std::string failure;
    int error = 0;
};

int run_sweep(long long q_max, long long m_max, bool toric_only, bool non_toric_only, bool json) {
    std::vector<SweepRow> rows;
    for (long long q = 2; q <= q_max; ++q) {
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (long long m = 1; m <= m_max; ++m) {
                const bool toric = m % (q - p) == 0;
                if ((toric_only && !toric) || (non_toric_only && toric)) continue;
                rows.push_back(SweepRow{p, q, m});
            }
        }
    }
    parallel_for(rows.size(), Exec::parallel, [&](std::size_t idx) {
        SweepRow& row = rows[idx];
        try {
            PairAnalysis an(prepare_pair(row.p, row.q, row.m));
            VerifyOptions opts;
            opts.exec = Exec::serial;
            const VerifyReport report = verify(an, opts);
            row.r = an.data.r();
            row.toric = an.data.toric;
            row.ok = report.ok();
            row.checks = report.checks.size();
            for (const CheckResult& c : report.checks) {
                if (c.status == CheckStatus::fail && row.failure.empty()) row.failure = c.name + ": " + c.detail;
            }
        } catch (const Error& e) {
            row.ok = false;
            row.failure = e.what();
            row.error = exit_code(e);
        }
    });
    std::size_t passed = 0;
    int worst = 0;
    for (const SweepRow& row : rows) {
        if (row.ok) ++passed;
        if (row.error == 3) worst = 3;
    }
    if (json) {
        Json out;
        out["schema"] = "1";
        out["pairs"] = rows.size();
        out["passed"] = passed;
        out["rows"] = Json::array();
        for (const SweepRow& row : rows) {
            Json item;
            item["p"] = row.p;
            item["q"] = row.q;
            item["m"] = row.m;
            item["r"] = row.r;
            item["toric"] = row.toric;
            item["ok"] = row.ok;
            if (!row.failure.empty()) item["failure"] = row.failure;
            out["rows"].push_back(item);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "    q    p    m    r  toric  status\n";
        for (const SweepRow& row : rows) {
            std::printf("%5lld%5lld%5lld%5zu  %-5s  %s\n", row.q, row.p, row.m, row.r, row.toric ? "yes" : "no",
                        row.ok ? "pass" : ("FAIL " + row.failure).c_str());
        }
        std::cout << passed << "/" << rows.size() << " pairs pass\n";
    }
    if (worst) return worst;
    return passed == rows.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, fans and ideal families of SL(2)-varieties given by a pair (p/q, m)"};
    app.require_subcommand(1);

    PairArgs analyze_args;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "full report for one pair");
    add_pair(analyze, analyze_args);
    analyze->add_flag("--json", analyze_json, "write JSON to stdout");

    PairArgs verify_args;
    bool verify_json_flag = false;
    long long max_weight = -1, c_bound = -1, drop_k = 0, drop_f = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run every check for one pair");
    add_pair(verify_cmd, verify_args);
    verify_cmd->add_option("--max-weight", max_weight, "weights |n| <= N (default 2(q-p))");
    verify_cmd->add_option("--c-bound", c_bound, "label box |c| <= C (default m(P_{r+1}+2))");
    verify_cmd->add_flag("--json", verify_json_flag, "write JSON to stdout");
    auto* dk = verify_cmd->add_option("--drop-k", drop_k, "mutation: drop the N-th K generator of J0(1)");
    auto* df = verify_cmd->add_option("--drop-f", drop_f, "mutation: drop F_J from J0(1)");
    dk->excludes(df);

    long long q_max = 0, m_max = 0;
    bool toric_only = false, non_toric_only = false, sweep_json = false;
    auto* sweep = app.add_subcommand("sweep", "verify every pair in a range");
    sweep->add_option("--q-max", q_max, "largest q")->required();
    sweep->add_option("--m-max", m_max, "largest m")->required();
    auto* to = sweep->add_flag("--toric-only", toric_only, "only pairs with (q-p) | m");
    auto* nt = sweep->add_flag("--non-toric-only", non_toric_only, "only pairs with (q-p) not dividing m");
    to->excludes(nt);
    sweep->add_flag("--json", sweep_json, "write JSON to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_args, analyze_json);
        if (verify_cmd->parsed()) {
            VerifyOptions opts;
            if (max_weight >= 0) opts.max_weight = max_weight;
            if (c_bound >= 0) opts.c_bound = c_bound;
            if (*dk) opts.drop_k = static_cast<std::size_t>(drop_k);
            if (*df) opts.drop_f = static_cast<std::size_t>(drop_f);
            return run_verify(verify_args, opts, verify_json_flag);
        }
        return run_sweep(q_max, m_max, toric_only, non_toric_only, sweep_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    }
}
