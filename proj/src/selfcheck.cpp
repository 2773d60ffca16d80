#include "waring/selfcheck.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "waring/json_io.hpp"
#include "waring/point_search.hpp"
#include "waring/witness.hpp"

namespace waring {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

long rint(SplitMix64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng.in_range(0, static_cast<std::uint64_t>(hi - lo)));
}

long rint_nonzero(SplitMix64& rng, long lo, long hi) {
    long v;
    do {
        v = rint(rng, lo, hi);
    } while (v == 0);
    return v;
}

// Random target supported on depths >= min_depth.
UTMatrix random_band_matrix(SplitMix64& rng, int n, int min_depth) {
    UTMatrix a(n);
    for (int row = 1; row <= n; ++row)
        for (int col = row + min_depth; col <= n; ++col)
            a.set(row, col, Rational(rint(rng, -9, 9)));
    return a;
}

// Random full upper triangular matrix, diagonal included.
UTMatrix random_full_matrix(SplitMix64& rng, int n) {
    UTMatrix a(n);
    for (int row = 1; row <= n; ++row)
        for (int col = row; col <= n; ++col)
            a.set(row, col, Rational(rint(rng, -9, 9)));
    return a;
}

NcPoly random_poly(SplitMix64& rng, int max_vars, int max_degree) {
    while (true) {
        NcPoly p;
        const int terms = static_cast<int>(rng.in_range(1, 4));
        for (int t = 0; t < terms; ++t) {
            const int len = static_cast<int>(rng.in_range(1, max_degree));
            Word w(len);
            for (int& letter : w) letter = static_cast<int>(rng.in_range(1, max_vars));
            NcPoly term = NcPoly::var(w[0]);
            for (std::size_t i = 1; i < w.size(); ++i) term = term * NcPoly::var(w[i]);
            p += term.scaled(Rational(rint_nonzero(rng, -9, 9)));
        }
        if (!p.is_zero()) return p;
    }
}

// The entry of sym_eval rebuilt from coefficient polynomials: sum over path
// shapes of the relabelled coefficient polynomial times the strict-entry
// monomial of the path.
CPoly reconstruct_entry(const NcPoly& p, int s, int t) {
    const int m = p.var_count();
    if (s == t) {
        std::map<SymId, SymId> ren;
        for (int i = 1; i <= m; ++i) ren[SymId::diag(1, i)] = SymId::diag(s, i);
        return commutative_image(p).rename(ren);
    }
    CPoly acc;
    for (int k = 1; k <= t - s; ++k) {
        const auto table = coefficient_table(p, k);
        if (table.empty()) continue;

        // All strictly increasing column paths s = j_1 < ... < j_{k+1} = t.
        std::vector<int> interior(k - 1);
        for (int i = 0; i < k - 1; ++i) interior[i] = s + 1 + i;
        while (true) {
            std::vector<int> path;
            path.push_back(s);
            path.insert(path.end(), interior.begin(), interior.end());
            path.push_back(t);
            if (path.back() > t || (k > 1 && interior.back() >= t)) break;

            std::map<SymId, SymId> ren;
            for (int l = 1; l <= k + 1; ++l)
                for (int i = 1; i <= m; ++i)
                    ren[SymId::diag(l, i)] = SymId::diag(path[l - 1], i);

            for (const auto& [word, poly] : table) {
                Monomial mono;
                for (int l = 0; l < k; ++l)
                    mono = mono * Monomial::var(SymId::entry(path[l], path[l + 1], word[l]));
                CPoly mono_poly;
                mono_poly.add_term(mono, Rational(1));
                acc += poly.rename(ren) * mono_poly;
            }

            if (k == 1) break;
            int idx = k - 2;
            while (idx >= 0 && interior[idx] == t - 1 - (k - 2 - idx)) --idx;
            if (idx < 0) break;
            ++interior[idx];
            for (int j = idx + 1; j < k - 1; ++j) interior[j] = interior[j - 1] + 1;
        }
    }
    return acc;
}

int run_cli(const std::string& cli, const std::string& args, const std::string& out_file) {
    std::string cmd = "\"" + cli + "\" " + args;
    cmd += out_file.empty() ? " > /dev/null" : " > \"" + out_file + "\"";
    cmd += " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

CriterionResult guarded(int id, const std::string& name,
                        const std::function<void(CriterionResult&)>& body) {
    CriterionResult res{id, name, false, "", 0.0};
    Timer timer;
    try {
        body(res);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = timer.elapsed();
    return res;
}

void c1_order_scan(CriterionResult& res) {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;
    const NcPoly base = NcPoly::parse("[x1,x2]");
    for (int r = 1; r <= 3; ++r) {
        const OrderReport rep = compute_order(pow(base, r), 12);
        if (r > 0 && !rep.certificate) ok = false;
        if (rep.order != r) ok = false;
        detail << (r > 1 ? ", " : "") << "order([x1,x2]^" << r << ")=" << rep.order;
    }
    const double secs = timer.elapsed();
    res.pass = ok && secs < 60.0;
    res.detail = detail.str();
}

void c2_sum_decomposition(CriterionResult& res) {
    Timer timer;
    int good = 0, total = 0;
    const struct {
        const char* poly;
        int n;
        int r;
        int trials;
    } configs[] = {{"[x1,x2]^2", 5, 2, 100}, {"[x1,x2]^3", 6, 3, 25}};
    for (const auto& cfg : configs) {
        const NcPoly p = NcPoly::parse(cfg.poly);
        SplitMix64 rng(0x5eedULL + cfg.n);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            ++total;
            const UTMatrix target = random_band_matrix(rng, cfg.n, cfg.r);
            WitnessBundle bundle = decompose_sum(p, cfg.n, target, rng.next());
            if (verify_bundle(bundle)) ++good;
        }
    }
    res.pass = good == total && timer.elapsed() < 300.0;
    res.detail = std::to_string(good) + "/" + std::to_string(total) + " decompositions verified";
}

void c3_direct_witness(CriterionResult& res) {
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const int n = 6, r = 2;
    SplitMix64 rng(0xd12ec7ULL);
    int good = 0;
    for (int trial = 0; trial < 50; ++trial) {
        UTMatrix target = random_band_matrix(rng, n, r + 1);
        for (int s = 1; s <= n - r; ++s)
            target.set(s, r + s, Rational(rint_nonzero(rng, -9, 9)));
        WitnessBundle bundle = image_witness(p, n, target, rng.next());
        if (verify_bundle(bundle)) ++good;
    }
    res.pass = good == 50;
    res.detail = std::to_string(good) + "/50 direct witnesses verified";
}

void c4_corner_witness(CriterionResult& res) {
    int good = 0, total = 0;
    const struct {
        const char* poly;
        int n;
    } configs[] = {{"[x1,x2]^2", 4}, {"[x1,x2]^3", 5}};
    for (const auto& cfg : configs) {
        const NcPoly p = NcPoly::parse(cfg.poly);
        const int n = cfg.n, r = n - 2;
        SplitMix64 rng(0xc023e2ULL + n);
        for (int trial = 0; trial < 50; ++trial) {
            ++total;
            UTMatrix target(n);
            // First ten targets exercise the vanishing (1, n-1) layout.
            target.set(1, n - 1, trial < 10 ? Rational(0) : Rational(rint(rng, -9, 9)));
            target.set(2, n, Rational(rint(rng, -9, 9)));
            target.set(1, n, Rational(rint(rng, -9, 9)));
            WitnessBundle bundle = witness_corner_case(p, n, target, rng.next());
            if (verify_bundle(bundle)) ++good;
        }
    }
    res.pass = good == total;
    res.detail = std::to_string(good) + "/" + std::to_string(total) + " corner witnesses verified";
}

void c5_band_structure(CriterionResult& res) {
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    const int n = 5;
    const SymUTMatrix sym = sym_eval(p, n);
    bool symbolic_ok = true;
    for (int s = 1; s <= n; ++s)
        for (int t = s; t <= n && t - s < 2; ++t)
            if (!sym.get(s, t).is_zero()) symbolic_ok = false;

    SplitMix64 rng(0xba2dULL);
    int numeric_good = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const UTMatrix u = random_full_matrix(rng, n);
        const UTMatrix v = random_full_matrix(rng, n);
        if (band_check(mat_eval(p, {u, v}), BandSpec{1})) ++numeric_good;
    }
    res.pass = symbolic_ok && numeric_good == 200;
    res.detail = std::string(symbolic_ok ? "symbolic band clean" : "symbolic band dirty") +
                 ", " + std::to_string(numeric_good) + "/200 numeric band checks";
}

void c6_obstruction(CriterionResult& res, const std::string& cli) {
    const NcPoly p = NcPoly::parse("[x1,x2]^2");
    SplitMix64 rng(0x0b57ULL);
    int clean = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const UTMatrix b = random_full_matrix(rng, 5);
        const UTMatrix c = random_full_matrix(rng, 5);
        const UTMatrix a = mat_eval(p, {b, c});
        const bool pattern = !a.get(1, 3).is_zero() && a.get(2, 4).is_zero() &&
                             !a.get(3, 5).is_zero();
        if (!pattern) ++clean;
    }
    if (clean != 500) {
        res.detail = "forbidden entry pattern appeared";
        return;
    }
    if (cli.empty()) {
        res.detail = "cli path not provided";
        return;
    }

    namespace fs = std::filesystem;
    char tmpl[] = "/tmp/waring-self-XXXXXX";
    char* dir = mkdtemp(tmpl);
    if (dir == nullptr) {
        res.detail = "mkdtemp failed";
        return;
    }
    const fs::path base(dir);
    {
        UTMatrix target(5);
        target.set(1, 3, Rational(1));
        target.set(3, 5, Rational(1));
        std::ofstream out(base / "target.json");
        out << matrix_to_json(target).dump(2) << "\n";
    }
    const std::string common =
        "--poly \"[x1,x2]^2\" --n 5 --target \"" + (base / "target.json").string() + "\"";
    const int witness_rc =
        run_cli(cli, "witness " + common + " --seed 7", (base / "w.json").string());
    const int decompose_rc = run_cli(
        cli, "decompose " + common + " --seed 7 --out \"" + (base / "bundle.json").string() + "\"",
        "");
    const int verify_rc =
        run_cli(cli, "verify --bundle \"" + (base / "bundle.json").string() + "\"", "");
    fs::remove_all(base);

    res.pass = witness_rc == 4 && decompose_rc == 0 && verify_rc == 0;
    res.detail = "500/500 pattern-free; exit codes witness=" + std::to_string(witness_rc) +
                 " decompose=" + std::to_string(decompose_rc) +
                 " verify=" + std::to_string(verify_rc);
}

void c7_substitution_reconstruction(CriterionResult& res) {
    SplitMix64 rng(0x5ab570ULL);
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const NcPoly p = random_poly(rng, 3, 4);
        const int n = static_cast<int>(rng.in_range(1, 4));
        const int m = p.var_count();

        PointAssignment point;
        std::vector<UTMatrix> inputs(m, UTMatrix(n));
        for (int i = 1; i <= m; ++i)
            for (int row = 1; row <= n; ++row)
                for (int col = row; col <= n; ++col) {
                    const Rational value(rint(rng, -9, 9));
                    inputs[i - 1].set(row, col, value);
                    point[col == row ? SymId::diag(row, i) : SymId::entry(row, col, i)] = value;
                }

        const SymUTMatrix sym = sym_eval(p, n);
        const UTMatrix direct = mat_eval(p, inputs);
        bool ok = true;
        for (int s = 1; s <= n && ok; ++s)
            for (int t = s; t <= n && ok; ++t) {
                if (sym.get(s, t).eval(point) != direct.get(s, t)) ok = false;
                if (sym.get(s, t) != reconstruct_entry(p, s, t)) ok = false;
            }
        if (ok) ++good;
    }
    res.pass = good == 100;
    res.detail = std::to_string(good) + "/100 substitution and reconstruction identities";
}

void c8_solver(CriterionResult& res) {
    SplitMix64 rng(0x501feULL);
    int good = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int nvars = static_cast<int>(rng.in_range(1, 5));
        std::vector<SymId> vars;
        for (int j = 1; j <= nvars; ++j) vars.push_back(SymId::diag(j, 1));
        const SymId pivot = vars[rng.in_range(0, nvars - 1)];

        AffineForm target;
        for (const auto& id : vars) {
            const long c = rint(rng, -9, 9);
            if (c != 0) target.coeffs[id] = Rational(c);
        }
        target.coeffs[pivot] = Rational(rint_nonzero(rng, -9, 9));
        const Rational b(rint_nonzero(rng, -9, 9));

        const int nsides = static_cast<int>(rng.in_range(0, 6));
        std::vector<AffineForm> sides;
        for (int k = 0; k < nsides; ++k) {
            AffineForm side;
            for (const auto& id : vars) {
                const long c = rint(rng, -9, 9);
                if (c != 0) side.coeffs[id] = Rational(c);
            }
            if (side.coeffs.empty())
                side.coeffs[vars[rng.in_range(0, nvars - 1)]] =
                    Rational(rint_nonzero(rng, -9, 9));
            sides.push_back(std::move(side));
        }

        const PointAssignment sol = constrained_linear_solve(target, b, sides, pivot, rng.next());
        bool ok = target.eval(sol) == b;
        for (const auto& side : sides)
            if (side.eval(sol).is_zero()) ok = false;
        if (ok) ++good;
    }
    res.pass = good == 1000;
    res.detail = std::to_string(good) + "/1000 solver instances exact";
}

void c9_parser_roundtrip(CriterionResult& res) {
    static const char* corpus[] = {
        "x1",
        "x2",
        "x1*x2",
        "x1*x2 - x2*x1",
        "[x1,x2]",
        "[x1,x2]^2",
        "[x1,x2]^3",
        "(x1 + x2)^2 - x1^2 - x2^2 - x2*x1",
        "2*x1 + 3*x2",
        "-2*x1",
        "1/2*x1^2 + 1/2*x1^2",
        "x1*(x2 + x3)",
        "(x1 - x2)*(x1 + x2)",
        "[x1,[x2,x3]]",
        "[[x1,x2],x3]",
        "[x1,x2]*[x2,x1]",
        "x1^4",
        "3/4*x1^2*x2",
        "x1*x2*x1",
        "(x1*x2 - x2*x1)^2",
        "[x1,x2]^2*x3",
        "x3*[x1,x2]",
        "-1*x1*x2",
        "0 + x1",
        "x1 - 2/3*x2",
        "(x1)",
        "((x1 + x2))",
        "[x1 , x2]",
        "x1 * x2",
        "x10*x2",
        "x1^2 - 2*x1*x2 + x2^2",
        "[x1+x2, x1-x2]",
        "2/4*x1",
        "x1^1",
    };
    int good = 0, total = 0;
    for (const char* text : corpus) {
        ++total;
        const NcPoly p = NcPoly::parse(text);
        if (NcPoly::parse(p.str()) == p) ++good;
    }

    bool syntax_caught = false, constant_caught = false, zero_caught = false;
    try {
        NcPoly::parse("x1*");
    } catch (const Error& e) {
        syntax_caught = e.code() == errc::syntax_error;
    }
    try {
        NcPoly::parse("x1*x2 - x2*x1 + 1");
    } catch (const Error& e) {
        constant_caught = e.code() == errc::nonzero_constant_term;
    }
    try {
        NcPoly::parse("x1 - x1");
    } catch (const Error& e) {
        zero_caught = e.code() == errc::zero_polynomial;
    }

    res.pass = good == total && total >= 30 && syntax_caught && constant_caught && zero_caught;
    res.detail = std::to_string(good) + "/" + std::to_string(total) +
                 " round trips; error cases " +
                 (syntax_caught && constant_caught && zero_caught ? "caught" : "missed");
}

} // namespace

std::vector<CriterionResult> run_selfcheck(const SelfCheckOptions& options) {
    std::vector<CriterionResult> results;
    results.push_back(guarded(1, "order-scan", c1_order_scan));
    results.push_back(guarded(2, "sum-decomposition", c2_sum_decomposition));
    results.push_back(guarded(3, "direct-witness", c3_direct_witness));
    results.push_back(guarded(4, "corner-witness", c4_corner_witness));
    results.push_back(guarded(5, "band-structure", c5_band_structure));
    results.push_back(guarded(6, "obstruction-and-exit-codes", [&](CriterionResult& res) {
        c6_obstruction(res, options.cli_path);
    }));
    results.push_back(guarded(7, "substitution-reconstruction", c7_substitution_reconstruction));
    results.push_back(guarded(8, "constrained-solver", c8_solver));
    results.push_back(guarded(9, "parser-roundtrip", c9_parser_roundtrip));
    return results;
}

int print_selfcheck(const std::vector<CriterionResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& res : results) {
        all = all && res.pass;
        char secs[32];
        std::snprintf(secs, sizeof(secs), "%.2fs", res.seconds);
        os << (res.pass ? "PASS" : "FAIL") << "  " << res.id << " " << res.name << " (" << secs
           << ")" << (res.detail.empty() ? "" : " - " + res.detail) << "\n";
    }
    os << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace waring
