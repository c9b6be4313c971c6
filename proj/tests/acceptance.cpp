// Acceptance gate: one line per criterion, exit 0 iff all pass.
//
//   acceptance <path-to-vistab-cli> <path-to-golden-dir>
//
// Each criterion carries a wall-clock budget; exceeding it is a failure.

#include "vistab/json_io.hpp"
#include "vistab/oracles.hpp"
#include "vistab/vi_module.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace vistab;

namespace {

std::string g_cli;
std::string g_golden;

// All module specs with one to three generators drawn from {0,1,2,3}.
std::vector<VIModuleSpec> spec_family() {
    std::vector<VIModuleSpec> out;
    for (int a = 0; a <= 3; ++a) {
        out.emplace_back(std::vector<int>{a});
        for (int b = a; b <= 3; ++b) {
            out.emplace_back(std::vector<int>{a, b});
            for (int c = b; c <= 3; ++c)
                out.emplace_back(std::vector<int>{a, b, c});
        }
    }
    return out;
}

// ------------------------------------------------------------ criteria 1..7

bool pieri_vs_oracle(std::string& why) {
    for (int size = 0; size <= 6; ++size)
        for (const auto& lam : partitions_of(size))
            for (int r = 0; r <= 4; ++r)
                if (!pieri_oracle_check(lam, r)) {
                    why = "mismatch at lambda=" + lam.to_string() + " r=" + std::to_string(r);
                    return false;
                }
    return true;
}

bool sum_of_squares(std::string& why) {
    for (long long q : {2, 3, 4, 5})
        for (int n = 1; n <= 4; ++n)
            if (!group_order_check(n, Int(q))) {
                why = "failed at n=" + std::to_string(n) + " q=" + std::to_string(q);
                return false;
            }
    return true;
}

bool injection_bruteforce(std::string& why) {
    if (group_order(2, Int(2)) != 6 || group_order(3, Int(2)) != 168) {
        why = "|GL_2(F_2)| or |GL_3(F_2)| wrong";
        return false;
    }
    auto one = [&](int m, int n, long long p) {
        if (count_injections_bruteforce(m, n, p) != injection_count_formula(m, n, Int(p))) {
            why = "count mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                  " p=" + std::to_string(p);
            return false;
        }
        return true;
    };
    for (long long p : {2, 3})
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 4; ++n)
                if (!one(m, n, p))
                    return false;
    return one(3, 4, 2);
}

bool free_module_dims(std::string& why) {
    for (long long q : {2, 3}) {
        Int qi(q);
        for (int m = 0; m <= 3; ++m)
            for (int n = m; n <= 6; ++n) {
                VirtualRep v = free_module_level(m, n, qi);
                Int want = injection_count_formula(m, n, qi);
                if (vr_dim(v, qi) != want) {
                    why = "numeric mismatch at m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " q=" + std::to_string(q);
                    return false;
                }
                // the symbolic assembly of the same level must evaluate to the
                // same count: every summand's dimension enters as a polynomial
                if (vr_dim_symbolic(v).eval(Rat(qi)) != Rat(want)) {
                    why = "symbolic assembly mismatch at m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " q=" + std::to_string(q);
                    return false;
                }
            }
    }
    return true;
}

bool stabilization(std::string& why) {
    for (long long q : {2, 3}) {
        Int qi(q);
        for (const auto& spec : spec_family()) {
            StabilityReport rep;
            try {
                rep = stable_multiplicities(spec, qi);
            } catch (const std::exception& e) {
                why = "no onset for " + spec.to_string() + " q=" + std::to_string(q) + ": " +
                      e.what();
                return false;
            }
            if (rep.weight > spec.max_generator()) {
                why = "weight " + std::to_string(rep.weight) + " exceeds max generator for " +
                      spec.to_string();
                return false;
            }
            for (int n = rep.onset; n <= rep.onset + 5; ++n) {
                std::map<IrrepLabel, Int> seen;
                VirtualRep level = module_level(spec, n, qi);
                for (const auto& [mu, c] : level.terms())
                    seen[unpad(mu).first] = c;
                if (seen != rep.stable) {
                    why = "multiplicities drift at n=" + std::to_string(n) + " for " +
                          spec.to_string() + " q=" + std::to_string(q);
                    return false;
                }
            }
        }
    }
    return true;
}

bool dimension_polynomials(std::string& why) {
    for (long long q : {2, 3}) {
        Int qi(q);
        for (const auto& spec : spec_family()) {
            auto [p, N] = dim_polynomial_module(spec, qi);
            StabilityReport rep = stable_multiplicities(spec, qi);
            if (p.degree() > rep.weight) {
                why = "degree " + std::to_string(p.degree()) + " exceeds weight for " +
                      spec.to_string();
                return false;
            }
            for (int n = N; n <= N + 5; ++n)
                if (p.eval(Rat(int_pow(qi, n))) != Rat(vr_dim(module_level(spec, n, qi), qi))) {
                    why = "evaluation mismatch at n=" + std::to_string(n) + " for " +
                          spec.to_string() + " q=" + std::to_string(q);
                    return false;
                }
        }
        // pinned closed forms
        QPoly T = QPoly::var();
        QPoly one = QPoly::constant(1);
        QPoly want2 = (T - one) * (T - QPoly::constant(Rat(qi)));
        if (dim_polynomial_module(VIModuleSpec({2}), qi).poly != want2) {
            why = "M(2) polynomial is not (T-1)(T-q) at q=" + std::to_string(q);
            return false;
        }
    }
    if (dim_polynomial_module(VIModuleSpec({1}), Int(2)).poly != QPoly::var() - QPoly::constant(1)) {
        why = "M(1) polynomial is not T-1 at q=2";
        return false;
    }
    return true;
}

bool frobenius_shadow(std::string& why) {
    for (long long q : {2, 3}) {
        Int qi(q);
        for (int m = 0; m <= 3; ++m)
            for (const auto& nu : enumerate_irreps(m, qi))
                for (int r = 0; r <= 3; ++r) {
                    VirtualRep ind = times_trivial(VirtualRep(m, {{nu, Int(1)}}), r);
                    for (const auto& mu : enumerate_irreps(m + r, qi)) {
                        Int lhs = ind.mult(mu);
                        Int rhs = h_invariants(VirtualRep(m + r, {{mu, Int(1)}}), m).mult(nu);
                        if (lhs != rhs) {
                            why = "pairing mismatch nu=" + nu.to_string() +
                                  " mu=" + mu.to_string() + " q=" + std::to_string(q);
                            return false;
                        }
                    }
                }
    }
    return true;
}

// ------------------------------------------------------------- criterion 8

struct RunResult {
    std::string out;
    int status = -1;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = "\"" + g_cli + "\" " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, got);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool cli_goldens(std::string& why) {
    struct Case {
        std::string args;
        std::string golden;
    };
    const std::vector<Case> cases = {
        {"stabilize --gens 1 --q 2 --format json", "stabilize_1_q2.json"},
        {"enumerate --level 2 --q 2 --format json", "enumerate_2_q2.json"},
        {"decompose --gen 3 --level 2 --q 2 --format json", "decompose_3_2_q2.json"},
    };
    for (const auto& c : cases) {
        std::string want = slurp(g_golden + "/" + c.golden);
        if (want.empty()) {
            why = "cannot read golden " + c.golden;
            return false;
        }
        RunResult first = run_cli(c.args);
        if (first.status != 0) {
            why = "nonzero exit for '" + c.args + "'";
            return false;
        }
        if (first.out != want) {
            why = "output of '" + c.args + "' differs from " + c.golden;
            return false;
        }
        if (run_cli(c.args).out != first.out) {  // identical request, identical bytes
            why = "repeated '" + c.args + "' is not byte-identical";
            return false;
        }
    }
    RunResult ver = run_cli("verify");
    if (ver.status != 0) {
        why = "verify exited with status " + std::to_string(ver.status);
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <vistab-cli> <golden-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];

    struct Criterion {
        std::string name;
        double budget_s;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {"pieri rule matches the tableau oracle", 30, pieri_vs_oracle},
        {"irreducible dimensions satisfy sum of squares", 60, sum_of_squares},
        {"injection counts match brute force", 60, injection_bruteforce},
        {"free module levels have the predicted dimension", 60, free_module_dims},
        {"multiplicities stabilize and persist", 120, stabilization},
        {"dimension polynomials evaluate exactly", 60, dimension_polynomials},
        {"induction pairs with invariants", 60, frobenius_shadow},
        {"cli reproduces goldens byte-exactly", 60, cli_goldens},
    };

    bool all = true;
    int idx = 0;
    for (const auto& c : criteria) {
        ++idx;
        std::string why;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.fn(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > c.budget_s) {
            ok = false;
            why = "exceeded budget of " + std::to_string((int)c.budget_s) + "s";
        }
        std::printf("[%s] %d. %-48s (%.1fs)\n", ok ? "PASS" : "FAIL", idx, c.name.c_str(), secs);
        if (!ok && !why.empty())
            std::printf("       %s\n", why.c_str());
        all = all && ok;
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILED");
    return all ? 0 : 1;
}
