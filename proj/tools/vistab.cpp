// vistab: decompositions, stable multiplicities, and dimension polynomials
// for sequences of GL_n(F_q)-representations coming from free VI-modules.
//
// Subcommands: decompose, stabilize, dimpoly, enumerate, verify.
// Exit status is 0 exactly when every internal cross-check passed.

#include "vistab/json_io.hpp"
#include "vistab/oracles.hpp"
#include "vistab/vi_module.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace vistab;

namespace {

// ---------------------------------------------------------------- plumbing

struct Horizons {
    int max_level = 6;  // overridable via VISTAB_MAX_LEVEL
    int max_generator = 3;
    long long max_q = 5;
};

Horizons load_horizons() {
    Horizons h;
    if (const char* env = std::getenv("VISTAB_MAX_LEVEL")) {
        try {
            int v = std::stoi(env);
            if (v < 0)
                throw std::invalid_argument("negative");
            h.max_level = v;
        } catch (const std::exception&) {
            throw CLI::ValidationError("VISTAB_MAX_LEVEL", std::string("cannot parse '") + env +
                                       "' as a nonnegative integer");
        }
    }
    return h;
}

std::string pad_right(const std::string& s, std::size_t w, char fill = ' ') {
    return s.size() >= w ? s : s + std::string(w - s.size(), fill);
}

std::string pad_left(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

// Human name of a module spec: "M(1) + M(2)", or "0" for the zero module.
std::string module_name(const VIModuleSpec& spec) {
    if (spec.is_zero_module())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (i)
            s += " + ";
        s += "M(" + std::to_string(spec.generators[i]) + ")";
    }
    return s;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw CLI::ValidationError("--output", "cannot open '" + path + "' for writing");
    f << text;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// A two-or-three column table with a header row, two-space indent,
// left-aligned first column and right-aligned rest.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty())
        return "";
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            w[i] = std::max(w[i], r[i].size());
    std::string out;
    for (const auto& r : rows) {
        out += " ";
        for (std::size_t i = 0; i < r.size(); ++i) {
            out += " ";
            out += i == 0 ? pad_right(r[i], w[i]) : pad_left(r[i], w[i]);
        }
        out += "\n";
    }
    return out;
}

// ------------------------------------------------------------- subcommands

struct Request {
    long long q = 2;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, Request& req) {
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", req.output, "write the report to this file instead of stdout");
}

void add_q(CLI::App* cmd, Request& req, const Horizons& hz) {
    cmd->add_option("--q", req.q, "prime power, the field size")
        ->required()
        ->check(CLI::Range(2LL, hz.max_q));
}

int run_decompose(const Request& req, int gen, int level) {
    Int q(req.q);
    VirtualRep v = free_module_level(gen, level, q);
    Int total = vr_dim(v, q);
    Int expected = injection_count_formula(gen, level, q);
    bool pass = total == expected;

    if (req.format == "json") {
        json j{{"q", req.q},
               {"generator", gen},
               {"level", level},
               {"decomposition", vr_to_json(v)},
               {"total_dim", total.str()},
               {"injection_count", expected.str()},
               {"check", pass ? "PASS" : "FAIL"}};
        if (level < gen)
            j["note"] = "M(" + std::to_string(gen) + ") vanishes below level " +
                        std::to_string(gen);
        emit(render_json(j), req.output);
        return pass ? 0 : 1;
    }

    std::string out = "M(" + std::to_string(gen) + ")_" + std::to_string(level) +
                      " over F_" + std::to_string(req.q) + ": decomposition into irreducibles\n\n";
    if (level < gen) {
        out += "  M(" + std::to_string(gen) + ") vanishes below level " + std::to_string(gen) +
               "; the module is zero here\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"label", "mult", "dim"}};
        for (const auto& [mu, c] : v.terms())
            rows.push_back({mu.to_string(), c.str(), dim_at(mu, q).str()});
        out += render_table(rows);
    }
    out += "\n  total dimension: " + total.str() + "\n  injection count: " + expected.str() +
           "\n" + (pass ? "PASS" : "FAIL") + "\n";
    emit(out, req.output);
    return pass ? 0 : 1;
}

int run_enumerate(const Request& req, int level) {
    Int q(req.q);
    auto irreps = enumerate_irreps(level, q);
    Int sum = 0;
    std::vector<std::pair<IrrepLabel, Int>> dims;
    for (const auto& mu : irreps) {
        Int d = dim_at(mu, q);
        dims.emplace_back(mu, d);
        sum += d * d;
    }
    Int order = group_order(level, q);
    bool pass = sum == order;

    if (req.format == "json") {
        json list = json::array();
        for (const auto& [mu, d] : dims)
            list.push_back({{"label", label_to_json(mu)}, {"dim", d.str()}});
        emit(render_json(json{{"q", req.q},
                              {"level", level},
                              {"irreps", list},
                              {"sum_of_squares", sum.str()},
                              {"group_order", order.str()},
                              {"check", pass ? "PASS" : "FAIL"}}),
             req.output);
        return pass ? 0 : 1;
    }

    std::string out = "irreducibles of GL_" + std::to_string(level) + "(F_" +
                      std::to_string(req.q) + ")\n\n";
    std::vector<std::vector<std::string>> rows{{"label", "dim"}};
    for (const auto& [mu, d] : dims)
        rows.push_back({mu.to_string(), d.str()});
    out += render_table(rows);
    out += "\n  count:          " + std::to_string(dims.size()) + "\n";
    out += "  sum of squares: " + sum.str() + "\n";
    out += "  group order:    " + order.str() + "\n";
    out += std::string(pass ? "PASS" : "FAIL") + "\n";
    emit(out, req.output);
    return pass ? 0 : 1;
}

int run_stabilize(const Request& req, const std::vector<int>& gens) {
    Int q(req.q);
    VIModuleSpec spec(gens);
    StabilityReport rep = stable_multiplicities(spec, q);

    if (req.format == "json") {
        emit(render_json(report_to_json(rep)), req.output);
        return 0;  // stable_multiplicities cross-checks internally and throws on failure
    }

    std::string out = "stable decomposition of " + module_name(spec) + " over F_" +
                      std::to_string(req.q) + "\n\n";
    out += "  onset:  " + std::to_string(rep.onset) + "\n";
    out += "  weight: " + std::to_string(rep.weight) + "\n\n";
    std::vector<std::vector<std::string>> rows{{"stable label", "mult"}};
    for (const auto& [lam, c] : rep.stable)
        rows.push_back({lam.to_string(), c.str()});
    out += render_table(rows);
    out += "\n  P(T) = " + rep.dim_poly.to_string("T") + "   (dim V_n = P(" +
           std::to_string(req.q) + "^n) for n >= " + std::to_string(rep.onset) + ")\n";
    out += "PASS\n";
    emit(out, req.output);
    return 0;
}

int run_dimpoly(const Request& req, const std::vector<int>& gens, const std::string& label_text,
                const Horizons& hz) {
    Int q(req.q);
    QPoly p;
    int onset = 0;
    std::string subject;
    json subject_json;
    bool single = !label_text.empty();
    IrrepLabel lam;
    VIModuleSpec spec;

    if (single) {
        lam = label_from_json(json::parse(label_text));
        if (lam.norm() > hz.max_level)
            throw CLI::ValidationError("--label", "norm exceeds the level horizon " +
                                                      std::to_string(hz.max_level));
        DimPolyResult r = dim_polynomial_irrep(lam, q);
        p = r.poly;
        onset = r.onset;
        subject = "stable label " + lam.to_string();
        subject_json = label_to_json(lam);
    } else {
        spec = VIModuleSpec(gens);
        DimPolyResult r = dim_polynomial_module(spec, q);
        p = r.poly;
        onset = r.onset;
        subject = module_name(spec);
        subject_json = spec.generators;
    }

    // Six consecutive levels: the polynomial against the direct dimension.
    bool pass = true;
    std::vector<std::vector<std::string>> rows{{"n", "P(q^n)", "direct"}};
    for (int n = onset; n <= onset + 5; ++n) {
        Rat pv = p.eval(Rat(int_pow(q, n)));
        Int direct = single ? dim_at(pad(lam, n), q) : vr_dim(module_level(spec, n, q), q);
        pass = pass && pv == Rat(direct);
        rows.push_back({std::to_string(n), rat_to_string(pv), direct.str()});
    }

    if (req.format == "json") {
        json table = json::array();
        for (std::size_t i = 1; i < rows.size(); ++i)
            table.push_back({{"n", std::stoi(rows[i][0])},
                             {"poly_value", rows[i][1]},
                             {"direct_dim", rows[i][2]}});
        json j{{"q", req.q},
               {"dim_poly_T", qpoly_to_json(p)},
               {"onset", onset},
               {"table", table},
               {"check", pass ? "PASS" : "FAIL"}};
        j[single ? "label" : "generators"] = subject_json;
        emit(render_json(j), req.output);
        return pass ? 0 : 1;
    }

    std::string out = "dimension polynomial of " + subject + " over F_" +
                      std::to_string(req.q) + "\n\n";
    out += "  P(T) = " + p.to_string("T") + "\n";
    out += "  valid for n >= " + std::to_string(onset) + "\n\n";
    out += render_table(rows);
    out += std::string(pass ? "PASS" : "FAIL") + "\n";
    emit(out, req.output);
    return pass ? 0 : 1;
}

// The oracle suite behind `verify`. Each entry is independent; --deep raises
// the level-like bounds. All checks are exact.
int run_verify(const Request& req, bool deep, const Horizons& hz) {
    const int n_cap = deep ? 2 * hz.max_level : hz.max_level;
    std::vector<std::pair<std::string, bool>> checks;

    {
        bool ok = true;
        int size_cap = deep ? 6 : 5;
        for (int a = 0; a <= size_cap && ok; ++a)
            for (const auto& lamb : partitions_of(a))
                for (int r = 0; r <= 4; ++r)
                    ok = ok && pieri_oracle_check(lamb, r);
        checks.emplace_back("pieri rule vs tableau oracle", ok);
    }
    {
        bool ok = true;
        for (long long qq = 2; qq <= hz.max_q; ++qq)
            for (int n = 0; n <= 4 && ok; ++n)
                ok = ok && group_order_check(n, Int(qq));
        checks.emplace_back("classification sum of squares", ok);
    }
    {
        bool ok = true;
        for (long long pp : {2LL, 3LL})
            for (int m = 0; m <= 2 && ok; ++m)
                for (int n = 0; n <= 4; ++n)
                    ok = ok && count_injections_bruteforce(m, n, pp) ==
                                   injection_count_formula(m, n, pp);
        ok = ok && count_injections_bruteforce(3, 4, 2) == injection_count_formula(3, 4, 2);
        checks.emplace_back("brute-force injection counts", ok);
    }
    {
        bool ok = true;
        for (Int qq : {2, 3})
            for (int m = 0; m <= hz.max_generator && ok; ++m)
                for (int n = m; n <= n_cap; ++n)
                    ok = ok && vr_dim(free_module_level(m, n, qq), qq) ==
                                   injection_count_formula(m, n, qq);
        checks.emplace_back("free module dimension identity", ok);
    }
    std::vector<VIModuleSpec> family;
    {
        std::vector<std::vector<int>> gens = {{0}, {1}, {2}, {3}, {1, 2}, {2, 3}};
        if (deep)
            gens.insert(gens.end(), {{0, 1}, {1, 1}, {3, 3}, {0, 1, 2}, {1, 2, 3}, {3, 3, 3}});
        for (auto& g : gens)
            family.emplace_back(g);
    }
    {
        bool ok = true;
        for (Int qq : {2, 3}) {
            for (const auto& spec : family) {
                StabilityReport rep = stable_multiplicities(spec, qq);
                ok = ok && rep.weight <= spec.max_generator();
                for (int n = rep.onset; n <= rep.onset + 5 && ok; ++n) {
                    auto level = module_level(spec, n, qq);
                    std::map<IrrepLabel, Int> seen;
                    for (const auto& [mu, c] : level.terms())
                        seen[unpad(mu).first] = c;
                    ok = ok && seen == rep.stable;
                }
            }
        }
        checks.emplace_back("stabilization and persistence", ok);
    }
    {
        bool ok = true;
        for (Int qq : {2, 3}) {
            for (const auto& spec : family) {
                auto [p, N] = dim_polynomial_module(spec, qq);
                StabilityReport rep = stable_multiplicities(spec, qq);
                ok = ok && p.degree() <= rep.weight;
                for (int n = N; n <= N + 5 && ok; ++n)
                    ok = ok && p.eval(Rat(int_pow(qq, n))) ==
                                   Rat(vr_dim(module_level(spec, n, qq), qq));
            }
        }
        checks.emplace_back("dimension polynomial identity", ok);
    }
    {
        bool ok = true;
        int cap = deep ? 3 : 2;
        for (Int qq : {2, 3}) {
            for (int m = 0; m <= cap && ok; ++m) {
                for (const auto& nu : enumerate_irreps(m, qq)) {
                    for (int r = 0; r <= cap; ++r) {
                        VirtualRep ind = times_trivial(VirtualRep(m, {{nu, Int(1)}}), r);
                        for (const auto& mu : enumerate_irreps(m + r, qq))
                            ok = ok && ind.mult(mu) ==
                                           h_invariants(VirtualRep(m + r, {{mu, Int(1)}}), m)
                                               .mult(nu);
                    }
                }
            }
        }
        checks.emplace_back("frobenius reciprocity shadow", ok);
    }

    bool all = true;
    for (const auto& [name, ok] : checks)
        all = all && ok;

    if (req.format == "json") {
        json list = json::array();
        for (const auto& [name, ok] : checks)
            list.push_back({{"name", name}, {"pass", ok}});
        emit(render_json(json{{"deep", deep}, {"checks", list}, {"pass", all}}), req.output);
        return all ? 0 : 1;
    }

    std::string out = std::string("verification suite (") + (deep ? "deep" : "default") +
                      " horizons)\n\n";
    for (const auto& [name, ok] : checks)
        out += "  " + pad_right(name + " ", 44, '.') + (ok ? " PASS" : " FAIL") + "\n";
    out += std::string(all ? "PASS" : "FAIL") + "\n";
    emit(out, req.output);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decompositions and stability reports for free VI-modules over F_q"};
    app.require_subcommand(1);

    Horizons hz;
    try {
        hz = load_horizons();
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }

    Request req;
    int gen = 0, level = 0;
    std::vector<int> gens;
    std::string label_text;
    bool deep = false;

    auto* dec = app.add_subcommand("decompose",
                                   "decompose one level of a free module into irreducibles");
    add_common(dec, req);
    add_q(dec, req, hz);
    dec->add_option("--gen", gen, "generator degree m of the free module M(m)")
        ->required()
        ->check(CLI::Range(0, hz.max_generator));
    dec->add_option("--level", level, "level n of the sequence")
        ->required()
        ->check(CLI::Range(0, hz.max_level));

    auto* stab = app.add_subcommand("stabilize",
                                    "stable multiplicities and dimension polynomial of a module");
    add_common(stab, req);
    add_q(stab, req, hz);
    stab->add_option("--gens", gens, "generator degrees, comma separated (e.g. 1,2)")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(0, hz.max_generator));

    auto* dimp = app.add_subcommand("dimpoly", "dimension polynomial with an evaluation table");
    add_common(dimp, req);
    add_q(dimp, req, hz);
    auto* dimp_gens = dimp->add_option("--gens", gens, "generator degrees, comma separated")
                          ->delimiter(',')
                          ->check(CLI::Range(0, hz.max_generator));
    auto* dimp_label =
        dimp->add_option("--label", label_text,
                         R"(single stable label as JSON, e.g. {"iota":[1]})");
    dimp_gens->excludes(dimp_label);
    dimp_label->excludes(dimp_gens);

    auto* enu = app.add_subcommand("enumerate", "all irreducible labels at one level");
    add_common(enu, req);
    add_q(enu, req, hz);
    enu->add_option("--level", level, "level n")
        ->required()
        ->check(CLI::Range(0, hz.max_level));

    auto* ver = app.add_subcommand("verify", "run the oracle suite");
    add_common(ver, req);
    ver->add_flag("--deep", deep, "raise horizons (roughly doubles levels)");

    app.footer("Horizons: level <= " + std::to_string(hz.max_level) + " (override with " +
               "VISTAB_MAX_LEVEL), generator degree <= " + std::to_string(hz.max_generator) +
               ", 2 <= q <= " + std::to_string(hz.max_q) + ".");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed())
            return run_decompose(req, gen, level);
        if (stab->parsed())
            return run_stabilize(req, gens);
        if (dimp->parsed()) {
            if (gens.empty() && label_text.empty())
                throw CLI::RequiredError("dimpoly: one of --gens / --label");
            return run_dimpoly(req, gens, label_text, hz);
        }
        if (enu->parsed())
            return run_enumerate(req, level);
        if (ver->parsed())
            return run_verify(req, deep, hz);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;  // unreachable: a subcommand is required
}
