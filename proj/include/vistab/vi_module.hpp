#pragma once

#include "vistab/irreps.hpp"
#include "vistab/qpoly.hpp"
#include "vistab/rational.hpp"
#include "vistab/virtual_rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vistab {

// A finite direct sum of free VI-modules M(m_1) + ... + M(m_d), recorded by
// its multiset of generator degrees. The empty spec is the zero module.
struct VIModuleSpec {
    std::vector<int> generators;  // sorted ascending

    VIModuleSpec() = default;

    explicit VIModuleSpec(std::vector<int> gens) : generators(std::move(gens)) {
        for (int g : generators)
            if (g < 0)
                throw std::invalid_argument("VIModuleSpec: negative generator degree");
        std::sort(generators.begin(), generators.end());
    }

    bool is_zero_module() const { return generators.empty(); }
    int max_generator() const { return generators.empty() ? 0 : generators.back(); }

    bool operator==(const VIModuleSpec& o) const { return generators == o.generators; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(generators[i]);
        }
        return s + "}";
    }
};

// Everything the stabilization analysis produces for one module and one q:
// the stable multiplicities c(lambda), the onset level N from which they are
// in force, the weight (largest stable-label norm), and the polynomial P
// with dim V_n = P(q^n) for large n.
struct StabilityReport {
    Int q;
    std::vector<int> generators;
    int onset = 0;
    int weight = 0;
    std::map<IrrepLabel, Int> stable;
    QPoly dim_poly;  // in T, evaluated at T = q^n

    bool operator==(const StabilityReport& o) const {
        return q == o.q && generators == o.generators && onset == o.onset &&
               weight == o.weight && stable == o.stable && dim_poly == o.dim_poly;
    }
};

// Number of injective linear maps F_q^m -> F_q^n: prod_{i<m} (q^n - q^i).
// The i = n factor vanishes when n < m, making the product 0 there, as it
// should be.
inline Int injection_count_formula(int m, int n, const Int& q) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("injection_count_formula: negative dimensions");
    Int r = 1;
    Int qn = int_pow(q, n);
    for (int i = 0; i < m; ++i)
        r *= qn - int_pow(q, i);
    return r;
}

// The regular representation of GL_m(F_q): every irreducible with
// multiplicity equal to its dimension.
inline VirtualRep regular_rep(int m, const Int& q) {
    VirtualRep v(m);
    for (const auto& nu : enumerate_irreps(m, q))
        v.add_term(nu, dim_at(nu, q));
    return v;
}

// Level n of the free module M(m): zero below m, and the regular
// representation of GL_m induced up with trivial complement above.
inline VirtualRep free_module_level(int m, int n, const Int& q) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("free_module_level: negative arguments");
    if (n < m)
        return VirtualRep(n);
    return times_trivial(regular_rep(m, q), n - m);
}

// Level n of a direct sum of free modules.
inline VirtualRep module_level(const VIModuleSpec& spec, int n, const Int& q) {
    VirtualRep v(n);
    for (int m : spec.generators)
        v = vr_add(v, free_module_level(m, n, q));
    return v;
}

namespace detail {

// The multiplicity map at one level, keyed by stable (unpadded) labels.
inline std::map<IrrepLabel, Int> unpadded_multiplicities(const VirtualRep& v) {
    std::map<IrrepLabel, Int> out;
    for (const auto& [mu, c] : v.terms())
        out[unpad(mu).first] = c;  // unpad is injective at fixed norm
    return out;
}

// Is lam(iota) reachable from nu(iota) by removing a horizontal strip, i.e.
// nu_1 >= lam_1 >= nu_2 >= lam_2 >= ... ?
inline bool iota_interlaces(const Partition& nu, const Partition& lam) {
    int rows = std::max(nu.rows(), lam.rows());
    for (int i = 1; i <= rows; ++i) {
        if (nu.part(i) < lam.part(i))
            return false;
        if (i > 1 && lam.part(i - 1) < nu.part(i))
            return false;
    }
    return true;
}

// The stable limit of the Pieri condition: c(lambda) as a finite sum of
// dimensions over labels nu of generator norm that agree with lambda away
// from iota and whose iota-parts interlace lambda's.
inline std::map<IrrepLabel, Int> closed_form_multiplicities(const VIModuleSpec& spec,
                                                            const Int& q) {
    const CuspidalSymbol io = CuspidalSymbol::iota();
    std::map<IrrepLabel, Int> out;
    for (int m : spec.generators) {
        for (const auto& nu : enumerate_irreps(m, q)) {
            Int d = dim_at(nu, q);
            Partition nio = nu.component(io);
            // Every stable label lambda covered by nu: same non-iota part,
            // iota-part any horizontal-strip shrink of nu's.
            for (int r = 0; r <= nio.size(); ++r)
                for (const auto& lio : remove_horizontal_strip(nio, r))
                    out[nu.with_component(io, lio)] += d;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

// Dimension polynomial of the single stable label lambda: P in Q[T] with
// dim phi(pad(lambda, n)) = P(q^n) for every n >= N = norm + first iota row.
//
// How: at any such n, the first-row hooks of the padded iota-partition are
// {n - r : r in R} together with {1, ..., n - N} for a fixed R determined at
// n = N; dividing them out of Phi_n leaves prod_{s in S} (q^{n-s} - 1) with
// S the complement of R in {0..N-1}, times an n-independent constant. The
// constant is recovered by one exact evaluation at n = N.
struct DimPolyResult {
    QPoly poly;  // in T
    int onset;   // N
};

inline DimPolyResult dim_polynomial_irrep(const IrrepLabel& lam, const Int& q) {
    if (q < 2)
        throw std::invalid_argument("dim_polynomial_irrep: q must be >= 2");
    const CuspidalSymbol io = CuspidalSymbol::iota();
    int m = lam.norm();
    int N = m + lam.component(io).first();

    // First-row hook lengths of the iota-part padded at level N.
    Partition padded = pad(lam, N).component(io);
    std::vector<bool> in_R(N, false);
    for (int j = 1; j <= padded.first(); ++j) {
        int leg = 0;
        for (int i = 2; i <= padded.rows(); ++i)
            if (padded.part(i) >= j)
                ++leg;
        int hook = (padded.first() - j) + leg + 1;
        in_R[N - hook] = true;  // hooks are distinct and lie in 1..N
    }
    std::vector<int> S;
    for (int s = 0; s < N; ++s)
        if (!in_R[s])
            S.push_back(s);

    // P(T) = c * prod_{s in S} (q^{-s} T - 1), with c fixed by the value at N.
    Rat c(dim_at(pad(lam, N), q));
    for (int s : S)
        c /= Rat(int_pow(q, N - s) - 1);
    QPoly p = QPoly::constant(c);
    for (int s : S)
        p = p * (QPoly::monomial(1, Rat(1) / Rat(int_pow(q, s))) - QPoly::constant(1));
    return {p, N};
}

// Stable multiplicities of a free direct sum, found empirically: walk levels
// upward from 2*max+1, unpad each level's decomposition, and declare the
// onset at the first level whose multiplicity map equals the next one. The
// independent closed form must agree exactly, or the whole computation is
// declared buggy.
inline StabilityReport stable_multiplicities(const VIModuleSpec& spec, const Int& q) {
    if (q < 2)
        throw std::invalid_argument("stable_multiplicities: q must be >= 2");
    StabilityReport rep;
    rep.q = q;
    rep.generators = spec.generators;

    if (spec.is_zero_module())
        return rep;  // onset 0, weight 0, no labels, zero polynomial

    int start = 2 * spec.max_generator() + 1;
    int give_up = 3 * spec.max_generator() + 4;
    std::map<IrrepLabel, Int> at_n = detail::unpadded_multiplicities(module_level(spec, start, q));
    int n = start;
    for (;; ++n) {
        if (n > give_up)
            throw std::runtime_error("stable_multiplicities: no stabilization by level " +
                                     std::to_string(give_up) + " for " + spec.to_string() +
                                     "; this indicates a bug");
        auto at_next = detail::unpadded_multiplicities(module_level(spec, n + 1, q));
        if (at_n == at_next)
            break;
        at_n = std::move(at_next);
    }
    rep.onset = n;
    rep.stable = std::move(at_n);

    if (rep.stable != detail::closed_form_multiplicities(spec, q))
        throw std::logic_error("stable_multiplicities: empirical and closed-form multiplicities "
                               "disagree for " + spec.to_string() + "; this indicates a bug");

    for (const auto& [lam, c] : rep.stable) {
        if (c < 0)
            throw std::logic_error("stable_multiplicities: negative multiplicity for " +
                                   lam.to_string() + "; this indicates a bug");
        rep.weight = std::max(rep.weight, lam.norm());
    }

    for (const auto& [lam, c] : rep.stable)
        rep.dim_poly += dim_polynomial_irrep(lam, q).poly * Rat(c);
    return rep;
}

// Dimension polynomial of the whole module: P = sum of c(lambda) * P_lambda,
// valid from the larger of the stabilization onset and the per-label onsets
// (in practice the former, since stabilization requires every pad to exist).
inline DimPolyResult dim_polynomial_module(const VIModuleSpec& spec, const Int& q) {
    StabilityReport rep = stable_multiplicities(spec, q);
    int N = rep.onset;
    for (const auto& [lam, c] : rep.stable)
        N = std::max(N, dim_polynomial_irrep(lam, q).onset);
    return {rep.dim_poly, N};
}

}  // namespace vistab
