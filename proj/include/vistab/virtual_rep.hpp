#pragma once

#include "vistab/irreps.hpp"
#include "vistab/qpoly.hpp"
#include "vistab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace vistab {

// Formal integer combination of irreducible labels at one fixed level n: an
// element of the Grothendieck group R(G_n). Multiplicities may be negative;
// honest decompositions are nonnegative, and tests treat that as a checkable
// property rather than a type constraint.
class VirtualRep {
  public:
    using Terms = std::map<IrrepLabel, Int>;

    explicit VirtualRep(int level) : level_(level) {
        if (level < 0)
            throw std::invalid_argument("VirtualRep: level must be >= 0");
    }

    VirtualRep(int level, Terms terms) : VirtualRep(level) {
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->first.norm() != level_)
                throw std::invalid_argument("VirtualRep: label " + it->first.to_string() +
                                            " has norm != level " + std::to_string(level_));
            it = it->second == 0 ? terms.erase(it) : std::next(it);
        }
        terms_ = std::move(terms);
    }

    int level() const { return level_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int mult(const IrrepLabel& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const IrrepLabel& mu, const Int& c) {
        if (mu.norm() != level_)
            throw std::invalid_argument("VirtualRep::add_term: label " + mu.to_string() +
                                        " has norm != level " + std::to_string(level_));
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(mu, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool operator==(const VirtualRep& o) const {
        return level_ == o.level_ && terms_ == o.terms_;
    }
    bool operator!=(const VirtualRep& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [mu, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += c.str() + "*" + mu.to_string();
        }
        return s;
    }

  private:
    int level_;
    Terms terms_;
};

inline VirtualRep vr_add(const VirtualRep& a, const VirtualRep& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("vr_add: level mismatch " + std::to_string(a.level()) +
                                    " vs " + std::to_string(b.level()));
    VirtualRep r = a;
    for (const auto& [mu, c] : b.terms())
        r.add_term(mu, c);
    return r;
}

inline VirtualRep vr_scale(const VirtualRep& a, const Int& c) {
    VirtualRep r(a.level());
    if (c != 0)
        for (const auto& [mu, m] : a.terms())
            r.add_term(mu, m * c);
    return r;
}

// Pieri induction: phi(nu) x iota_r decomposes as the sum of phi(mu) over mu
// whose iota-part extends nu's by a horizontal r-strip and which agree with
// nu elsewhere. Extended linearly; raises the level from m to m + r.
inline VirtualRep times_trivial(const VirtualRep& v, int r) {
    if (r < 0)
        throw std::invalid_argument("times_trivial: r must be >= 0");
    VirtualRep out(v.level() + r);
    const CuspidalSymbol io = CuspidalSymbol::iota();
    for (const auto& [nu, c] : v.terms())
        for (const auto& grown : add_horizontal_strip(nu.component(io), r))
            out.add_term(nu.with_component(io, grown), c);
    return out;
}

// Restriction to level m by strip removal, the dual of times_trivial: each
// phi(mu) contributes phi(lambda) for every removal of a horizontal
// (n-m)-strip from mu's iota-part, other components untouched. Labels whose
// non-iota norm exceeds m drop out on their own (their iota-part is too
// short to shed the strip).
inline VirtualRep h_invariants(const VirtualRep& v, int m) {
    if (m > v.level())
        throw std::invalid_argument("h_invariants: target level " + std::to_string(m) +
                                    " exceeds level " + std::to_string(v.level()));
    int r = v.level() - m;
    VirtualRep out(m);
    const CuspidalSymbol io = CuspidalSymbol::iota();
    for (const auto& [mu, c] : v.terms())
        for (const auto& shrunk : remove_horizontal_strip(mu.component(io), r))
            out.add_term(mu.with_component(io, shrunk), c);
    return out;
}

// Total dimension, exactly, at a concrete q.
inline Int vr_dim(const VirtualRep& v, const Int& q) {
    Int d = 0;
    for (const auto& [mu, c] : v.terms())
        d += c * dim_at(mu, q);
    return d;
}

// Total dimension as a polynomial in q (fixed cuspidal alphabet).
inline QPoly vr_dim_symbolic(const VirtualRep& v) {
    QPoly d;
    for (const auto& [mu, c] : v.terms())
        d += dim_symbolic(mu) * Rat(c);
    return d;
}

}  // namespace vistab
