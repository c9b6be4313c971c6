#pragma once

#include "vistab/partition.hpp"
#include "vistab/qpoly.hpp"
#include "vistab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vistab {

// Abstract label for a cuspidal irreducible of GL_d(F_q): its degree d and an
// ordinal index within the degree class. Nothing about the representation
// itself is ever materialized; the dimension formula only consumes d.
// The symbol (1,0) is reserved for iota, the trivial character of GL_1.
struct CuspidalSymbol {
    int degree = 1;
    long long index = 0;

    CuspidalSymbol() = default;
    CuspidalSymbol(int d, long long i) : degree(d), index(i) {
        if (d < 1 || i < 0)
            throw std::invalid_argument("CuspidalSymbol: need degree >= 1, index >= 0");
    }

    static CuspidalSymbol iota() { return CuspidalSymbol(1, 0); }
    bool is_iota() const { return degree == 1 && index == 0; }

    bool operator==(const CuspidalSymbol& o) const {
        return degree == o.degree && index == o.index;
    }
    bool operator!=(const CuspidalSymbol& o) const { return !(*this == o); }
    bool operator<(const CuspidalSymbol& o) const {
        return degree != o.degree ? degree < o.degree : index < o.index;
    }

    std::string to_string() const {
        if (is_iota())
            return "iota";
        return "c(" + std::to_string(degree) + "," + std::to_string(index) + ")";
    }

    static CuspidalSymbol parse(const std::string& s) {
        if (s == "iota")
            return iota();
        if (s.size() >= 6 && s.compare(0, 2, "c(") == 0 && s.back() == ')') {
            std::size_t comma = s.find(',', 2);
            if (comma != std::string::npos) {
                try {
                    int d = std::stoi(s.substr(2, comma - 2));
                    long long i = std::stoll(s.substr(comma + 1, s.size() - comma - 2));
                    return CuspidalSymbol(d, i);
                } catch (const std::invalid_argument&) {
                } catch (const std::out_of_range&) {
                }
            }
        }
        throw std::invalid_argument("CuspidalSymbol::parse: expected \"iota\" or \"c(d,i)\", got '" + s + "'");
    }
};

// Finitely supported map CuspidalSymbol -> Partition; the label of an
// irreducible of GL_n(F_q) where n is the norm. A symbol carrying the empty
// partition is simply absent from the support.
class IrrepLabel {
  public:
    using Support = std::map<CuspidalSymbol, Partition>;

    IrrepLabel() = default;

    explicit IrrepLabel(Support support) : support_(std::move(support)) {
        for (auto it = support_.begin(); it != support_.end();)
            it = it->second.empty() ? support_.erase(it) : std::next(it);
    }

    const Support& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    // The partition attached to sym; empty partition when absent.
    Partition component(const CuspidalSymbol& sym) const {
        auto it = support_.find(sym);
        return it == support_.end() ? Partition() : it->second;
    }

    // Copy with sym's partition replaced; an empty partition removes sym.
    IrrepLabel with_component(const CuspidalSymbol& sym, const Partition& p) const {
        IrrepLabel r = *this;
        if (p.empty())
            r.support_.erase(sym);
        else
            r.support_[sym] = p;
        return r;
    }

    // norm = sum of degree(rho) * |mu(rho)|; the level n of the group.
    int norm() const {
        int n = 0;
        for (const auto& [sym, part] : support_)
            n += sym.degree * part.size();
        return n;
    }

    bool operator==(const IrrepLabel& o) const { return support_ == o.support_; }
    bool operator!=(const IrrepLabel& o) const { return support_ != o.support_; }

    // Canonical ordering: walk the sorted supports in parallel; earlier
    // symbol first, and at equal symbols the lexicographically larger
    // partition first ([2] precedes [1,1], matching the strip ordering).
    bool operator<(const IrrepLabel& o) const {
        auto a = support_.begin(), b = o.support_.begin();
        for (; a != support_.end() && b != o.support_.end(); ++a, ++b) {
            if (a->first != b->first)
                return a->first < b->first;
            if (a->second != b->second)
                return a->second > b->second;
        }
        return a == support_.end() && b != o.support_.end();
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [sym, part] : support_) {
            if (!first)
                s += ", ";
            first = false;
            s += sym.to_string() + ":" + part.to_string();
        }
        return s + "}";
    }

  private:
    Support support_;
};

namespace detail {

inline int moebius(int m) {
    int primes = 0;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            ++primes;
        }
    }
    if (m > 1)
        ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Number of cuspidal irreducibles of GL_d(F_q): the necklace-style count
// (1/d) * sum over e | d of moebius(d/e) * (q^e - 1).
inline Int cuspidal_count(int d, const Int& q) {
    if (d < 1)
        throw std::invalid_argument("cuspidal_count: degree must be >= 1");
    if (q < 2)
        throw std::invalid_argument("cuspidal_count: q must be >= 2");
    Int sum = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0)
            sum += detail::moebius(d / e) * (int_pow(q, e) - 1);
    return sum / d;
}

// |GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1}^{n} (q^i - 1)
inline Int group_order(int n, const Int& q) {
    if (n < 0)
        throw std::invalid_argument("group_order: n must be >= 0");
    Int r = int_pow(q, static_cast<long long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        r *= int_pow(q, i) - 1;
    return r;
}

// lambda[n]: prepend n - norm(lambda) to the iota-component. Defined exactly
// when n >= norm + first row of lambda(iota), so the result is a partition.
inline IrrepLabel pad(const IrrepLabel& lam, int n) {
    int m = lam.norm();
    Partition io = lam.component(CuspidalSymbol::iota());
    if (n < m + io.first())
        throw std::invalid_argument("pad: level " + std::to_string(n) + " < " +
                                    std::to_string(m + io.first()) + ", the padding threshold of " +
                                    lam.to_string());
    std::vector<int> parts;
    parts.push_back(n - m);
    for (int p : io.parts())
        parts.push_back(p);
    return lam.with_component(CuspidalSymbol::iota(), Partition(std::move(parts)));
}

// Inverse of pad: strip the first iota row. Returns (lambda, n) with
// pad(lambda, n) == mu and n == norm(mu).
inline std::pair<IrrepLabel, int> unpad(const IrrepLabel& mu) {
    Partition io = mu.component(CuspidalSymbol::iota());
    std::vector<int> rest(io.parts().begin() + (io.empty() ? 0 : 1), io.parts().end());
    return {mu.with_component(CuspidalSymbol::iota(), Partition(std::move(rest))), mu.norm()};
}

// dim phi(mu) as a polynomial in q: Phi_n(q) * prod_rho Psi_{mu(rho)}(q^{d(rho)}).
// The product is assembled as a rational function; that it reduces to a
// polynomial is itself a checked fact.
inline QPoly dim_symbolic(const IrrepLabel& mu) {
    QRatFunc acc{phi(mu.norm())};
    for (const auto& [sym, part] : mu.support())
        acc = acc * psi(part).substitute_power(sym.degree);
    return acc.as_polynomial();
}

// Same dimension evaluated exactly at an integer q >= 2.
inline Int dim_at(const IrrepLabel& mu, const Int& q) {
    if (q < 2)
        throw std::invalid_argument("dim_at: q must be >= 2");
    Rat acc = 1;
    for (int i = 1; i <= mu.norm(); ++i)
        acc *= Rat(int_pow(q, i) - 1);
    for (const auto& [sym, part] : mu.support()) {
        Int qd = int_pow(q, sym.degree);
        acc *= Rat(int_pow(qd, part.epsilon()));
        for (int h : part.hook_lengths())
            acc /= Rat(int_pow(qd, h) - 1);
    }
    return rat_to_int(acc);
}

namespace detail {

// Enumeration walks the cuspidal alphabet in (degree, index) order and hands
// each chosen symbol a nonempty partition; a label is reached along exactly
// one path, so no deduplication is needed. Cost is proportional to output.
inline void enum_labels_rec(const std::vector<std::pair<int, long long>>& classes,
                            std::size_t cls, long long min_index, int rem,
                            IrrepLabel::Support& acc, std::vector<IrrepLabel>& out) {
    if (rem == 0) {
        out.push_back(IrrepLabel(acc));
        return;
    }
    for (std::size_t c = cls; c < classes.size(); ++c) {
        auto [d, count] = classes[c];
        if (d > rem)
            break;  // degrees ascend; nothing further is affordable
        long long start = c == cls ? min_index : 0;
        for (long long i = start; i < count; ++i) {
            for (int w = 1; w * d <= rem; ++w) {
                for (const auto& part : partitions_of(w)) {
                    acc.emplace(CuspidalSymbol(d, i), part);
                    enum_labels_rec(classes, c, i + 1, rem - w * d, acc, out);
                    acc.erase(CuspidalSymbol(d, i));
                }
            }
        }
    }
}

}  // namespace detail

// All IrrepLabels of norm n over the alphabet of GL(F_q), sorted canonically.
// These are exactly the irreducible representations of GL_n(F_q).
inline std::vector<IrrepLabel> enumerate_irreps(int n, const Int& q) {
    if (n < 0)
        throw std::invalid_argument("enumerate_irreps: n must be >= 0");
    std::vector<std::pair<int, long long>> classes;
    for (int d = 1; d <= n; ++d) {
        Int count = cuspidal_count(d, q);
        classes.emplace_back(d, static_cast<long long>(count));
    }
    std::vector<IrrepLabel> out;
    IrrepLabel::Support acc;
    detail::enum_labels_rec(classes, 0, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vistab
