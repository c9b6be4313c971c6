#pragma once

#include "vistab/irreps.hpp"
#include "vistab/partition.hpp"
#include "vistab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vistab {

namespace detail {

// Exponent vectors in k <= 10 variables with entries summing to <= 63 pack
// into one 64-bit key, 6 bits per variable with variable 0 highest, so key
// order is lex order and adding keys adds exponents without carries.
inline bool packable(int k, int degree) { return 0 <= degree && degree <= 63 && k <= 10; }

inline std::uint64_t pack_expo(const std::vector<int>& e) {
    std::uint64_t key = 0;
    for (int v : e)
        key = (key << 6) | static_cast<std::uint64_t>(v);
    return key;
}

inline std::vector<int> unpack_expo(std::uint64_t key, int k) {
    std::vector<int> e(k);
    for (int i = k - 1; i >= 0; --i) {
        e[i] = static_cast<int>(key & 63);
        key >>= 6;
    }
    return e;
}

using PackedPoly = std::map<std::uint64_t, Int>;

}  // namespace detail

// Truncated symmetric polynomial in k variables, stored as a monomial map
// exponent-vector -> coefficient. Degree-D symmetric functions embed
// faithfully once k >= D, which is all the oracle needs.
class SymPolyMap {
  public:
    using Terms = std::map<std::vector<int>, Int>;

    explicit SymPolyMap(int k) : k_(k) {
        if (k < 0)
            throw std::invalid_argument("SymPolyMap: variable count must be >= 0");
    }

    static SymPolyMap constant(int k, const Int& c) {
        SymPolyMap p(k);
        p.add_term(std::vector<int>(k, 0), c);
        return p;
    }

    int vars() const { return k_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> expo, const Int& c) {
        if (static_cast<int>(expo.size()) != k_)
            throw std::invalid_argument("SymPolyMap: exponent vector has wrong length");
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(std::move(expo), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool operator==(const SymPolyMap& o) const { return k_ == o.k_ && terms_ == o.terms_; }
    bool operator!=(const SymPolyMap& o) const { return !(*this == o); }

    friend SymPolyMap operator+(const SymPolyMap& a, const SymPolyMap& b) {
        if (a.k_ != b.k_)
            throw std::invalid_argument("SymPolyMap: variable count mismatch");
        SymPolyMap r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend SymPolyMap operator-(const SymPolyMap& a, const SymPolyMap& b) {
        if (a.k_ != b.k_)
            throw std::invalid_argument("SymPolyMap: variable count mismatch");
        SymPolyMap r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, -c);
        return r;
    }

    friend SymPolyMap operator*(const SymPolyMap& a, const SymPolyMap& b) {
        if (a.k_ != b.k_)
            throw std::invalid_argument("SymPolyMap: variable count mismatch");
        // With few variables and small exponents an exponent vector packs into
        // one 64-bit key (6 bits per variable, variable 0 highest, so key order
        // is lex order and field sums cannot carry). Cuts the quadratic
        // accumulation cost enough to matter for large Schur products.
        if (a.k_ <= 10 && a.max_exponent() <= 31 && b.max_exponent() <= 31) {
            std::vector<std::pair<std::uint64_t, Int>> bt;
            bt.reserve(b.terms_.size());
            for (const auto& [e, c] : b.terms_)
                bt.emplace_back(detail::pack_expo(e), c);
            std::unordered_map<std::uint64_t, Int> acc;
            acc.reserve(a.terms_.size() + b.terms_.size());
            for (const auto& [ea, ca] : a.terms_) {
                std::uint64_t pa = detail::pack_expo(ea);
                for (const auto& [pb, cb] : bt)
                    acc[pa + pb] += ca * cb;
            }
            std::vector<std::pair<std::uint64_t, const Int*>> keys;
            keys.reserve(acc.size());
            for (const auto& [key, c] : acc)
                if (c != 0)
                    keys.emplace_back(key, &c);
            std::sort(keys.begin(), keys.end());
            SymPolyMap r(a.k_);
            for (const auto& [key, c] : keys)
                r.terms_.emplace_hint(r.terms_.end(), detail::unpack_expo(key, a.k_), *c);
            return r;
        }
        SymPolyMap r(a.k_);
        std::vector<int> e(a.k_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.k_; ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    // The polynomial with variables i and j exchanged (0-based).
    SymPolyMap transpose_vars(int i, int j) const {
        if (i < 0 || j < 0 || i >= k_ || j >= k_)
            throw std::out_of_range("SymPolyMap::transpose_vars: variable out of range");
        SymPolyMap r(k_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> f = e;
            std::swap(f[i], f[j]);
            r.add_term(std::move(f), c);
        }
        return r;
    }

  private:
    int k_;
    Terms terms_;

    int max_exponent() const {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (int v : e)
                m = std::max(m, v);
        return m;
    }
};

namespace detail {

// Fill the shape cell by cell in reading order: weakly increasing along rows,
// strictly increasing down columns, entries in 1..k. Accumulates the content
// exponent vector of each completed tableau.
inline void ssyt_rec(const Partition& shape, int row, int col, int k,
                     std::vector<std::vector<int>>& tab, std::vector<int>& content,
                     SymPolyMap& out) {
    if (row == shape.rows()) {
        out.add_term(content, 1);
        return;
    }
    if (col == shape.part(row + 1)) {
        ssyt_rec(shape, row + 1, 0, k, tab, content, out);
        return;
    }
    int lo = 1;
    if (col > 0)
        lo = std::max(lo, tab[row][col - 1]);
    if (row > 0)
        lo = std::max(lo, tab[row - 1][col] + 1);
    for (int v = lo; v <= k; ++v) {
        tab[row][col] = v;
        ++content[v - 1];
        ssyt_rec(shape, row, col + 1, k, tab, content, out);
        --content[v - 1];
    }
}

// The big tableau enumerations run on packed keys and only unpack at the
// boundary; the caller guarantees packability.
inline void ssyt_rec_packed(const Partition& shape, int row, int col, int k,
                            std::vector<std::vector<int>>& tab, std::uint64_t key,
                            std::unordered_map<std::uint64_t, Int>& out) {
    if (row == shape.rows()) {
        ++out[key];
        return;
    }
    if (col == shape.part(row + 1)) {
        ssyt_rec_packed(shape, row + 1, 0, k, tab, key, out);
        return;
    }
    int lo = 1;
    if (col > 0)
        lo = std::max(lo, tab[row][col - 1]);
    if (row > 0)
        lo = std::max(lo, tab[row - 1][col] + 1);
    for (int v = lo; v <= k; ++v) {
        tab[row][col] = v;
        ssyt_rec_packed(shape, row, col + 1, k, tab, key + (1ULL << (6 * (k - v))), out);
    }
}

inline PackedPoly schur_packed(const Partition& shape, int k) {
    std::unordered_map<std::uint64_t, Int> acc;
    std::vector<std::vector<int>> tab(shape.rows(), std::vector<int>(shape.first(), 0));
    ssyt_rec_packed(shape, 0, 0, k, tab, 0, acc);
    return PackedPoly(acc.begin(), acc.end());
}

}  // namespace detail

// Schur polynomial s_lambda(x_1..x_k): the generating function of semistandard
// Young tableaux of the given shape. Fails rather than silently vanishing
// when k has fewer variables than the shape has rows.
inline SymPolyMap schur_poly(const Partition& shape, int k) {
    if (k < shape.rows())
        throw std::invalid_argument("schur_poly: " + std::to_string(k) + " variables < " +
                                    std::to_string(shape.rows()) + " rows of " + shape.to_string());
    SymPolyMap out(k);
    std::vector<std::vector<int>> tab(shape.rows(), std::vector<int>(shape.first(), 0));
    std::vector<int> content(k, 0);
    detail::ssyt_rec(shape, 0, 0, k, tab, content, out);
    return out;
}

// h_r in k variables: all monomials of degree r, i.e. schur_poly([r], k).
inline SymPolyMap complete_homogeneous(int r, int k) {
    if (r < 0)
        throw std::invalid_argument("complete_homogeneous: r must be >= 0");
    if (r == 0)
        return SymPolyMap::constant(k, 1);
    return schur_poly(Partition({r}), k);
}

// Expand a symmetric polynomial in the Schur basis by greedy subtraction of
// the lexicographically leading term (for symmetric input that term's
// exponent vector is a partition and the matching Schur polynomial has it
// with coefficient 1). A residual whose leading exponent is not a partition
// exposes non-symmetric input.
inline std::map<Partition, Int> schur_expand(SymPolyMap p) {
    int k = p.vars();
    int degree = 0;
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int v : e)
            d += v;
        degree = std::max(degree, d);
    }
    // the packed loop is the same greedy subtraction on 64-bit keys
    if (detail::packable(k, degree)) {
        detail::PackedPoly pp;
        for (const auto& [e, c] : p.terms())
            pp.emplace_hint(pp.end(), detail::pack_expo(e), c);
        std::map<Partition, Int> out;
        while (!pp.empty()) {
            auto lead = std::prev(pp.end());
            std::vector<int> shape = detail::unpack_expo(lead->first, k);
            while (!shape.empty() && shape.back() == 0)
                shape.pop_back();
            for (std::size_t i = 0; i + 1 < shape.size(); ++i)
                if (shape[i] < shape[i + 1])
                    throw std::invalid_argument("schur_expand: input is not symmetric");
            Partition mu(shape);
            Int c = lead->second;
            for (const auto& [key, sc] : detail::schur_packed(mu, k)) {
                auto it = pp.try_emplace(key, 0).first;
                it->second -= c * sc;
                if (it->second == 0)
                    pp.erase(it);
            }
            out[mu] = c;
        }
        return out;
    }
    std::map<Partition, Int> out;
    while (!p.is_zero()) {
        const auto& [lead, coeff] = *p.terms().rbegin();
        std::vector<int> shape = lead;
        while (!shape.empty() && shape.back() == 0)
            shape.pop_back();
        for (std::size_t i = 0; i + 1 < shape.size(); ++i)
            if (shape[i] < shape[i + 1])
                throw std::invalid_argument("schur_expand: input is not symmetric");
        Partition mu(shape);
        Int c = coeff;
        SymPolyMap s = schur_poly(mu, p.vars());
        for (const auto& [e, sc] : s.terms())
            p.add_term(std::vector<int>(e), -c * sc);
        out[mu] = c;  // each step strictly lowers the leading term, so mu never recurs
    }
    return out;
}

// Does s_lambda * h_r expand as the sum over horizontal-strip additions, each
// with coefficient 1? Computed entirely on the SSYT side and compared with
// the strip enumeration; the faithful truncation is k = |lambda| + r.
inline bool pieri_oracle_check(const Partition& lam, int r) {
    int k = lam.size() + r;
    if (k == 0)
        return add_horizontal_strip(lam, 0) == std::vector<Partition>{lam};
    SymPolyMap prod = schur_poly(lam, k) * complete_homogeneous(r, k);
    std::map<Partition, Int> expansion = schur_expand(std::move(prod));
    std::map<Partition, Int> expected;
    for (const auto& mu : add_horizontal_strip(lam, r))
        expected[mu] = 1;
    return expansion == expected;
}

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// Rank of an n x m matrix over F_p by elimination; entries are consumed.
inline int rank_mod_p(std::vector<std::vector<int>>& a, int n, int m, int p) {
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        // scale pivot row to 1
        int inv = 1;
        while (a[rank][col] * inv % p != 1)
            ++inv;
        for (int j = col; j < m; ++j)
            a[rank][j] = a[rank][j] * inv % p;
        for (int row = 0; row < n; ++row)
            if (row != rank && a[row][col] != 0) {
                int f = a[row][col];
                for (int j = col; j < m; ++j)
                    a[row][j] = ((a[row][j] - f * a[rank][j]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Count injective linear maps F_p^m -> F_p^n the slow honest way: enumerate
// every n x m matrix over the prime field and keep those of full column rank.
// Feasible while p^(n*m) <= 10^7.
inline Int count_injections_bruteforce(int m, int n, long long p) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("count_injections_bruteforce: negative dimensions");
    if (!detail::is_prime(p))
        throw std::invalid_argument("count_injections_bruteforce: p = " + std::to_string(p) +
                                    " is not prime");
    if (m == 0)
        return 1;  // the empty map is injective
    if (n == 0)
        return 0;
    long long total = 1;
    for (int i = 0; i < n * m; ++i) {
        total *= p;
        if (total > 10'000'000)
            throw std::invalid_argument("count_injections_bruteforce: p^(n*m) exceeds 10^7");
    }
    Int count = 0;
    std::vector<std::vector<int>> a(n, std::vector<int>(m));
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                a[i][j] = static_cast<int>(rest % p);
                rest /= p;
            }
        if (detail::rank_mod_p(a, n, m, static_cast<int>(p)) == m)
            ++count;
    }
    return count;
}

// Ties the classification to an independent count: the squares of the
// enumerated dimensions must sum to |GL_n(F_q)|, and for tiny prime cases the
// group order itself is confirmed by the matrix oracle.
inline bool group_order_check(int n, const Int& q) {
    Int sum = 0;
    for (const auto& mu : enumerate_irreps(n, q)) {
        Int d = dim_at(mu, q);
        sum += d * d;
    }
    Int order = group_order(n, q);
    if (sum != order)
        return false;
    if (n <= 2 && q <= 3 && detail::is_prime(static_cast<long long>(q)))
        if (count_injections_bruteforce(n, n, static_cast<long long>(q)) != order)
            return false;
    return true;
}

}  // namespace vistab
