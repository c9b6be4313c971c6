#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vistab {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros stripped. The empty partition is the unique partition of 0.
class Partition {
  public:
    Partition() = default;

    // Validates and canonicalizes: trailing zeros are stripped, negative
    // entries and increasing adjacent pairs are rejected.
    explicit Partition(std::vector<int> raw) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 0)
                throw std::invalid_argument("Partition: negative part");
            if (i + 1 < raw.size() && raw[i] < raw[i + 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
        while (!raw.empty() && raw.back() == 0)
            raw.pop_back();
        parts_ = std::move(raw);
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // i is 1-based; rows beyond the last are 0.
    int part(int i) const {
        if (i < 1)
            throw std::out_of_range("Partition::part: rows are 1-based");
        return i <= rows() ? parts_[i - 1] : 0;
    }

    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    int size() const {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    // epsilon = sum over rows of (i-1) * lambda_i
    long long epsilon() const {
        long long e = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            e += static_cast<long long>(i) * parts_[i];
        return e;
    }

    // Hook length at box (i,j) is arm + leg + 1. Returned sorted descending,
    // one entry per box.
    std::vector<int> hook_lengths() const {
        std::vector<int> hooks;
        hooks.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= rows(); ++i) {
            for (int j = 1; j <= part(i); ++j) {
                int arm = part(i) - j;
                int leg = 0;
                for (int k = i + 1; k <= rows(); ++k)
                    if (part(k) >= j)
                        ++leg;
                hooks.push_back(arm + leg + 1);
            }
        }
        std::sort(hooks.rbegin(), hooks.rend());
        return hooks;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Lexicographic on the part vectors; used as the canonical ordering.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    bool operator>(const Partition& o) const { return o < *this; }

    // "[3,1]"; the empty partition prints "[]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Partition::parse: expected \"[a,b,...]\", got '" + text + "'");
        std::vector<int> raw;
        std::string body = s.substr(1, s.size() - 2);
        if (!body.empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (tok.empty())
                    throw std::invalid_argument("Partition::parse: empty entry in '" + text + "'");
                raw.push_back(std::stoi(tok));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
        }
        return Partition(std::move(raw));
    }

  private:
    std::vector<int> parts_;
};

namespace detail {

inline void add_strip_rec(const std::vector<int>& lam, int row, int rows, int rem,
                          std::vector<int>& acc, std::vector<Partition>& out) {
    if (row == rows + 1) {
        // The boxes left over form one new row below the old shape; it may
        // not be longer than the old last row (one box per column).
        if (rem == 0) {
            out.push_back(Partition(acc));
        } else if (rem <= (rows > 0 ? lam[rows - 1] : rem)) {
            acc.push_back(rem);
            out.push_back(Partition(acc));
            acc.pop_back();
        }
        return;
    }
    int lo = lam[row - 1];
    int hi = row == 1 ? lo + rem : std::min(lam[row - 2], lo + rem);
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        add_strip_rec(lam, row + 1, rows, rem - (v - lo), acc, out);
        acc.pop_back();
    }
}

inline void remove_strip_rec(const std::vector<int>& mu, int row, int rows, int rem,
                             std::vector<int>& acc, std::vector<Partition>& out) {
    if (row == rows + 1) {
        if (rem == 0)
            out.push_back(Partition(acc));
        return;
    }
    // A removed horizontal strip takes at most one box per column, so the
    // new row must stay at least as long as the row below.
    int below = row < rows ? mu[row] : 0;
    int hi = mu[row - 1];
    int lo = std::max(below, hi - rem);
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        remove_strip_rec(mu, row + 1, rows, rem - (hi - v), acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All mu obtained from lam by adding r boxes, no two in the same column
// (mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...). Lexicographically decreasing.
inline std::vector<Partition> add_horizontal_strip(const Partition& lam, int r) {
    if (r < 0)
        throw std::invalid_argument("add_horizontal_strip: r must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::add_strip_rec(lam.parts(), 1, lam.rows(), r, acc, out);
    return out;
}

// All lam obtained from mu by removing r boxes, no two from the same column.
// Empty when no valid removal exists. Lexicographically decreasing.
inline std::vector<Partition> remove_horizontal_strip(const Partition& mu, int r) {
    if (r < 0)
        throw std::invalid_argument("remove_horizontal_strip: r must be >= 0");
    std::vector<Partition> out;
    if (r > mu.size())
        return out;
    std::vector<int> acc;
    detail::remove_strip_rec(mu.parts(), 1, mu.rows(), r, acc, out);
    return out;
}

namespace detail {

inline void partitions_rec(int n, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All partitions of n, lexicographically decreasing ([n] first, [1,...,1] last).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_rec(n, n, acc, out);
    return out;
}

}  // namespace vistab
