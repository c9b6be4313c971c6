#pragma once

#include "vistab/partition.hpp"
#include "vistab/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vistab {

// Univariate polynomial over Q. Coefficients are stored low-to-high with the
// trailing (leading-coefficient) zeros stripped, so the zero polynomial has
// an empty coefficient vector and degree -1. The same type serves both
// indeterminates that show up here (q and T); context disambiguates.
class QPoly {
  public:
    QPoly() = default;

    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

    static QPoly constant(const Rat& a) { return QPoly(std::vector<Rat>{a}); }

    // a * x^k
    static QPoly monomial(int k, const Rat& a = 1) {
        if (k < 0)
            throw std::invalid_argument("QPoly::monomial: negative degree");
        std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
        c.back() = a;
        return QPoly(std::move(c));
    }

    static QPoly var() { return monomial(1); }

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }

    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& a : r.c_)
            a = -a;
        return r;
    }

    QPoly& operator+=(const QPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        strip();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        strip();
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero())
            return QPoly();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }

    friend QPoly operator*(const QPoly& a, const Rat& s) {
        QPoly r = a;
        for (auto& x : r.c_)
            x *= s;
        r.strip();
        return r;
    }
    friend QPoly operator*(const Rat& s, const QPoly& a) { return a * s; }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i];
        return r;
    }

    // Quotient and remainder; deg(rem) < deg(divisor).
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero())
            throw std::domain_error("QPoly::divmod: division by zero polynomial");
        QPoly rem = *this;
        if (rem.degree() < d.degree())
            return {QPoly(), rem};
        std::vector<Rat> qc(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Rat(0));
        const Rat lead = d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            Rat f = rem.leading() / lead;
            qc[k] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                rem.c_[i + k] -= f * d.c_[i];
            rem.strip();
        }
        return {QPoly(std::move(qc)), rem};
    }

    // Replace the indeterminate x by x^k.
    QPoly substitute_power(int k) const {
        if (k < 1)
            throw std::invalid_argument("QPoly::substitute_power: exponent must be >= 1");
        if (is_zero() || k == 1)
            return *this;
        std::vector<Rat> c(static_cast<std::size_t>(degree()) * k + 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            c[i * k] = c_[i];
        return QPoly(std::move(c));
    }

    QPoly monic() const {
        if (is_zero())
            return *this;
        return *this * (Rat(1) / leading());
    }

    // Human-readable form, highest degree first: "q^3 - q^2 - q + 1".
    std::string to_string(const std::string& var = "q") const {
        if (is_zero())
            return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rat& a = c_[k];
            if (a == 0)
                continue;
            Rat mag = a < 0 ? Rat(-a) : a;
            if (s.empty())
                s += a < 0 ? "-" : "";
            else
                s += a < 0 ? " - " : " + ";
            bool unit = mag == 1 && k > 0;
            if (!unit)
                s += rat_to_string(mag);
            if (k > 0) {
                if (!unit)
                    s += "*";
                s += var;
                if (k > 1)
                    s += "^" + std::to_string(k);
            }
        }
        return s;
    }

  private:
    void strip() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Phi_n(q) = prod_{i=1}^{n} (q^i - 1); the empty product is 1.
inline QPoly phi(int n) {
    if (n < 0)
        throw std::invalid_argument("phi: n must be >= 0");
    QPoly r = QPoly::constant(1);
    for (int i = 1; i <= n; ++i)
        r = r * (QPoly::monomial(i) - QPoly::constant(1));
    return r;
}

// Rational function over Q, kept reduced with monic denominator so that
// structural equality is semantic equality.
class QRatFunc {
  public:
    QRatFunc() : num_(), den_(QPoly::constant(1)) {}

    QRatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}  // NOLINT: implicit by design

    QRatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("QRatFunc: zero denominator");
        reduce();
    }

    static QRatFunc constant(const Rat& a) { return QRatFunc(QPoly::constant(a)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const QRatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRatFunc& o) const { return !(*this == o); }

    QRatFunc operator-() const {
        QRatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
        return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) {
        return QRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
        return QRatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) {
        if (b.is_zero())
            throw std::domain_error("QRatFunc: division by zero");
        return QRatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0)
            throw std::domain_error("QRatFunc::eval: pole at " + rat_to_string(x));
        return num_.eval(x) / d;
    }

    QRatFunc substitute_power(int k) const {
        return QRatFunc(num_.substitute_power(k), den_.substitute_power(k));
    }

    // Exact conversion; throws when the reduced denominator is not constant.
    QPoly as_polynomial() const {
        if (den_.degree() > 0)
            throw std::domain_error("QRatFunc::as_polynomial: denominator " + den_.to_string() +
                                    " does not divide the numerator");
        return num_;  // den_ is the monic constant 1
    }

    std::string to_string(const std::string& var = "q") const {
        if (den_ == QPoly::constant(1))
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(1);
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    QPoly num_;
    QPoly den_;
};

// Psi_lambda(q) = q^{epsilon(lambda)} / prod over boxes (q^{hook} - 1).
inline QRatFunc psi(const Partition& lam) {
    QPoly den = QPoly::constant(1);
    for (int h : lam.hook_lengths())
        den = den * (QPoly::monomial(h) - QPoly::constant(1));
    return QRatFunc(QPoly::monomial(static_cast<int>(lam.epsilon())), std::move(den));
}

}  // namespace vistab
