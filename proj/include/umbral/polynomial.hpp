#pragma once

// Dense univariate polynomials over Q, indexed by degree with no trailing
// zeros. The zero polynomial is the empty coefficient list; degree() reports
// -1 for it (standing in for degree -infinity). All operations are pure.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(Rational v) {
        Polynomial p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    /// coeff * x^degree
    static Polynomial monomial(int degree, Rational coeff = Rational(1)) {
        Polynomial p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int k) const {
        static const Rational zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& a) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    /// The antiderivative q with q(x0) = 0.
    Polynomial antiderivative_from(const Rational& x0) const {
        std::vector<Rational> a(c_.size() + 1, Rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k)
            a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
        Polynomial q(std::move(a));
        return q - Polynomial::constant(q.eval(x0));
    }

    /// T_a(p)(x) = p(x + a), by binomial expansion.
    Polynomial shifted(const Rational& a) const {
        if (a == 0 || is_zero()) return *this;
        const int d = degree();
        std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
        // powers[j] = a^j
        std::vector<Rational> powers(static_cast<std::size_t>(d) + 1);
        powers[0] = 1;
        for (int j = 1; j <= d; ++j) powers[j] = powers[j - 1] * a;
        for (int k = 0; k <= d; ++k) {
            if (c_[k] == 0) continue;
            for (int j = 0; j <= k; ++j)
                out[j] += c_[k] * Rational(binomial(k, j)) * powers[k - j];
        }
        return Polynomial(std::move(out));
    }

    /// H_beta(p)(x) = p(x / beta); beta != 0.
    Polynomial dilated(const Rational& beta) const {
        if (beta == 0) throw validation_error("dilation by zero");
        std::vector<Rational> out(c_);
        Rational scale(1);
        for (std::size_t k = 1; k < out.size(); ++k) {
            scale /= beta;
            out[k] *= scale;
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        std::vector<Rational> out(c_);
        for (auto& v : out) v = -v;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return Polynomial();
        std::vector<Rational> out(p.c_);
        for (auto& v : out) v *= s;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& s) {
        return s * p;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// Comma-separated coefficients from degree 0 ("0" for the zero polynomial).
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ',';
            s += format_rational(c_[k]);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial poly_shift(const Polynomial& p, const Rational& a) {
    return p.shifted(a);
}

inline Polynomial poly_dilate(const Polynomial& p, const Rational& beta) {
    return p.dilated(beta);
}

}  // namespace umbral
