#pragma once

// Truncated formal power series over Q: an order-N jet stores the
// coefficients of t^0 .. t^{N-1}. Arithmetic results carry the minimum of
// the operand orders. On top of ring operations the module provides the
// reciprocal, composition, compositional inverse (Newton iteration), and
// formal exp/log via the ODE recurrences
//     exp: n g_n = sum_{k=1..n} k f_k g_{n-k}
//     log: n f_n = sum_{k=1..n} k g_k f_{n-k}   (solved for g_n, f_0 = 1).
//
// The Cauchy-product and exp kernels are templated on the coefficient ring:
// they are reused with Polynomial coefficients to expand exp(x B(t)) as a
// jet whose t^n coefficient is a polynomial in x.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

namespace detail {

template <class T>
struct ring_one;

template <>
struct ring_one<Rational> {
    static Rational get() { return Rational(1); }
};

template <>
struct ring_one<Polynomial> {
    static Polynomial get() { return Polynomial::constant(Rational(1)); }
};

template <class T>
std::vector<T> cauchy_product(const std::vector<T>& a, const std::vector<T>& b,
                              std::size_t order) {
    std::vector<T> out(order);
    for (std::size_t i = 0; i < a.size() && i < order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/// exp of a jet with zero constant term (not checked here).
template <class T>
std::vector<T> exp_kernel(const std::vector<T>& f) {
    const std::size_t order = f.size();
    std::vector<T> g(order);
    if (order == 0) return g;
    g[0] = ring_one<T>::get();
    for (std::size_t n = 1; n < order; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n; ++k)
            acc += f[k] * Rational(static_cast<long>(k)) * g[n - k];
        g[n] = acc * Rational(1, static_cast<long>(n));
    }
    return g;
}

}  // namespace detail

class TruncatedSeries {
public:
    /// order = coeffs.size() >= 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw validation_error("series order must be positive");
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Rational>(check_order(order), Rational(0)));
    }

    static TruncatedSeries constant(const Rational& v, int order) {
        auto s = zero(order);
        s.c_[0] = v;
        return s;
    }

    static TruncatedSeries one(int order) { return constant(Rational(1), order); }

    /// The series t.
    static TruncatedSeries identity(int order) {
        auto s = zero(order);
        if (order >= 2) s.c_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }

    const Rational& coeff(int n) const {
        static const Rational zero_coeff(0);
        if (n < 0 || n >= order()) return zero_coeff;
        return c_[static_cast<std::size_t>(n)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    void set_coeff(int n, const Rational& v) {
        if (n < 0 || n >= order()) throw validation_error("series coefficient index out of range");
        c_[static_cast<std::size_t>(n)] = v;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order < 1 || new_order > order())
            throw validation_error("invalid truncation order");
        return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order));
    }

    TruncatedSeries operator-() const {
        auto out = c_;
        for (auto& v : out) v = -v;
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a.c_[i] + b.c_[i];
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a.c_[i] - b.c_[i];
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        return TruncatedSeries(detail::cauchy_product(a.c_, b.c_, n));
    }

    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
        auto out = f.c_;
        for (auto& v : out) v *= s;
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& f, const Rational& s) {
        return s * f;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += format_rational(c_[i]);
        }
        return s;
    }

private:
    static std::size_t check_order(int order) {
        if (order < 1) throw validation_error("series order must be positive");
        return static_cast<std::size_t>(order);
    }

    std::vector<Rational> c_;
};

/// f / t for f with f(0) = 0; the order drops by one.
inline TruncatedSeries series_shift_down(const TruncatedSeries& f) {
    if (f.coeff(0) != 0)
        throw error("cannot divide by t: constant term is nonzero");
    if (f.order() < 2) throw validation_error("series order too low to shift down");
    std::vector<Rational> out(f.coeffs().begin() + 1, f.coeffs().end());
    return TruncatedSeries(std::move(out));
}

/// 1/f for f with f(0) != 0, by g_0 = 1/f_0, g_n = -(1/f_0) sum f_k g_{n-k}.
inline TruncatedSeries series_recip(const TruncatedSeries& f) {
    if (f.coeff(0) == 0)
        throw error("series reciprocal requires a nonzero constant term");
    const int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n));
    const Rational inv0 = 1 / f.coeff(0);
    g[0] = inv0;
    for (int m = 1; m < n; ++m) {
        Rational acc(0);
        for (int k = 1; k <= m; ++k) acc += f.coeff(k) * g[m - k];
        g[m] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(g));
}

/// f(g(t)) for g with g(0) = 0, Horner over truncated series.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.coeff(0) != 0)
        throw error("series composition requires zero inner constant term");
    const int n = std::min(f.order(), g.order());
    const TruncatedSeries gt = g.truncated(n);
    TruncatedSeries r = TruncatedSeries::constant(f.coeff(n - 1), n);
    for (int k = n - 2; k >= 0; --k) {
        r = r * gt;
        r.set_coeff(0, r.coeff(0) + f.coeff(k));
    }
    return r;
}

/// f^k by repeated squaring (k >= 0).
inline TruncatedSeries series_pow(const TruncatedSeries& f, long k) {
    if (k < 0) throw validation_error("series_pow requires k >= 0");
    TruncatedSeries acc = TruncatedSeries::one(f.order());
    TruncatedSeries base = f;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

/// exp(f) for f with f(0) = 0.
inline TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f.coeff(0) != 0)
        throw error("series exp requires zero constant term");
    return TruncatedSeries(detail::exp_kernel(f.coeffs()));
}

/// log(f) for f with f(0) = 1.
inline TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f.coeff(0) != 1)
        throw error("series log requires constant term 1");
    const int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n));
    for (int m = 1; m < n; ++m) {
        Rational acc(0);
        for (int k = 1; k < m; ++k)
            acc += Rational(k) * g[k] * f.coeff(m - k);
        g[m] = f.coeff(m) - acc / Rational(m);
    }
    return TruncatedSeries(std::move(g));
}

namespace detail {

// Derivative with the (unknown) top coefficient set to zero; callers must
// ensure the fabricated coefficient cannot reach the retained indices.
inline TruncatedSeries derivative_padded(const TruncatedSeries& f) {
    const int n = f.order();
    std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
    for (int k = 1; k < n; ++k) d[k - 1] = Rational(k) * f.coeff(k);
    return TruncatedSeries(std::move(d));
}

}  // namespace detail

/// Compositional inverse of f with f(0) = 0, f'(0) != 0 (Newton iteration;
/// the number of valid coefficients doubles each step).
inline TruncatedSeries series_revert(const TruncatedSeries& f) {
    if (f.coeff(0) != 0 || f.coeff(1) == 0)
        throw error("series is not reversible: needs f(0) = 0 and f'(0) != 0");
    const int n = f.order();
    TruncatedSeries g = (1 / f.coeff(1)) * TruncatedSeries::identity(n);
    if (n <= 2) return g;
    const TruncatedSeries fd = detail::derivative_padded(f);
    int steps = 2;
    for (int correct = 2; correct < n; correct *= 2) ++steps;
    for (int it = 0; it < steps; ++it) {
        TruncatedSeries u = series_compose(f, g);
        u.set_coeff(1, u.coeff(1) - 1);  // f(g) - t, valuation >= 2
        if (u.is_zero()) return g;
        // 1/f'(g): its top coefficient inherits the padding of fd, but u's
        // valuation keeps it out of every retained index of the update.
        const TruncatedSeries h = series_recip(series_compose(fd, g));
        g = g - u * h;
    }
    if (!(series_compose(f, g) == TruncatedSeries::identity(n)))
        throw error("series reversion did not converge");
    return g;
}

}  // namespace umbral
