#pragma once

// Truncated power series with exact rational coefficients; just enough
// ring structure for formal 1/N expansions and generating-function checks.

#include "jmwg/rational.hpp"

#include <vector>

namespace jmwg {

class TruncatedSeries {
  public:
    // order = number of retained coefficients (powers 0 .. order-1)
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order), Rational(0)) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
    }

    static TruncatedSeries constant(const Rational& a, int order) {
        TruncatedSeries s(order);
        s.c_[0] = a;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }

    Rational coefficient(int k) const {
        return k >= 0 && k < order() ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }

    void set(int k, const Rational& a) { c_.at(static_cast<std::size_t>(k)) = a; }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r(std::min(order(), o.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = coefficient(k) + o.coefficient(k);
        return r;
    }

    TruncatedSeries scaled(const Rational& a) const {
        TruncatedSeries r = *this;
        for (Rational& x : r.c_) x *= a;
        return r;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        TruncatedSeries r(std::min(order(), o.order()));
        for (int i = 0; i < r.order(); ++i) {
            if (coefficient(i) == 0) continue;
            for (int j = 0; i + j < r.order(); ++j)
                r.c_[static_cast<std::size_t>(i + j)] += coefficient(i) * o.coefficient(j);
        }
        return r;
    }

    // Multiplicative inverse; requires a unit constant term.
    TruncatedSeries inverse() const {
        if (coefficient(0) == 0) throw std::invalid_argument("series has no inverse");
        TruncatedSeries r(order());
        r.c_[0] = 1 / coefficient(0);
        for (int k = 1; k < order(); ++k) {
            Rational s = 0;
            for (int j = 1; j <= k; ++j) s += coefficient(j) * r.c_[static_cast<std::size_t>(k - j)];
            r.c_[static_cast<std::size_t>(k)] = -s / coefficient(0);
        }
        return r;
    }

    // Multiply by the monomial t^k (shifts coefficients up).
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r(order());
        for (int i = 0; i + k < order(); ++i) r.c_[static_cast<std::size_t>(i + k)] = coefficient(i);
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;
};

}  // namespace jmwg
