#pragma once

// Orthogonal-group Weingarten function: exact values on reduced coset
// types, the 1/N asymptotic series with exact coefficients, and the
// convolution formula for Haar moments of matrix entries.

#include "jmwg/averages.hpp"
#include "jmwg/hecke.hpp"
#include "jmwg/permutation.hpp"
#include "jmwg/series.hpp"

#include <mutex>

namespace jmwg {

// Wg_n at integer N >= n, one value per reduced coset type.
inline const HeckeElement& wg_exact(int n, long N) {
    if (n < 1) throw std::invalid_argument("wg_exact: n must be >= 1");
    if (N < n) throw std::invalid_argument("wg_exact: requires N >= n");
    static std::mutex mtx;
    static std::map<std::pair<int, long>, HeckeElement> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Rational dd = Rational(double_factorial(2 * n - 1));
    HeckeElement h(n);
    for (const Partition& mu : reduced_types(n)) {
        Partition u = unreduce(mu, n);
        Rational total = 0;
        for (const Partition& la : partitions_of(n)) {
            Rational denom = 1;
            for (const Rational& c : modified_content_alphabet(la)) denom *= Rational(N) + c;
            total += Rational(dimension_f(doubled(la))) * zonal_spherical(la, u) / denom;
        }
        h.set(mu, total / dd);
    }
    return cache.emplace(key, std::move(h)).first->second;
}

// Formal expansion of the exact rational function in t = 1/N, keeping
// powers t^0 .. t^(order-1).
inline TruncatedSeries wg_exact_series(int n, const Partition& mu, int order) {
    if (mu.size() + mu.length() > n) throw std::invalid_argument("wg_exact_series: n too small for mu");
    Partition u = unreduce(mu, n);
    TruncatedSeries total(order);
    for (const Partition& la : partitions_of(n)) {
        Rational w = Rational(dimension_f(doubled(la))) * zonal_spherical(la, u);
        if (w == 0) continue;
        TruncatedSeries factor = TruncatedSeries::constant(1, order);
        for (const Rational& c : modified_content_alphabet(la)) {
            TruncatedSeries lin = TruncatedSeries::constant(1, order);
            if (order > 1) lin.set(1, c);
            factor = factor * lin.inverse();  // 1/(1 + c t)
        }
        total = total + factor.scaled(w);
    }
    return total.scaled(1 / Rational(double_factorial(2 * n - 1))).shifted(n);
}

// Wg(mu; n) = sum_g (-1)^(|mu|+g) g_g N^(-n-|mu|-g); g_g holds the
// magnitudes G^(|mu|+g)_mu(n).
struct WgSeries {
    int n = 0;
    Partition mu;
    std::vector<Rational> coefficients;  // g_0 .. g_order

    Rational signed_coefficient(int g) const {
        Rational c = coefficients.at(static_cast<std::size_t>(g));
        return (mu.size() + g) % 2 == 0 ? c : -c;
    }

    int power(int g) const { return n + mu.size() + g; }  // N^(-power)
};

// Coefficients via the alpha = 2 Jack averages of h_k; every value is
// cross-checked against the formal expansion of the exact rational
// function, including the vanishing below N^(-n-|mu|).
inline WgSeries wg_series(int n, const Partition& mu, int order) {
    if (mu.size() + mu.length() > n) throw std::invalid_argument("wg_series: n too small for mu");
    if (order < 0) throw std::invalid_argument("wg_series: negative order");
    WgSeries s;
    s.n = n;
    s.mu = mu;
    for (int g = 0; g <= order; ++g)
        s.coefficients.push_back(average_at(SymFunc::complete(mu.size() + g), mu, 2, n));

    TruncatedSeries formal = wg_exact_series(n, mu, n + mu.size() + order + 1);
    for (int k = n; k < n + mu.size(); ++k)
        if (formal.coefficient(k) != 0)
            throw std::logic_error("wg_series: expansion does not start at N^(-n-|mu|)");
    for (int g = 0; g <= order; ++g)
        if (formal.coefficient(n + mu.size() + g) != s.signed_coefficient(g))
            throw std::logic_error("wg_series: average route disagrees with the formal expansion");
    return s;
}

// Haar moment of a monomial in matrix entries: indices i, j of equal even
// length 2n with values in 1..N. Odd-degree moments vanish by symmetry;
// the API rejects odd lengths and the CLI maps them to 0 with a note.
inline Rational integrate_monomial(const std::vector<int>& i, const std::vector<int>& j, long N) {
    if (i.size() != j.size()) throw std::invalid_argument("integrate_monomial: index lengths differ");
    if (i.size() % 2 != 0)
        throw std::invalid_argument("integrate_monomial: odd-length index sequences rejected");
    int n = static_cast<int>(i.size()) / 2;
    for (int v : i)
        if (v < 1 || v > N) throw std::invalid_argument("integrate_monomial: row index out of range");
    for (int v : j)
        if (v < 1 || v > N) throw std::invalid_argument("integrate_monomial: column index out of range");
    if (n == 0) return 1;
    if (N < n) throw std::invalid_argument("integrate_monomial: requires N >= n");

    auto survives = [](const Matching& m, const std::vector<int>& idx) {
        for (auto& [a, b] : m.blocks())
            if (idx[static_cast<std::size_t>(a - 1)] != idx[static_cast<std::size_t>(b - 1)]) return false;
        return true;
    };

    const HeckeElement& wg = wg_exact(n, N);
    std::vector<Matching> all = enumerate_matchings(n);
    std::vector<const Matching*> rows, cols;
    for (const Matching& m : all) {
        if (survives(m, i)) rows.push_back(&m);
        if (survives(m, j)) cols.push_back(&m);
    }
    Rational total = 0;
    for (const Matching* m : rows) {
        Permutation pm = m->to_permutation().inverse();
        for (const Matching* nn : cols)
            total += wg.value(pm.compose(nn->to_permutation()).reduced_coset_type());
    }
    return total;
}

// The diagonal moment of g_11^2 g_22^2 ... g_nn^2.
inline Rational integrate_diagonal(int n, long N) {
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        idx.push_back(k);
        idx.push_back(k);
    }
    return integrate_monomial(idx, idx, N);
}

}  // namespace jmwg
