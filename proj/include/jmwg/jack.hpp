#pragma once

// Jack symmetric functions J_lambda^(alpha) in the J normalization,
// their power-sum coefficients theta, the Jack-Plancherel measure, and
// the alpha = 1 / alpha = 2 specializations (irreducible characters and
// zonal spherical values).

#include "jmwg/symfunc.hpp"

#include <memory>
#include <mutex>

namespace jmwg {

// <p_rho, p_pi>_alpha = delta * alpha^len(rho) * z_rho
inline Rational alpha_inner(const SymFunc& f, const SymFunc& g, const Rational& alpha) {
    const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
    const auto& large = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
    Rational total = 0;
    for (const auto& [rho, c] : small) {
        auto it = large.find(rho);
        if (it == large.end()) continue;
        total += c * it->second * pow_rational(alpha, rho.length()) * Rational(z_value(rho));
    }
    return total;
}

// All J_lambda^(alpha) with |lambda| = n, built once and cached per (n, alpha).
class JackTable {
  public:
    static std::shared_ptr<const JackTable> get(int n, const Rational& alpha) {
        if (n < 0) throw std::invalid_argument("JackTable: negative n");
        if (sgn(alpha) <= 0) throw std::invalid_argument("JackTable: alpha must be positive");
        static std::mutex mtx;
        static std::map<std::pair<int, Rational>, std::shared_ptr<const JackTable>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(n, alpha);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto table = std::shared_ptr<const JackTable>(new JackTable(n, alpha));
        cache.emplace(key, table);
        return table;
    }

    int level() const { return n_; }
    const Rational& alpha() const { return alpha_; }

    const SymFunc& jack_in_p(const Partition& la) const { return jack_.at(la); }

    Rational theta(const Partition& la, const Partition& rho) const {
        return jack_.at(la).coefficient(rho);
    }

    const std::map<Partition, Rational>& jack_in_monomial(const Partition& la) const {
        return monomial_.at(la);
    }

  private:
    JackTable(int n, Rational alpha) : n_(n), alpha_(std::move(alpha)) {
        std::vector<Partition> lams = partitions_of(n_);
        // Orthogonalize monic-in-m_lambda candidates along a linear
        // extension of dominance (ascending: start from (1^n)); the
        // projections onto dominance-incomparable members vanish, so the
        // result is the triangular orthogonal family.
        std::vector<SymFunc> basis;
        std::vector<Rational> norms;
        std::vector<Partition> order(lams.rbegin(), lams.rend());
        std::map<Partition, SymFunc> raw;
        for (const Partition& la : order) {
            SymFunc g = SymFunc::monomial(la);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                Rational proj = alpha_inner(g, basis[k], alpha_);
                if (proj != 0) g += basis[k].scaled(-proj / norms[k]);
            }
            Rational nrm = alpha_inner(g, g, alpha_);
            if (nrm == 0) throw std::logic_error("degenerate inner product in Jack construction");
            raw.emplace(la, g);
            basis.push_back(std::move(g));
            norms.push_back(std::move(nrm));
        }
        for (const Partition& la : lams) {
            SymFunc J = raw.at(la).scaled(lower_hook_product(la, alpha_));
            std::map<Partition, Rational> inMonomial;
            for (const Partition& mu : lams) {
                Rational c = 0;
                for (const auto& [rho, a] : J.terms()) c += a * power_in_monomial(rho, mu);
                if (c != 0) inMonomial[mu] = c;
            }
            monomial_.emplace(la, std::move(inMonomial));
            jack_.emplace(la, std::move(J));
        }
    }

    // coefficient of m_mu in p_rho, by iterated p_r multiplication,
    // memoized per table
    Rational power_in_monomial(const Partition& rho, const Partition& mu) {
        auto it = pInM_.find(rho);
        if (it == pInM_.end()) {
            std::map<Partition, Rational> exp{{Partition(), Rational(1)}};
            for (int part : rho.parts()) exp = detail::multiply_power_into_monomial(part, exp);
            it = pInM_.emplace(rho, std::move(exp)).first;
        }
        auto jt = it->second.find(mu);
        return jt == it->second.end() ? Rational(0) : jt->second;
    }

    int n_;
    Rational alpha_;
    std::map<Partition, SymFunc> jack_;
    std::map<Partition, std::map<Partition, Rational>> monomial_;
    std::map<Partition, std::map<Partition, Rational>> pInM_;
};

// theta^lambda_rho(alpha): coefficient of p_rho in J_lambda^(alpha).
inline Rational theta(const Partition& la, const Partition& rho, const Rational& alpha) {
    if (la.size() != rho.size()) throw std::invalid_argument("theta: |lambda| != |rho|");
    return JackTable::get(la.size(), alpha)->theta(la, rho);
}

inline std::map<Partition, Rational> jack_in_monomial(const Partition& la, const Rational& alpha) {
    return JackTable::get(la.size(), alpha)->jack_in_monomial(la);
}

// P_n^(alpha)(lambda) = alpha^n n! / j_lambda^(alpha)
inline Rational jack_plancherel(const Partition& la, const Rational& alpha) {
    int n = la.size();
    return pow_rational(alpha, n) * Rational(factorial(n)) / j_alpha(la, alpha);
}

// chi^lambda_rho = theta^lambda_rho(1) * z_rho / H_lambda
inline Rational character_value(const Partition& la, const Partition& rho) {
    if (la.size() != rho.size()) throw std::invalid_argument("character: |lambda| != |rho|");
    return theta(la, rho, 1) * Rational(z_value(rho)) / Rational(hook_product(la));
}

// omega^lambda_rho = theta^lambda_rho(2) * z_rho / (2^(|rho|-len) |rho|!)
inline Rational zonal_spherical(const Partition& la, const Partition& rho) {
    if (la.size() != rho.size()) throw std::invalid_argument("zonal_spherical: |lambda| != |rho|");
    int m = rho.size();
    Rational denom = pow_rational(2, m - rho.length()) * Rational(factorial(m));
    return theta(la, rho, 2) * Rational(z_value(rho)) / denom;
}

}  // namespace jmwg
