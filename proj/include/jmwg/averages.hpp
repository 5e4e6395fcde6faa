#pragma once

// Jack-Plancherel averages A^(alpha)_mu(F, n): exact values, the
// polynomial-in-n extraction via interpolation with a redundant
// consistency node, shifted power sums, and shifted Jack evaluations.

#include "jmwg/jack.hpp"

namespace jmwg {

// Polynomial in n with exact rational coefficients, ascending powers.
class PolyN {
  public:
    PolyN() = default;

    explicit PolyN(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)]
                                                              : Rational(0);
    }

    Rational at(long n) const {
        Rational v = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * n + coeffs_[k];
        return v;
    }

    PolyN operator+(const PolyN& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return PolyN(std::move(c));
    }

    PolyN scaled(const Rational& a) const {
        std::vector<Rational> c = coeffs_;
        for (Rational& x : c) x *= a;
        return PolyN(std::move(c));
    }

    bool operator==(const PolyN& o) const { return coeffs_ == o.coeffs_; }

    // "c0 + c1*n + c2*n^2", zero terms skipped, "0" for the zero polynomial.
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            Rational c = coeffs_[k];
            if (c == 0) continue;
            if (first) {
                first = false;
            } else if (sgn(c) < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
            os << c.get_str();
            if (k == 1) os << "*n";
            if (k >= 2) os << "*n^" << k;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyN& p) { return os << p.str(); }

struct AvgSpec {
    SymFunc F;
    Partition mu;
    Rational alpha;
};

// A^(alpha)_mu(F, n), by the defining sum over partitions of n; general F
// is handled componentwise (the alpha^(deg F - |mu|) prefactor forces it).
inline Rational average_at(const SymFunc& F, const Partition& mu, const Rational& alpha, int n) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("average_at: alpha must be positive");
    if (n < 0) throw std::invalid_argument("average_at: negative n");
    if (F.is_zero()) return 0;
    if (n < mu.size() + mu.length()) return 0;  // theta convention
    auto table = JackTable::get(n, alpha);
    Partition u = unreduce(mu, n);
    Rational zu = Rational(z_value(u)) / Rational(factorial(n));
    Rational total = 0;
    for (int d : F.component_degrees()) {
        SymFunc Fd = F.homogeneous_component(d);
        Rational s = 0;
        for (const Partition& la : partitions_of(n)) {
            Rational th = table->theta(la, u);
            if (th == 0) continue;
            s += Fd.evaluate(content_alphabet(la, alpha)) * jack_plancherel(la, alpha) * th;
        }
        total += pow_rational(alpha, d - mu.size()) * zu * s;
    }
    return total;
}

inline Rational average_at(const AvgSpec& spec, int n) {
    return average_at(spec.F, spec.mu, spec.alpha, n);
}

namespace detail {

// Exact interpolation through (x_i, v_i) by Newton divided differences.
inline PolyN interpolate(const std::vector<long>& xs, const std::vector<Rational>& vs) {
    std::size_t m = xs.size();
    std::vector<Rational> dd = vs;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    std::vector<Rational> coeffs{};
    std::vector<Rational> basis{1};  // prod_{i<k} (n - x_i), expanded, ascending
    for (std::size_t k = 0; k < m; ++k) {
        if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
        std::vector<Rational> grown(basis.size() + 1, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            grown[i + 1] += basis[i];
            grown[i] -= Rational(xs[k]) * basis[i];
        }
        basis = std::move(grown);
    }
    return PolyN(std::move(coeffs));
}

}  // namespace detail

// The polynomial n -> A^(alpha)_mu(F, n) valid for n >= |mu| + len(mu),
// interpolated over n0 .. n0 + D + 1 where D is the degree bound
// max(|rho|+len(rho)) - (|mu|+len(mu)); the extra node is a consistency
// check and failing it signals an implementation bug.
inline PolyN average_poly(const SymFunc& F, const Partition& mu, const Rational& alpha) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("average_poly: alpha must be positive");
    if (F.is_zero()) return PolyN();
    int n0 = mu.size() + mu.length();
    int D = std::max(0, F.degree_bound() - n0);
    std::vector<long> xs;
    std::vector<Rational> vs;
    for (int n = n0; n <= n0 + D + 1; ++n) {
        xs.push_back(n);
        vs.push_back(average_at(F, mu, alpha, n));
    }
    std::vector<long> head(xs.begin(), xs.end() - 1);
    std::vector<Rational> headVals(vs.begin(), vs.end() - 1);
    PolyN poly = detail::interpolate(head, headVals);
    if (poly.at(xs.back()) != vs.back())
        throw std::logic_error("average_poly: consistency node mismatch");
    return poly;
}

// p*_k(lambda; alpha): shifted power sum. Rows past len(lambda) cancel.
inline Rational shifted_power_eval(int k, const Partition& la, const Rational& alpha) {
    if (k < 1) throw std::invalid_argument("shifted_power_eval: k must be >= 1");
    Rational total = 0;
    for (int i = 0; i < la.length(); ++i) {
        Rational shift = Rational(i) / alpha;
        total += falling_factorial(Rational(la.part(i)) - shift, k) -
                 falling_factorial(-shift, k);
    }
    return total;
}

// J*_nu(lambda; alpha) = |lambda|^(falling |nu|) <p_1^(|lambda|-|nu|) J_nu, J_lambda> /
// (alpha^|lambda| |lambda|!).
inline Rational shifted_jack_eval(const Partition& nu, const Partition& la, const Rational& alpha) {
    if (nu.size() > la.size()) throw std::invalid_argument("shifted_jack_eval: |nu| > |lambda|");
    int m = nu.size(), n = la.size();
    auto tableNu = JackTable::get(m, alpha);
    auto tableLa = JackTable::get(n, alpha);
    SymFunc ones = SymFunc::one();
    if (n > m) ones = SymFunc::power(Partition(std::vector<int>(static_cast<std::size_t>(n - m), 1)));
    Rational inner = alpha_inner(tableNu->jack_in_p(nu) * ones, tableLa->jack_in_p(la), alpha);
    return falling_factorial(Rational(n), m) * inner /
           (pow_rational(alpha, n) * Rational(factorial(n)));
}

// Refined Catalan number |lambda|! / ((|lambda|-len+1)! prod m_i!).
inline Integer refined_catalan(const Partition& la) {
    if (la.empty()) return 1;
    Integer denom = factorial(la.size() - la.length() + 1);
    int prev = 0;
    for (int i = 0; i < la.length(); ++i) {
        int v = la.part(i);
        if (v != prev) {
            denom *= factorial(la.multiplicity(v));
            prev = v;
        }
    }
    return factorial(la.size()) / denom;
}

// L^lambda_mu for |lambda| = |mu|: sum over tuples of partitions
// lambda^(i) |- mu_i whose union is lambda, of the refined Catalan product.
inline Integer monomial_class_constant(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("monomial_class_constant: sizes differ");
    if (mu.empty()) return la.empty() ? 1 : 0;
    Integer total = 0;
    std::vector<Partition> pieces;
    auto rec = [&](auto&& self, int row) -> void {
        if (row == mu.length()) {
            Partition merged;
            for (const Partition& p : pieces) merged = union_parts(merged, p);
            if (merged == la) {
                Integer prod = 1;
                for (const Partition& p : pieces) prod *= refined_catalan(p);
                total += prod;
            }
            return;
        }
        for (const Partition& p : partitions_of(mu.part(row))) {
            pieces.push_back(p);
            self(self, row + 1);
            pieces.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace jmwg
