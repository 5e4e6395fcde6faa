#pragma once

// Sparse exact group algebra of S_m, Jucys-Murphy elements, the
// hyperoctahedral sums P_n / P_n^eps, and the brute-force class and
// double-coset expansions that anchor every coefficient identity.

#include "jmwg/hecke.hpp"
#include "jmwg/permutation.hpp"
#include "jmwg/symfunc.hpp"

#include <cstdlib>
#include <unordered_map>

namespace jmwg {

// Cap for operations that materialize S_{2n}-scale supports. Default 4;
// override with JMWG_BRUTE_FORCE_MAX or set_brute_force_cap (n = 5 needs
// on the order of a few GB if full double-coset expansions are requested).
inline int& brute_force_cap_ref() {
    static int cap = [] {
        if (const char* env = std::getenv("JMWG_BRUTE_FORCE_MAX")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 4;
    }();
    return cap;
}

inline int brute_force_cap() { return brute_force_cap_ref(); }
inline void set_brute_force_cap(int n) { brute_force_cap_ref() = n; }

class GroupAlgebraElement {
  public:
    using Terms = std::unordered_map<Permutation, Rational, PermutationHash>;

    explicit GroupAlgebraElement(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static GroupAlgebraElement zero(int degree) { return GroupAlgebraElement(degree); }

    static GroupAlgebraElement unit(int degree) {
        GroupAlgebraElement e(degree);
        e.terms_[Permutation::identity(degree)] = 1;
        return e;
    }

    static GroupAlgebraElement single(const Permutation& p, const Rational& c = 1) {
        GroupAlgebraElement e(p.degree());
        if (c != 0) e.terms_[p] = c;
        return e;
    }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Permutation& p, const Rational& c) {
        if (p.degree() != degree_) throw std::invalid_argument("add_term: degree mismatch");
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        if (o.degree_ != degree_) throw std::invalid_argument("sum: degree mismatch");
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r = *this;
        r += o;
        return r;
    }

    GroupAlgebraElement scaled(const Rational& c) const {
        GroupAlgebraElement r(degree_);
        if (c == 0) return r;
        for (const auto& [p, a] : terms_) r.terms_[p] = a * c;
        return r;
    }

    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const { return *this + o.scaled(-1); }

    // Convolution product.
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        if (o.degree_ != degree_) throw std::invalid_argument("product: degree mismatch");
        GroupAlgebraElement r(degree_);
        for (const auto& [p, a] : terms_)
            for (const auto& [q, b] : o.terms_) r.add_term(p.compose(q), a * b);
        return r;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    // "coeff<TAB>one-line permutation", sorted by permutation.
    std::string dump() const {
        std::vector<std::pair<Permutation, Rational>> rows(terms_.begin(), terms_.end());
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::ostringstream os;
        for (const auto& [p, c] : rows) os << c.get_str() << '\t' << p.str() << '\n';
        return os.str();
    }

  private:
    int degree_;
    Terms terms_;
};

// J_1 = 0, J_k = sum of transpositions (i k) for i < k, inside S_m.
inline GroupAlgebraElement jucys_murphy(int k, int m) {
    if (k < 1 || k > m) throw std::invalid_argument("jucys_murphy: k out of range");
    GroupAlgebraElement e(m);
    for (int i = 1; i < k; ++i) e.add_term(Permutation::transposition(m, i, k), 1);
    return e;
}

// P_n (unsigned) or P_n^eps (signed) in S_2n.
inline GroupAlgebraElement hyperoctahedral_sum(int n, bool with_sign = false) {
    if (n < 1) throw std::invalid_argument("hyperoctahedral_sum: n must be >= 1");
    GroupAlgebraElement e(2 * n);
    for (const Permutation& z : hyperoctahedral_elements(n))
        e.add_term(z, with_sign ? Rational(z.sign()) : Rational(1));
    return e;
}

namespace detail {

// Powers of one commuting family member, memoized per call site.
class JmPowers {
  public:
    JmPowers(std::vector<GroupAlgebraElement> gens, int degree)
        : gens_(std::move(gens)), degree_(degree) {}

    int count() const { return static_cast<int>(gens_.size()); }
    int degree() const { return degree_; }

    const GroupAlgebraElement& power(int var, int exp) {
        auto key = std::make_pair(var, exp);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        GroupAlgebraElement value = exp == 1
            ? gens_[static_cast<std::size_t>(var)]
            : power(var, exp - 1) * gens_[static_cast<std::size_t>(var)];
        return cache_.emplace(key, std::move(value)).first->second;
    }

  private:
    std::vector<GroupAlgebraElement> gens_;
    int degree_;
    std::map<std::pair<int, int>, GroupAlgebraElement> cache_;
};

inline JmPowers odd_jm_family(int n) {
    std::vector<GroupAlgebraElement> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(jucys_murphy(2 * k - 1, 2 * n));
    return JmPowers(std::move(gens), 2 * n);
}

inline JmPowers all_jm_family(int n) {
    std::vector<GroupAlgebraElement> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(jucys_murphy(k, n));
    return JmPowers(std::move(gens), n);
}

// m_lambda(x_1..x_v) as a sum over distinct exponent assignments,
// evaluated factor by factor.
inline GroupAlgebraElement monomial_at(JmPowers& family, const Partition& la) {
    GroupAlgebraElement total(family.degree());
    if (la.length() > family.count()) return total;
    if (la.empty()) return GroupAlgebraElement::unit(family.degree());
    std::vector<int> exps(static_cast<std::size_t>(family.count()), 0);
    std::copy(la.parts().begin(), la.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
        GroupAlgebraElement term = GroupAlgebraElement::unit(family.degree());
        bool zero = false;
        for (int v = 0; v < family.count() && !zero; ++v)
            if (exps[static_cast<std::size_t>(v)] > 0) {
                const GroupAlgebraElement& pw = family.power(v, exps[static_cast<std::size_t>(v)]);
                if (pw.is_zero()) zero = true;          // J_1 = 0 kills the term
                else term = term * pw;
            }
        if (!zero) total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

// Power sums of the family, then arbitrary F through its p-expansion.
inline GroupAlgebraElement symfunc_at(JmPowers& family, const SymFunc& F) {
    GroupAlgebraElement total(family.degree());
    std::map<int, GroupAlgebraElement> powerSums;
    auto power_sum = [&](int r) -> const GroupAlgebraElement& {
        auto it = powerSums.find(r);
        if (it != powerSums.end()) return it->second;
        GroupAlgebraElement s(family.degree());
        for (int v = 0; v < family.count(); ++v) s += family.power(v, r);
        return powerSums.emplace(r, std::move(s)).first->second;
    };
    for (const auto& [rho, c] : F.terms()) {
        GroupAlgebraElement term = GroupAlgebraElement::unit(family.degree()).scaled(c);
        for (int part : rho.parts()) term = term * power_sum(part);
        total += term;
    }
    return total;
}

}  // namespace detail

// F(J_1, J_3, ..., J_{2n-1}) in C[S_2n]. Callers multiply by P_n themselves
// or extract coefficients directly.
inline GroupAlgebraElement eval_symfunc_at_odd_jm(const SymFunc& F, int n) {
    if (n > brute_force_cap())
        throw std::invalid_argument("eval_symfunc_at_odd_jm: n exceeds the brute-force cap");
    auto family = detail::odd_jm_family(n);
    return detail::symfunc_at(family, F);
}

// F(J_1, ..., J_n) in C[S_n].
inline GroupAlgebraElement eval_symfunc_at_all_jm(const SymFunc& F, int n) {
    if (n > 2 * brute_force_cap())
        throw std::invalid_argument("eval_symfunc_at_all_jm: n exceeds the brute-force cap");
    auto family = detail::all_jm_family(n);
    return detail::symfunc_at(family, F);
}

// m_lambda built directly from exponent assignments (no basis conversion);
// this keeps the oracle independent of the m -> p machinery.
inline GroupAlgebraElement eval_monomial_at_odd_jm(const Partition& la, int n) {
    auto family = detail::odd_jm_family(n);
    return detail::monomial_at(family, la);
}

inline GroupAlgebraElement eval_monomial_at_all_jm(const Partition& la, int n) {
    auto family = detail::all_jm_family(n);
    return detail::monomial_at(family, la);
}

enum class VerifyMode { sampled, exhaustive };

struct NonCentralError : std::runtime_error {
    Permutation witness_a, witness_b;
    NonCentralError(std::string what, Permutation a, Permutation b)
        : std::runtime_error(std::move(what)), witness_a(std::move(a)), witness_b(std::move(b)) {}
};

namespace detail {

inline void verify_central(const GroupAlgebraElement& a, VerifyMode mode) {
    int n = a.degree();
    if (mode == VerifyMode::exhaustive) {
        std::map<Partition, Rational> seen;
        std::map<Partition, Permutation> rep;
        for (const Permutation& p : symmetric_group(n)) {
            Partition t = p.cycle_type();
            Rational c = a.coefficient(p);
            auto it = seen.find(t);
            if (it == seen.end()) {
                seen[t] = c;
                rep.emplace(t, p);
            } else if (it->second != c) {
                throw NonCentralError("element is not central", rep.at(t), p);
            }
        }
        return;
    }
    for (int i = 1; i < n; ++i) {
        Permutation g = Permutation::transposition(n, i, i + 1);
        for (const auto& [p, c] : a.terms()) {
            Permutation conj = g.compose(p).compose(g);
            if (a.coefficient(conj) != c)
                throw NonCentralError("element is not central", p, conj);
        }
    }
}

inline void verify_biinvariant(const GroupAlgebraElement& a, VerifyMode mode) {
    int two_n = a.degree();
    if (two_n % 2 != 0) throw std::invalid_argument("coset_expansion: degree must be even");
    int n = two_n / 2;
    if (mode == VerifyMode::exhaustive) {
        if (n > brute_force_cap())
            throw std::invalid_argument("exhaustive biinvariance check exceeds the brute-force cap");
        std::map<Partition, Rational> seen;
        std::map<Partition, Permutation> rep;
        for (const Permutation& p : symmetric_group(two_n)) {
            Partition t = p.coset_type();
            Rational c = a.coefficient(p);
            auto it = seen.find(t);
            if (it == seen.end()) {
                seen[t] = c;
                rep.emplace(t, p);
            } else if (it->second != c) {
                throw NonCentralError("element is not biinvariant", rep.at(t), p);
            }
        }
        return;
    }
    std::vector<Permutation> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Permutation::transposition(two_n, 2 * i - 1, 2 * i));
    for (int i = 1; i < n; ++i)
        gens.push_back(Permutation::transposition(two_n, 2 * i - 1, 2 * i + 1)
                           .compose(Permutation::transposition(two_n, 2 * i, 2 * i + 2)));
    for (const Permutation& g : gens)
        for (const auto& [p, c] : a.terms()) {
            Permutation left = g.compose(p);
            if (a.coefficient(left) != c) throw NonCentralError("element is not biinvariant", p, left);
            Permutation right = p.compose(g);
            if (a.coefficient(right) != c) throw NonCentralError("element is not biinvariant", p, right);
        }
}

}  // namespace detail

// Class expansion of a central element: keys are reduced cycle types,
// a = sum coeff(mu) * c_mu(n).
inline std::map<Partition, Rational> class_expansion(const GroupAlgebraElement& a,
                                                     VerifyMode mode = VerifyMode::sampled) {
    detail::verify_central(a, mode);
    int n = a.degree();
    std::map<Partition, Rational> out;
    for (const Partition& mu : reduced_types(n)) {
        Rational c = a.coefficient(canonical_permutation(mu, n));
        if (c != 0) out[mu] = c;
    }
    return out;
}

// Double-coset expansion of an H_n-biinvariant element in the psi basis.
inline HeckeElement coset_expansion(const GroupAlgebraElement& a,
                                    VerifyMode mode = VerifyMode::sampled) {
    detail::verify_biinvariant(a, mode);
    int n = a.degree() / 2;
    HeckeElement h(n);
    for (const Partition& mu : reduced_types(n))
        h.set(mu, a.coefficient(canonical_matching(mu, n).to_permutation()));
    return h;
}

// M^lambda_mu(n) as the multiplicity sum over { sigma : L(sigma) m_0 = m_mu },
// i.e. over the coset m_mu H_n. Avoids the P_n product entirely.
inline Rational m_coefficient_fast(const Partition& la, const Partition& mu, int n) {
    if (n < mu.size() + mu.length())
        throw std::invalid_argument("m_coefficient_fast: n < |mu| + len(mu)");
    GroupAlgebraElement w = eval_monomial_at_odd_jm(la, n);
    Permutation base = canonical_matching(mu, n).to_permutation();
    Rational total = 0;
    for (const Permutation& z : hyperoctahedral_elements(n)) total += w.coefficient(base.compose(z));
    return total;
}

// c_mu(n): sum of the permutations in S_n of reduced cycle type mu.
inline GroupAlgebraElement class_sum(const Partition& mu, int n) {
    GroupAlgebraElement e(n);
    for (const Permutation& p : symmetric_group(n))
        if (p.reduced_cycle_type() == mu) e.add_term(p, 1);
    return e;
}

// psi_mu(n): sum of the permutations in S_2n of reduced coset type mu;
// the signed variant weights by sgn.
inline GroupAlgebraElement psi_element(const Partition& mu, int n, bool with_sign = false) {
    if (n > brute_force_cap())
        throw std::invalid_argument("psi_element: n exceeds the brute-force cap");
    GroupAlgebraElement e(2 * n);
    for (const Permutation& p : symmetric_group(2 * n))
        if (p.reduced_coset_type() == mu) e.add_term(p, with_sign ? Rational(p.sign()) : Rational(1));
    return e;
}

}  // namespace jmwg
