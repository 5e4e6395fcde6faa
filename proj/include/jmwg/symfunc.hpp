#pragma once

// Symmetric functions held internally in the power-sum basis. The m/e/h
// bases convert at construction; evaluation substitutes a finite rational
// alphabet into each p_k.

#include "jmwg/partition.hpp"

#include <cctype>
#include <mutex>

namespace jmwg {

namespace detail {

// p_r * (m-expansion): the coefficient bookkeeping is over distinct part
// values, so this stays small even at high degree.
inline std::map<Partition, Rational> multiply_power_into_monomial(
    int r, const std::map<Partition, Rational>& f) {
    std::map<Partition, Rational> out;
    for (const auto& [mu, c] : f) {
        // extend by a new part r; the coefficient of m_nu counts the equal
        // parts of nu the r could have landed on
        out[union_parts(mu, Partition({r}))] += c * (mu.multiplicity(r) + 1);
        // or grow one existing part v -> v + r, once per distinct value
        int prev = 0;
        for (int i = 0; i < mu.length(); ++i) {
            int v = mu.part(i);
            if (v == prev) continue;
            prev = v;
            std::vector<int> parts = mu.parts();
            parts[static_cast<std::size_t>(i)] = v + r;
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out[Partition(std::move(parts))] += c * (mu.multiplicity(v + r) + 1);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Per-degree cache of the monomial -> power-sum expansions, built once
// under a lock. Every p_rho is expressed in the m basis (triangular with
// respect to dominance) and the system is solved by forward substitution.
inline const std::map<Partition, std::map<Partition, Rational>>& monomial_to_power(int degree) {
    static std::mutex mtx;
    static std::map<int, std::map<Partition, std::map<Partition, Rational>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::vector<Partition> lams = partitions_of(degree);
    std::size_t count = lams.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index[lams[i]] = i;

    // R[rho][lambda]: coefficient of m_lambda in p_rho. Nonzero only when
    // lambda dominates rho, i.e. index(lambda) <= index(rho) in reverse-lex.
    std::vector<std::vector<Rational>> R(count, std::vector<Rational>(count, Rational(0)));
    for (std::size_t r = 0; r < count; ++r) {
        std::map<Partition, Rational> expansion{{Partition(), Rational(1)}};
        for (int part : lams[r].parts()) expansion = multiply_power_into_monomial(part, expansion);
        for (const auto& [la, c] : expansion) R[r][index.at(la)] = c;
    }

    // Solve m_lambda = sum_rho S[lambda][rho] p_rho from R*S^T = I
    // (forward substitution down the triangle).
    std::map<Partition, std::map<Partition, Rational>> table;
    for (std::size_t l = 0; l < count; ++l) {
        std::vector<Rational> s(count, Rational(0));
        for (std::size_t r = count; r-- > 0;) {
            Rational rhs = (r == l) ? Rational(1) : Rational(0);
            for (std::size_t k = r + 1; k < count; ++k) rhs -= R[k][r] * s[k];
            if (R[r][r] == 0) throw std::logic_error("transition matrix not triangular");
            s[r] = rhs / R[r][r];
        }
        std::map<Partition, Rational> row;
        for (std::size_t r = 0; r < count; ++r)
            if (s[r] != 0) row[lams[r]] = s[r];
        table[lams[l]] = std::move(row);
    }
    return cache[degree] = std::move(table);
}

}  // namespace detail

enum class Basis { m, e, h, p };

class SymFunc {
  public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }

    static SymFunc one() {
        SymFunc f;
        f.terms_[Partition()] = 1;
        return f;
    }

    static SymFunc power(const Partition& rho) {
        SymFunc f;
        f.terms_[rho] = 1;
        return f;
    }

    // e_lambda = prod e_{lambda_i}; e_k = sum over rho |- k of
    // (-1)^(k - len) p_rho / z_rho, and h_k the same without signs.
    static SymFunc elementary(const Partition& la) { return multiplicative(la, true); }
    static SymFunc complete(const Partition& la) { return multiplicative(la, false); }
    static SymFunc elementary(int k) { return elementary(row(k)); }
    static SymFunc complete(int k) { return complete(row(k)); }

    static SymFunc monomial(const Partition& la) {
        SymFunc f;
        if (la.empty()) return one();
        for (const auto& [rho, c] : detail::monomial_to_power(la.size()).at(la)) f.terms_[rho] = c;
        return f;
    }

    static SymFunc basis(Basis b, const Partition& la) {
        switch (b) {
            case Basis::m: return monomial(la);
            case Basis::e: return elementary(la);
            case Basis::h: return complete(la);
            case Basis::p: return power(la);
        }
        throw std::logic_error("unreachable");
    }

    static SymFunc parse(const std::string& text);

    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& rho) const {
        auto it = terms_.find(rho);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // max |rho| over the support
    int p_degree() const {
        int d = 0;
        for (const auto& [rho, c] : terms_) d = std::max(d, rho.size());
        return d;
    }

    // max |rho| + len(rho) over the support; drives interpolation counts
    int degree_bound() const {
        int d = 0;
        for (const auto& [rho, c] : terms_) d = std::max(d, rho.size() + rho.length());
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [rho, c] : terms_) {
            if (d >= 0 && rho.size() != d) return false;
            d = rho.size();
        }
        return true;
    }

    std::vector<int> component_degrees() const {
        std::vector<int> ds;
        for (const auto& [rho, c] : terms_)
            if (std::find(ds.begin(), ds.end(), rho.size()) == ds.end()) ds.push_back(rho.size());
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    SymFunc homogeneous_component(int d) const {
        SymFunc f;
        for (const auto& [rho, c] : terms_)
            if (rho.size() == d) f.terms_[rho] = c;
        return f;
    }

    Rational evaluate(const std::vector<Rational>& alphabet) const {
        std::map<int, Rational> powerSums;  // k -> sum a^k
        Rational total = 0;
        for (const auto& [rho, c] : terms_) {
            Rational term = c;
            for (int part : rho.parts()) {
                auto it = powerSums.find(part);
                if (it == powerSums.end()) {
                    Rational s = 0;
                    for (const Rational& a : alphabet) s += pow_rational(a, part);
                    it = powerSums.emplace(part, s).first;
                }
                term *= it->second;
            }
            total += term;
        }
        return total;
    }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [rho, c] : o.terms_) {
            auto it = terms_.find(rho);
            if (it == terms_.end()) {
                if (c != 0) terms_[rho] = c;
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    SymFunc operator+(const SymFunc& o) const {
        SymFunc r = *this;
        r += o;
        return r;
    }

    SymFunc operator-() const { return scaled(-1); }
    SymFunc operator-(const SymFunc& o) const { return *this + o.scaled(-1); }

    SymFunc scaled(const Rational& c) const {
        SymFunc f;
        if (c == 0) return f;
        for (const auto& [rho, a] : terms_) f.terms_[rho] = a * c;
        return f;
    }

    // p_rho * p_pi = p_{rho u pi}
    SymFunc operator*(const SymFunc& o) const {
        SymFunc f;
        for (const auto& [rho, a] : terms_)
            for (const auto& [pi, b] : o.terms_) {
                Partition key = union_parts(rho, pi);
                auto it = f.terms_.find(key);
                if (it == f.terms_.end())
                    f.terms_[key] = a * b;
                else {
                    it->second += a * b;
                    if (it->second == 0) f.terms_.erase(it);
                }
            }
        return f;
    }

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [rho, c] : terms_) {
            Rational a = c;
            if (first) {
                if (sgn(a) < 0) {
                    os << '-';
                    a = -a;
                }
                first = false;
            } else if (sgn(a) < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
            os << a.get_str() << "*p[" << (rho.empty() ? "0" : rho.str()) << "]";
        }
        return os.str();
    }

  private:
    static Partition row(int k) {
        if (k < 0) throw std::invalid_argument("negative degree");
        return k == 0 ? Partition() : Partition({k});
    }

    static SymFunc multiplicative(const Partition& la, bool signs) {
        SymFunc f = one();
        for (int part : la.parts()) {
            SymFunc g;
            for (const Partition& rho : partitions_of(part)) {
                Rational c = Rational(1) / Rational(z_value(rho));
                if (signs && (part - rho.length()) % 2 != 0) c = -c;
                g.terms_[rho] = c;
            }
            f = f * g;
        }
        return f;
    }

    std::map<Partition, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

namespace detail {

// Grammar:  expr := ['-'] term (('+'|'-') term)*
//           term := factor ('*' factor)*
//           factor := rational | atom | '(' expr ')'
//           atom := ('m'|'e'|'h'|'p') '[' parts ']'
class SymFuncParser {
  public:
    explicit SymFuncParser(const std::string& text) : s_(text) {}

    SymFunc parse() {
        SymFunc f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

  private:
    SymFunc expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        SymFunc f = term();
        if (neg) f = -f;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                SymFunc t = term();
                f = (c == '+') ? f + t : f - t;
            } else {
                return f;
            }
        }
    }

    SymFunc term() {
        SymFunc f = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                f = f * factor();
            } else {
                return f;
            }
        }
    }

    SymFunc factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            SymFunc f = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SymFunc::one().scaled(number());
        if (c == 'm' || c == 'e' || c == 'h' || c == 'p') {
            ++pos_;
            skip_ws();
            if (peek() != '[') fail("expected '['");
            ++pos_;
            std::size_t close = s_.find(']', pos_);
            if (close == std::string::npos) fail("expected ']'");
            Partition la = Partition::parse(s_.substr(pos_, close - pos_));
            pos_ = close + 1;
            switch (c) {
                case 'm': return SymFunc::monomial(la);
                case 'e': return SymFunc::elementary(la);
                case 'h': return SymFunc::complete(la);
                default: return la.empty() ? SymFunc::one() : SymFunc::power(la);
            }
        }
        fail("expected coefficient or basis atom");
        return SymFunc();  // unreachable
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return rational_from_string(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SymFunc SymFunc::parse(const std::string& text) { return detail::SymFuncParser(text).parse(); }

}  // namespace jmwg
