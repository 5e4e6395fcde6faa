#pragma once

// Integer partitions and the per-diagram quantities built on them:
// content alphabets, hook products, dimensions, the Jack normalization
// constant j_lambda^(alpha), reduction/unreduction, dominance order.

#include "jmwg/rational.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace jmwg {

// Weakly decreasing sequence of positive integers; the empty sequence is
// the zero partition, printed "(0)". Immutable value with structural
// equality. The total order sorts by size first and lists each size class
// in reverse-lexicographic order, so (n) comes first among partitions of n
// and map iteration is deterministic.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Accepts "3,2,1", "(0)", "0", and "" (the last three are the zero partition).
    static Partition parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty() || s == "(0)" || s == "0" || s == "()") return Partition();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.empty()) throw std::invalid_argument("empty part in partition: '" + std::string(text) + "'");
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad partition part: '" + tok + "'");
            parts.push_back(v);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // 0-based row access; rows past the end are 0.
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }

    int multiplicity(int v) const {
        int c = 0;
        for (int p : parts_) c += (p == v);
        return c;
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<int> conj(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    // Rowwise containment mu_i <= lambda_i.
    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.parts_[i] > parts_[i]) return false;
        return true;
    }

    std::string str() const {
        if (parts_.empty()) return "(0)";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    bool operator<(const Partition& o) const {
        int sa = size(), sb = o.size();
        if (sa != sb) return sa < sb;
        // reverse-lex within a size class: lexicographically larger comes first
        return parts_ > o.parts_;
    }

  private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition reduce(const Partition& la) {
    std::vector<int> parts;
    for (int p : la.parts())
        if (p > 1) parts.push_back(p - 1);
    return Partition(std::move(parts));
}

inline Partition unreduce(const Partition& mu, int n) {
    if (n < mu.size() + mu.length())
        throw std::invalid_argument("unreduce: n < |mu| + len(mu)");
    std::vector<int> parts;
    for (int p : mu.parts()) parts.push_back(p + 1);
    for (int i = mu.size() + mu.length(); i < n; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

// The reduced types valid at level n: reductions of partitions of n,
// i.e. exactly { mu : |mu| + len(mu) <= n }.
inline std::vector<Partition> reduced_types(int n) {
    std::vector<Partition> out;
    for (const Partition& la : partitions_of(n)) out.push_back(reduce(la));
    return out;
}

inline bool dominance_leq(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size()) return false;
    int pm = 0, pl = 0;
    int rows = std::max(mu.length(), la.length());
    for (int i = 0; i < rows; ++i) {
        pm += mu.part(i);
        pl += la.part(i);
        if (pm > pl) return false;
    }
    return true;
}

inline Integer z_value(const Partition& la) {
    Integer z = 1;
    int prev = -1;
    for (int i = 0; i < la.length(); ++i) {
        int v = la.part(i);
        if (v != prev) {
            int m = la.multiplicity(v);
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(m));
            z *= pw * factorial(m);
            prev = v;
        }
    }
    return z;
}

// Alpha-contents (j-1) - (i-1)/alpha, one entry per box, row-major.
inline std::vector<Rational> content_alphabet(const Partition& la, const Rational& alpha) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("content_alphabet: alpha must be positive");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(la.size()));
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j)
            values.push_back(Rational(j) - Rational(i) / alpha);
    return values;
}

// Modified contents 2j - i - 1 (equals twice the alpha=2 contents).
inline std::vector<Rational> modified_content_alphabet(const Partition& la) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(la.size()));
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j)
            values.push_back(Rational(2 * j - i));
    return values;
}

inline Integer hook_product(const Partition& la) {
    const Partition conj = la.conjugate();
    Integer h = 1;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j)
            h *= (la.part(i) - j) + (conj.part(j) - i) - 1;
    return h;
}

// Number of standard Young tableaux, by the hook-length formula.
inline Integer dimension_f(const Partition& la) {
    return factorial(la.size()) / hook_product(la);
}

// Product over boxes of (alpha*arm + leg + 1)(alpha*arm + leg + alpha).
inline Rational j_alpha(const Partition& la, const Rational& alpha) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("j_alpha: alpha must be positive");
    const Partition conj = la.conjugate();
    Rational r = 1;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j) {
            Rational arm = la.part(i) - j - 1;
            Rational leg = conj.part(j) - i - 1;
            r *= (alpha * arm + leg + 1) * (alpha * arm + leg + alpha);
        }
    return r;
}

// Lower-hook product: the J-normalization scalar c_lambda(alpha).
inline Rational lower_hook_product(const Partition& la, const Rational& alpha) {
    const Partition conj = la.conjugate();
    Rational r = 1;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.part(i); ++j) {
            Rational arm = la.part(i) - j - 1;
            Rational leg = conj.part(j) - i - 1;
            r *= alpha * arm + leg + 1;
        }
    return r;
}

// Union of part multisets, sorted decreasing.
inline Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

// lambda + lambda = (2*lambda_1, 2*lambda_2, ...).
inline Partition doubled(const Partition& la) {
    std::vector<int> parts;
    for (int p : la.parts()) parts.push_back(2 * p);
    return Partition(std::move(parts));
}

}  // namespace jmwg
