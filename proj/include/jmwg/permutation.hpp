#pragma once

// Permutations of S_m in one-line notation, perfect matchings on
// {1..2n}, coset types from the two-colored graph, and the canonical
// representatives pi_mu / m_mu used for coefficient extraction.

#include "jmwg/partition.hpp"

#include <numeric>
#include <utility>

namespace jmwg {

class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size() + 1, 0);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
                throw std::invalid_argument("not a permutation in one-line notation");
            seen[v] = 1;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> img(m);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    static Permutation transposition(int m, int a, int b) {
        if (a < 1 || b < 1 || a > m || b > m || a == b)
            throw std::invalid_argument("bad transposition");
        Permutation p = identity(m);
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    // One-line notation, e.g. "5 1 4 10 3 9 7 6 2 8".
    static Permutation parse(std::string_view text) {
        std::istringstream is{std::string(text)};
        std::vector<int> img;
        int v;
        while (is >> v) img.push_back(v);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    int operator()(int i) const { return images_[i - 1]; }

    // (s.compose(t))(i) = s(t(i))
    Permutation compose(const Permutation& t) const {
        if (degree() != t.degree()) throw std::invalid_argument("compose: degree mismatch");
        std::vector<int> img(images_.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = images_[t.images_[i] - 1];
        Permutation r;
        r.images_ = std::move(img);
        return r;
    }

    Permutation inverse() const {
        std::vector<int> img(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i] - 1] = static_cast<int>(i) + 1;
        Permutation r;
        r.images_ = std::move(img);
        return r;
    }

    Partition cycle_type() const {
        std::vector<char> seen(images_.size(), 0);
        std::vector<int> lens;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = 1;
                ++len;
                j = static_cast<std::size_t>(images_[j] - 1);
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end(), std::greater<int>());
        return Partition(std::move(lens));
    }

    Partition reduced_cycle_type() const { return reduce(cycle_type()); }

    // Component half-sizes of the graph with red edges {2i-1,2i} and blue
    // edges {s(2i-1),s(2i)}; requires even degree.
    Partition coset_type() const {
        int m = degree();
        if (m % 2 != 0) throw std::invalid_argument("coset_type: degree must be even");
        std::vector<int> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int i = 0; i < m / 2; ++i) {
            unite(2 * i, 2 * i + 1);
            unite(images_[2 * i] - 1, images_[2 * i + 1] - 1);
        }
        std::map<int, int> compSize;
        for (int v = 0; v < m; ++v) ++compSize[find(v)];
        std::vector<int> halves;
        for (auto& [root, sz] : compSize) halves.push_back(sz / 2);
        std::sort(halves.begin(), halves.end(), std::greater<int>());
        return Partition(std::move(halves));
    }

    Partition reduced_coset_type() const { return reduce(coset_type()); }

    int sign() const {
        int transpositions = degree() - cycle_type().length();
        return transpositions % 2 == 0 ? 1 : -1;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ' ';
            os << images_[i];
        }
        return os.str();
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const {
        if (images_.size() != o.images_.size()) return images_.size() < o.images_.size();
        return images_ < o.images_;
    }

  private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

// All of S_m in lexicographic one-line order.
inline std::vector<Permutation> symmetric_group(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Perfect matching on {1..2n}, held in canonical form: each block (a,b)
// with a < b, blocks sorted by their smaller element.
class Matching {
  public:
    Matching() = default;

    explicit Matching(std::vector<std::pair<int, int>> blocks) : blocks_(std::move(blocks)) {
        for (auto& [a, b] : blocks_)
            if (a > b) std::swap(a, b);
        std::sort(blocks_.begin(), blocks_.end());
        int m = 2 * static_cast<int>(blocks_.size());
        std::vector<char> seen(m + 1, 0);
        for (auto& [a, b] : blocks_) {
            if (a < 1 || b > m || a == b || seen[a] || seen[b])
                throw std::invalid_argument("blocks do not form a perfect matching");
            seen[a] = seen[b] = 1;
        }
    }

    static Matching trivial(int n) {
        std::vector<std::pair<int, int>> blocks;
        for (int i = 1; i <= n; ++i) blocks.emplace_back(2 * i - 1, 2 * i);
        return Matching(std::move(blocks));
    }

    int pairs() const { return static_cast<int>(blocks_.size()); }
    int degree() const { return 2 * pairs(); }
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

    // The embedding into S_2n: images are the canonical flattening.
    Permutation to_permutation() const {
        std::vector<int> img;
        img.reserve(static_cast<std::size_t>(degree()));
        for (auto& [a, b] : blocks_) {
            img.push_back(a);
            img.push_back(b);
        }
        return Permutation(std::move(img));
    }

    Partition coset_type() const { return to_permutation().coset_type(); }
    Partition reduced_coset_type() const { return to_permutation().reduced_coset_type(); }

    std::string str() const {
        std::ostringstream os;
        for (auto& [a, b] : blocks_) os << '{' << a << ',' << b << '}';
        return os.str();
    }

    bool operator==(const Matching& o) const { return blocks_ == o.blocks_; }
    bool operator<(const Matching& o) const { return blocks_ < o.blocks_; }

  private:
    std::vector<std::pair<int, int>> blocks_;
};

inline std::ostream& operator<<(std::ostream& os, const Matching& m) { return os << m.str(); }

// All matchings on {1..2n}: pair the smallest free element with each larger
// free element in ascending order. Deterministic; count is (2n-1)!!.
inline std::vector<Matching> enumerate_matchings(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_matchings: negative n");
    std::vector<Matching> out;
    std::vector<int> free;
    for (int i = 2 * n; i >= 1; --i) free.push_back(i);  // back() = smallest
    std::vector<std::pair<int, int>> blocks;
    auto rec = [&](auto&& self) -> void {
        if (free.empty()) {
            out.push_back(Matching(blocks));
            return;
        }
        int a = free.back();
        free.pop_back();
        for (std::size_t k = free.size(); k-- > 0;) {
            int b = free[k];
            free.erase(free.begin() + static_cast<long>(k));
            blocks.emplace_back(a, b);
            self(self);
            blocks.pop_back();
            free.insert(free.begin() + static_cast<long>(k), b);
        }
        free.push_back(a);
    };
    rec(rec);
    return out;
}

// The canonical matching m_mu: per part mu_r a chain of 2*mu_r + 2 points,
// then trivial blocks. Its reduced coset type is mu.
inline Matching canonical_matching(const Partition& mu, int n) {
    if (n < mu.size() + mu.length())
        throw std::invalid_argument("canonical_matching: n < |mu| + len(mu)");
    std::vector<std::pair<int, int>> blocks;
    int offset = 0;
    for (int r = 0; r < mu.length(); ++r) {
        int w = mu.part(r);
        blocks.emplace_back(offset + 1, offset + 2 * w + 2);
        for (int t = 1; t <= w; ++t) blocks.emplace_back(offset + 2 * t, offset + 2 * t + 1);
        offset += 2 * w + 2;
    }
    for (int a = offset + 1; a < 2 * n; a += 2) blocks.emplace_back(a, a + 1);
    return Matching(std::move(blocks));
}

// The canonical permutation pi_mu in S_n: consecutive cycles of lengths
// mu_r + 1, fixed points after. Its reduced cycle type is mu.
inline Permutation canonical_permutation(const Partition& mu, int n) {
    if (n < mu.size() + mu.length())
        throw std::invalid_argument("canonical_permutation: n < |mu| + len(mu)");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    int offset = 0;
    for (int r = 0; r < mu.length(); ++r) {
        int len = mu.part(r) + 1;
        for (int t = 0; t < len; ++t) img[static_cast<std::size_t>(offset + t)] = offset + 1 + (t + 1) % len;
        offset += len;
    }
    return Permutation(std::move(img));
}

// The action L(s) on matchings: apply s inside every block, re-canonicalize.
inline Matching matching_action(const Permutation& s, const Matching& m) {
    if (s.degree() != m.degree()) throw std::invalid_argument("matching_action: degree mismatch");
    std::vector<std::pair<int, int>> blocks;
    blocks.reserve(static_cast<std::size_t>(m.pairs()));
    for (auto& [a, b] : m.blocks()) blocks.emplace_back(s(a), s(b));
    return Matching(std::move(blocks));
}

inline bool in_hyperoctahedral(const Permutation& s) {
    Partition ct = s.coset_type();
    return ct.length() == s.degree() / 2;  // coset type (1^n)
}

// H_n realized in S_2n: a permutation of the n pairs plus a flip per pair.
inline std::vector<Permutation> hyperoctahedral_elements(int n) {
    std::vector<Permutation> out;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    do {
        for (unsigned long flips = 0; flips < (1ull << n); ++flips) {
            for (int i = 0; i < n; ++i) {
                int target = base[static_cast<std::size_t>(i)];
                bool flip = (flips >> i) & 1;
                img[static_cast<std::size_t>(2 * i)] = flip ? 2 * target : 2 * target - 1;
                img[static_cast<std::size_t>(2 * i + 1)] = flip ? 2 * target - 1 : 2 * target;
            }
            out.push_back(Permutation(img));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace jmwg
