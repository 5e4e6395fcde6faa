#pragma once

// Monte Carlo sampling of Haar measure on O(N). Floating point stays
// quarantined here; the exact modules never see a double.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jmwg {

// xoshiro256++ seeded through splitmix64: one deterministic cross-platform
// stream per seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in (0, 1)
    double uniform() {
        double u;
        do {
            u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        } while (u <= 0.0);
        return u;
    }

    // standard normal by the polar method
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

  private:
    std::uint64_t state_[4] = {};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct OrthogonalSample {
    int N = 0;
    std::vector<double> entries;  // row-major

    double at(int i, int j) const { return entries[static_cast<std::size_t>((i - 1) * N + (j - 1))]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>((i - 1) * N + (j - 1))]; }
};

// Gaussian matrix orthonormalized column by column; the triangular
// factor's diagonal is the (positive) column norm, which makes the result
// exactly Haar distributed. A second orthogonalization pass keeps the
// residual below 1e-10 even for unlucky draws.
inline OrthogonalSample sample_orthogonal(int N, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("sample_orthogonal: N must be >= 1");
    Rng rng(seed);
    OrthogonalSample g;
    g.N = N;
    g.entries.resize(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) g.at(i, j) = rng.normal();

    auto column_dot = [&](int a, int b) {
        double s = 0;
        for (int i = 1; i <= N; ++i) s += g.at(i, a) * g.at(i, b);
        return s;
    };
    for (int j = 1; j <= N; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 1; k < j; ++k) {
                double d = column_dot(k, j);
                for (int i = 1; i <= N; ++i) g.at(i, j) -= d * g.at(i, k);
            }
        double norm = std::sqrt(column_dot(j, j));
        for (int i = 1; i <= N; ++i) g.at(i, j) /= norm;
    }
    return g;
}

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
};

// Sample mean and standard error of prod_k g_{i(k) j(k)} over Haar draws.
// Sample s uses the stream seeded with seed + s, so (seed, samples) fully
// determines the estimate and blocks can be farmed out by seed range.
inline McEstimate mc_moment(const std::vector<int>& i, const std::vector<int>& j, int N,
                            long samples, std::uint64_t seed) {
    if (i.size() != j.size()) throw std::invalid_argument("mc_moment: index lengths differ");
    if (i.size() % 2 != 0) throw std::invalid_argument("mc_moment: odd-length index sequences rejected");
    for (int v : i)
        if (v < 1 || v > N) throw std::invalid_argument("mc_moment: row index out of range");
    for (int v : j)
        if (v < 1 || v > N) throw std::invalid_argument("mc_moment: column index out of range");
    if (samples < 2) throw std::invalid_argument("mc_moment: need at least 2 samples");

    double sum = 0, sumsq = 0;
    for (long s = 0; s < samples; ++s) {
        OrthogonalSample g = sample_orthogonal(N, seed + static_cast<std::uint64_t>(s));
        double prod = 1.0;
        for (std::size_t k = 0; k < i.size(); ++k) prod *= g.at(i[k], j[k]);
        sum += prod;
        sumsq += prod * prod;
    }
    McEstimate est;
    est.samples = samples;
    est.mean = sum / static_cast<double>(samples);
    double var = (sumsq - static_cast<double>(samples) * est.mean * est.mean) /
                 static_cast<double>(samples - 1);
    est.stderr_ = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    return est;
}

}  // namespace jmwg
