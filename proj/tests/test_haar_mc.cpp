#include "jmwg/haar_mc.hpp"
#include "jmwg/weingarten.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jmwg;

namespace {

double det(const OrthogonalSample& g) {
    int N = g.N;
    std::vector<std::vector<double>> m(N, std::vector<double>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = g.at(i + 1, j + 1);
    double d = 1.0;
    for (int c = 0; c < N; ++c) {
        int pivot = c;
        for (int r = c + 1; r < N; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < N; ++r) {
            double f = m[r][c] / m[c][c];
            for (int k = c; k < N; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

}  // namespace

TEST_CASE("samples are orthogonal") {
    for (int N : {1, 3, 6, 8})
        for (std::uint64_t seed : {1ull, 42ull, 9999ull}) {
            OrthogonalSample g = sample_orthogonal(N, seed);
            double residual = 0;
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b) {
                    double dot = 0;
                    for (int i = 1; i <= N; ++i) dot += g.at(i, a) * g.at(i, b);
                    residual = std::max(residual, std::abs(dot - (a == b ? 1.0 : 0.0)));
                }
            CHECK(residual < 1e-10);
            CHECK(std::abs(std::abs(det(g)) - 1.0) < 1e-8);
        }
    CHECK_THROWS_AS(sample_orthogonal(0, 1), std::invalid_argument);
}

TEST_CASE("N = 1 samples hit both signs evenly") {
    long plus = 0;
    const long trials = 10000;
    for (long s = 0; s < trials; ++s) {
        double v = sample_orthogonal(1, static_cast<std::uint64_t>(s)).at(1, 1);
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        if (v > 0) ++plus;
    }
    double freq = static_cast<double>(plus) / static_cast<double>(trials);
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("sampling is deterministic in the seed") {
    McEstimate a = mc_moment({1, 1}, {1, 1}, 3, 500, 7);
    McEstimate b = mc_moment({1, 1}, {1, 1}, 3, 500, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    McEstimate c = mc_moment({1, 1}, {1, 1}, 3, 500, 8);
    CHECK(a.mean != c.mean);
}

TEST_CASE("estimates bracket the exact moments") {
    struct Case {
        std::vector<int> i, j;
        int N;
    };
    for (const Case& mc : {Case{{1, 1}, {1, 1}, 4}, Case{{1, 1}, {1, 2}, 4},
                           Case{{1, 1, 2, 2}, {1, 1, 2, 2}, 4}}) {
        Rational exact = integrate_monomial(mc.i, mc.j, mc.N);
        McEstimate est = mc_moment(mc.i, mc.j, mc.N, 20000, 20240811);
        double z = (est.mean - exact.get_d()) / est.stderr_;
        CHECK(std::abs(z) <= 4.0);
    }
    CHECK_THROWS_AS(mc_moment({1, 1, 1}, {1, 1, 1}, 4, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_moment({1, 9}, {1, 1}, 4, 100, 1), std::invalid_argument);
}
