#include "jmwg/haar_mc.hpp"  // Rng drives the deterministic random alphabets
#include "jmwg/series.hpp"
#include "jmwg/symfunc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jmwg;

namespace {

// Direct monomial evaluation: sum over distinct arrangements of the
// exponents, independent of the power-sum conversion.
Rational monomial_direct(const Partition& la, const std::vector<Rational>& alphabet) {
    if (la.length() > static_cast<int>(alphabet.size())) return 0;
    std::vector<int> exps(alphabet.size(), 0);
    std::copy(la.parts().begin(), la.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (exps[i] > 0) term *= pow_rational(alphabet[i], exps[i]);
        total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

std::vector<Rational> random_alphabet(Rng& rng, int size) {
    std::vector<Rational> a;
    for (int i = 0; i < size; ++i) {
        long num = static_cast<long>(rng.next() % 21) - 10;
        long den = static_cast<long>(rng.next() % 6) + 1;
        a.push_back(make_rational(num, den));
    }
    return a;
}

}  // namespace

TEST_CASE("basis elements in the power-sum basis") {
    CHECK(SymFunc::power(Partition({2})).terms().size() == 1);
    SymFunc e2 = SymFunc::elementary(2);
    CHECK(e2.coefficient(Partition({1, 1})) == Rational(1, 2));
    CHECK(e2.coefficient(Partition({2})) == Rational(-1, 2));
    SymFunc h2 = SymFunc::complete(2);
    CHECK(h2.coefficient(Partition({1, 1})) == Rational(1, 2));
    CHECK(h2.coefficient(Partition({2})) == Rational(1, 2));
    CHECK(SymFunc::elementary(0) == SymFunc::one());
    CHECK(SymFunc::complete(0) == SymFunc::one());
    CHECK(SymFunc::monomial(Partition()) == SymFunc::one());
}

TEST_CASE("arithmetic in the power-sum basis") {
    SymFunc p1 = SymFunc::power(Partition({1}));
    CHECK(p1 * p1 == SymFunc::power(Partition({1, 1})));
    CHECK(SymFunc::complete(2) + SymFunc::elementary(2) == SymFunc::power(Partition({1, 1})));
    SymFunc e1 = SymFunc::elementary(1);
    CHECK(e1 * e1 - SymFunc::elementary(2).scaled(2) == SymFunc::power(Partition({2})));
}

TEST_CASE("parser") {
    CHECK(SymFunc::parse("h[3]") == SymFunc::complete(3));
    CHECK(SymFunc::parse("1/2*p[2] + 1/2*p[1,1]") == SymFunc::complete(2));
    CHECK(SymFunc::parse("m[2,1]") ==
          SymFunc::power(Partition({2, 1})) - SymFunc::power(Partition({3})));
    CHECK(SymFunc::parse("-p[1] + p[1]").is_zero());
    CHECK(SymFunc::parse("2*e[2]*e[1]") == SymFunc::elementary(Partition({2, 1})).scaled(2));
    CHECK(SymFunc::parse("(p[1] + p[2]) * p[1]") ==
          SymFunc::power(Partition({1, 1})) + SymFunc::power(Partition({2, 1})));
    CHECK_THROWS_AS(SymFunc::parse("q[2]"), std::invalid_argument);
    CHECK_THROWS_AS(SymFunc::parse("p[2] +"), std::invalid_argument);
    CHECK_THROWS_AS(SymFunc::parse("p[2"), std::invalid_argument);
    // parse(str()) round trip over a small sample
    for (const SymFunc& f :
         {SymFunc::monomial(Partition({3, 1})), SymFunc::complete(4) - SymFunc::elementary(3),
          SymFunc::zero(), SymFunc::one().scaled(Rational(-7, 3))})
        CHECK((f.is_zero() || SymFunc::parse(f.str()) == f));
}

TEST_CASE("evaluation on finite alphabets") {
    CHECK(SymFunc::elementary(3).evaluate(content_alphabet(Partition({2, 1}), 1)) == 0);
    CHECK(SymFunc::power(Partition({2})).evaluate(modified_content_alphabet(Partition({2, 2, 1}))) ==
          10);
    CHECK(SymFunc::complete(1).evaluate(content_alphabet(Partition({2, 2}), 1)) == 0);
    CHECK(SymFunc::one().evaluate({}) == 1);
    CHECK(SymFunc::power(Partition({3})).evaluate({}) == 0);
}

TEST_CASE("monomial conversion against direct evaluation") {
    Rng rng(20240811);
    for (int size = 0; size <= 6; ++size)
        for (const Partition& la : partitions_of(size)) {
            SymFunc m = SymFunc::monomial(la);
            for (int trial = 0; trial < 20; ++trial) {
                auto a = random_alphabet(rng, 1 + static_cast<int>(rng.next() % 8));
                CHECK(m.evaluate(a) == monomial_direct(la, a));
            }
        }
}

TEST_CASE("generating function identities on a finite alphabet") {
    const int order = 7;
    std::vector<Rational> x = {Rational(1), Rational(-2), Rational(1, 2), Rational(3), Rational(-1, 3)};
    TruncatedSeries eSide = TruncatedSeries::constant(1, order);
    TruncatedSeries prod = TruncatedSeries::constant(1, order);
    for (const Rational& xi : x) {
        TruncatedSeries lin = TruncatedSeries::constant(1, order);
        lin.set(1, -xi);
        prod = prod * lin;
    }
    TruncatedSeries hSide(order);
    for (int k = 0; k < order; ++k) {
        hSide.set(k, SymFunc::complete(k).evaluate(x));
        Rational ek = SymFunc::elementary(k).evaluate(x);
        eSide.set(k, k % 2 == 0 ? ek : -ek);
    }
    CHECK(eSide == prod);                                       // sum (-1)^k e_k u^k = prod(1 - x_i u)
    CHECK(hSide * prod == TruncatedSeries::constant(1, order));  // h-series is its inverse
}

TEST_CASE("complete functions sum the monomials") {
    for (int k = 0; k <= 6; ++k) {
        SymFunc sum;
        for (const Partition& la : partitions_of(k)) sum += SymFunc::monomial(la);
        CHECK(sum == SymFunc::complete(k));
    }
}

TEST_CASE("degrees and components") {
    SymFunc f = SymFunc::complete(3) + SymFunc::one().scaled(5);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.component_degrees() == std::vector<int>{0, 3});
    CHECK(f.homogeneous_component(3) == SymFunc::complete(3));
    CHECK(f.p_degree() == 3);
    CHECK(f.degree_bound() == 6);  // p_{1,1,1} carries |rho| + len = 6
    CHECK(SymFunc::monomial(Partition({2, 1})).degree_bound() == 5);
}
