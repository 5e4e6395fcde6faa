#include "jmwg/jack.hpp"
#include "jmwg/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jmwg;

TEST_CASE("monomial expansions") {
    CHECK(jack_in_monomial(Partition({1}), 2) ==
          std::map<Partition, Rational>{{Partition({1}), 1}});
    CHECK(jack_in_monomial(Partition({2}), 2) ==
          std::map<Partition, Rational>{{Partition({2}), 3}, {Partition({1, 1}), 2}});
    CHECK(jack_in_monomial(Partition({1, 1}), Rational(5, 7)) ==
          std::map<Partition, Rational>{{Partition({1, 1}), 2}});
    CHECK_THROWS_AS(jack_in_monomial(Partition({2}), Rational(-1)), std::invalid_argument);
}

TEST_CASE("triangularity and normalization of the monomial expansion") {
    for (const Rational& alpha : {Rational(1, 2), Rational(2)})
        for (int n = 1; n <= 6; ++n) {
            Partition ones(std::vector<int>(n, 1));
            for (const Partition& la : partitions_of(n)) {
                auto m = jack_in_monomial(la, alpha);
                for (const auto& [mu, c] : m) CHECK(dominance_leq(mu, la));
                CHECK(m.at(la) != 0);
                CHECK(m.at(ones) == Rational(factorial(n)));  // J-normalization
            }
        }
}

TEST_CASE("theta coefficients") {
    CHECK(theta(Partition({2}), Partition({2}), 2) == 2);
    CHECK(theta(Partition({2}), Partition({2}), Rational(5, 7)) == Rational(5, 7));
    for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(5, 7)})
        CHECK(theta(Partition({1, 1}), Partition({2}), alpha) == -1);
    for (const Rational& alpha : {Rational(1, 2), Rational(2)})
        for (int n = 0; n <= 5; ++n) {
            Partition ones = n == 0 ? Partition() : Partition(std::vector<int>(n, 1));
            for (const Partition& la : partitions_of(n)) CHECK(theta(la, ones, alpha) == 1);
        }
    CHECK_THROWS_AS(theta(Partition({2}), Partition({1}), 2), std::invalid_argument);
}

TEST_CASE("orthogonality of the Jack family") {
    for (const Rational& alpha : {Rational(1, 2), Rational(2), Rational(3)})
        for (int n = 0; n <= 5; ++n) {
            auto table = JackTable::get(n, alpha);
            for (const Partition& la : partitions_of(n))
                for (const Partition& nu : partitions_of(n)) {
                    Rational inner = alpha_inner(table->jack_in_p(la), table->jack_in_p(nu), alpha);
                    CHECK(inner == (la == nu ? j_alpha(la, alpha) : Rational(0)));
                }
        }
}

TEST_CASE("jack-plancherel measure") {
    // closed forms at n = 3, checked at alpha = 2
    CHECK(jack_plancherel(Partition({3}), 2) == Rational(1, 15));
    CHECK(jack_plancherel(Partition({2, 1}), 2) == Rational(3, 5));
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2), Rational(3)})
        CHECK(jack_plancherel(Partition({2}), a) == 1 / (1 + a));
    for (const Rational& a : {Rational(1, 2), Rational(2)})
        for (int n = 0; n <= 5; ++n) {
            Rational total = 0;
            for (const Partition& la : partitions_of(n)) total += jack_plancherel(la, a);
            CHECK(total == 1);
        }
    // alpha = 1 and alpha = 2 are the Plancherel weights
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n)) {
            Rational f = Rational(dimension_f(la));
            CHECK(jack_plancherel(la, 1) == f * f / Rational(factorial(n)));
            CHECK(jack_plancherel(la, 2) ==
                  Rational(dimension_f(doubled(la))) / Rational(double_factorial(2 * n - 1)));
        }
}

TEST_CASE("irreducible characters from the alpha = 1 table") {
    for (int n = 1; n <= 5; ++n) {
        Partition ones(std::vector<int>(n, 1));
        for (const Partition& la : partitions_of(n)) {
            CHECK(character_value(la, ones) == Rational(dimension_f(la)));
            CHECK(character_value(Partition({n}), la) == 1);
        }
        // integrality
        for (const Partition& la : partitions_of(n))
            for (const Partition& rho : partitions_of(n))
                CHECK(character_value(la, rho).get_den() == 1);
        // column orthogonality
        for (const Partition& rho : partitions_of(n))
            for (const Partition& pi : partitions_of(n)) {
                Rational s = 0;
                for (const Partition& la : partitions_of(n))
                    s += character_value(la, rho) * character_value(la, pi);
                CHECK(s == (rho == pi ? Rational(z_value(rho)) : Rational(0)));
            }
    }
}

TEST_CASE("zonal spherical values") {
    for (int n = 1; n <= 4; ++n) {
        Partition ones(std::vector<int>(n, 1));
        for (const Partition& la : partitions_of(n)) CHECK(zonal_spherical(la, ones) == 1);
    }
    CHECK(zonal_spherical(Partition({1}), Partition({1})) == 1);

    // against the averaged-character definition, n <= 3
    for (int n = 1; n <= 3; ++n) {
        auto hyper = hyperoctahedral_elements(n);
        Rational scale = 1 / (pow_rational(2, n) * Rational(factorial(n)));
        for (const Partition& la : partitions_of(n)) {
            Partition two = doubled(la);
            for (const Partition& rho : partitions_of(n)) {
                Permutation rep = canonical_matching(reduce(rho), n).to_permutation();
                REQUIRE(rep.coset_type() == rho);
                Rational avg = 0;
                for (const Permutation& z : hyper)
                    avg += character_value(two, rep.compose(z).cycle_type());
                CHECK(zonal_spherical(la, rho) == scale * avg);
            }
        }
    }
}
