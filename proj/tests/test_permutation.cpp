#include "jmwg/haar_mc.hpp"
#include "jmwg/permutation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace jmwg;

TEST_CASE("compose and inverse") {
    Permutation t12 = Permutation::transposition(3, 1, 2);
    Permutation t23 = Permutation::transposition(3, 2, 3);
    CHECK(t12.compose(t12) == Permutation::identity(3));
    Permutation threeCycle({2, 3, 1});
    CHECK(threeCycle.inverse() == Permutation({3, 1, 2}));
    // (1 2)(2 3) sends 1 -> 2, 2 -> 3 -> ... as a 3-cycle
    Permutation c = t12.compose(t23);
    CHECK(c == Permutation({2, 3, 1}));
    CHECK(c.cycle_type() == Partition({3}));
    CHECK_THROWS_AS(t12.compose(Permutation::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("cycle types") {
    CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
    CHECK(Permutation::identity(4).reduced_cycle_type() == Partition());
    CHECK(Permutation::transposition(4, 2, 4).cycle_type() == Partition({2, 1, 1}));
    CHECK(Permutation::transposition(4, 2, 4).reduced_cycle_type() == Partition({1}));
    Permutation threeCycleInS5({2, 3, 1, 4, 5});
    CHECK(threeCycleInS5.cycle_type() == Partition({3, 1, 1}));
    CHECK(threeCycleInS5.reduced_cycle_type() == Partition({2}));
    CHECK(Permutation::transposition(4, 1, 2).sign() == -1);
    CHECK(threeCycleInS5.sign() == 1);
}

TEST_CASE("coset types") {
    Permutation ex = Permutation::parse("5 1 4 10 3 9 7 6 2 8");
    CHECK(ex.coset_type() == Partition({3, 2}));
    CHECK(ex.reduced_coset_type() == Partition({2, 1}));
    for (int n = 1; n <= 4; ++n)
        CHECK(Permutation::identity(2 * n).coset_type() == Partition(std::vector<int>(n, 1)));
    for (const Permutation& z : hyperoctahedral_elements(2)) {
        CHECK(z.coset_type() == Partition({1, 1}));
        CHECK(in_hyperoctahedral(z));
    }
    CHECK_THROWS_AS(Permutation::identity(3).coset_type(), std::invalid_argument);
}

TEST_CASE("matching enumeration") {
    CHECK(enumerate_matchings(1).size() == 1);
    CHECK(enumerate_matchings(2).size() == 3);
    CHECK(enumerate_matchings(3).size() == 15);
    CHECK(enumerate_matchings(4).size() == 105);
    auto ms = enumerate_matchings(2);
    CHECK(ms[0] == Matching::trivial(2));
    CHECK(ms[1].str() == "{1,3}{2,4}");
    CHECK(ms[2].str() == "{1,4}{2,3}");
    std::set<Matching> distinct(ms.begin(), ms.end());
    CHECK(distinct.size() == ms.size());
}

TEST_CASE("matching embedding into the symmetric group") {
    CHECK(Matching::trivial(2).to_permutation() == Permutation::identity(4));
    CHECK(Matching({{1, 3}, {2, 4}}).to_permutation() == Permutation({1, 3, 2, 4}));
    CHECK(Matching({{1, 4}, {2, 3}}).to_permutation() == Permutation({1, 4, 2, 3}));
    CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("canonical matchings and permutations") {
    CHECK(canonical_matching(Partition({2, 1}), 5) ==
          Matching({{1, 6}, {2, 3}, {4, 5}, {7, 10}, {8, 9}}));
    CHECK(canonical_matching(Partition(), 3) == Matching::trivial(3));
    CHECK(canonical_permutation(Partition({2, 1}), 5) == Permutation({2, 3, 1, 5, 4}));
    CHECK_THROWS_AS(canonical_matching(Partition({2, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(canonical_permutation(Partition({2, 1}), 4), std::invalid_argument);
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : reduced_types(n)) {
            CHECK(canonical_matching(mu, n).reduced_coset_type() == mu);
            CHECK(canonical_permutation(mu, n).reduced_cycle_type() == mu);
        }
}

TEST_CASE("action on matchings") {
    Matching m0 = Matching::trivial(2);
    for (const Matching& m : enumerate_matchings(3))
        CHECK(matching_action(Permutation::identity(6), m) == m);
    CHECK(matching_action(Permutation::transposition(4, 3, 4), m0) == m0);
    CHECK(matching_action(Permutation::transposition(4, 2, 3), m0) == Matching({{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(matching_action(Permutation::identity(6), m0), std::invalid_argument);
}

TEST_CASE("fibers of the action are the right cosets of the hyperoctahedral group") {
    for (int n = 2; n <= 4; ++n) {
        Matching m0 = Matching::trivial(n);
        std::map<Matching, long> fiberSize;
        bool membershipOk = true;
        for (const Permutation& s : symmetric_group(2 * n)) {
            Matching image = matching_action(s, m0);
            ++fiberSize[image];
            // s is in (image as permutation) H_n exactly when image^{-1} s is hyperoctahedral
            if (!in_hyperoctahedral(image.to_permutation().inverse().compose(s)))
                membershipOk = false;
        }
        CHECK(membershipOk);
        long order = 1;
        for (int i = 1; i <= n; ++i) order *= 2 * i;
        CHECK(fiberSize.size() == enumerate_matchings(n).size());
        for (const auto& [m, count] : fiberSize) CHECK(count == order);
    }
}

TEST_CASE("coset type is a double-coset invariant") {
    // exhaustive at n = 2
    auto h2 = hyperoctahedral_elements(2);
    for (const Permutation& s : symmetric_group(4))
        for (const Permutation& z1 : h2)
            for (const Permutation& z2 : h2)
                CHECK(z1.compose(s).compose(z2).coset_type() == s.coset_type());
    // sampled at n = 3, 4
    for (int n = 3; n <= 4; ++n) {
        auto hn = hyperoctahedral_elements(n);
        Rng rng(1234);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> img(2 * n);
            std::iota(img.begin(), img.end(), 1);
            for (std::size_t i = img.size(); i > 1; --i)
                std::swap(img[i - 1], img[rng.next() % i]);
            Permutation s(img);
            const Permutation& z1 = hn[rng.next() % hn.size()];
            const Permutation& z2 = hn[rng.next() % hn.size()];
            CHECK(z1.compose(s).compose(z2).coset_type() == s.coset_type());
        }
    }
}

TEST_CASE("double coset sizes") {
    for (int n = 1; n <= 4; ++n) {
        std::map<Partition, long> sizes;
        for (const Permutation& s : symmetric_group(2 * n)) ++sizes[s.coset_type()];
        long total = 0;
        for (const auto& [rho, count] : sizes) total += count;
        CHECK(Integer(total) == factorial(2 * n));
        long hyper = 1;
        for (int i = 1; i <= n; ++i) hyper *= 2 * i;
        CHECK(sizes.at(Partition(std::vector<int>(n, 1))) == hyper);
        CHECK(hyperoctahedral_elements(n).size() == static_cast<std::size_t>(hyper));
    }
}

TEST_CASE("printing and parsing") {
    Permutation p = Permutation::parse("3 1 2");
    CHECK(p.str() == "3 1 2");
    CHECK(Permutation::parse(p.str()) == p);
    CHECK(Matching({{2, 3}, {1, 4}}).str() == "{1,4}{2,3}");
}
