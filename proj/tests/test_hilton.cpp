#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "polyprod/errors.hpp"
#include "polyprod/hilton_milnor.hpp"

using namespace polyprod;

namespace {
// multiplicity table keyed by (weight, sphere_dim)
std::map<std::pair<int, int>, long long> table_of(const HiltonMilnor& hm) {
    std::map<std::pair<int, int>, long long> out;
    for (const LoopFactor& f : hm.factors) out[{f.weight, f.sphere_dim}] = f.multiplicity;
    return out;
}

void check_against_lyndon_enumeration(const std::vector<int>& dims, int cutoff) {
    HiltonMilnor hm = hilton_milnor(dims, cutoff);
    std::vector<int> weights;
    for (int d : dims) weights.push_back(d - 1);
    // factor of weight w and total letter weight t has sphere dimension 1 + t
    auto lyndon = oracle::lyndon_counts(weights, cutoff - 1);
    std::map<std::pair<int, int>, long long> expect;
    for (auto& [key, count] : lyndon) expect[{key.first, 1 + key.second}] += count;
    CHECK(table_of(hm) == expect);
}
}  // namespace

TEST_CASE("loop factors of a wedge of two 3-spheres") {
    HiltonMilnor hm = hilton_milnor({3, 3}, 7);
    auto t = table_of(hm);
    CHECK(t == std::map<std::pair<int, int>, long long>{
                   {{1, 3}, 2},  // the two generators
                   {{2, 5}, 1},  // [a,b]
                   {{3, 7}, 2},  // [a,[a,b]], [b,[a,b]]
               });
    CHECK(hm.truncated);
    CHECK_FALSE(hm.tail_note.empty());
    // factors come out ordered by (weight, dimension)
    for (size_t i = 1; i < hm.factors.size(); ++i) {
        auto a = std::make_pair(hm.factors[i - 1].weight, hm.factors[i - 1].sphere_dim);
        auto b = std::make_pair(hm.factors[i].weight, hm.factors[i].sphere_dim);
        CHECK(a < b);
    }
}

TEST_CASE("a single sphere never truncates") {
    HiltonMilnor hm = hilton_milnor({2}, 50);
    REQUIRE(hm.factors.size() == 1);
    CHECK(hm.factors[0].sphere_dim == 2);
    CHECK(hm.factors[0].weight == 1);
    CHECK(hm.factors[0].multiplicity == 1);
    CHECK_FALSE(hm.truncated);
}

TEST_CASE("loop factors of a wedge of three 2-spheres") {
    HiltonMilnor hm = hilton_milnor({2, 2, 2}, 4);
    auto t = table_of(hm);
    CHECK(t[{1, 2}] == 3);
    CHECK(t[{2, 3}] == 3);  // Lyndon words of length 2 over 3 letters
    CHECK(t[{3, 4}] == 8);  // (3^3 - 3) / 3
    CHECK(hm.truncated);
}

TEST_CASE("mixed generator dimensions agree with direct Lyndon enumeration") {
    check_against_lyndon_enumeration({3, 3}, 12);
    check_against_lyndon_enumeration({2, 2, 2}, 12);
    check_against_lyndon_enumeration({3, 5}, 14);
    check_against_lyndon_enumeration({2, 4, 7}, 13);
    check_against_lyndon_enumeration({5, 5, 9}, 21);
}

TEST_CASE("necklace counts") {
    CHECK(necklace_count(2, 1) == 2);
    CHECK(necklace_count(2, 2) == 1);
    CHECK(necklace_count(2, 3) == 2);
    CHECK(necklace_count(2, 4) == 3);
    CHECK(necklace_count(2, 5) == 6);
    CHECK(necklace_count(2, 12) == 335);
    CHECK(necklace_count(3, 3) == 8);
    CHECK(necklace_count(1, 1) == 1);
    CHECK(necklace_count(1, 5) == 0);  // no Lyndon words of length > 1 on one letter
}

TEST_CASE("hypothesis and range errors") {
    CHECK_THROWS_AS(hilton_milnor({1, 3}, 10), std::invalid_argument);
    CHECK_THROWS_AS(hilton_milnor({}, 10), std::invalid_argument);
    CHECK_THROWS_AS(hilton_milnor({3, 5}, 3), HypothesisError);
    try {
        hilton_milnor({3, 5}, 3);
    } catch (const HypothesisError& e) {
        CHECK(e.kind() == Hypothesis::CutoffTooLow);
    }
    // forty 2-spheres: multiplicities blow past 64 bits quickly
    CHECK_THROWS_AS(hilton_milnor(std::vector<int>(40, 2), 30), std::overflow_error);
}
