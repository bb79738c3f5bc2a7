#include "helpers.hpp"
#include "qgrass/indices.hpp"

#include <doctest.h>

using namespace qgrass;
using namespace qtest;

namespace
{

multi_index random_label(std::mt19937 &rng, int m, int n)
{
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<int> e(m + n);
    for (auto &x : e) {
        x = d(rng);
    }
    return {m, e};
}

} // namespace

TEST_CASE("star examples")
{
    const shape s20{2, 0, 0};
    CHECK(star(multi_index(2, {1, 2}), multi_index(2, {3, 1})) == 6);
    const multi_index beta(3, {4, 5, 7});
    CHECK(star(multi_index::unit(shape{3, 0, 0}, 2), beta) == 4);
    CHECK(star(multi_index::unit(shape{3, 0, 0}, 3), beta) == 9);
    CHECK(star(multi_index::zero(s20), multi_index(2, {5, 5})) == 0);
}

TEST_CASE("star is bilinear")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        const multi_index a = random_label(rng, 2, 2), b = random_label(rng, 2, 2), c = random_label(rng, 2, 2);
        CHECK(star(a + b, c) == star(a, c) + star(b, c));
        CHECK(star(a, b + c) == star(a, b) + star(a, c));
        CHECK(star(a.scaled(3), b) == 3 * star(a, b));
    }
}

TEST_CASE("theta examples")
{
    const field g = generic_field();
    const shape s{2, 2, 0};
    for (int i = 1; i <= 4; ++i) {
        CHECK(theta(multi_index::unit(s, i), multi_index::unit(s, i), g).is_one());
    }
    CHECK(theta(multi_index::unit(s, 1), multi_index::unit(s, 2), g) == scalar_q::q_power(g, -1));
    CHECK(theta(multi_index::unit(s, 3), multi_index::unit(s, 4), g) == scalar_q::q_power(g, -1, -1));
    CHECK(theta(multi_index::unit(s, 4), multi_index::unit(s, 3), g) == scalar_q::q_power(g, 1, -1));
    // mixed parity: even before odd
    CHECK(theta(multi_index::unit(s, 3), multi_index::unit(s, 1), g) == scalar_q::q_power(g, 1));
}

TEST_CASE("theta is an antisymmetric bicharacter")
{
    std::mt19937 rng(11);
    for (field f : {generic_field(), root_field(5)}) {
        for (int t = 0; t < 60; ++t) {
            const multi_index a = random_label(rng, 2, 2), b = random_label(rng, 2, 2), c = random_label(rng, 2, 2);
            CHECK(theta(a + b, c, f) == theta(a, c, f) * theta(b, c, f));
            CHECK(theta(a, b + c, f) == theta(a, b, f) * theta(a, c, f));
            CHECK((theta(a, b, f) * theta(b, a, f)).is_one());
        }
    }
}

TEST_CASE("multi_index text form")
{
    const multi_index a(2, {1, 0, 1});
    CHECK(a.to_string() == "(1,0 | 1)");
    CHECK(parse_multi_index("(1,0 | 1)") == a);
    CHECK(parse_multi_index(a.to_string()) == a);
    const multi_index b(0, {1, 1});
    CHECK(parse_multi_index(b.to_string()) == b);
    CHECK(a.degree() == 2);
    CHECK(a.even_degree() == 1);
    CHECK(a.odd_degree() == 1);
}

TEST_CASE("fundamental weights")
{
    const shape s{2, 1, 0};
    CHECK(fundamental_weight(s, 0) == multi_index::zero(s));
    CHECK(fundamental_weight(s, 2) == multi_index(2, {1, 1, 0}));
    CHECK(fundamental_weight(s, 3) == multi_index(2, {1, 1, 1}));
}
