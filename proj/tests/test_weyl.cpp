#include "helpers.hpp"
#include "qgrass/weyl.hpp"

#include <doctest.h>

using namespace qgrass;
using namespace qtest;

namespace
{

super_vector mono(const space_spec &s, std::vector<int> e)
{
    return super_vector::monomial(s, multi_index(s.m(), std::move(e)));
}

operator_expr op(const space_spec &s, std::vector<atom> atoms)
{
    return operator_expr::of(s, std::move(atoms));
}

} // namespace

TEST_CASE("atom actions on Omega")
{
    const field g = generic_field();
    const space_spec s(family::omega, 2, 1, g);
    CHECK(apply(op(s, {atom::partial(1)}), mono(s, {3, 2, 1})) == mono(s, {2, 2, 1}));
    // d_2 picks up q^{-eps_2 * beta} = q^{-beta_1}
    CHECK(apply(op(s, {atom::partial(2)}), mono(s, {3, 2, 1})) ==
          mono(s, {3, 1, 1}).scaled(scalar_q::q_power(g, -3)));
    CHECK(apply(op(s, {atom::sigma(1)}), mono(s, {3, 2, 1})) == mono(s, {3, 2, 1}).scaled(scalar_q::q_power(g, 3)));
    CHECK(apply(op(s, {atom::sigma(2, -1)}), mono(s, {3, 2, 0})) ==
          mono(s, {3, 2, 0}).scaled(scalar_q::q_power(g, -2)));
    CHECK(apply(op(s, {atom::tau(3)}), mono(s, {1, 0, 1})) == mono(s, {1, 0, 1}).scaled(scalar_q(g, -1)));
    CHECK(apply(op(s, {atom::partial(3)}), mono(s, {1, 0, 0})).is_zero());
    CHECK(apply(op(s, {atom::mult_x(1)}), mono(s, {1, 0, 0})) == mono(s, {2, 0, 0}).scaled(q_int(2, g)));
    CHECK_THROWS_AS(op(s, {atom::tau(1)}), std::invalid_argument);
    const space_spec du(family::dual, 2, 1, g);
    CHECK_THROWS_AS(op(du, {atom::tau(1)}), std::invalid_argument);
    CHECK_THROWS_AS(op(s, {atom::mult_x_divpow(1, 3)}), std::invalid_argument);
}

TEST_CASE("Theta label versus sigma and tau")
{
    const space_spec s(family::omega, 2, 2, generic_field());
    // Theta(-eps_m + eps_{m+1}) = sigma_m sigma_{m+1} tau
    multi_index lab = multi_index::zero(s.sh);
    lab[2] = -1;
    lab[3] = 1;
    const auto lhs = op(s, {atom::theta(lab)});
    const auto rhs = op(s, {atom::sigma(2), atom::sigma(3), atom::parity()});
    const equality_result r = operators_equal(lhs, rhs, 4);
    INFO(r.describe());
    CHECK(r.equal);
}

TEST_CASE("operators_equal on Weyl-type identities")
{
    const field g = generic_field();
    const space_spec s(family::omega, 2, 2, g);
    const auto one = operator_expr::identity(s);
    for (int i = 1; i <= 2; ++i) {
        const auto lhs = op(s, {atom::partial(i), atom::mult_x(i)}) -
                         op(s, {atom::mult_x(i), atom::partial(i)}).scaled(scalar_q::q_power(g, 1));
        CHECK(operators_equal(lhs, op(s, {atom::sigma(i, -1)}), 5).equal);
    }
    for (int i = 3; i <= 4; ++i) {
        const auto lhs = op(s, {atom::partial(i), atom::mult_x(i)}) + op(s, {atom::mult_x(i), atom::partial(i)});
        CHECK(operators_equal(lhs, one, 5).equal);
    }
    // d_i d_j = theta(eps_i, eps_j) d_j d_i
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i == j) {
                continue;
            }
            const scalar_q th = theta(multi_index::unit(s.sh, i), multi_index::unit(s.sh, j), g);
            const auto lhs = op(s, {atom::partial(i), atom::partial(j)});
            const auto rhs = op(s, {atom::partial(j), atom::partial(i)}).scaled(th);
            CHECK(operators_equal(lhs, rhs, 5).equal);
        }
    }
}

TEST_CASE("operators_equal reports a witness")
{
    const space_spec s(family::omega, 1, 1, generic_field());
    const equality_result r = operators_equal(op(s, {atom::partial(1), atom::mult_x(1)}),
                                              op(s, {atom::mult_x(1), atom::partial(1)}), 3);
    CHECK_FALSE(r.equal);
    CHECK(r.witness == multi_index::zero(s.sh));
    CHECK(r.describe().find("on (0 | 0)") == 0);
}

TEST_CASE("degree bookkeeping")
{
    const space_spec s(family::omega, 2, 1, generic_field());
    const std::vector<std::vector<atom>> words = {
        {atom::partial(1)},
        {atom::mult_x(2), atom::mult_x(3)},
        {atom::partial(3), atom::mult_x(1), atom::sigma(2)},
        {atom::mult_x(1), atom::partial(2), atom::partial(1), atom::tau(3)}};
    for (const auto &w : words) {
        const operator_word ow{s, w, scalar_q(s.ctx, 1)};
        for (int t = 0; t <= 4; ++t) {
            for (const auto &a : basis_of_degree(s, t)) {
                const super_vector img = apply(op(s, w), super_vector::monomial(s, a));
                if (!img.is_zero()) {
                    CHECK(img.homogeneous_degree() == t + ow.net_degree());
                }
            }
        }
    }
}

TEST_CASE("relation suites")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        const space_spec s(family::omega, m, n, generic_field());
        for (auto suite : {weyl_suite::dq_super, weyl_suite::weyl_generic, weyl_suite::twisted_leibniz}) {
            const relation_report r = verify_relation_suite(suite, s, 4);
            INFO(to_string(suite), " ", s.describe(), "\n", failures(r));
            CHECK(r.all_pass());
            CHECK_FALSE(r.relations.empty());
        }
    }
    const space_spec odd(family::omega, 2, 1, root_field(3));
    CHECK(verify_relation_suite(weyl_suite::weyl_odd_root, odd, 4).all_pass());
    CHECK_THROWS_AS(verify_relation_suite(weyl_suite::weyl_even_root, odd, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_relation_suite(weyl_suite::weyl_odd_root, space_spec(family::omega, 2, 1, generic_field()), 4),
                    std::invalid_argument);
    const space_spec even(family::omega, 2, 1, root_field(8));
    CHECK(verify_relation_suite(weyl_suite::weyl_even_root, even, 4).all_pass());
    const space_spec tiny(family::omega, 1, 0, generic_field());
    CHECK(verify_relation_suite(weyl_suite::weyl_generic, tiny, 4).all_pass());
}

TEST_CASE("restricted nilpotency of the derivations")
{
    const space_spec s(family::omega_restricted, 2, 2, root_field(3));
    const operator_expr zero(s);
    for (int i = 1; i <= 2; ++i) {
        CHECK(operators_equal(op(s, {atom::partial(i)}).power(3), zero, s.top_degree()).equal);
        CHECK_FALSE(operators_equal(op(s, {atom::partial(i)}).power(2), zero, s.top_degree()).equal);
    }
    for (int j = 3; j <= 4; ++j) {
        CHECK(operators_equal(op(s, {atom::partial(j)}).power(2), zero, s.top_degree()).equal);
    }
}

TEST_CASE("smash normal form examples")
{
    const field g = generic_field();
    const shape sh{1, 0, 0};
    const smash_element e = smash_normal_form(sh, g, {letter::d(1), letter::x(1)});
    smash_key k1{{0}, group_elem::one(sh), {0}};
    k1.g.sigma[0] = -1;
    const smash_key k2{{1}, group_elem::one(sh), {1}};
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms.at(k1).is_one());
    CHECK(e.terms.at(k2) == scalar_q::q_power(g, 1));

    const shape sh2{2, 0, 0};
    group_elem s1 = group_elem::one(sh2);
    s1.sigma[0] = 1;
    const smash_element c = smash_normal_form(sh2, g, {letter::group(s1), letter::x(1)});
    const smash_key kc{{1, 0}, s1, {0, 0}};
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms.at(kc) == scalar_q::q_power(g, 1));

    group_elem th = group_elem::one(sh2), s2 = group_elem::one(sh2);
    th.theta[0] = 1;
    s2.sigma[1] = 1;
    const smash_element ab = smash_normal_form(sh2, g, {letter::group(th), letter::group(s2)});
    const smash_element ba = smash_normal_form(sh2, g, {letter::group(s2), letter::group(th)});
    CHECK(ab.terms == ba.terms);
}

TEST_CASE("smash rewriting agrees with the action")
{
    std::mt19937 rng(99);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        const shape sh{m, n, 0};
        const space_spec s(family::omega, m, n, generic_field());
        std::uniform_int_distribution<int> kind(0, 2), idx(1, m + n), len(1, 5), sg(-1, 1);
        for (int trial = 0; trial < 25; ++trial) {
            smash_word w;
            const int L = len(rng);
            for (int k = 0; k < L; ++k) {
                switch (kind(rng)) {
                    case 0:
                        w.push_back(letter::x(idx(rng)));
                        break;
                    case 1: {
                        group_elem ge = group_elem::one(sh);
                        const int i = idx(rng);
                        ge.sigma[i - 1] = sg(rng);
                        if (sh.odd(i)) {
                            ge.tau[i - 1] = 1;
                        }
                        w.push_back(letter::group(ge));
                        break;
                    }
                    default:
                        w.push_back(letter::d(idx(rng)));
                        break;
                }
            }
            const smash_element nf = smash_normal_form(sh, s.ctx, w);
            const equality_result r = operators_equal(smash_to_operator(s, nf), smash_word_operator(s, w), 4);
            INFO(nf.to_string(), "\n", r.describe());
            CHECK(r.equal);
        }
    }
}

TEST_CASE("smash product is associative on small triples")
{
    const shape sh{1, 1, 0};
    const field g = generic_field();
    const std::vector<smash_word> words = {{letter::x(1)}, {letter::d(2)}, {letter::x(2), letter::d(1)},
                                           {letter::d(1)}, {letter::x(1), letter::x(2)}};
    for (const auto &a : words) {
        for (const auto &b : words) {
            for (const auto &c : words) {
                const auto A = smash_normal_form(sh, g, a), B = smash_normal_form(sh, g, b),
                           C = smash_normal_form(sh, g, c);
                CHECK(smash_multiply(smash_multiply(A, B), C).terms == smash_multiply(A, smash_multiply(B, C)).terms);
            }
        }
    }
}
