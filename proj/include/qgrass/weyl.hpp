#ifndef QGRASS_WEYL_HPP
#define QGRASS_WEYL_HPP

#include "qgrass/report.hpp"
#include "qgrass/superspaces.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgrass
{

enum class atom_kind { partial, mult_x, mult_x_divpow, sigma, tau, parity, theta };

// One elementary operator. Indices are 1-based.
struct atom {
    atom_kind kind = atom_kind::parity;
    int i = 0;
    int p = 1; // sigma exponent, or the divided power of mult_x_divpow
    multi_index label;

    static atom partial(int i) { return {atom_kind::partial, i, 1, {}}; }
    static atom mult_x(int i) { return {atom_kind::mult_x, i, 1, {}}; }
    static atom mult_x_divpow(int i, int p) { return {atom_kind::mult_x_divpow, i, p, {}}; }
    static atom sigma(int i, int power = 1) { return {atom_kind::sigma, i, power, {}}; }
    static atom tau(int i) { return {atom_kind::tau, i, 1, {}}; }
    static atom parity() { return {atom_kind::parity, 0, 1, {}}; }
    static atom theta(const multi_index &label) { return {atom_kind::theta, 0, 1, label}; }

    int net_degree() const;
    std::string to_string() const;
};

// throws std::invalid_argument when the atom does not act on the space
void validate_atom(const space_spec &s, const atom &a);

// Composition of atoms, written left to right and applied right to left, times a scalar.
struct operator_word {
    space_spec space;
    std::vector<atom> atoms;
    scalar_q scalar;

    int net_degree() const;
    std::string to_string() const;
};

// Finite linear combination of operator words on one space.
class operator_expr
{
public:
    operator_expr() = default;
    explicit operator_expr(const space_spec &s) : m_space(s) {}
    operator_expr(const operator_word &w);

    static operator_expr identity(const space_spec &s);
    static operator_expr of(const space_spec &s, std::vector<atom> atoms);

    const space_spec &space() const { return m_space; }
    const std::vector<operator_word> &terms() const { return m_terms; }

    operator_expr &operator+=(const operator_expr &o);
    operator_expr &operator-=(const operator_expr &o);
    friend operator_expr operator+(operator_expr a, const operator_expr &b) { return a += b; }
    friend operator_expr operator-(operator_expr a, const operator_expr &b) { return a -= b; }
    // composition: (a * b)(u) = a(b(u))
    friend operator_expr operator*(const operator_expr &a, const operator_expr &b);
    operator_expr scaled(const scalar_q &c) const;
    operator_expr power(int k) const;

    std::string to_string() const;

private:
    space_spec m_space;
    std::vector<operator_word> m_terms;
};

monomial_product apply_word(const operator_word &w, const multi_index &a);
super_vector apply(const operator_word &w, const super_vector &u);
super_vector apply(const operator_expr &w, const super_vector &u);

struct equality_result {
    bool equal = true;
    multi_index witness;
    std::string lhs_image;
    std::string rhs_image;

    std::string describe() const;
};

// exhaustive comparison on every basis monomial of degree <= t_max (capped at the top degree)
equality_result operators_equal(const operator_expr &a, const operator_expr &b, int t_max);

enum class weyl_suite { dq_super, dq_hopf_alg, weyl_generic, weyl_odd_root, weyl_even_root, twisted_leibniz };

std::string to_string(weyl_suite s);
weyl_suite parse_weyl_suite(const std::string &name);

relation_report verify_relation_suite(weyl_suite suite, const space_spec &s, int t_max);

// ------------------------------------------------------------------ smash product normal form

// Letters of the Weyl algebra alphabet.
enum class letter_kind { x, group, d };

// Group part: sigma^a tau^b Theta(lambda), kept as a formal commutative monomial.
struct group_elem {
    std::vector<int> sigma; // exponents, size m+n
    std::vector<int> tau;   // exponents mod 2, size m+n (only I1 entries used)
    std::vector<int> theta; // label, size m+n

    static group_elem one(const shape &s);
    bool operator==(const group_elem &o) const = default;
    auto operator<=>(const group_elem &o) const = default;
};

struct letter {
    letter_kind kind = letter_kind::x;
    int i = 0;
    group_elem g;

    static letter x(int i) { return {letter_kind::x, i, {}}; }
    static letter d(int i) { return {letter_kind::d, i, {}}; }
    static letter group(const group_elem &g) { return {letter_kind::group, 0, g}; }
};

using smash_word = std::vector<letter>;

// normal-form key: x-exponents, group element, d-exponents
struct smash_key {
    std::vector<int> x;
    group_elem g;
    std::vector<int> d;
    auto operator<=>(const smash_key &o) const = default;
};

struct smash_element {
    shape sh;
    field ctx = generic_field();
    std::map<smash_key, scalar_q> terms;

    std::string to_string() const;
};

smash_element smash_normal_form(const shape &sh, field ctx, const smash_word &w);
smash_element smash_multiply(const smash_element &a, const smash_element &b);
// evaluation of a normal form (or a raw word) as an operator on the Omega space
operator_expr smash_to_operator(const space_spec &s, const smash_element &e);
operator_expr smash_word_operator(const space_spec &s, const smash_word &w);

} // namespace qgrass

#endif
