#ifndef QGRASS_QARITH_HPP
#define QGRASS_QARITH_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qgrass
{

using rational = mpq_class;

// Sparse Laurent polynomial in v with rational coefficients.
class laurent_poly
{
public:
    using term_map = std::map<int, rational>;

    laurent_poly() = default;
    static laurent_poly constant(const rational &c);
    static laurent_poly monomial(int e, const rational &c = 1);

    const term_map &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    int low_degree() const;
    int high_degree() const;
    rational coeff(int e) const;

    void add_term(int e, const rational &c);

    laurent_poly operator-() const;
    laurent_poly &operator+=(const laurent_poly &o);
    laurent_poly &operator-=(const laurent_poly &o);
    friend laurent_poly operator+(laurent_poly a, const laurent_poly &b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly &b) { return a -= b; }
    friend laurent_poly operator*(const laurent_poly &a, const laurent_poly &b);
    laurent_poly scaled(const rational &c) const;
    laurent_poly shifted(int k) const;
    // v -> v^{-1}
    laurent_poly inverted_variable() const;

    bool operator==(const laurent_poly &o) const { return m_terms == o.m_terms; }
    bool operator!=(const laurent_poly &o) const { return !(*this == o); }

    std::string to_string(const std::string &var = "v") const;

private:
    term_map m_terms;
};

struct field_ctx;
// Interned, immutable description of the coefficient field.
using field = const field_ctx *;

struct field_ctx {
    int d = 0; // 0 means generic Q(v); otherwise v is a primitive d-th root of unity
    int phi_deg = 0;
    std::vector<rational> phi;                // cyclotomic polynomial, low to high, monic
    std::vector<std::vector<rational>> vpow;  // v^k mod phi for 0 <= k < d

    bool generic() const { return d == 0; }
};

field generic_field();
field root_field(int d);
std::string describe(field f);

// Element of Q(v) (reduced fraction) or of Q[v]/Phi_d (residue).
class scalar_q
{
public:
    scalar_q();
    explicit scalar_q(field f, long c = 0);
    scalar_q(field f, const rational &c);

    static scalar_q from_poly(field f, const laurent_poly &p);
    static scalar_q fraction(field f, const laurent_poly &num, const laurent_poly &den);
    // sign * v^e
    static scalar_q q_power(field f, int e, int sign = 1);

    field ctx() const { return m_field; }
    bool is_zero() const { return m_num.is_zero(); }
    bool is_one() const;
    const laurent_poly &numerator() const { return m_num; }
    const laurent_poly &denominator() const { return m_den; }

    scalar_q operator-() const;
    scalar_q &operator+=(const scalar_q &o);
    scalar_q &operator-=(const scalar_q &o);
    scalar_q &operator*=(const scalar_q &o);
    scalar_q &operator/=(const scalar_q &o);
    friend scalar_q operator+(scalar_q a, const scalar_q &b) { return a += b; }
    friend scalar_q operator-(scalar_q a, const scalar_q &b) { return a -= b; }
    friend scalar_q operator*(scalar_q a, const scalar_q &b) { return a *= b; }
    friend scalar_q operator/(scalar_q a, const scalar_q &b) { return a /= b; }

    scalar_q inverse() const;
    scalar_q pow(int k) const;
    scalar_q times_q_power(int e, int sign = 1) const;

    bool operator==(const scalar_q &o) const;
    bool operator!=(const scalar_q &o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same(const scalar_q &o) const;

    field m_field;
    laurent_poly m_num;
    laurent_poly m_den; // generic mode only; always 1 in root mode
};

// sign * q^e, the shape of almost every structure constant.
struct signed_pow {
    int sign = 1;
    int e = 0;

    signed_pow operator*(const signed_pow &o) const { return {sign * o.sign, e + o.e}; }
    signed_pow inverse() const { return {sign, -e}; }
    signed_pow pow(int k) const { return {(k % 2 != 0) ? sign : 1, e * k}; }
    bool operator==(const signed_pow &o) const { return sign == o.sign && e == o.e; }
    scalar_q to_scalar(field f) const { return scalar_q::q_power(f, e, sign); }
    // equality as field elements (root mode compares modulo the order of q)
    bool same_value(const signed_pow &o, field f) const;
    std::string to_string() const;
};

enum class q_parity { generic_q, odd_root, even_root };

struct char_profile {
    int ell = 0;
    q_parity parity = q_parity::generic_q;
    int d = 0;
};

std::string to_string(q_parity p);

scalar_q q_int(int n, field f);
scalar_q q_factorial(int n, field f);
scalar_q q_binom(int s, int r, field f);
// (p choose r)_q with (r)_q = (q^r - 1)/(q - 1)
scalar_q q_binom_unbalanced(int p, int r, field f);
char_profile char_of(field f);

// generic Laurent forms, shared by the specializations above
const laurent_poly &q_binom_poly(int s, int r);
const laurent_poly &q_binom_unbalanced_poly(int p, int r);

// ordinary binomial with C(a,b) = 0 for b < 0 and C(a,0) = 1
long long binom(long long a, long long b);

} // namespace qgrass

#endif
