#ifndef QGRASS_SUPERSPACES_HPP
#define QGRASS_SUPERSPACES_HPP

#include "qgrass/indices.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgrass
{

enum class family { affine, omega, omega_restricted, dual, dual_restricted };

std::string to_string(family f);
family parse_family(const std::string &name);

struct space_spec {
    family fam = family::omega;
    shape sh;
    field ctx = generic_field();

    space_spec() = default;
    // validates: restricted families need a root-of-unity field with ell >= 3
    space_spec(family f, int m, int n, field ctx_);

    int m() const { return sh.m; }
    int n() const { return sh.n; }
    int ell() const { return sh.restricted_ell; }
    bool is_dual() const { return fam == family::dual || fam == family::dual_restricted; }
    bool is_omega() const { return fam == family::omega || fam == family::omega_restricted; }
    bool is_restricted() const { return sh.restricted_ell > 0; }
    // position (0-based) carries an exterior coordinate (exponent in {0,1})
    bool exterior_pos(int p) const { return is_dual() ? p < sh.m : p >= sh.m; }
    int cap(int p) const; // largest allowed exponent, -1 for unbounded
    // top degree of a restricted space, -1 if unbounded
    int top_degree() const;
    bool valid_index(const multi_index &a) const;
    std::string describe() const;

    bool operator==(const space_spec &o) const { return fam == o.fam && sh == o.sh && ctx == o.ctx; }
};

class super_vector
{
public:
    using term_map = std::map<multi_index, scalar_q>;

    super_vector() = default;
    explicit super_vector(const space_spec &s) : m_space(s) {}
    static super_vector monomial(const space_spec &s, const multi_index &a);
    static super_vector monomial(const space_spec &s, const multi_index &a, const scalar_q &c);

    const space_spec &space() const { return m_space; }
    const term_map &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    scalar_q coeff(const multi_index &a) const;

    void add_term(const multi_index &a, const scalar_q &c);
    super_vector &operator+=(const super_vector &o);
    super_vector &operator-=(const super_vector &o);
    friend super_vector operator+(super_vector a, const super_vector &b) { return a += b; }
    friend super_vector operator-(super_vector a, const super_vector &b) { return a -= b; }
    super_vector scaled(const scalar_q &c) const;
    super_vector degree_part(int t) const;
    // degree of a homogeneous vector; -1 for zero; throws if inhomogeneous
    int homogeneous_degree() const;

    bool operator==(const super_vector &o) const { return m_space == o.m_space && m_terms == o.m_terms; }
    bool operator!=(const super_vector &o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_space(const super_vector &o) const;

    space_spec m_space;
    term_map m_terms;
};

// product of two basis monomials as (coefficient, index); coefficient zero when the product vanishes
struct monomial_product {
    bool zero = true;
    scalar_q coeff;
    multi_index index;
};

monomial_product multiply_monomials(const space_spec &s, const multi_index &a, const multi_index &b);
super_vector multiply(const super_vector &u, const super_vector &v);
super_vector parity_map(const super_vector &u);
std::vector<multi_index> basis_of_degree(const space_spec &s, int t);

} // namespace qgrass

#endif
