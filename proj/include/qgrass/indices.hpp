#ifndef QGRASS_INDICES_HPP
#define QGRASS_INDICES_HPP

#include "qgrass/qarith.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qgrass
{

// I0 = {1..m} (even), I1 = {m+1..m+n} (odd), J = {1..m+n-1}. Indices are 1-based.
struct shape {
    int m = 0;
    int n = 0;
    int restricted_ell = 0; // 0 when unrestricted

    int size() const { return m + n; }
    bool even(int i) const { return i >= 1 && i <= m; }
    bool odd(int i) const { return i > m && i <= m + n; }
    bool in_range(int i) const { return i >= 1 && i <= m + n; }
    bool operator==(const shape &o) const = default;
};

// Exponent tuple on the m+n coordinates; also used for arbitrary integer labels.
struct multi_index {
    int m = 0;
    std::vector<int> e;

    multi_index() = default;
    multi_index(int m_, std::vector<int> e_) : m(m_), e(std::move(e_)) {}
    static multi_index zero(const shape &s);
    // unit vector eps_i, 1-based
    static multi_index unit(const shape &s, int i);

    int size() const { return static_cast<int>(e.size()); }
    int n() const { return size() - m; }
    int operator[](int i) const { return e[i - 1]; } // 1-based
    int &operator[](int i) { return e[i - 1]; }
    int degree() const;
    int even_degree() const; // sum over I0
    int odd_degree() const;  // sum over I1

    multi_index operator+(const multi_index &o) const;
    multi_index operator-(const multi_index &o) const;
    multi_index operator-() const;
    multi_index scaled(int k) const;

    bool operator==(const multi_index &o) const { return m == o.m && e == o.e; }
    std::strong_ordering operator<=>(const multi_index &o) const
    {
        if (auto c = m <=> o.m; c != 0) {
            return c;
        }
        return e <=> o.e;
    }

    std::string to_string() const;
};

multi_index parse_multi_index(const std::string &text);

// sum_{i > j} a_i b_j over all positions
int star(const multi_index &a, const multi_index &b);
// star restricted to the positions [lo, hi) (0-based)
int star_range(const multi_index &a, const multi_index &b, int lo, int hi);

// theta(a,b) = (-1)^{mu*nu - nu*mu} q^{a*b - b*a}, mu and nu the odd parts
signed_pow theta_sp(const multi_index &a, const multi_index &b);
scalar_q theta(const multi_index &a, const multi_index &b, field f);

// omega_k = eps_1 + ... + eps_k as an eps-coordinate tuple
multi_index fundamental_weight(const shape &s, int k);

} // namespace qgrass

#endif
