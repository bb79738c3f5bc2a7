#ifndef QGRASS_HOPF_HPP
#define QGRASS_HOPF_HPP

#include "qgrass/indices.hpp"
#include "qgrass/report.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qgrass
{

// Pointed Hopf algebras presented as bosonizations of quantum linear spaces:
// an abelian group Z^r / L of group-likes and skew-primitive generators y_k with
//   g y_k g^-1 = chi_k(g) y_k,   y_j y_k = c_jk y_k y_j (j > k),   y_k^{N_k} = 0,
//   Delta(y_k) = y_k (x) a_k + b_k (x) y_k.

enum class hopf_family { dq, dq_restricted, aq, taft_mn, taft_mu, gq, gq_restricted };

std::string to_string(hopf_family f);
hopf_family parse_hopf_family(const std::string &name);

enum class gen_tag { group_like, skew_primitive, divided_power_primitive };
std::string to_string(gen_tag t);

struct hopf_params {
    int m = 0;
    int n = 0;
    field ctx = generic_field();
    // dq / dq_restricted: use the alternate coproduct Delta^(-)
    bool minus_coproduct = false;
    // aq / gq at a root of unity: impose K(eps_i)^ell = 1 for i in I0
    bool k_order = true;
    // keep the group orders exactly as printed; when false, odd-index orders are
    // enlarged to the smallest value compatible with the commutation characters
    bool literal_orders = true;
    // drop the nilpotency of the even generators (polynomial model, for power checks)
    bool drop_nilpotency = false;
    // taft_mu: orders ell_i, group orders m_i (empty = ell_i) and mu_ij = q^{mu_exp[i][j]}
    std::vector<int> ell_bar;
    std::vector<int> m_bar;
    std::vector<std::vector<int>> mu_exp;
};

struct pbw_key {
    std::vector<int> y; // exponents of the skew-primitive generators
    std::vector<int> g; // canonical group vector
    auto operator<=>(const pbw_key &o) const = default;
};

using hopf_element = std::map<pbw_key, scalar_q>;

struct nil_generator {
    std::string name;
    gen_tag tag = gen_tag::skew_primitive;
    int nilpotency = 0;     // 0 for none
    std::vector<int> right; // a_k
    std::vector<int> left;  // b_k
    std::vector<scalar_q> chi;
    hopf_element antipode; // as stated by the presentation
};

// a letter is a power of a group generator or a power of a skew-primitive generator
struct hopf_letter {
    bool group = true;
    int index = 0;
    int power = 1;
};

struct hopf_word {
    scalar_q coeff;
    std::vector<hopf_letter> letters;
};

struct hopf_rule {
    std::string name;
    std::vector<hopf_word> lhs;
    std::vector<hopf_word> rhs;
};

struct tensor_element {
    int arity = 2;
    std::map<std::vector<pbw_key>, scalar_q> terms;
};

class hopf_presentation
{
public:
    hopf_family fam = hopf_family::dq;
    hopf_params params;
    field ctx = generic_field();
    std::string title;

    std::vector<std::string> group_names;
    std::vector<std::vector<long long>> group_relations; // as stated
    std::vector<std::vector<long long>> hnf;             // echelon basis of the relation lattice
    std::vector<nil_generator> gens;
    std::vector<std::vector<scalar_q>> comm; // comm[j][k], j > k
    std::vector<hopf_rule> rules;
    std::vector<std::string> notes;

    // finalize after filling the fields above; computes the lattice and the rule list
    void finalize();

    int rank() const { return static_cast<int>(group_names.size()); }
    bool group_finite() const;
    long long group_order() const; // -1 when infinite
    std::vector<int> reduce(std::vector<int> g) const;
    std::vector<int> group_unit(int s, int power = 1) const;
    scalar_q chi(int k, const std::vector<int> &g) const;

    hopf_element one() const;
    hopf_element group_element(const std::vector<int> &g) const;
    hopf_element generator(int k) const;
    hopf_element multiply(const hopf_element &a, const hopf_element &b) const;
    hopf_element evaluate(const std::vector<hopf_word> &w) const;
    hopf_element letter_value(const hopf_letter &l) const;

    tensor_element tensor_multiply(const tensor_element &a, const tensor_element &b) const;
    tensor_element coproduct(const hopf_element &u) const;
    tensor_element coproduct_words(const std::vector<hopf_word> &w) const;
    tensor_element coproduct_letter(const hopf_letter &l) const;
    scalar_q counit(const hopf_element &u) const;
    hopf_element antipode(const hopf_element &u) const;
    hopf_element antipode_words(const std::vector<hopf_word> &w) const;

    std::vector<pbw_key> pbw_basis() const; // finite presentations only
    std::string key_to_string(const pbw_key &k) const;
    std::string group_to_string(const std::vector<int> &g) const;
    std::string to_string(const hopf_element &u) const;
    std::string to_string(const tensor_element &t) const;
    std::string word_to_string(const std::vector<hopf_word> &w) const;

private:
    struct mono {
        bool zero = true;
        scalar_q coeff;
        pbw_key key;
    };
    mono multiply_keys(const pbw_key &a, const pbw_key &b) const;
    hopf_element letters_antipode(const std::vector<hopf_letter> &ls) const;
    std::vector<hopf_letter> letters_of(const pbw_key &k) const;
    void build_rules();
};

hopf_presentation build_hopf(hopf_family fam, const hopf_params &params);

struct pbw_dimension {
    bool infinite = false;
    long long value = 0;
    std::string to_string() const { return infinite ? "Infinite" : std::to_string(value); }
};

pbw_dimension pbw_dim(const hopf_presentation &p);

enum class hopf_depth { generators_only, exhaustive };

relation_report verify_hopf(const hopf_presentation &p, hopf_depth depth);

// Delta(y_k)^P = y_k^P (x) 1 + 1 (x) y_k^P
check_result power_primitivity(const hopf_presentation &p, int k, int power);

// binomial expansions of Delta(x_i^p) in A_q and of Delta(x_i^(p)) in G_q; primitivity at the threshold
relation_report divided_power_coproduct_check(int m, int n, int i, int p_max, field ctx);

// smallest k >= 1 with c^k = 1, 0 if none up to the bound
int multiplicative_order(const scalar_q &c, int bound);

} // namespace qgrass

#endif
