#ifndef QGRASS_UQREP_HPP
#define QGRASS_UQREP_HPP

#include "qgrass/report.hpp"
#include "qgrass/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgrass
{

// Generators of the bosonized quantum (super)group. E, F are indexed by J, the K's by I,
// the script K's by J.
enum class gen_kind { E, F, K, K_inv, script_K, script_K_inv, parity };

struct generator_symbol {
    gen_kind kind = gen_kind::parity;
    int index = 0;

    std::string to_string() const;
    bool operator==(const generator_symbol &o) const = default;
};

// "E1", "F2", "K3", "Kinv3", "KK1", "KKinv1", "sigma"
generator_symbol parse_generator_symbol(const std::string &text);

enum class uq_variant { gl, sl };
std::string to_string(uq_variant v);

// throws std::invalid_argument for symbols that do not act on the space
operator_expr generator_word(const generator_symbol &g, const space_spec &s);

// generators used by the variant: E_j, F_j, then K_i^{+-1} (gl only), script K_j^{+-1}, sigma
std::vector<generator_symbol> generator_list(const space_spec &s, uq_variant v);

// (R1)-(R7) as operator identities on degrees <= t_max; restricted spaces add the
// truncation relations
relation_report verify_uq_relations(const space_spec &s, int t_max, uq_variant v = uq_variant::gl);

// g(u v) = sum g_(1)(u) g_(2)(v) for every generator and basis monomials with deg u + deg v <= t_max
relation_report verify_module_algebra(const space_spec &s, int t_max, uq_variant v = uq_variant::gl);

// K_i acts on a basis monomial by q^{q_exp[i]}, sigma by the sign
struct weight_vector {
    std::vector<int> q_exp;
    int parity = 1;

    auto operator<=>(const weight_vector &o) const = default;
    std::string to_string() const;
};

weight_vector weight_of(const space_spec &s, const multi_index &a, uq_variant v = uq_variant::gl);

// highest-weight data predicted for the graded components
struct hw_claim {
    bool available = false;
    multi_index vector;
    std::vector<int> weight; // eps-coordinates
    std::string label;       // e.g. "3w1", "1w2+1w3"
};

hw_claim expected_highest_weight(const space_spec &s, int t);

enum class simplicity { simple, not_simple, inconclusive };
std::string to_string(simplicity s);

struct component_report {
    space_spec space;
    int t = 0;
    long long dim = 0;
    std::vector<super_vector> hw_basis;
    std::vector<std::vector<int>> hw_weight; // eps-coordinates of each hw vector (empty if not a weight vector)
    hw_claim claim;
    bool claim_matches = false;
    bool weights_separated = false;
    simplicity simple = simplicity::inconclusive;
    std::vector<std::string> witnesses;
};

component_report analyze_component(const space_spec &s, int t, uq_variant v = uq_variant::gl);

// closed-form dimension of the degree-t component
long long dim_formula(const space_spec &s, int t);

// dimension of the degree-s part of the restricted divided power algebra in k variables
long long restricted_divided_dim(int k, int s, int ell);

} // namespace qgrass

#endif
