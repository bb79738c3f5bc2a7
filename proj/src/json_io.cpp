#include "qgrass/json_io.hpp"

namespace qgrass
{

using nlohmann::json;

json to_json(const super_vector &v)
{
    json out = json::array();
    for (const auto &[k, c] : v.terms()) {
        out.push_back({{"index", k.to_string()}, {"coefficient", c.to_string()}});
    }
    return out;
}

namespace
{

json checks(const std::vector<check_result> &rs)
{
    json out = json::array();
    for (const auto &r : rs) {
        json c = {{"name", r.name}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass && !r.witness.empty()) {
            c["witness"] = r.witness;
        }
        out.push_back(std::move(c));
    }
    return out;
}

json group_vector(const hopf_presentation &p, const std::vector<int> &g)
{
    return p.group_to_string(g);
}

} // namespace

json to_json(const relation_report &r)
{
    json params = json::object();
    for (const auto &[k, v] : r.params) {
        params[k] = v;
    }
    return {{"suite", r.suite},
            {"params", params},
            {"relations", checks(r.relations)},
            {"diagnostics", checks(r.diagnostics)},
            {"notes", r.notes},
            {"all_pass", r.all_pass()}};
}

json to_json(const component_report &r)
{
    json hw = json::array();
    for (const auto &h : r.hw_basis) {
        hw.push_back(to_json(h));
    }
    json claim = {{"available", r.claim.available}};
    if (r.claim.available) {
        claim["vector"] = r.claim.vector.to_string();
        claim["weight"] = r.claim.weight;
        claim["label"] = r.claim.label;
    }
    return {{"space", r.space.describe()},
            {"t", r.t},
            {"dim", r.dim},
            {"hw_basis", hw},
            {"hw_weight", r.hw_weight},
            {"claim", claim},
            {"claim_matches", r.claim_matches},
            {"weights_separated", r.weights_separated},
            {"simple", to_string(r.simple)},
            {"witnesses", r.witnesses}};
}

json export_presentation(const hopf_presentation &p)
{
    json groups = json::array();
    for (const auto &g : p.group_names) {
        groups.push_back(g);
    }
    json gens = json::array();
    for (std::size_t k = 0; k < p.gens.size(); ++k) {
        const auto &g = p.gens[k];
        json chi = json::array();
        for (const auto &c : g.chi) {
            chi.push_back(c.to_string());
        }
        const hopf_element y = p.generator(static_cast<int>(k));
        gens.push_back({{"name", g.name},
                        {"tag", to_string(g.tag)},
                        {"nilpotency", g.nilpotency},
                        {"left", group_vector(p, g.left)},
                        {"right", group_vector(p, g.right)},
                        {"chi", chi},
                        {"coproduct", p.to_string(p.coproduct(y))},
                        {"counit", p.counit(y).to_string()},
                        {"antipode", p.to_string(p.antipode(y))}});
    }
    json group_table = json::array();
    for (int s = 0; s < p.rank(); ++s) {
        const hopf_element g = p.group_element(p.group_unit(s));
        group_table.push_back({{"name", p.group_names[s]},
                               {"coproduct", p.to_string(p.coproduct(g))},
                               {"counit", p.counit(g).to_string()},
                               {"antipode", p.to_string(p.antipode(g))}});
    }
    json comm = json::array();
    for (std::size_t j = 0; j < p.comm.size(); ++j) {
        for (std::size_t k = 0; k < j && k < p.comm[j].size(); ++k) {
            comm.push_back({{"j", p.gens[j].name}, {"k", p.gens[k].name}, {"c", p.comm[j][k].to_string()}});
        }
    }
    json rules = json::array();
    for (const auto &r : p.rules) {
        rules.push_back({{"name", r.name}, {"lhs", p.word_to_string(r.lhs)}, {"rhs", p.word_to_string(r.rhs)}});
    }
    return {{"family", to_string(p.fam)},
            {"title", p.title},
            {"field", describe(p.ctx)},
            {"group_generators", groups},
            {"group_relations", p.group_relations},
            {"group_order", p.group_order()},
            {"group_table", group_table},
            {"skew_primitives", gens},
            {"commutation", comm},
            {"rules", rules},
            {"notes", p.notes}};
}

} // namespace qgrass
