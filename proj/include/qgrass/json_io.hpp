#ifndef QGRASS_JSON_IO_HPP
#define QGRASS_JSON_IO_HPP

#include "qgrass/hopf.hpp"
#include "qgrass/report.hpp"
#include "qgrass/superspaces.hpp"
#include "qgrass/uqrep.hpp"

#include <json.hpp>

namespace qgrass
{

// [{index, coefficient}] in basis order
nlohmann::json to_json(const super_vector &v);

// {suite, params, relations: [{name, status, witness?}], diagnostics, notes, all_pass}
nlohmann::json to_json(const relation_report &r);

// {space, t, dim, hw_basis, hw_weight, simple, witnesses, ...}
nlohmann::json to_json(const component_report &r);

// generators, rules and the Delta / eps / S tables on the generators
nlohmann::json export_presentation(const hopf_presentation &p);

} // namespace qgrass

#endif
