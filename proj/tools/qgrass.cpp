// Batch front end: verification reports as JSON, tables as CSV.

#include "qgrass/affine.hpp"
#include "qgrass/hopf.hpp"
#include "qgrass/json_io.hpp"
#include "qgrass/qarith_checks.hpp"
#include "qgrass/uqrep.hpp"
#include "qgrass/version.hpp"
#include "qgrass/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace qgrass;
using nlohmann::json;

namespace
{

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct run_config {
    std::string command;
    std::string family;
    int m = 1;
    int n = 1;
    std::string q_mode = "generic";
    int d = 0;
    int t_max = -1;
    std::string format = "json";
    std::string out;
    bool sl = false;
    // subcommand specific
    std::string suite;
    std::string word;
    std::string index;
    bool exhaustive = false;
    bool compatible_orders = false;
    bool no_k_order = false;
    bool minus_coproduct = false;
    bool drop_nilpotency = false;
    bool export_presentation = false;
    std::string ell_bar;
    std::string m_bar;
    std::string mu;
    std::vector<int> fields;

    field ctx() const { return d > 0 ? root_field(d) : generic_field(); }

    json to_json() const
    {
        json j = {{"command", command}, {"m", m}, {"n", n}, {"q", q_mode}, {"format", format}};
        if (!family.empty()) {
            j["family"] = family;
        }
        if (d > 0) {
            j["d"] = d;
            j["ell"] = char_of(ctx()).ell;
        }
        if (t_max >= 0) {
            j["t_max"] = t_max;
        }
        if (sl) {
            j["variant"] = "sl";
        }
        if (!suite.empty()) {
            j["suite"] = suite;
        }
        if (command == "act") {
            j["word"] = word;
            j["index"] = index;
        }
        if (command == "hopf") {
            j["exhaustive"] = exhaustive;
            j["compatible_orders"] = compatible_orders;
            j["k_order"] = !no_k_order;
            j["minus_coproduct"] = minus_coproduct;
            j["drop_nilpotency"] = drop_nilpotency;
            if (!ell_bar.empty()) {
                j["ell_bar"] = ell_bar;
            }
            if (!m_bar.empty()) {
                j["m_bar"] = m_bar;
            }
            if (!mu.empty()) {
                j["mu"] = mu;
            }
        }
        if (command == "qtest" && !fields.empty()) {
            j["fields"] = fields;
        }
        return j;
    }
};

int worker_count()
{
    if (const char *env = std::getenv("QGRASS_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) {
                return w;
            }
        } catch (const std::exception &) {
        }
        throw usage_error("QGRASS_WORKERS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// evaluates jobs on a worker pool; results come back in job order
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)> &job)
{
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t w = std::min<std::size_t>(count, static_cast<std::size_t>(worker_count()));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < w; ++k) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string &text, char sep = ',')
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception &) {
            throw usage_error("not an integer list: " + text);
        }
    }
    return out;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string> &cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += (i ? "," : "") + csv_field(cells[i]);
    }
    return out + "\n";
}

void write_output(const run_config &cfg, const std::string &text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(cfg.out);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        f << text;
        if (!f.flush()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

json envelope(const run_config &cfg, json result, bool pass)
{
    return {{"tool", "qgrass"}, {"version", version}, {"config", cfg.to_json()}, {"all_pass", pass},
            {"result", std::move(result)}};
}

std::string reports_csv(const std::vector<relation_report> &reps)
{
    std::string out = csv_row({"suite", "kind", "name", "status", "witness"});
    for (const auto &r : reps) {
        for (const auto &c : r.relations) {
            out += csv_row({r.suite, "relation", c.name, c.pass ? "pass" : "fail", c.witness});
        }
        for (const auto &c : r.diagnostics) {
            out += csv_row({r.suite, "diagnostic", c.name, c.pass ? "pass" : "fail", c.witness});
        }
    }
    return out;
}

int emit_reports(const run_config &cfg, const std::vector<relation_report> &reps, json extra = json::object())
{
    bool pass = true;
    for (const auto &r : reps) {
        pass = pass && r.all_pass();
    }
    if (cfg.format == "csv") {
        write_output(cfg, reports_csv(reps));
    } else {
        json result = extra;
        result["reports"] = json::array();
        for (const auto &r : reps) {
            result["reports"].push_back(to_json(r));
        }
        write_output(cfg, envelope(cfg, result, pass).dump(2) + "\n");
    }
    return pass ? 0 : 1;
}

space_spec make_space(const run_config &cfg, const std::string &fallback = "omega")
{
    const std::string name = cfg.family.empty() ? fallback : cfg.family;
    return space_spec(parse_family(name), cfg.m, cfg.n, cfg.ctx());
}

int t_max_or(const run_config &cfg, int dflt)
{
    return cfg.t_max >= 0 ? cfg.t_max : dflt;
}

// ---------------------------------------------------------------- subcommands

int cmd_dims(const run_config &cfg)
{
    const space_spec s = make_space(cfg);
    int hi = t_max_or(cfg, s.top_degree() >= 0 ? s.top_degree() : 6);
    if (s.top_degree() >= 0) {
        hi = std::min(hi, s.top_degree());
    }
    struct row {
        long long formula = 0, enumerated = 0;
    };
    const auto rows = parallel_map<row>(static_cast<std::size_t>(hi + 1), [&](std::size_t t) {
        return row{dim_formula(s, static_cast<int>(t)),
                   static_cast<long long>(basis_of_degree(s, static_cast<int>(t)).size())};
    });
    bool pass = true;
    for (const auto &r : rows) {
        pass = pass && r.formula == r.enumerated;
    }
    if (cfg.format == "json") {
        json table = json::array();
        for (std::size_t t = 0; t < rows.size(); ++t) {
            table.push_back({{"t", t},
                             {"dim_formula", rows[t].formula},
                             {"dim_enum", rows[t].enumerated},
                             {"equal", rows[t].formula == rows[t].enumerated}});
        }
        write_output(cfg, envelope(cfg, {{"space", s.describe()}, {"rows", table}}, pass).dump(2) + "\n");
    } else {
        std::string out = csv_row({"t", "dim_formula", "dim_enum", "equal"});
        for (std::size_t t = 0; t < rows.size(); ++t) {
            out += csv_row({std::to_string(t), std::to_string(rows[t].formula), std::to_string(rows[t].enumerated),
                            rows[t].formula == rows[t].enumerated ? "true" : "false"});
        }
        write_output(cfg, out);
    }
    return pass ? 0 : 1;
}

int cmd_act(const run_config &cfg)
{
    const space_spec s = make_space(cfg);
    if (cfg.word.empty() || cfg.index.empty()) {
        throw usage_error("act needs --word and --index");
    }
    const multi_index a = parse_multi_index(cfg.index);
    if (a.e.size() != static_cast<std::size_t>(s.sh.size()) || !s.valid_index(a)) {
        throw usage_error("index " + cfg.index + " is not a basis monomial of " + s.describe());
    }
    // generator symbols, written left to right and applied right to left
    operator_expr op = operator_expr::identity(s);
    std::stringstream ss(cfg.word);
    std::string sym;
    while (ss >> sym) {
        op = op * generator_word(parse_generator_symbol(sym), s);
    }
    const super_vector img = apply(op, super_vector::monomial(s, a));
    if (cfg.format == "csv") {
        std::string out = csv_row({"index", "coefficient"});
        for (const auto &[k, c] : img.terms()) {
            out += csv_row({k.to_string(), c.to_string()});
        }
        write_output(cfg, out);
    } else {
        write_output(cfg, envelope(cfg,
                                   {{"space", s.describe()},
                                    {"word", cfg.word},
                                    {"index", a.to_string()},
                                    {"image", to_json(img)},
                                    {"image_text", img.to_string()}},
                                   true)
                                  .dump(2) +
                              "\n");
    }
    return 0;
}

int cmd_check_uq(const run_config &cfg)
{
    const space_spec s = make_space(cfg);
    const uq_variant v = cfg.sl ? uq_variant::sl : uq_variant::gl;
    return emit_reports(cfg, {verify_uq_relations(s, t_max_or(cfg, 6), v)});
}

int cmd_check_leibniz(const run_config &cfg)
{
    const space_spec s = make_space(cfg);
    const uq_variant v = cfg.sl ? uq_variant::sl : uq_variant::gl;
    return emit_reports(cfg, {verify_module_algebra(s, t_max_or(cfg, 5), v)});
}

int cmd_check_weyl(const run_config &cfg, bool dq)
{
    const space_spec s = make_space(cfg);
    std::vector<weyl_suite> suites;
    if (!cfg.suite.empty()) {
        suites.push_back(parse_weyl_suite(cfg.suite));
    } else if (dq) {
        suites = {weyl_suite::dq_super, weyl_suite::twisted_leibniz};
    } else {
        const char_profile cp = char_of(s.ctx);
        suites = {cp.parity == q_parity::generic_q ? weyl_suite::weyl_generic
                  : cp.parity == q_parity::odd_root ? weyl_suite::weyl_odd_root
                                                    : weyl_suite::weyl_even_root};
    }
    const int t = t_max_or(cfg, 5);
    const auto reps = parallel_map<relation_report>(
        suites.size(), [&](std::size_t i) { return verify_relation_suite(suites[i], s, t); });
    return emit_reports(cfg, reps);
}

int cmd_check_affine(const run_config &cfg)
{
    return emit_reports(cfg, {affine_correspondence(cfg.m, cfg.n, t_max_or(cfg, 4), cfg.ctx())});
}

int cmd_hopf(const run_config &cfg)
{
    if (cfg.family.empty()) {
        throw usage_error("hopf needs --family");
    }
    const hopf_family fam = parse_hopf_family(cfg.family);
    hopf_params p;
    p.m = cfg.m;
    p.n = cfg.n;
    p.ctx = cfg.ctx();
    p.minus_coproduct = cfg.minus_coproduct;
    p.k_order = !cfg.no_k_order;
    p.literal_orders = !cfg.compatible_orders;
    p.drop_nilpotency = cfg.drop_nilpotency;
    if (fam == hopf_family::taft_mu) {
        if (cfg.d == 0) {
            p.ctx = root_field(6);
        }
        p.ell_bar = cfg.ell_bar.empty() ? std::vector<int>{2, 3} : parse_int_list(cfg.ell_bar);
        if (!cfg.m_bar.empty()) {
            p.m_bar = parse_int_list(cfg.m_bar);
        }
        if (cfg.mu.empty()) {
            if (!cfg.ell_bar.empty()) {
                throw usage_error("taft-mu with --ell-bar needs --mu");
            }
            p.mu_exp = {{3, 0}, {0, 2}};
        } else {
            std::stringstream ss(cfg.mu);
            std::string row;
            while (std::getline(ss, row, ';')) {
                p.mu_exp.push_back(parse_int_list(row));
            }
        }
    }
    const hopf_presentation pres = build_hopf(fam, p);
    const relation_report rep =
        verify_hopf(pres, cfg.exhaustive ? hopf_depth::exhaustive : hopf_depth::generators_only);
    const pbw_dimension dim = pbw_dim(pres);
    json extra = {{"title", pres.title}, {"dim", dim.infinite ? json("Infinite") : json(dim.value)},
                  {"group_order", pres.group_order()}};
    if (cfg.export_presentation) {
        extra["presentation"] = export_presentation(pres);
    }
    return emit_reports(cfg, {rep}, extra);
}

int cmd_simple(const run_config &cfg)
{
    const space_spec s = make_space(cfg);
    const uq_variant v = cfg.sl ? uq_variant::sl : uq_variant::gl;
    int hi = t_max_or(cfg, s.top_degree() >= 0 ? s.top_degree() : 4);
    if (s.top_degree() >= 0) {
        hi = std::min(hi, s.top_degree());
    }
    const auto reps = parallel_map<component_report>(
        static_cast<std::size_t>(hi + 1), [&](std::size_t t) { return analyze_component(s, static_cast<int>(t), v); });
    bool pass = true;
    for (const auto &r : reps) {
        pass = pass && r.simple == simplicity::simple && (!r.claim.available || r.claim_matches);
    }
    if (cfg.format == "csv") {
        std::string out = csv_row({"t", "dim", "hw_count", "hw_vector", "claim", "claim_matches", "simple"});
        for (const auto &r : reps) {
            out += csv_row({std::to_string(r.t), std::to_string(r.dim), std::to_string(r.hw_basis.size()),
                            r.hw_basis.size() == 1 ? r.hw_basis[0].to_string() : "",
                            r.claim.available ? r.claim.label : "", r.claim_matches ? "true" : "false",
                            to_string(r.simple)});
        }
        write_output(cfg, out);
    } else {
        json comps = json::array();
        for (const auto &r : reps) {
            comps.push_back(to_json(r));
        }
        write_output(cfg, envelope(cfg, {{"components", comps}}, pass).dump(2) + "\n");
    }
    return pass ? 0 : 1;
}

int cmd_qtest(const run_config &cfg)
{
    std::vector<int> ds = cfg.fields;
    if (cfg.d > 0) {
        ds = {cfg.d};
    } else if (ds.empty()) {
        ds = {0, 3, 5, 6, 8};
    }
    const auto reps = parallel_map<relation_report>(ds.size(), [&](std::size_t i) {
        return qarith_property_sweep(ds[i] > 0 ? root_field(ds[i]) : generic_field());
    });
    return emit_reports(cfg, reps);
}

void validate(run_config &cfg)
{
    if (cfg.q_mode != "generic" && cfg.q_mode != "root") {
        throw usage_error("--q must be generic or root");
    }
    if (cfg.q_mode == "generic" && cfg.d > 0 && cfg.command != "qtest") {
        // --d alone selects the root-of-unity field
        cfg.q_mode = "root";
    }
    if (cfg.q_mode == "root" && cfg.d == 0 && !(cfg.command == "hopf" && cfg.family == "taft-mu")) {
        throw usage_error("--q root needs --d");
    }
    if (cfg.d != 0 && cfg.d < 3) {
        throw usage_error("--d must be at least 3 (q != +-1)");
    }
    if (cfg.m < 0 || cfg.n < 0) {
        throw usage_error("--m and --n must be non-negative");
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw usage_error("--format must be json or csv");
    }
    // space families are validated before any computation
    const bool space_cmd = cfg.command != "hopf" && cfg.command != "qtest" && cfg.command != "check-affine";
    if (space_cmd) {
        try {
            (void)make_space(cfg);
        } catch (const std::invalid_argument &e) {
            throw usage_error(e.what());
        }
    }
}

} // namespace

int run(int argc, char **argv)
{
    CLI::App app{"qgrass: exact verification of quantum Grassmann superalgebra constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);
    run_config cfg;

    auto common = [&](CLI::App *sub, bool space) {
        if (space) {
            sub->add_option("--family", cfg.family, "space family (affine, omega, omega-restricted, dual, dual-restricted)");
        }
        sub->add_option("--m", cfg.m, "number of even coordinates");
        sub->add_option("--n", cfg.n, "number of odd coordinates");
        sub->add_option("--q", cfg.q_mode, "generic or root");
        sub->add_option("--d", cfg.d, "order of the root of unity q");
        sub->add_option("--t-max", cfg.t_max, "largest degree checked");
        sub->add_option("--format", cfg.format, "json or csv");
        sub->add_option("--out", cfg.out, "output file (written atomically)");
    };

    auto *dims = app.add_subcommand("dims", "dim_formula against enumeration per degree");
    common(dims, true);
    auto *act = app.add_subcommand("act", "apply a generator word to a basis monomial");
    common(act, true);
    act->add_option("--word", cfg.word, "generator symbols, e.g. \"E1 F2 K1\" (rightmost acts first)");
    act->add_option("--index", cfg.index, "basis monomial, e.g. \"(2 | 1)\"");
    auto *cuq = app.add_subcommand("check-uq", "relations of the quantum group as operator identities");
    common(cuq, true);
    cuq->add_flag("--sl", cfg.sl, "sl variant");
    auto *cleib = app.add_subcommand("check-leibniz", "module-algebra law on monomial pairs");
    common(cleib, true);
    cleib->add_flag("--sl", cfg.sl, "sl variant");
    auto *cweyl = app.add_subcommand("check-weyl", "Weyl algebra relation suite");
    common(cweyl, true);
    cweyl->add_option("--suite", cfg.suite, "WeylGeneric, WeylOddRoot, WeylEvenRoot");
    auto *cdq = app.add_subcommand("check-dq", "relations of the q-differential operators");
    common(cdq, true);
    cdq->add_option("--suite", cfg.suite, "DqSuper, DqHopfAlg, TwistedLeibniz");
    auto *caff = app.add_subcommand("check-affine", "affine superspace against the derivation algebra");
    common(caff, false);
    auto *hopf = app.add_subcommand("hopf", "build a pointed Hopf algebra and verify its axioms");
    common(hopf, true);
    hopf->add_flag("--exhaustive", cfg.exhaustive, "check every PBW element");
    hopf->add_flag("--compatible-orders", cfg.compatible_orders, "enlarge group orders to the character orders");
    hopf->add_flag("--no-k-order", cfg.no_k_order, "do not impose K^ell = 1 on even generators");
    hopf->add_flag("--minus-coproduct", cfg.minus_coproduct, "alternate coproduct of the derivation algebra");
    hopf->add_flag("--drop-nilpotency", cfg.drop_nilpotency, "polynomial model without nilpotency");
    hopf->add_flag("--export", cfg.export_presentation, "include the presentation tables");
    hopf->add_option("--ell-bar", cfg.ell_bar, "taft-mu orders, e.g. 2,3");
    hopf->add_option("--m-bar", cfg.m_bar, "taft-mu group orders");
    hopf->add_option("--mu", cfg.mu, "taft-mu exponents of mu_ij, rows separated by ';'");
    auto *simple = app.add_subcommand("simple", "highest weights and simplicity per degree");
    common(simple, true);
    simple->add_flag("--sl", cfg.sl, "sl variant");
    auto *qtest = app.add_subcommand("qtest", "q-combinatorics identity sweep");
    common(qtest, false);
    qtest->add_option("--fields", cfg.fields, "root orders to sweep, 0 for generic")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::CallForVersion &e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }
    for (auto *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }

    try {
        validate(cfg);
        if (cfg.command == "dims") {
            return cmd_dims(cfg);
        }
        if (cfg.command == "act") {
            return cmd_act(cfg);
        }
        if (cfg.command == "check-uq") {
            return cmd_check_uq(cfg);
        }
        if (cfg.command == "check-leibniz") {
            return cmd_check_leibniz(cfg);
        }
        if (cfg.command == "check-weyl") {
            return cmd_check_weyl(cfg, false);
        }
        if (cfg.command == "check-dq") {
            return cmd_check_weyl(cfg, true);
        }
        if (cfg.command == "check-affine") {
            return cmd_check_affine(cfg);
        }
        if (cfg.command == "hopf") {
            return cmd_hopf(cfg);
        }
        if (cfg.command == "simple") {
            return cmd_simple(cfg);
        }
        if (cfg.command == "qtest") {
            return cmd_qtest(cfg);
        }
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int main(int argc, char **argv)
{
    return run(argc, argv);
}
