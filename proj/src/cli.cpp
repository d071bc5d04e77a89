#include "pairs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairs/chambers.hpp"
#include "pairs/cohomology.hpp"
#include "pairs/crosscheck.hpp"
#include "pairs/errors.hpp"
#include "pairs/euler.hpp"
#include "pairs/numerology.hpp"
#include "pairs/poincare.hpp"
#include "pairs/verlinde.hpp"

namespace pairs::cli {

using nlohmann::json;

namespace {

constexpr long kDefaultDigits = 40;

/// Everything needed to render one answer in any format.
struct Output {
    json query;
    json result;
    json trace = json::array();
    std::string text;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] json cached() const {
        return {{"result", result}, {"trace", trace}, {"text", text}, {"header", header}, {"rows", rows}};
    }
    void restore(const json& v) {
        result = v.at("result");
        trace = v.at("trace");
        text = v.at("text").get<std::string>();
        header = v.at("header").get<std::vector<std::string>>();
        rows = v.at("rows").get<std::vector<std::vector<std::string>>>();
    }
};

json jint(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

long precision_from_env() {
    const char* raw = std::getenv("PAIRS_VERLINDE_PRECISION");
    if (raw == nullptr || *raw == '\0') return kDefaultDigits;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 30 || v > 100000) throw InputError("PAIRS_VERLINDE_PRECISION must be an integer >= 30");
    return v;
}

void require_curve(long g, long d) {
    if (g < 2) throw InputError("--g must be at least 2");
    if (d < 3) throw InputError("--d must be at least 3");
}

// ---------------------------------------------------------------- subcommands

Output do_verlinde(long g, long k, const std::string& parity, long digits) {
    const VerlindeQuery q{g, k, parity == "even" ? Parity::even : Parity::odd};
    Output o;
    const Integer exact = verlinde_exact(q);
    const std::string trig = verlinde_trig(q, digits).str(30);
    o.result = {{"value", jint(exact)}, {"degree", canonical_degree(q)}, {"trig", trig}};
    o.trace.push_back({{"route", "residue"}, {"value", jint(exact)}});
    o.trace.push_back({{"route", "trig"}, {"value", trig}});
    o.text = exact.get_str() + "\n  residue: " + exact.get_str() + "\n  trig: " + trig + "\n";
    o.header = {"g", "k", "parity", "value", "trig"};
    o.rows.push_back({std::to_string(g), std::to_string(k), parity, exact.get_str(), trig});
    return o;
}

Output do_dimv(long g, long d, long m, long n, const std::string& routes) {
    require_curve(g, d);
    const DimRoutes r = routes == "residue" ? DimRoutes::residue : (routes == "sum" ? DimRoutes::sum : DimRoutes::all);
    const DimResult res = dimv(g, d, m, n, r);
    Output o;
    const std::string status(to_string(res.status));
    o.result = {{"status", status}, {"value", res.value ? jint(*res.value) : json(nullptr)}};
    const std::string shown = res.value ? res.value->get_str() : "undetermined";
    o.text = shown + "\n  status: " + status + "\n";
    for (const auto& [route, v] : res.trace) {
        o.trace.push_back({{"route", route}, {"value", jint(v)}});
        o.text += "  " + route + ": " + v.get_str() + "\n";
    }
    o.header = {"g", "d", "m", "n", "status", "value"};
    o.rows.push_back({std::to_string(g), std::to_string(d), std::to_string(m), std::to_string(n), status,
                      res.value ? res.value->get_str() : ""});
    return o;
}

Output do_poincare(const std::string& space, long g, std::optional<long> d, std::optional<long> i, std::optional<long> j) {
    Output o;
    BettiPoly p;
    long dim = 0;
    auto add_route = [&](const std::string& route, const BettiPoly& q) {
        o.trace.push_back({{"route", route}, {"poly", poly_json(q)}});
        if (q != p) throw RouteMismatch("Poincare routes disagree for " + space);
    };
    if (space == "Mi") {
        if (!d || !i) throw InputError("--space Mi needs --d and --i");
        require_curve(g, *d);
        p = p_pairs_moduli(*i, *d, g);
        dim = *d + g - 2;
        add_route("closed", p);
        add_route("telescoped", p_pairs_moduli_sum(*i, *d, g));
    } else if (space == "N") {
        p = p_bundles_HN(g);
        dim = 3 * g - 3;
        add_route("harder_narasimhan", p);
        add_route("from_pairs", p_bundles_from_pairs(g, 4 * g - 3));
    } else {
        if (!j) throw InputError("--space Xj needs --j");
        if (g < 0 || *j < 0) throw InputError("--g and --j must be nonnegative");
        p = p_symprod(*j, g);
        dim = *j;
        add_route("generating_function", p);
        if (g <= 8) add_route("enumeration", p_symprod_oracle(*j, g));
    }
    o.result = {{"poly", poly_json(p)}, {"text", p.str()}, {"complex_dimension", dim}, {"palindrome", is_palindrome(p, dim)}};
    o.text = p.str() + "\n";
    o.header = {"degree", "betti"};
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) o.rows.push_back({std::to_string(k), p.coefficients()[k].str()});
    return o;
}

Output do_ni(long g, long d, long m, long n, std::optional<long> index) {
    require_curve(g, d);
    Output o;
    std::vector<long> indices;
    json extra = json::object();
    const ChamberSpec spec = ChamberSpec::make(g, d);
    const bool region = m >= 0 && n >= 0 && region_holds(g, d, m, n);
    if (region) extra["b"] = blowup_level_b(m, n, spec);
    extra["w"] = spec.w();
    if (index) {
        if (*index < 0) throw InputError("--i must be nonnegative");
        indices.push_back(*index);
    } else {
        const long top = region ? extra["b"].get<long>() : spec.w();
        for (long k = 0; k <= top; ++k) indices.push_back(k);
    }
    json values = json::array();
    o.header = {"i", "ring", "residue", "y", "agree"};
    const int gi = static_cast<int>(g);
    for (long k : indices) {
        const int ki = static_cast<int>(k);
        const Rational ring = ni_ring(ki, m, n, d, gi);
        const Rational res = ni_residue(ki, m, n, d, gi);
        const Rational y = ni_y(ki, m, n, d, gi);
        const bool agree = ring == res && res == y;
        values.push_back({{"i", k}, {"value", ring.str()}, {"agree", agree}});
        o.trace.push_back({{"route", "ring"}, {"i", k}, {"value", ring.str()}});
        o.trace.push_back({{"route", "residue"}, {"i", k}, {"value", res.str()}});
        o.trace.push_back({{"route", "y"}, {"i", k}, {"value", y.str()}});
        o.text += "N_" + std::to_string(k) + " = " + ring.str() + (agree ? "" : "  (routes differ: residue " + res.str() + ", y " + y.str() + ")") + "\n";
        o.rows.push_back({std::to_string(k), ring.str(), res.str(), y.str(), agree ? "true" : "false"});
    }
    o.result = {{"values", values}, {"in_region", region}};
    o.result.update(extra);
    return o;
}

Output do_chamber(long g, long d, std::optional<long> m, std::optional<long> n, std::optional<std::string> sigma) {
    require_curve(g, d);
    const ChamberSpec spec = ChamberSpec::make(g, d);
    Output o;
    json walls_json = json::array();
    for (const auto& w : walls(spec)) walls_json.push_back(w.str());
    json diagram = json::array();
    o.text = "w = " + std::to_string(spec.w()) + "\nwalls:";
    for (const auto& w : walls(spec)) o.text += " " + w.str();
    o.text += "\nample cones (slope n/m):\n  i = 0: projective space\n";
    for (const auto& row : chamber_diagram(spec)) {
        diagram.push_back({{"i", row.i}, {"lower_slope", row.lower_slope.str()}, {"upper_slope", row.upper_slope.str()}, {"upper_exact", row.upper_exact}});
        o.text += "  i = " + std::to_string(row.i) + ": " + row.lower_slope.str() + " < n/m < " + row.upper_slope.str() +
                  (row.upper_exact ? "" : " (guaranteed part; upper edge unknown)") + "\n";
    }
    const LineBundleLabel k = canonical_label(0, spec);
    const auto [tm, tn] = theta_pullback(spec);
    o.result = {{"w", spec.w()}, {"walls", walls_json}, {"diagram", diagram}, {"canonical", {k.m, k.n}}, {"theta", {tm.str(), tn.str()}}};
    o.text += "canonical bundle: O(" + std::to_string(k.m) + ", " + std::to_string(k.n) + ")\n";
    o.header = {"i", "lower_slope", "upper_slope", "upper_exact"};
    for (const auto& row : chamber_diagram(spec)) {
        o.rows.push_back({std::to_string(row.i), row.lower_slope.str(), row.upper_slope.str(), row.upper_exact ? "true" : "false"});
    }
    if (sigma) {
        const Rational s = Rational::parse(*sigma);
        const long idx = chamber_index(s, spec);
        o.result["chamber"] = idx;
        o.text += "sigma = " + s.str() + " lies in chamber " + std::to_string(idx) + "\n";
    }
    if (m.has_value() != n.has_value()) throw InputError("--m and --n go together");
    if (m) {
        json verdicts = json::array();
        o.header = {"i", "verdict", "deg_plus", "deg_minus", "deg_fibre"};
        o.rows.clear();
        o.text += "O(" + std::to_string(*m) + ", " + std::to_string(*n) + "):\n";
        for (long i = 0; i <= spec.w(); ++i) {
            const std::string v = i == 0 ? "projective_space" : std::string(to_string(is_ample({*m, *n, i}, spec)));
            const auto deg = restriction_degrees(*m, *n, i, spec);
            verdicts.push_back({{"i", i}, {"verdict", v}, {"restriction_degrees", deg}});
            o.text += "  i = " + std::to_string(i) + ": " + v + "\n";
            o.rows.push_back({std::to_string(i), v, std::to_string(deg[0]), std::to_string(deg[1]), std::to_string(deg[2])});
        }
        o.result["verdicts"] = verdicts;
        const Dictionary dict = dictionary(*m, *n, spec);
        o.result["dictionary"] = {{"det_exponent", dict.det_exponent}, {"lambda_exponent", dict.lambda_exponent}};
        if (*m >= 0 && *n >= 0 && region_holds(g, d, *m, *n)) {
            o.result["b"] = blowup_level_b(*m, *n, spec);
            o.text += "  b = " + std::to_string(o.result["b"].get<long>()) + "\n";
        }
    }
    return o;
}

Output do_crosscheck(const std::string& suite, const Grid& grid, unsigned jobs, long digits, bool& failed) {
    const CrosscheckReport report = crosscheck_suite(suite, grid, jobs, digits);
    failed = !report.ok();
    Output o;
    o.result = report.to_json();
    o.header = {"suite", "cases", "failures", "ok"};
    std::vector<const CrosscheckReport*> parts;
    if (report.parts.empty()) {
        parts.push_back(&report);
    } else {
        for (const auto& p : report.parts) parts.push_back(&p);
    }
    for (const auto* p : parts) {
        o.rows.push_back({p->suite, std::to_string(p->cases), std::to_string(p->failures.size()), p->ok() ? "true" : "false"});
        o.text += p->suite + ": " + std::to_string(p->cases) + " cases, " + std::to_string(p->failures.size()) + " failures\n";
        for (const auto& f : p->failures) o.text += "  FAIL " + f.dump() + "\n";
    }
    for (const auto& note : report.notes) o.text += "note: " + note + "\n";
    o.text += report.ok() ? "OK\n" : "FAILED\n";
    return o;
}

// ---------------------------------------------------------------- rendering and cache

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << json{{"query", o.query}, {"result", o.result}, {"trace", o.trace}}.dump(2) << "\n";
    } else if (format == "csv") {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_field(cells[k]);
            out << "\n";
        };
        line(o.header);
        for (const auto& r : o.rows) line(r);
    } else {
        out << o.text;
    }
}

class Cache {
public:
    explicit Cache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            const json entry = json::parse(line, nullptr, false);
            if (entry.is_discarded() || !entry.contains("key") || !entry.contains("value")) continue;
            entries_[entry["key"].get<std::string>()] = entry["value"];  // last write wins
        }
    }
    [[nodiscard]] const json* find(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }
    void store(const std::string& key, const json& value) {
        std::ofstream outf(path_, std::ios::app);
        if (!outf) throw InputError("cannot write cache file " + path_);
        outf << json{{"key", key}, {"value", value}}.dump() << "\n";
        entries_[key] = value;
    }

private:
    std::string path_;
    std::map<std::string, json> entries_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stable pairs, Betti numbers and Verlinde dimensions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::string cache_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", cache_path, "JSON-lines result cache");

    long g = 0, d = 0, m = 0, n = 0, k = 0;
    std::optional<long> oi, oj, od, om, on;
    std::optional<std::string> sigma;
    std::string parity, routes = "all", space, suite;
    Grid grid;
    unsigned jobs = 1;

    auto* verl = app.add_subcommand("verlinde", "Dimension of the level-k Verlinde space");
    verl->add_option("--g", g)->required();
    verl->add_option("--k", k)->required();
    verl->add_option("--parity", parity)->required()->check(CLI::IsMember({"even", "odd"}));

    auto* dim = app.add_subcommand("dimv", "dim V_{m,n} with region dispatch");
    dim->add_option("--g", g)->required();
    dim->add_option("--d", d)->required();
    dim->add_option("--m", m)->required();
    dim->add_option("--n", n)->required();
    dim->add_option("--routes", routes)->check(CLI::IsMember({"all", "residue", "sum"}));

    auto* poin = app.add_subcommand("poincare", "Poincare polynomials");
    poin->add_option("--space", space)->required()->check(CLI::IsMember({"Mi", "N", "Xj"}));
    poin->add_option("--g", g)->required();
    poin->add_option("--d", od);
    poin->add_option("--i", oi);
    poin->add_option("--j", oj);

    auto* ni = app.add_subcommand("ni", "Wall-crossing terms N_i by three routes");
    ni->add_option("--g", g)->required();
    ni->add_option("--d", d)->required();
    ni->add_option("--m", m)->required();
    ni->add_option("--n", n)->required();
    ni->add_option("--i", oi);

    auto* cham = app.add_subcommand("chamber", "Walls, ample cones and line-bundle data");
    cham->add_option("--g", g)->required();
    cham->add_option("--d", d)->required();
    cham->add_option("--m", om);
    cham->add_option("--n", on);
    cham->add_option("--sigma", sigma);

    auto* cross = app.add_subcommand("crosscheck", "Route-agreement suites");
    std::vector<std::string> suites = suite_names();
    suites.emplace_back("all");
    cross->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
    cross->add_option("--gmax", grid.gmax);
    cross->add_option("--dmax", grid.dmax);
    cross->add_option("--mmax", grid.mmax);
    cross->add_option("--nmax", grid.nmax);
    cross->add_option("--jobs", jobs)->check(CLI::Range(1U, 256U));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const long digits = precision_from_env();
        auto make_query = [&]() -> json {
            auto put = [](json& q, const char* key, const auto& v) {
                if (v) q[key] = *v;
            };
            if (verl->parsed()) return {{"subcommand", "verlinde"}, {"g", g}, {"k", k}, {"parity", parity}};
            if (dim->parsed()) return {{"subcommand", "dimv"}, {"g", g}, {"d", d}, {"m", m}, {"n", n}, {"routes", routes}};
            if (poin->parsed()) {
                json q = {{"subcommand", "poincare"}, {"space", space}, {"g", g}};
                put(q, "d", od);
                put(q, "i", oi);
                put(q, "j", oj);
                return q;
            }
            if (ni->parsed()) {
                json q = {{"subcommand", "ni"}, {"g", g}, {"d", d}, {"m", m}, {"n", n}};
                put(q, "i", oi);
                return q;
            }
            if (cham->parsed()) {
                json q = {{"subcommand", "chamber"}, {"g", g}, {"d", d}};
                put(q, "m", om);
                put(q, "n", on);
                if (sigma) q["sigma"] = Rational::parse(*sigma).str();
                return q;
            }
            return {{"subcommand", "crosscheck"}, {"suite", suite}, {"gmax", grid.gmax}, {"dmax", grid.dmax},
                    {"mmax", grid.mmax}, {"nmax", grid.nmax}};
        };
        Output o;
        bool failed = false;
        std::optional<Cache> cache;
        if (!cache_path.empty() && !cross->parsed()) cache.emplace(cache_path);

        o.query = make_query();
        auto compute = [&]() -> Output {
            if (verl->parsed()) return do_verlinde(g, k, parity, digits);
            if (dim->parsed()) return do_dimv(g, d, m, n, routes);
            if (poin->parsed()) return do_poincare(space, g, od, oi, oj);
            if (ni->parsed()) return do_ni(g, d, m, n, oi);
            if (cham->parsed()) return do_chamber(g, d, om, on, sigma);
            return do_crosscheck(suite, grid, jobs, digits, failed);
        };

        if (cache) {
            const std::string key = o.query.dump();
            if (const json* hit = cache->find(key)) {
                o.restore(*hit);
            } else {
                Output fresh = compute();
                fresh.query = o.query;
                o = std::move(fresh);
                cache->store(key, o.cached());
            }
        } else {
            json q = std::move(o.query);
            o = compute();
            o.query = std::move(q);
        }
        render(o, format, out);
        return failed ? kExitCrosscheckFailed : kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalAssertion& e) {
        err << "internal assertion: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace pairs::cli
