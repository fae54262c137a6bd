#include "toriclink/io.hpp"

#include <fstream>
#include <sstream>

namespace toriclink {

using nlohmann::json;

namespace {

IntVec parse_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw input_error(what + " is not an array");
    IntVec v;
    for (const auto& x : j) {
        if (x.is_number_integer()) {
            v.push_back(Int(x.get<long long>()));
        } else if (x.is_string()) {
            try {
                v.push_back(Int(x.get<std::string>()));
            } catch (...) {
                throw input_error(what + " has a non-integer entry");
            }
        } else {
            throw input_error(what + " has a non-integer entry");
        }
    }
    return v;
}

std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

ParsedInput parse_fan_json(const json& j, const std::string& fallback_name) {
    if (!j.is_object()) throw input_error("top-level JSON value is not an object");
    ParsedInput out;
    out.name = j.contains("name") ? j.at("name").get<std::string>() : fallback_name;

    if (!j.contains("ambient_rank") || !j.at("ambient_rank").is_number_integer())
        throw input_error("missing or non-integer ambient_rank");
    const int n = j.at("ambient_rank").get<int>();
    if (n < 0) throw input_error("ambient_rank is negative");

    if (!j.contains("rays") || !j.at("rays").is_array()) throw input_error("missing rays array");
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < j.at("rays").size(); ++i) {
        IntVec r = parse_vector(j.at("rays")[i], "ray " + std::to_string(i));
        if (static_cast<int>(r.size()) != n)
            throw input_error("ray " + std::to_string(i) + " has length " + std::to_string(r.size()) +
                              ", expected " + std::to_string(n));
        rays.push_back(std::move(r));
    }

    if (j.contains("max_cones")) {
        if (!j.at("max_cones").is_array()) throw input_error("max_cones is not an array");
        std::vector<std::vector<int>> mc;
        for (std::size_t i = 0; i < j.at("max_cones").size(); ++i) {
            const auto& one = j.at("max_cones")[i];
            if (!one.is_array()) throw input_error("max_cones[" + std::to_string(i) + "] is not an array");
            std::vector<int> idx;
            for (const auto& x : one) {
                if (!x.is_number_integer())
                    throw input_error("max_cones[" + std::to_string(i) + "] has a non-integer index");
                idx.push_back(x.get<int>());
            }
            mc.push_back(std::move(idx));
        }
        out.fan = Fan::from_data(n, std::move(rays), std::move(mc));
    } else {
        out.cone = Cone::from_rays(n, std::move(rays));
    }
    return out;
}

ParsedInput parse_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    try {
        return parse_fan_json(j, stem_of(path));
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

json betti_json(const BettiTable& t) {
    json j;
    j["betti"] = t.b;
    j["euler"] = t.euler();
    return j;
}

json fan_json(const Fan& f, const std::string& name) {
    json j;
    if (!name.empty()) j["name"] = name;
    j["ambient_rank"] = f.ambient_rank();
    json rays = json::array();
    for (const IntVec& r : f.rays()) {
        json row = json::array();
        for (const Int& x : r) row.push_back(x.convert_to<long long>());
        rays.push_back(row);
    }
    j["rays"] = rays;
    j["max_cones"] = f.max_cones();
    return j;
}

json validation_json(const FanValidation& v) {
    json j;
    j["complete"] = v.complete();
    j["max_cones_full_dim"] = v.max_cones_full_dim;
    j["intersections_ok"] = v.intersections_ok;
    j["ridges_paired"] = v.ridges_paired;
    j["dual_graph_connected"] = v.dual_graph_connected;
    if (!v.intersection_failures.empty()) j["intersection_failures"] = v.intersection_failures;
    if (!v.ridge_failures.empty()) j["ridge_failures"] = v.ridge_failures;
    return j;
}

json report_json(const LinkReport& r) {
    json j;
    j["name"] = r.name;
    j["f1"] = r.f1;
    j["f2"] = r.f2;
    j["facet_count"] = r.facet_count;
    j["link"] = betti_json(r.link_betti);
    if (r.has_b2) j["b2"] = r.b2;
    j["m"] = r.m;
    j["facet_edge_counts"] = r.facet_edge_counts;
    if (r.has_b2) {
        j["intersection_space_betti"] = r.is_betti;
        j["m_zero_regime"] = r.m_zero_regime;
    }
    if (!r.interior_ray.empty()) {
        json ray = json::array();
        for (const Int& x : r.interior_ray) ray.push_back(x.convert_to<long long>());
        j["interior_ray"] = ray;
    }
    j["projection_ok"] = r.projection_ok;
    if (r.projection_ok) j["base"] = betti_json(r.base_betti);
    if (r.has_b_projection) j["b_projection"] = r.b_projection;
    j["all_pass"] = r.all_pass();
    json checks = json::array();
    for (const Check& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["formula"] = c.formula;
        cj["pass"] = c.pass;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

std::string betti_text(const BettiTable& t) {
    std::ostringstream os;
    os << "degree:";
    for (std::size_t k = 0; k < t.b.size(); ++k) os << "\t" << k;
    os << "\nbetti: ";
    for (long long v : t.b) os << "\t" << v;
    os << "\neuler:\t" << t.euler() << "\n";
    return os.str();
}

std::string report_text(const LinkReport& r) {
    std::ostringstream os;
    os << "input: " << r.name << "\n";
    os << "f1 = " << r.f1 << "  f2 = " << r.f2 << "  facets = " << r.facet_count << "\n";
    os << "link betti:\n" << betti_text(r.link_betti);
    if (r.has_b2) os << "b2 = " << r.b2 << "\n";
    os << "m = " << r.m << " (facet edge counts:";
    for (long long e : r.facet_edge_counts) os << " " << e;
    os << ")\n";
    if (r.has_b2) {
        os << "intersection space betti: (";
        for (std::size_t i = 0; i < r.is_betti.size(); ++i) os << (i ? "," : "") << r.is_betti[i];
        os << ")" << (r.m_zero_regime ? "  [m = 0 regime]" : "") << "\n";
    }
    if (!r.interior_ray.empty()) {
        os << "interior ray: (";
        for (std::size_t i = 0; i < r.interior_ray.size(); ++i)
            os << (i ? "," : "") << r.interior_ray[i];
        os << ")\n";
    }
    if (r.projection_ok) os << "base betti:\n" << betti_text(r.base_betti);
    if (r.has_b_projection) os << "b (projection route) = " << r.b_projection << "\n";
    os << "checks:\n";
    for (const Check& c : r.checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.formula;
        if (!c.pass) os << "  (expected " << c.expected << ", got " << c.actual << ")";
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

}  // namespace toriclink
