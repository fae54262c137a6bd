#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toriclink/io.hpp"

namespace py = pybind11;
using namespace toriclink;

namespace {

std::vector<IntVec> to_rays(const std::vector<std::vector<long long>>& rows) {
    std::vector<IntVec> out;
    for (const auto& r : rows) {
        IntVec v;
        for (long long x : r) v.push_back(Int(x));
        out.push_back(std::move(v));
    }
    return out;
}

Cone make_full_dim_cone(int ambient_rank, const std::vector<std::vector<long long>>& rays) {
    Cone c = Cone::from_rays(ambient_rank, to_rays(rays));
    return c.is_full_dim() ? c : c.restricted_to_span();
}

std::vector<long long> variety_betti(int ambient_rank, const std::vector<std::vector<long long>>& rays,
                                     const std::vector<std::vector<int>>& max_cones) {
    Fan f = Fan::from_data(ambient_rank, to_rays(rays), max_cones);
    FanValidation v = validate_fan(f);
    if (!v.complete()) throw input_error("fan is not complete: " + v.summary());
    return betti(build_variety_complex(f)).b;
}

std::vector<long long> link_betti(int ambient_rank, const std::vector<std::vector<long long>>& rays) {
    return betti(build_link_complex(make_full_dim_cone(ambient_rank, rays))).b;
}

std::string verify_json(int ambient_rank, const std::vector<std::vector<long long>>& rays,
                        const std::string& name) {
    LinkReport rep = verify_paper_formulas(make_full_dim_cone(ambient_rank, rays), name);
    return report_json(rep).dump(2);
}

std::string project_json(int ambient_rank, const std::vector<std::vector<long long>>& rays) {
    Cone c = make_full_dim_cone(ambient_rank, rays);
    ProjectionResult pr = project_boundary_fan(c, default_interior_ray(c));
    nlohmann::json j;
    j["ok"] = pr.ok();
    nlohmann::json ray = nlohmann::json::array();
    for (const Int& x : pr.interior_ray) ray.push_back(x.convert_to<long long>());
    j["interior_ray"] = ray;
    if (pr.ok()) {
        j["base_fan"] = fan_json(*pr.base_fan, "");
        j["base"] = betti_json(betti(build_variety_complex(*pr.base_fan)));
    } else {
        j["error"] = pr.failure_detail.empty() ? pr.validation.summary() : pr.failure_detail;
    }
    return j.dump(2);
}

std::string verify_file_json(const std::string& path) {
    ParsedInput in = parse_fan_file(path);
    if (!in.is_cone()) throw input_error(path + ": expected a single cone");
    Cone c = in.cone->is_full_dim() ? *in.cone : in.cone->restricted_to_span();
    return report_json(verify_paper_formulas(c, in.name)).dump(2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact rational Betti numbers of toric varieties and links of their singular strata";
    m.def("variety_betti", &variety_betti, py::arg("ambient_rank"), py::arg("rays"), py::arg("max_cones"),
          "Betti table of the compact toric variety of a complete fan");
    m.def("link_betti", &link_betti, py::arg("ambient_rank"), py::arg("rays"),
          "Betti table of the link of the point dual to a pointed cone");
    m.def("verify_json", &verify_json, py::arg("ambient_rank"), py::arg("rays"), py::arg("name") = "",
          "full identity report for a 4-dimensional cone, as a JSON string");
    m.def("verify_file_json", &verify_file_json, py::arg("path"),
          "full identity report for a cone JSON file, as a JSON string");
    m.def("project_json", &project_json, py::arg("ambient_rank"), py::arg("rays"),
          "projected base fan of the link circle bundle, as a JSON string");

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<consistency_error>(m, "ConsistencyError");
}
