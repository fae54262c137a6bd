#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toriclink/fuzz.hpp"
#include "toriclink/io.hpp"

using namespace toriclink;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

struct OutputOpts {
    std::string format = "table";
    std::string output;
};

void emit(const OutputOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(opts.output);
        if (!out) throw input_error("cannot write to " + opts.output);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

std::string render(const OutputOpts& opts, const json& j, const std::string& table) {
    return opts.format == "json" ? j.dump(2) : table;
}

IntVec parse_ray_option(const std::string& s) {
    IntVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(Int(item));
        } catch (...) {
            throw input_error("--ray: cannot parse '" + item + "' as an integer");
        }
    }
    if (v.empty()) throw input_error("--ray: empty vector");
    return v;
}

Cone load_cone(const std::string& path) {
    ParsedInput in = parse_fan_file(path);
    if (!in.is_cone()) throw input_error(path + ": expected a single cone (file declares max_cones)");
    Cone c = *in.cone;
    if (!c.is_full_dim()) c = c.restricted_to_span();
    return c;
}

int cmd_homology(const std::string& path, const OutputOpts& opts) {
    ParsedInput in = parse_fan_file(path);
    if (in.is_cone()) throw input_error(path + ": expected a complete fan (file has no max_cones)");
    FanValidation v = validate_fan(*in.fan);
    if (!v.complete()) {
        std::cerr << "fan is not complete: " << v.summary() << "\n";
        return kExitInput;
    }
    BettiTable t = betti(build_variety_complex(*in.fan));
    json j = betti_json(t);
    j["name"] = in.name;
    emit(opts, render(opts, j, "name: " + in.name + "\n" + betti_text(t)));
    return kExitOk;
}

int cmd_link(const std::string& path, const OutputOpts& opts) {
    ParsedInput in = parse_fan_file(path);
    if (!in.is_cone()) throw input_error(path + ": expected a single cone");
    Cone c = in.cone->is_full_dim() ? *in.cone : in.cone->restricted_to_span();
    BettiTable t = betti(build_link_complex(c));
    json j = betti_json(t);
    j["name"] = in.name;
    j["cone_dim"] = c.dim();
    emit(opts, render(opts, j, "name: " + in.name + "\n" + betti_text(t)));
    return kExitOk;
}

int cmd_project(const std::string& path, const std::string& ray, const OutputOpts& opts) {
    ParsedInput in = parse_fan_file(path);
    if (!in.is_cone()) throw input_error(path + ": expected a single cone");
    Cone c = in.cone->is_full_dim() ? *in.cone : in.cone->restricted_to_span();
    IntVec tau = ray.empty() ? default_interior_ray(c) : parse_ray_option(ray);
    ProjectionResult pr = project_boundary_fan(c, tau);

    json j;
    j["name"] = in.name;
    json rj = json::array();
    for (const Int& x : pr.interior_ray) rj.push_back(x.convert_to<long long>());
    j["interior_ray"] = rj;
    std::ostringstream table;
    table << "name: " << in.name << "\ninterior ray: (";
    for (std::size_t i = 0; i < pr.interior_ray.size(); ++i)
        table << (i ? "," : "") << pr.interior_ray[i];
    table << ")\n";
    if (!pr.ok()) {
        j["ok"] = false;
        j["error"] = pr.failure_detail.empty() ? pr.validation.summary() : pr.failure_detail;
        table << "projection failed: " << j["error"].get<std::string>() << "\n";
        emit(opts, render(opts, j, table.str()));
        return kExitCheckFailed;
    }
    j["ok"] = true;
    j["base_fan"] = fan_json(*pr.base_fan, "");
    j["validation"] = validation_json(pr.validation);
    BettiTable t = betti(build_variety_complex(*pr.base_fan));
    j["base"] = betti_json(t);
    table << "base fan rays:\n";
    for (const IntVec& r : pr.base_fan->rays()) {
        table << "  (";
        for (std::size_t i = 0; i < r.size(); ++i) table << (i ? "," : "") << r[i];
        table << ")\n";
    }
    table << "max cones:\n";
    for (const auto& mc : pr.base_fan->max_cones()) {
        table << "  {";
        for (std::size_t i = 0; i < mc.size(); ++i) table << (i ? "," : "") << mc[i];
        table << "}\n";
    }
    table << "base betti:\n" << betti_text(t);
    emit(opts, render(opts, j, table.str()));
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& ray, const OutputOpts& opts) {
    Cone c = load_cone(path);
    ParsedInput in = parse_fan_file(path);
    IntVec tau;
    LinkReport rep;
    if (!ray.empty()) {
        tau = parse_ray_option(ray);
        rep = verify_paper_formulas(c, in.name, &tau);
    } else {
        rep = verify_paper_formulas(c, in.name);
    }
    emit(opts, render(opts, report_json(rep), report_text(rep)));
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_fuzz(int count, std::uint64_t seed, const OutputOpts& opts) {
    FuzzRng rng(seed);
    json failures = json::array();
    std::ostringstream table;
    int failed = 0;
    for (int i = 0; i < count; ++i) {
        Cone c = random_link_cone(rng, 4);
        std::string name = "fuzz-" + std::to_string(seed) + "-" + std::to_string(i);
        LinkReport rep = verify_paper_formulas(c, name);
        if (!rep.all_pass()) {
            ++failed;
            failures.push_back(report_json(rep));
            table << report_text(rep) << "\n";
        }
    }
    json j;
    j["count"] = count;
    j["seed"] = seed;
    j["failed"] = failed;
    j["failures"] = failures;
    table << "fuzz: " << count << " cones, seed " << seed << ", " << failed << " failure(s)\n";
    emit(opts, render(opts, j, table.str()));
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational Betti numbers of toric varieties and the links of their singular strata"};
    app.require_subcommand(1);

    OutputOpts opts;
    app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", opts.output, "write the report to this path instead of stdout");

    std::string path, ray;
    int count = 20;
    std::uint64_t seed = 1;

    auto* homology = app.add_subcommand("homology", "Betti table of the compact toric variety of a complete fan");
    homology->fallthrough();
    homology->add_option("file", path, "fan JSON file")->required();

    auto* link = app.add_subcommand("link", "Betti table of the link of the point dual to a cone");
    link->fallthrough();
    link->add_option("file", path, "cone JSON file")->required();

    auto* project = app.add_subcommand("project", "base fan of the link's circle bundle and its Betti table");
    project->fallthrough();
    project->add_option("file", path, "cone JSON file")->required();
    project->add_option("--ray", ray, "interior ray override, comma-separated integers");

    auto* verify = app.add_subcommand("verify", "full identity report for a 4-dimensional cone");
    verify->fallthrough();
    verify->add_option("file", path, "cone JSON file")->required();
    verify->add_option("--ray", ray, "interior ray override, comma-separated integers");

    auto* fuzz = app.add_subcommand("fuzz", "verify randomly generated 4-cones");
    fuzz->fallthrough();
    fuzz->add_option("--count", count, "number of cones");
    fuzz->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed()) return cmd_homology(path, opts);
        if (link->parsed()) return cmd_link(path, opts);
        if (project->parsed()) return cmd_project(path, ray, opts);
        if (verify->parsed()) return cmd_verify(path, ray, opts);
        if (fuzz->parsed()) return cmd_fuzz(count, seed, opts);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInput;
}
