#include "groewalk/jsonio.hpp"

#include "groewalk/format.hpp"

namespace groewalk {

using nlohmann::json;

json weight_record(const WeightVector& w) {
    json out = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(to_string(w[i]));
    return out;
}

namespace {

json normals_record(const std::vector<IntVector>& normals) {
    json out = json::array();
    for (const auto& v : normals) out.push_back(v);
    return out;
}

}  // namespace

json cone_record(const FanCell& cell) {
    json out;
    out["normals"] = normals_record(cell.cone.normals);
    out["boundary_class"] = to_string(boundary_class(cell.cone));
    out["gb"] = canonical_strings(cell.gb.polys, cell.gb.order);
    return out;
}

json fan_record(const GroebnerFan& fan) {
    json out;
    out["format"] = 1;
    json cells = json::array();
    for (const auto& cell : fan.cells) {
        json rec = cone_record(cell);
        rec["key"] = cell.key;
        cells.push_back(std::move(rec));
    }
    out["cells"] = std::move(cells);
    json ev = json::array();
    for (const FanCell* cell : ev_region(fan)) ev.push_back(cell->key);
    out["ev_region"] = std::move(ev);
    return out;
}

json basis_record(const GroebnerBasis& basis) {
    json out;
    out["format"] = 1;
    out["order"] = order_spec_string(basis.order, *basis.context());
    out["basis"] = canonical_strings(basis.polys, basis.order);
    out["reduced"] = basis.reduced;
    out["normed"] = basis.normed;
    return out;
}

json trace_record(const WalkTrace& trace, WalkMode mode, const WeightVector& sigma,
                  const WeightVector& tau, const VariableContext& ctx) {
    json out;
    out["format"] = 1;
    out["mode"] = to_string(mode);
    out["sigma"] = weight_record(sigma);
    out["tau"] = weight_record(tau);
    out["stop_reason"] = to_string(trace.stop_reason);
    out["conversions"] = trace.conversions;
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step;
        step["k"] = s.k;
        step["omega"] = weight_record(s.omega);
        step["order"] = order_spec_string(s.order, ctx);
        step["gb"] = s.gb;
        step["cell"] = s.cell_key;
        step["is_ieo"] = s.is_ieo;
        step["tight_normals"] = normals_record(s.tight_normals);
        step["nongeneric"] = s.nongeneric_crossing;
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);
    return out;
}

json star_report_record(const StarCheckReport& report) {
    json out;
    out["format"] = 1;
    out["samples_tested"] = report.samples_tested;
    out["seed"] = report.seed;
    json v = json::array();
    for (const auto& violation : report.violations) {
        json rec;
        rec["sigma"] = weight_record(violation.sigma);
        rec["tau"] = weight_record(violation.tau);
        rec["omega"] = weight_record(violation.omega);
        rec["witness"] = violation.witness_key;
        v.push_back(std::move(rec));
    }
    out["violations"] = std::move(v);
    return out;
}

std::string section_csv(const GroebnerFan& fan) {
    const VariableContext& ctx = *fan.context;
    std::string out = "cell,vertex";
    for (std::size_t i = 0; i < ctx.size(); ++i) out += "," + ctx.name(i);
    out += "\n";
    auto polygons = fan_simplex_section(fan);
    for (std::size_t ci = 0; ci < polygons.size(); ++ci) {
        for (std::size_t vi = 0; vi < polygons[ci].vertices.size(); ++vi) {
            out += std::to_string(ci) + "," + std::to_string(vi);
            for (const auto& coord : polygons[ci].vertices[vi]) out += "," + to_string(coord);
            out += "\n";
        }
    }
    return out;
}

}  // namespace groewalk
