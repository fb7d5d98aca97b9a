#include "frachardy/serialization.hpp"

#include "frachardy/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>

namespace frachardy {

namespace {

Json entry(std::span<const int> coords, double value) {
    return Json::array({Json(std::vector<int>(coords.begin(), coords.end())), value});
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw DomainError(std::string("JSON record lacks field '") + key + "'");
    return j.at(key).get<T>();
}

Criticality criticality_from(const std::string& s) {
    for (auto c : {Criticality::PositiveCritical, Criticality::NullCritical, Criticality::Subcritical})
        if (to_string(c) == s) return c;
    throw DomainError("unknown classification '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
    for (auto v : {Verdict::Convergent, Verdict::LogDivergent, Verdict::Divergent})
        if (to_string(v) == s) return v;
    throw DomainError("unknown verdict '" + s + "'");
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    for (int p = 1; p <= 17; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

Json to_json(const KernelTable& t) {
    Json j;
    j["alpha"] = t.alpha();
    j["d"] = t.dimension();
    j["radius"] = t.radius();
    if (t.total_mass()) j["mass"] = *t.total_mass();
    Json entries = Json::array();
    for (const auto& [x, v] : t.entries()) entries.push_back(entry(x.coords(), v));
    j["entries"] = std::move(entries);
    return j;
}

KernelTable kernel_table_from_json(const Json& j) {
    const auto alpha = field<double>(j, "alpha");
    const auto d = field<int>(j, "d");
    const auto radius = field<int>(j, "radius");
    std::optional<double> mass;
    if (j.contains("mass")) mass = j.at("mass").get<double>();
    if (d < 1 || radius < 0) throw DomainError("kernel table JSON has an invalid shape");
    const auto count = KernelTable::representative_count(d, radius);
    std::vector<double> values(count, 0.0);
    std::vector<char> seen(count, 0);
    // representatives() enumerates in storage order, so rank = position
    const auto reps = KernelTable::representatives(d, radius);
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < reps.size(); ++i) position.emplace(reps[i], i);
    for (const auto& e : field<Json>(j, "entries")) {
        auto coords = e.at(0).get<std::vector<int>>();
        if (static_cast<int>(coords.size()) != d) throw DomainError("kernel table entry has the wrong dimension");
        for (int& c : coords) c = std::abs(c);
        std::sort(coords.begin(), coords.end());
        const auto it = position.find(coords);
        if (it == position.end()) throw CoverageError("kernel table entry lies outside the box");
        values[it->second] = e.at(1).get<double>();
        seen[it->second] = 1;
    }
    for (char s : seen)
        if (!s) throw DomainError("kernel table JSON is missing orbit representatives");
    return KernelTable(alpha, d, radius, std::move(values), mass);
}

Json to_json(const LatticeFunction& f) {
    Json entries = Json::array();
    for (const auto& [x, v] : f.entries()) entries.push_back(entry(x.coords(), v));
    return Json{{"d", f.dimension()}, {"entries", std::move(entries)}};
}

LatticeFunction lattice_function_from_json(const Json& j) {
    LatticeFunction f(field<int>(j, "d"));
    for (const auto& e : field<Json>(j, "entries")) {
        const LatticePoint x(e.at(0).get<std::vector<int>>());
        if (f(x) != 0.0) throw DomainError("lattice function JSON repeats the point " + x.to_string());
        f.set(x, e.at(1).get<double>());
    }
    return f;
}

Json to_json(const QuadratureSpec& q) {
    return Json{{"rel_tol", q.rel_tol},
                {"abs_tol", q.abs_tol},
                {"max_subdivisions", q.max_subdivisions},
                {"tail_policy", q.tail_policy == TailPolicy::AnalyticExpansion ? "analytic" : "power-law"},
                {"head_end", q.head_end},
                {"tail_factor", q.tail_factor},
                {"tail_floor", q.tail_floor},
                {"panel_width", q.panel_width}};
}

QuadratureSpec quadrature_from_json(const Json& j) {
    QuadratureSpec q;
    q.rel_tol = field<double>(j, "rel_tol");
    q.abs_tol = field<double>(j, "abs_tol");
    q.max_subdivisions = field<int>(j, "max_subdivisions");
    const auto policy = field<std::string>(j, "tail_policy");
    if (policy == "analytic")
        q.tail_policy = TailPolicy::AnalyticExpansion;
    else if (policy == "power-law")
        q.tail_policy = TailPolicy::PowerLawBound;
    else
        throw DomainError("unknown tail policy '" + policy + "'");
    q.head_end = j.value("head_end", q.head_end);
    q.tail_factor = j.value("tail_factor", q.tail_factor);
    q.tail_floor = j.value("tail_floor", q.tail_floor);
    q.panel_width = j.value("panel_width", q.panel_width);
    q.validate();
    return q;
}

Json to_json(const ScanReport& r) {
    Json scans = Json::array();
    for (const auto& s : r.scans) {
        Json partial = Json::array();
        for (const auto& [radius, v] : s.partial_sums) partial.push_back(Json::array({radius, v}));
        scans.push_back(Json{{"alpha", s.alpha},
                             {"partial_sums", std::move(partial)},
                             {"shell_sums", s.shell_sums},
                             {"shell_exponent_estimate", s.shell_exponent},
                             {"expected_exponent", s.expected_exponent},
                             {"verdict", to_string(s.verdict)},
                             {"classification", to_string(s.classification)}});
    }
    return Json{{"d", r.dimension}, {"sigma", r.sigma}, {"alpha0", r.alpha0}, {"radii", r.radii},
                {"quadrature", to_json(r.quadrature)}, {"scans", std::move(scans)}};
}

ScanReport scan_report_from_json(const Json& j) {
    ScanReport r;
    r.dimension = field<int>(j, "d");
    r.sigma = field<double>(j, "sigma");
    r.alpha0 = field<double>(j, "alpha0");
    r.radii = field<std::vector<int>>(j, "radii");
    r.quadrature = quadrature_from_json(field<Json>(j, "quadrature"));
    for (const auto& s : field<Json>(j, "scans")) {
        AlphaScan a;
        a.alpha = field<double>(s, "alpha");
        for (const auto& p : field<Json>(s, "partial_sums")) a.partial_sums.emplace_back(p.at(0).get<int>(), p.at(1).get<double>());
        a.shell_sums = field<std::vector<double>>(s, "shell_sums");
        a.shell_exponent = field<double>(s, "shell_exponent_estimate");
        a.expected_exponent = field<double>(s, "expected_exponent");
        a.verdict = verdict_from(field<std::string>(s, "verdict"));
        a.classification = criticality_from(field<std::string>(s, "classification"));
        r.scans.push_back(std::move(a));
    }
    return r;
}

Json to_json(const NullEnergyReport& r) {
    return Json{{"epsilon", r.epsilon},   {"alpha", r.alpha},       {"energy", r.energy}, {"form", r.form},
                {"interior", r.interior}, {"boundary", r.boundary}, {"warnings", r.warnings}};
}

Json to_json(const ResidualReport& r) {
    return Json{{"residual", r.residual},
                {"main_sum", r.main_sum},
                {"tail_correction", r.tail_correction},
                {"target", r.target},
                {"warnings", r.warnings}};
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
    os << "# d=" << r.dimension << " sigma=" << format_double(r.sigma) << " alpha0=" << format_double(r.alpha0)
       << " rel_tol=" << format_double(r.quadrature.rel_tol) << " abs_tol=" << format_double(r.quadrature.abs_tol) << '\n';
    os << "alpha,radius,partial_sum\n";
    for (const auto& s : r.scans)
        for (const auto& [radius, v] : s.partial_sums) os << format_double(s.alpha) << ',' << radius << ',' << format_double(v) << '\n';
}

} // namespace frachardy
