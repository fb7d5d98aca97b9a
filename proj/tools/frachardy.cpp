#include "frachardy/asymptotics.hpp"
#include "frachardy/criticality.hpp"
#include "frachardy/errors.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/hardy_weights.hpp"
#include "frachardy/lattice_function.hpp"
#include "frachardy/riesz_kernel.hpp"
#include "frachardy/serialization.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace frachardy;

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_failed = 3;

struct Config {
    int d = 1;
    double sigma = 0.5;
    double alpha = 0.0;
    std::vector<int> x;
    std::vector<double> alphas;
    std::vector<int> radii;
    std::vector<double> epsilons;
    int radius = 0;
    int box_radius = -1;
    int samples = 100;
    std::uint64_t seed = 0;
    std::string kind = "kernel";
    std::string format = "json";
    std::string output;

    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    std::optional<int> max_subdivisions;
    std::optional<std::string> tail_policy;
};

// what a command did: a JSON document and, optionally, a CSV rendering
struct Result {
    Json json;
    std::string csv;
};

struct Command {
    std::string name;
    std::function<void()> validate;
    std::function<Result()> run;
};

QuadratureSpec quadrature(const Config& c) {
    auto q = QuadratureSpec::from_environment();
    if (c.rel_tol) q.rel_tol = *c.rel_tol;
    if (c.abs_tol) q.abs_tol = *c.abs_tol;
    if (c.max_subdivisions) q.max_subdivisions = *c.max_subdivisions;
    if (c.tail_policy) {
        if (*c.tail_policy == "analytic")
            q.tail_policy = TailPolicy::AnalyticExpansion;
        else if (*c.tail_policy == "power-law")
            q.tail_policy = TailPolicy::PowerLawBound;
        else
            throw DomainError("unknown tail policy '" + *c.tail_policy + "'");
    }
    q.validate();
    return q;
}

std::string provenance(const Config& c, const QuadratureSpec& q, const std::string& extra) {
    std::ostringstream os;
    os << "# d=" << c.d << ' ' << extra << " rel_tol=" << format_double(q.rel_tol)
       << " abs_tol=" << format_double(q.abs_tol) << '\n';
    return os.str();
}

LatticePoint point(const Config& c) {
    if (static_cast<int>(c.x.size()) != c.d)
        throw DomainError("--x needs " + std::to_string(c.d) + " coordinates");
    return LatticePoint(c.x);
}

Result scalar(double v, const std::string& header, const std::string& columns, const std::string& row) {
    return {Json(v), header + columns + ",value\n" + row + ',' + format_double(v) + '\n'};
}

std::string coords_csv(std::span<const int> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s;
}

std::string coord_columns(int d) {
    std::string s;
    for (int i = 0; i < d; ++i) s += (i ? "," : "") + std::string("x") + std::to_string(i + 1);
    return s;
}

std::vector<Command> commands(Config& c) {
    std::vector<Command> out;

    out.push_back({"kernel",
                   [&] {
                       quadrature(c);
                       if (c.radius > 0) {
                           if (c.d < 1) throw DomainError("--d must be positive");
                       } else {
                           point(c);
                       }
                   },
                   [&] {
                       const auto q = quadrature(c);
                       const auto head = provenance(c, q, "alpha=" + format_double(c.alpha));
                       if (c.radius > 0) {
                           const auto t = build_table(c.alpha, c.d, c.radius, q);
                           std::string csv = head + "# radius=" + std::to_string(c.radius) + '\n' +
                                             coord_columns(c.d) + ",value\n";
                           for (const auto& [x, v] : t.entries())
                               csv += coords_csv(x.coords()) + ',' + format_double(v) + '\n';
                           return Result{to_json(t), csv};
                       }
                       const auto x = point(c);
                       return scalar(riesz(c.alpha, x, q), head, coord_columns(c.d), coords_csv(x.coords()));
                   }});

    out.push_back({"mass", [&] { ModelParams::validate(c.d, c.sigma); quadrature(c); },
                   [&] {
                       const auto q = quadrature(c);
                       return scalar(total_mass(c.sigma, c.d, q), provenance(c, q, ""), "sigma",
                                     format_double(c.sigma));
                   }});

    out.push_back({"weight", [&] { HardyParams(c.d, c.sigma, c.alpha); point(c); quadrature(c); },
                   [&] {
                       const auto q = quadrature(c);
                       const auto x = point(c);
                       return scalar(hardy_weight(HardyParams(c.d, c.sigma, c.alpha), x, q), provenance(c, q, ""),
                                     "sigma,alpha," + coord_columns(c.d),
                                     format_double(c.sigma) + ',' + format_double(c.alpha) + ',' +
                                         coords_csv(x.coords()));
                   }});

    out.push_back({"psi", [&] { HardyParams(c.d, c.sigma, c.alpha); },
                   [&] {
                       return scalar(psi(c.sigma, c.d, c.alpha), "# d=" + std::to_string(c.d) + '\n', "sigma,alpha",
                                     format_double(c.sigma) + ',' + format_double(c.alpha));
                   }});

    out.push_back({"constant", [&] { ModelParams::validate(c.d, c.sigma); },
                   [&] {
                       return scalar(optimal_constant(c.sigma, c.d), "# d=" + std::to_string(c.d) + '\n', "sigma",
                                     format_double(c.sigma));
                   }});

    out.push_back({"scan",
                   [&] {
                       const ModelParams mp(c.d, c.sigma);
                       if (c.alphas.empty()) throw DomainError("--alphas is required");
                       for (double a : c.alphas) HardyParams(mp, a);
                       if (c.radii.size() < 3) throw DomainError("--radii needs at least three values");
                       for (std::size_t i = 0; i < c.radii.size(); ++i)
                           if (c.radii[i] < 10 || (i > 0 && c.radii[i] <= c.radii[i - 1]))
                               throw DomainError("--radii must increase and be at least 10");
                       quadrature(c);
                   },
                   [&] {
                       const auto rep = scan(c.sigma, c.d, c.alphas, c.radii, quadrature(c));
                       std::ostringstream csv;
                       write_scan_csv(csv, rep);
                       return Result{to_json(rep), csv.str()};
                   }});

    out.push_back({"hardy-test",
                   [&] {
                       HardyParams(c.d, c.sigma, c.alpha);
                       if (c.samples < 1) throw DomainError("--samples must be positive");
                       if (c.box_radius == 0 || c.box_radius < -1) throw DomainError("--box-radius must be positive");
                       quadrature(c);
                   },
                   [&] {
                       const auto q = quadrature(c);
                       const int box = c.box_radius > 0 ? c.box_radius : (c.d <= 2 ? 6 : 3);
                       const auto tables = HardyTables::build(HardyParams(c.d, c.sigma, c.alpha), box, q);
                       Json rows = Json::array();
                       std::string csv = provenance(c, q, "sigma=" + format_double(c.sigma) + " alpha=" +
                                                              format_double(c.alpha) + " box_radius=" +
                                                              std::to_string(box)) +
                                         "sigma,alpha,seed,deficit,form\n";
                       double worst = 0.0;
                       for (int i = 0; i < c.samples; ++i) {
                           const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
                           const auto phi = LatticeFunction::random_box(c.d, box, seed);
                           const double form = quadratic_form(tables.kappa_sigma, phi);
                           const double deficit = hardy_deficit(tables, phi);
                           worst = i == 0 ? deficit / form : std::min(worst, deficit / form);
                           rows.push_back(Json{{"seed", seed}, {"deficit", deficit}, {"form", form}});
                           csv += format_double(c.sigma) + ',' + format_double(c.alpha) + ',' + std::to_string(seed) +
                                  ',' + format_double(deficit) + ',' + format_double(form) + '\n';
                       }
                       Json j{{"d", c.d},         {"sigma", c.sigma}, {"alpha", c.alpha},
                              {"box_radius", box}, {"samples", rows},  {"min_relative_deficit", worst}};
                       return Result{j, csv};
                   }});

    out.push_back({"asym-fit",
                   [&] {
                       if (c.kind == "kernel") {
                           if (c.d < 1) throw DomainError("--d must be positive");
                           riesz_asymptotic_constant(c.alpha, c.d);
                       } else if (c.kind == "weight") {
                           ModelParams::validate(c.d, c.sigma);
                       } else {
                           throw DomainError("--kind must be kernel or weight");
                       }
                       if (c.radii.size() < 3) throw DomainError("--radii needs at least three values");
                       quadrature(c);
                   },
                   [&] {
                       const auto q = quadrature(c);
                       AsymptoticFit f;
                       std::string extra;
                       double alpha = c.alpha;
                       if (c.kind == "kernel") {
                           f = riesz_asymptotic_fit(c.alpha, c.d, c.radii, q);
                           extra = "kind=kernel alpha=" + format_double(alpha);
                       } else {
                           // the weight fit defaults to the critical exponent
                           if (alpha == 0.0) alpha = ModelParams(c.d, c.sigma).alpha0();
                           f = weight_asymptotic_fit(c.sigma, c.d, alpha, c.radii, q);
                           extra = "kind=weight sigma=" + format_double(c.sigma) + " alpha=" + format_double(alpha);
                       }
                       Json dev = Json::array();
                       std::string csv = provenance(c, q, extra) + "# slope=" + format_double(f.slope) +
                                         " intercept=" + format_double(f.intercept) + "\nradius,deviation\n";
                       for (const auto& [r, v] : f.deviations) {
                           dev.push_back(Json::array({r, v}));
                           csv += std::to_string(r) + ',' + format_double(v) + '\n';
                       }
                       Json j{{"kind", c.kind}, {"d", c.d},         {"alpha", alpha},
                              {"deviations", dev}, {"slope", f.slope}, {"intercept", f.intercept}};
                       if (c.kind == "weight") j["sigma"] = c.sigma;
                       return Result{j, csv};
                   }});

    out.push_back({"null-energy",
                   [&] {
                       const ModelParams mp(c.d, c.sigma);
                       if (c.epsilons.empty()) throw DomainError("--epsilons is required");
                       for (double e : c.epsilons)
                           if (!(e > 0.0 && e < mp.alpha0() - mp.sigma()))
                               throw DomainError("--epsilons must lie in (0, alpha0 - sigma)");
                       if (c.radius < 1) throw DomainError("--radius must be positive");
                       quadrature(c);
                   },
                   [&] {
                       const auto q = quadrature(c);
                       const auto reps = null_sequence_energies(c.sigma, c.d, c.epsilons, c.radius, q);
                       Json j = Json::array();
                       std::string csv = provenance(c, q, "sigma=" + format_double(c.sigma) + " radius=" +
                                                              std::to_string(c.radius)) +
                                         "epsilon,alpha,energy,interior,boundary\n";
                       for (const auto& r : reps) {
                           j.push_back(to_json(r));
                           csv += format_double(r.epsilon) + ',' + format_double(r.alpha) + ',' +
                                  format_double(r.energy) + ',' + format_double(r.interior) + ',' +
                                  format_double(r.boundary) + '\n';
                       }
                       return Result{j, csv};
                   }});

    out.push_back({"gs-residual",
                   [&] {
                       HardyParams(c.d, c.sigma, c.alpha);
                       point(c);
                       if (c.radius < 1) throw DomainError("--radius must be positive");
                       quadrature(c);
                   },
                   [&] {
                       const auto q = quadrature(c);
                       const auto x = point(c);
                       const auto r = ground_state_residual(c.sigma, c.alpha, x, c.radius, q);
                       std::string csv = provenance(c, q, "sigma=" + format_double(c.sigma) + " alpha=" +
                                                              format_double(c.alpha) + " radius=" +
                                                              std::to_string(c.radius)) +
                                         coord_columns(c.d) + ",residual,main_sum,tail_correction,target\n" +
                                         coords_csv(x.coords()) + ',' + format_double(r.residual) + ',' +
                                         format_double(r.main_sum) + ',' + format_double(r.tail_correction) +
                                         ',' + format_double(r.target) + '\n';
                       return Result{to_json(r), csv};
                   }});

    return out;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", c.output, "write to this file instead of stdout");
    sub->add_option("--seed", c.seed, "base seed for random test functions");
    sub->add_option("--rel-tol", c.rel_tol);
    sub->add_option("--abs-tol", c.abs_tol);
    sub->add_option("--max-subdivisions", c.max_subdivisions);
    sub->add_option("--tail-policy", c.tail_policy, "analytic or power-law");
}

void emit_error(const std::string& kind, const std::string& operation, const std::string& message) {
    Json e{{"error", kind}, {"operation", operation}, {"message", message}};
    std::cerr << e.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional Hardy weights on the integer lattice"};
    app.require_subcommand(1);
    app.allow_windows_style_options(false);
    Config c;
    auto cmds = commands(c);

    const std::vector<std::string> needs_sigma = {"mass", "weight", "psi", "constant", "scan",
                                                  "hardy-test", "asym-fit", "null-energy", "gs-residual"};
    for (const auto& cmd : cmds) {
        auto* sub = app.add_subcommand(cmd.name);
        sub->positionals_at_end(false);
        sub->add_option("--d", c.d, "lattice dimension")->required();
        const bool with_sigma =
            std::find(needs_sigma.begin(), needs_sigma.end(), cmd.name) != needs_sigma.end();
        if (with_sigma) sub->add_option("--sigma", c.sigma)->required(cmd.name != "asym-fit");
        if (cmd.name == "kernel" || cmd.name == "weight" || cmd.name == "psi" || cmd.name == "hardy-test" ||
            cmd.name == "gs-residual")
            sub->add_option("--alpha", c.alpha)->required();
        if (cmd.name == "asym-fit") {
            sub->add_option("--alpha", c.alpha, "kernel exponent, or weight exponent (default alpha0)");
            sub->add_option("--kind", c.kind, "kernel or weight");
            sub->add_option("--radii", c.radii)->delimiter(',')->required();
        }
        if (cmd.name == "kernel" || cmd.name == "weight" || cmd.name == "gs-residual")
            sub->add_option("--x", c.x, "lattice point, comma separated")->delimiter(',');
        if (cmd.name == "kernel") sub->add_option("--radius", c.radius, "emit the whole table on this box");
        if (cmd.name == "gs-residual" || cmd.name == "null-energy")
            sub->add_option("--radius", c.radius, "truncation radius")->required();
        if (cmd.name == "scan") {
            sub->add_option("--alphas", c.alphas)->delimiter(',')->required();
            sub->add_option("--radii", c.radii)->delimiter(',')->required();
        }
        if (cmd.name == "null-energy") sub->add_option("--epsilons", c.epsilons)->delimiter(',')->required();
        if (cmd.name == "hardy-test") {
            sub->add_option("--samples", c.samples);
            sub->add_option("--box-radius", c.box_radius);
        }
        add_common(sub, c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("invalid-config", "parse", e.what());
        return exit_invalid;
    }

    const Command* cmd = nullptr;
    for (const auto& k : cmds)
        if (app.got_subcommand(k.name)) cmd = &k;

    try {
        cmd->validate();
    } catch (const std::exception& e) {
        emit_error("invalid-config", cmd->name, e.what());
        return exit_invalid;
    }

    Result result;
    try {
        result = cmd->run();
    } catch (const std::exception& e) {
        emit_error("computation-failure", cmd->name, e.what());
        return exit_failed;
    }

    std::string text;
    if (c.format == "csv") {
        text = result.csv;
    } else if (result.json.is_number()) {
        text = format_double(result.json.get<double>()) + '\n';
    } else {
        text = result.json.dump(2) + '\n';
    }

    if (c.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(c.output, std::ios::binary);
    f << text;
    if (!f) {
        emit_error("computation-failure", "write", "cannot write " + c.output);
        return exit_failed;
    }
    return 0;
}
