// orlicz: command-line front end for the variation, norm and restoration
// routines. Results go to stdout as JSON; plot data goes to CSV files.

#include "orlicz/conditions.hpp"
#include "orlicz/error.hpp"
#include "orlicz/io.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/restore.hpp"
#include "orlicz/variation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace orlicz;
using io::Json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDivergent = 3;

struct FunctionInput {
    std::string json_path;
    std::string csv_path;
    double jump_thresh = 0.0;
    bool no_jumps = false;

    void add(CLI::App* cmd) {
        cmd->add_option("--fn", json_path, "BV function JSON");
        cmd->add_option("--fn-csv", csv_path, "samples x,value of the function");
        cmd->add_option("--jump-thresh", jump_thresh, "absolute increment above which a CSV step is an atom")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--no-jumps", no_jumps, "treat every CSV increment as absolutely continuous");
    }

    BVFunction load(const CLI::App* cmd) const {
        const bool has_json = !json_path.empty(), has_csv = !csv_path.empty();
        if (has_json == has_csv) throw Error(ErrorCode::InvalidArgument, "give exactly one of --fn and --fn-csv");
        if (has_json) return io::bv_from_json(io::read_json_file(json_path));
        std::optional<double> thresh;
        if (no_jumps)
            thresh = -1.0;
        else if (cmd->count("--jump-thresh") > 0)
            thresh = jump_thresh;
        return io::bv_from_samples(io::read_xy_csv(csv_path), thresh);
    }
};

Side parse_side(const std::string& s) {
    if (s == "plus") return Side::Plus;
    if (s == "minus") return Side::Minus;
    throw Error(ErrorCode::InvalidArgument, "side must be plus or minus");
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "grid entry '" + item + "' is not a number");
        }
    }
    return out;
}

void print(const Json& j) { std::cout << io::dump(j) << '\n'; }

void write_plot(const std::string& path, const VariationEstimate& e) {
    if (path.empty()) return;
    std::vector<std::vector<double>> rows;
    for (const auto& mv : e.mesh_values) rows.push_back({mv.mesh, mv.value});
    io::write_csv(path, "h,value", rows);
}

}  // namespace

int main(int argc, char** argv) {
    kernels::apply_thread_cap_from_env();

    CLI::App app{"Riesz phi-variation, Luxemburg norms and Orlicz restoration"};
    app.require_subcommand(1);
    std::string phi_path;
    bool require_finite = false;

    // phi-check
    auto* check = app.add_subcommand("phi-check", "verify a structural condition of phi");
    std::string cond = "A0";
    double param = 0.0;
    std::size_t budget = 1000;
    check->add_option("--phi", phi_path, "phi JSON")->required();
    check->add_option("--cond", cond, "A0, A1, VA1, aInc, aDec, strongLogHolder or alphaHolder")->required();
    check->add_option("--param", param, "p for aInc, q for aDec, alpha for alphaHolder, K for A1/VA1");
    check->add_option("--budget", budget, "sampling budget (>= 100)");

    // variation
    auto* var = app.add_subcommand("variation", "sup or limsup phi-variation");
    FunctionInput var_fn;
    std::string kind = "sup", plot;
    std::size_t grid_n = 257, refine = 3, mesh_rounds = 14;
    var->add_option("--phi", phi_path, "phi JSON")->required();
    var_fn.add(var);
    var->add_option("--kind", kind, "sup, limsup+ or limsup-")
        ->check(CLI::IsMember({"sup", "limsup+", "limsup-"}));
    var->add_option("--grid-n", grid_n, "DP grid points");
    var->add_option("--refine", refine, "grid doublings");
    var->add_option("--mesh-rounds", mesh_rounds, "dyadic mesh levels");
    var->add_option("--plot", plot, "write h,value convergence CSV");
    var->add_flag("--require-finite", require_finite, "exit 3 when the estimate diverges");

    // norm
    auto* norm = app.add_subcommand("norm", "Luxemburg norm");
    FunctionInput norm_fn;
    std::string modular = "rbv", rbv_kind = "sup", of = "values";
    norm->add_option("--phi", phi_path, "phi JSON")->required();
    norm_fn.add(norm);
    norm->add_option("--modular", modular, "rbv or lphi")->check(CLI::IsMember({"rbv", "lphi"}));
    norm->add_option("--rbv-kind", rbv_kind, "sup or limsup+")->check(CLI::IsMember({"sup", "limsup+"}));
    norm->add_option("--of", of, "lphi argument: values or derivative")
        ->check(CLI::IsMember({"values", "derivative"}));
    norm->add_option("--grid-n", grid_n, "DP grid points");
    norm->add_option("--refine", refine, "grid doublings");
    norm->add_option("--mesh-rounds", mesh_rounds, "dyadic mesh levels");
    norm->add_flag("--require-finite", require_finite, "exit 3 when the norm is infinite");

    // represent
    auto* rep = app.add_subcommand("represent", "integral representation of the upper variation");
    FunctionInput rep_fn;
    rep->add_option("--phi", phi_path, "phi JSON")->required();
    rep_fn.add(rep);
    rep->add_flag("--require-finite", require_finite, "exit 3 when the value is infinite");

    // compare
    auto* cmp = app.add_subcommand("compare", "limsup variation against the representation");
    FunctionInput cmp_fn;
    cmp->add_option("--phi", phi_path, "phi JSON")->required();
    cmp_fn.add(cmp);
    cmp->add_option("--mesh-rounds", mesh_rounds, "dyadic mesh levels");
    cmp->add_option("--plot", plot, "write h,value convergence CSV");
    cmp->add_flag("--require-finite", require_finite, "exit 3 when either side diverges");

    // restore
    auto* res = app.add_subcommand("restore", "minimize the regularized restoration energy");
    std::string u0_path, config_path, out_path = "restored.csv", trace_path = "trace.csv";
    res->add_option("--u0", u0_path, "input signal CSV x,value")->required();
    res->add_option("--config", config_path, "restoration config JSON")->required();
    res->add_option("--out", out_path, "restored signal CSV");
    res->add_option("--trace", trace_path, "energy trace CSV iter,energy");

    // oracle
    auto* orc = app.add_subcommand("oracle", "grid DP over a user grid");
    FunctionInput orc_fn;
    std::string grid_list, side = "plus";
    orc->add_option("--phi", phi_path, "phi JSON")->required();
    orc_fn.add(orc);
    orc->add_option("--grid", grid_list, "comma separated grid including both endpoints")->required();
    orc->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*check) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            CheckOptions opt;
            opt.budget = budget;
            print(io::to_json(check_condition(phi, condition_from_string(cond), param, opt)));
            return 0;
        }
        if (*var) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            const BVFunction f = var_fn.load(var);
            VariationEstimate e;
            if (kind == "sup") {
                SupOptions opt;
                opt.grid_n = grid_n;
                opt.refine_rounds = refine;
                e = sup_variation(phi, f, opt);
            } else {
                LimsupOptions opt;
                opt.mesh_rounds = mesh_rounds;
                e = limsup_variation(phi, f, kind == "limsup+" ? Side::Plus : Side::Minus, opt);
            }
            print(io::to_json(e));
            write_plot(plot, e);
            return require_finite && e.status == EstimateStatus::Divergent ? kExitDivergent : 0;
        }
        if (*norm) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            const BVFunction f = norm_fn.load(norm);
            NormResult n;
            if (modular == "lphi") {
                n = lphi_norm(phi, of == "derivative" ? f.density() : f.values());
            } else if (rbv_kind == "sup") {
                SupOptions opt;
                opt.grid_n = grid_n;
                opt.refine_rounds = refine;
                n = luxemburg_norm([&](const BVFunction& g) { return sup_variation(phi, g, opt).value; }, f);
            } else {
                LimsupOptions opt;
                opt.mesh_rounds = mesh_rounds;
                n = luxemburg_norm([&](const BVFunction& g) { return limsup_variation(phi, g, Side::Plus, opt).value; },
                                   f);
            }
            print(io::to_json(n));
            return require_finite && n.value.is_infinite() ? kExitDivergent : 0;
        }
        if (*rep) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            const BVFunction f = rep_fn.load(rep);
            const ExtendedReal v = representation_functional(phi, f);
            Json j;
            j["value"] = v.value();
            print(j);
            return require_finite && v.is_infinite() ? kExitDivergent : 0;
        }
        if (*cmp) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            const BVFunction f = cmp_fn.load(cmp);
            LimsupOptions opt;
            opt.mesh_rounds = mesh_rounds;
            const auto e = limsup_variation(phi, f, Side::Plus, opt);
            const ExtendedReal r = representation_functional(phi, f);
            Json j;
            j["limsup_plus"] = io::to_json(e);
            j["representation"] = r.value();
            if (e.value.is_infinite() && r.is_infinite())
                j["difference"] = 0.0;
            else
                j["difference"] = std::abs(e.value.value() - r.value());
            print(j);
            write_plot(plot, e);
            const bool divergent = e.status == EstimateStatus::Divergent || r.is_infinite();
            return require_finite && divergent ? kExitDivergent : 0;
        }
        if (*res) {
            const Signal u0 = io::signal_from_samples(io::read_xy_csv(u0_path));
            const RestoreConfig cfg = io::restore_config_from_json(io::read_json_file(config_path));
            const RestoreResult r = minimize(u0, cfg);
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < r.u.size(); ++i) rows.push_back({r.u.x(i), r.u.u[i]});
            io::write_csv(out_path, "x,value", rows);
            rows.clear();
            for (std::size_t i = 0; i < r.trace.size(); ++i) rows.push_back({static_cast<double>(i), r.trace[i]});
            io::write_csv(trace_path, "iter,energy", rows);
            Json j;
            j["energy"] = r.trace.back();
            j["initial_energy"] = r.trace.front();
            j["iterations"] = r.iterations;
            j["converged"] = r.converged;
            j["regularization"] = regularization(r.u, cfg);
            j["representation"] = representation_functional(cfg.phi, interpolant(r.u)).value();
            print(j);
            return 0;
        }
        if (*orc) {
            const Phi phi = io::phi_from_json(io::read_json_file(phi_path));
            const BVFunction f = orc_fn.load(orc);
            const auto grid = parse_list(grid_list);
            print(io::to_json(grid_dp_variation(phi, f, grid, parse_side(side))));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
