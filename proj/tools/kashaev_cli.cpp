#include "kashaev/errors.hpp"
#include "kashaev/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace kashaev;

namespace {

std::vector<Complex> parse_us(const std::vector<std::string>& specs, unsigned bits) {
    PrecisionScope scope(bits);
    std::vector<Complex> out;
    for (const std::string& s : specs) {
        const auto comma = s.find(',');
        try {
            if (comma == std::string::npos) {
                out.emplace_back(Real(s), Real(0));
            } else {
                out.emplace_back(Real(s.substr(0, comma)), Real(s.substr(comma + 1)));
            }
        } catch (const std::exception&) {
            throw Error(ErrorKind::ConstraintViolated, "cannot parse u value '" + s + "' (expected re or re,im)");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kashaev invariant of T(2,2a+1)^(2,2b+1): exact values, asymptotics and representation checks"};
    app.require_subcommand(1);

    std::optional<unsigned> prec;
    std::string csv;
    app.add_option("--prec", prec, "working precision in bits (default 128 or KASHAEV_PREC_BITS)");
    app.add_option("--csv", csv, "also write the results table as CSV");

    long a = 0, b = 0;
    int N = 0;
    std::vector<int> Ns;
    std::string method = "quadrature";
    std::vector<std::string> us = {"0", "0.3", "0.1,0.2"};
    int c = 2, d = 3;

    auto cable = [&](CLI::App* sub) {
        sub->add_option("--a", a, "companion parameter")->required();
        sub->add_option("--b", b, "pattern parameter")->required();
        sub->fallthrough();
    };

    CLI::App* exact = app.add_subcommand("exact", "J_N by quadrature, skein, or both");
    cable(exact);
    exact->add_option("--N", N, "level")->required();
    exact->add_option("--method", method, "quadrature | skein | both")
        ->check(CLI::IsMember({"quadrature", "skein", "both"}));

    CLI::App* compare = app.add_subcommand("compare", "convergence harness against the closed forms");
    cable(compare);
    compare->add_option("--N-list", Ns, "levels")->required()->delimiter(',');

    CLI::App* decompose = app.add_subcommand("decompose", "contour-shift decomposition of I_N");
    cable(decompose);
    decompose->add_option("--N", N, "level")->required();

    CLI::App* reps = app.add_subcommand("reps", "relator, longitude and symmetry checks");
    cable(reps);
    reps->add_option("--u", us, "deformation parameters as re or re,im");

    CLI::App* cs = app.add_subcommand("cs_torsion", "Chern-Simons values, torsions and tau^2 T products");
    cable(cs);

    CLI::App* dk = app.add_subcommand("dk", "torus knot T(c,d) against its asymptotic formula");
    dk->add_option("--c", c, "first torus parameter");
    dk->add_option("--d", d, "second torus parameter");
    dk->add_option("--N-list", Ns, "levels")->required()->delimiter(',');
    dk->fallthrough();

    CLI::App* plot = app.add_subcommand("plot-data", "(N, residual) of the harness-selected closed form");
    cable(plot);
    plot->add_option("--N-list", Ns, "levels")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        PrecisionContext ctx = PrecisionContext::from_environment();
        if (prec) ctx = PrecisionContext(*prec);

        std::optional<RunReport> rep;
        if (*dk) {
            rep = cmd_dk(c, d, Ns, ctx);
        } else {
            const CableParams p = new_cable_params(a, b);
            if (*exact) {
                const ExactMethod m = method == "skein" ? ExactMethod::Skein
                                      : method == "both" ? ExactMethod::Both
                                                         : ExactMethod::Quadrature;
                rep = cmd_exact(p, N, m, ctx);
            } else if (*compare) {
                rep = cmd_compare(p, Ns, ctx);
            } else if (*decompose) {
                rep = cmd_decompose(p, N, ctx);
            } else if (*reps) {
                rep = cmd_reps(p, parse_us(us, ctx.bits + 32), ctx);
            } else if (*cs) {
                rep = cmd_cs_torsion(p, ctx);
            } else {
                rep = cmd_plot_data(p, Ns, ctx);
            }
        }
        std::cout << rep->to_json().dump(2) << '\n';
        if (!csv.empty()) rep->write_csv(csv);
        return rep->all_passed() ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
