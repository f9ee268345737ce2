#include "kashaev/report.hpp"
#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace kashaev;
using namespace kashaev::test;
using nlohmann::json;

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(KASHAEV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json without_timing(json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("run report layout") {
    RunReport rep("demo");
    rep.param("a", 1);
    rep.result("value", kClosedForm, 3, {{"N", 5}});
    CHECK(rep.check("ok", true, "1e-30", "1e-25"));
    rep.timing("stage", 0.5);
    CHECK(rep.all_passed());
    const json j = rep.to_json();
    for (const char* key : {"command", "params", "results", "checks", "timing"}) CHECK(j.contains(key));
    CHECK(j["results"][0]["method"] == "closed-form");
    CHECK(j["results"][0]["N"] == 5);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0].contains("measured"));
    CHECK(j["checks"][0].contains("tolerance"));
    CHECK_FALSE(rep.check("bad", false, 1, 0));
    CHECK_FALSE(rep.all_passed());
}

TEST_CASE("csv output") {
    RunReport rep("demo");
    rep.result("a, b", kSkein, json{{"re", "1"}, {"im", "2"}}, {{"N", 2}});
    rep.result("c", kQuadrature, 7);
    const auto path = std::filesystem::temp_directory_path() / "kashaev_report_test.csv";
    rep.write_csv(path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::filesystem::remove(path);
    CHECK(text.find("value.re") != std::string::npos);
    CHECK(text.find("\"a, b\"") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("complex values keep full precision") {
    PrecisionScope scope(kBits);
    const json j = to_json(Complex(Real(1) / 3, -pi()));
    CHECK(j["re"].get<std::string>().size() > 35);
    CHECK(j["im"].get<std::string>()[0] == '-');
}

TEST_CASE("harness selects one form") {
    const PrecisionContext ctx;
    const ConvergenceStudy st = convergence_study(new_cable_params(1, 7), {11, 25}, ctx);
    CHECK(st.forms.size() == std::size(kClosedForms));
    CHECK(st.selected < st.forms.size());
    for (const FormStudy& f : st.forms) CHECK(st.forms[st.selected].slope <= f.slope);
    for (double d : st.theorem_vs_proof) CHECK(d < 1e-20);
}

TEST_CASE("torus knot command") {
    const RunReport rep = cmd_dk(2, 3, {11, 25}, PrecisionContext());
    bool congruence = false;
    for (const auto& c : rep.checks())
        if (c["name"].get<std::string>().rfind("S = S~", 0) == 0) congruence = c["status"] == "pass";
    CHECK(congruence);
}

}

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("exact --a 1 --b 5 --N 3").exit_code == 1);
    CHECK(run_cli("exact --a 1 --b 7 --N 13 --method skein").exit_code == 1);
    CHECK(run_cli("exact --a 1 --b 7 --N 2 --method banana").exit_code == 1);
    CHECK(run_cli("--prec 16 cs_torsion --a 1 --b 7").exit_code == 1);
}

TEST_CASE("exact by skein") {
    const Run r = run_cli("exact --a 1 --b 7 --N 2 --method skein");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "exact");
    bool found = false;
    for (const auto& res : j["results"])
        if (res["label"] == "J_N" && res["method"] == "skein") {
            found = true;
            CHECK(std::stod(res["value"]["re"].get<std::string>()) == doctest::Approx(-15.0));
        }
    CHECK(found);
}

TEST_CASE("cs_torsion is deterministic and passes") {
    const Run a = run_cli("cs_torsion --a 1 --b 7");
    const Run b = run_cli("cs_torsion --a 1 --b 7");
    CHECK(a.exit_code == 0);
    CHECK(without_timing(json::parse(a.out)) == without_timing(json::parse(b.out)));
}

TEST_CASE("reps reports the failing literal conjugacy") {
    const Run r = run_cli("reps --a 1 --b 7 --u 0.3");
    CHECK(r.exit_code == 2);
    const json j = json::parse(r.out);
    for (const auto& c : j["checks"]) {
        const std::string name = c["name"];
        INFO(name);
        CHECK((c["status"] == "pass") == (name.rfind("AN conjugacy", 0) != 0));
    }
}

}
