#pragma once

#include "kashaev/asymptotics.hpp"
#include "kashaev/numeric.hpp"
#include "kashaev/params.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kashaev {

/// Method tags carried by every reported number.
inline constexpr const char* kQuadrature = "quadrature";
inline constexpr const char* kSkein = "skein";
inline constexpr const char* kClosedForm = "closed-form";

nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const Real& x);

/// {command, params, results[], checks[], timing}
class RunReport {
public:
    explicit RunReport(std::string command);

    void param(const std::string& key, nlohmann::json value);

    /// Appends {label, method, value, ...extra}.  `extra` holds table coordinates such as N or indices.
    void result(const std::string& label, const std::string& method, nlohmann::json value,
                nlohmann::json extra = nlohmann::json::object());

    /// Records {name, status, measured, tolerance}.  Returns `passed`.
    bool check(const std::string& name, bool passed, nlohmann::json measured, nlohmann::json tolerance);

    void timing(const std::string& stage, double seconds);

    bool all_passed() const;
    const nlohmann::json& checks() const { return checks_; }
    const nlohmann::json& results() const { return results_; }
    nlohmann::json to_json() const;

    /// One row per result, columns the union of keys with nested objects flattened as a.b.
    void write_csv(const std::string& path) const;

private:
    std::string command_;
    nlohmann::json params_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::array();
    nlohmann::json checks_ = nlohmann::json::array();
    nlohmann::json timing_ = nlohmann::json::object();
};

enum class ExactMethod { Quadrature, Skein, Both };

RunReport cmd_exact(const CableParams& p, int N, ExactMethod method, const PrecisionContext& ctx);
RunReport cmd_decompose(const CableParams& p, int N, const PrecisionContext& ctx);
RunReport cmd_compare(const CableParams& p, const std::vector<int>& Ns, const PrecisionContext& ctx);
RunReport cmd_plot_data(const CableParams& p, const std::vector<int>& Ns, const PrecisionContext& ctx);
RunReport cmd_reps(const CableParams& p, const std::vector<Complex>& us, const PrecisionContext& ctx);
RunReport cmd_cs_torsion(const CableParams& p, const PrecisionContext& ctx);
RunReport cmd_dk(int c, int d, const std::vector<int>& Ns, const PrecisionContext& ctx);

/// Candidate closed forms of the convergence harness.
enum class ClosedForm {
    /// theorem_rhs as printed
    Theorem,
    /// theorem_rhs with the B-indexed sum negated
    TheoremFlipped,
    /// framing_phase * (J1 + J2 + J3 proof forms as printed)
    PhasedProof,
    /// framing_phase * (J1 + corrected J2 + J3)
    PhasedProofCorrected,
};
const char* to_string(ClosedForm f);
inline constexpr ClosedForm kClosedForms[] = {ClosedForm::Theorem, ClosedForm::TheoremFlipped, ClosedForm::PhasedProof,
                                              ClosedForm::PhasedProofCorrected};

Complex closed_form_value(ClosedForm f, const CableParams& p, int N, const PrecisionContext& ctx);

struct FormStudy {
    ClosedForm form;
    std::vector<double> residuals;
    double slope = 0;
    bool over_n2_decreasing = false;
};

struct ConvergenceStudy {
    std::vector<int> Ns;
    std::vector<Complex> exact;
    std::vector<FormStudy> forms;
    /// Index into forms: the smallest slope, ties to the earlier form.
    std::size_t selected = 0;
    /// |theorem_rhs - unphased proof forms| per N.
    std::vector<double> theorem_vs_proof;
    /// +1 when the printed sign of the B-sum gives the smaller residual at every N, -1 when the flipped one does, 0 mixed.
    int sign_outcome = 0;
};

/// Slope bound and pinned tolerances of the harness.
inline constexpr double kSlopeBound = 0.7;

ConvergenceStudy convergence_study(const CableParams& p, const std::vector<int>& Ns, const PrecisionContext& ctx);

}  // namespace kashaev
