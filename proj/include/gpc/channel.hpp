#ifndef GPC_CHANNEL_HPP
#define GPC_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gpc/constructions.hpp"

namespace gpc {

/// alpha(A) = (1 - sum lambda_i) (Tr A / n) I + sum_i lambda_i E_i(A) over a
/// validated decomposition. The lambda_i are arbitrary finite reals; complete
/// positivity is what the certification operations decide.
struct GeneralizedPauliChannel {
    Decomposition decomposition;
    std::vector<double> lambda;
};

CMatrix apply(const GeneralizedPauliChannel& ch, const CMatrix& a);

/// For A inside part `part_index` (0-based) the channel restricts to the
/// depolarizing map A -> lambda_i A + (1 - lambda_i)(Tr A / n) I. Returns
/// apply(ch, A) after asserting both the membership and the depolarizing
/// identity (1e-10).
CMatrix restrict_check(const GeneralizedPauliChannel& ch, int part_index, const CMatrix& a);

/// Choi matrix sum_ij alpha(E_ij) tensor E_ij (output factor first).
CMatrix choi(const GeneralizedPauliChannel& ch);

struct NumericCpResult {
    bool cp = false;
    double min_eigenvalue = 0.0;
    double tolerance_used = 0.0;
};

/// Complete positivity via the minimal Choi eigenvalue; CP iff it is
/// >= -tol. The default tolerance is 1e-9 * max(1, largest |entry|).
NumericCpResult numeric_cp(const GeneralizedPauliChannel& ch);
NumericCpResult numeric_cp(const GeneralizedPauliChannel& ch, double tol);

struct CpReport {
    bool analytic_cp = false;
    bool numeric_cp = false;
    double min_choi_eigenvalue = 0.0;
    std::vector<std::pair<std::string, double>> condition_margins;
    double tolerance_used = 0.0;
};

/// The inequality margins whose nonnegativity characterizes complete
/// positivity: per part i, 1 + n^2 lambda_i / dim A_i' - sum lambda; globally
/// sum_j lambda_j (n^2 / dim A_j' - 1) + 1; and, when the commutant union
/// does not span M_n, the extension-slot margin (1 - sum lambda)/n.
std::vector<std::pair<std::string, double>> analytic_margins(const GeneralizedPauliChannel& ch);

/// Analytic CP verdict (all margins >= 0, exact arithmetic on lambda) with
/// the numeric verdict filled in alongside. Throws if the decomposition does
/// not validate.
CpReport analytic_cp(const GeneralizedPauliChannel& ch);

enum class KrausGroup { Identity, Part, Extension };

struct KrausSlot {
    KrausGroup group = KrausGroup::Identity;
    int part = -1;   // 0-based part index for KrausGroup::Part
    int index = -1;  // index into that part's commutant basis (>= 1), or extension counter
    std::string label() const;
};

/// alpha(A) = sum_t c_t V_t^dagger A V_t over the HS-orthonormal system
/// {I/sqrt(n)} u {non-identity commutant elements} u {extension W_t}.
struct KrausForm {
    std::vector<double> coefficients;
    std::vector<CMatrix> elements;
    std::vector<KrausSlot> groups;
};

KrausForm kraus_form(const GeneralizedPauliChannel& ch);

/// CP iff every coefficient >= -1e-12 (the elements are verified
/// HS-orthonormal first; with an orthonormal system the coefficients are
/// exactly the Choi eigenvalues).
bool kraus_cp_check(const KrausForm& form);

/// sum_t c_t V_t^dagger A V_t.
CMatrix kraus_apply(const KrausForm& form, const CMatrix& a);

/// Coefficients mu of the qubit channel written as sum mu_i sigma_i A sigma_i.
std::array<double, 4> qubit_mu(const std::array<double, 3>& lambda);
/// Inverse map lambda_k = mu_0 + mu_k - (sum of the other two mu).
std::array<double, 3> qubit_lambda(const std::array<double, 4>& mu);

/// The qubit CP condition 1 +- lambda_3 >= |lambda_1 +- lambda_2|.
bool cp_condition_qubit(const std::array<double, 3>& lambda);

struct SampleStats {
    long long count = 0;
    long long agree = 0;
    long long skipped = 0;
    long long disagree = 0;
    /// Most negative Choi eigenvalue seen among analytic-CP samples
    /// (0 when there were none).
    double worst_cp_min_eigenvalue = 0.0;
};

/// Draws `count` lambda vectors uniformly from `box` (one interval per
/// coordinate, or a single interval applied to all), keyed by
/// (seed, sample index). Samples whose minimal analytic margin lies within
/// +-margin are skipped; for the rest the analytic and numeric verdicts are
/// compared.
SampleStats sample_cp_agreement(const Decomposition& d, long long count, std::uint64_t seed,
                                const std::vector<std::pair<double, double>>& box, double margin);

}  // namespace gpc

#endif
