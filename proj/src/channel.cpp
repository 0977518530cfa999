#include "gpc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpc/rng.hpp"

namespace gpc {

namespace {

void require_channel_shape(const GeneralizedPauliChannel& ch) {
    if (ch.lambda.size() != ch.decomposition.parts.size())
        throw std::invalid_argument("channel: lambda length does not match part count");
    for (double l : ch.lambda)
        if (!std::isfinite(l)) throw std::invalid_argument("channel: non-finite lambda");
}

double lambda_sum(const std::vector<double>& lambda) {
    double s = 0.0;
    for (double l : lambda) s += l;
    return s;
}

}  // namespace

CMatrix apply(const GeneralizedPauliChannel& ch, const CMatrix& a) {
    require_channel_shape(ch);
    const int n = ch.decomposition.n;
    if (a.dim() != n) throw std::invalid_argument("apply: input dimension mismatch");
    const double rest = 1.0 - lambda_sum(ch.lambda);
    CMatrix out = CMatrix::identity(n) * (a.trace() * (rest / n));
    for (std::size_t i = 0; i < ch.lambda.size(); ++i)
        out += conditional_expectation(ch.decomposition.parts[i], a) * ch.lambda[i];
    return out;
}

CMatrix restrict_check(const GeneralizedPauliChannel& ch, int part_index, const CMatrix& a) {
    require_channel_shape(ch);
    if (part_index < 0 || part_index >= ch.decomposition.part_count())
        throw std::invalid_argument("restrict_check: part index out of range");
    const Subalgebra& part = ch.decomposition.parts[static_cast<std::size_t>(part_index)];
    const double scale = std::max(1.0, hs_norm(a));
    if (hs_norm(a - conditional_expectation(part, a)) > 1e-10 * scale)
        throw std::invalid_argument("restrict_check: matrix is not in the subalgebra");

    const CMatrix out = apply(ch, a);
    const double li = ch.lambda[static_cast<std::size_t>(part_index)];
    const int n = ch.decomposition.n;
    const CMatrix expected = a * li + CMatrix::identity(n) * (a.trace() * ((1.0 - li) / n));
    if ((out - expected).max_norm() > 1e-10 * scale)
        throw std::runtime_error("restrict_check: depolarizing identity violated");
    return out;
}

CMatrix choi(const GeneralizedPauliChannel& ch) {
    require_channel_shape(ch);
    const int n = ch.decomposition.n;
    CMatrix x(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const CMatrix img = apply(ch, matrix_unit(n, i, j));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) x(a * n + (i - 1), b * n + (j - 1)) += img(a, b);
        }
    return x;
}

NumericCpResult numeric_cp(const GeneralizedPauliChannel& ch) {
    const CMatrix x = choi(ch);
    const double tol = 1e-9 * std::max(1.0, x.max_norm());
    const std::vector<double> eig = hermitian_eigenvalues(x);
    return {eig.front() >= -tol, eig.front(), tol};
}

NumericCpResult numeric_cp(const GeneralizedPauliChannel& ch, double tol) {
    const std::vector<double> eig = hermitian_eigenvalues(choi(ch));
    return {eig.front() >= -tol, eig.front(), tol};
}

std::vector<std::pair<std::string, double>> analytic_margins(const GeneralizedPauliChannel& ch) {
    require_channel_shape(ch);
    const double n2 = static_cast<double>(ch.decomposition.n) * ch.decomposition.n;
    const double sum = lambda_sum(ch.lambda);
    std::vector<std::pair<std::string, double>> margins;
    double global = 1.0;
    for (std::size_t i = 0; i < ch.lambda.size(); ++i) {
        const Subalgebra& part = ch.decomposition.parts[i];
        if (!part.has_commutant_basis())
            throw std::invalid_argument("analytic_margins: commutant basis not populated");
        const double dim_comm = static_cast<double>(part.commutant_basis.size());
        margins.emplace_back("part-" + std::to_string(i + 1), 1.0 + n2 * ch.lambda[i] / dim_comm - sum);
        global += ch.lambda[i] * (n2 / dim_comm - 1.0);
    }
    margins.emplace_back("global", global);
    if (!ch.decomposition.commutant_spanning)
        margins.emplace_back("extension", (1.0 - sum) / ch.decomposition.n);
    return margins;
}

CpReport analytic_cp(const GeneralizedPauliChannel& ch) {
    if (!validate_decomposition(ch.decomposition).all_passed())
        throw std::invalid_argument("analytic_cp: decomposition does not validate");
    CpReport report;
    report.condition_margins = analytic_margins(ch);
    report.analytic_cp = true;
    for (const auto& [name, value] : report.condition_margins)
        if (!(value >= 0.0)) report.analytic_cp = false;
    const NumericCpResult numeric = numeric_cp(ch);
    report.numeric_cp = numeric.cp;
    report.min_choi_eigenvalue = numeric.min_eigenvalue;
    report.tolerance_used = numeric.tolerance_used;
    return report;
}

std::string KrausSlot::label() const {
    switch (group) {
        case KrausGroup::Identity: return "identity";
        case KrausGroup::Part: return "part-" + std::to_string(part + 1) + "-" + std::to_string(index);
        case KrausGroup::Extension: return "extension-" + std::to_string(index);
    }
    throw std::logic_error("KrausSlot::label: bad group");
}

KrausForm kraus_form(const GeneralizedPauliChannel& ch) {
    require_channel_shape(ch);
    const int n = ch.decomposition.n;
    const int n2 = n * n;
    const double sum = lambda_sum(ch.lambda);

    KrausForm form;
    form.elements.push_back(CMatrix::identity(n) * (1.0 / std::sqrt(static_cast<double>(n))));
    double identity_coeff = (1.0 - sum) / n;
    for (std::size_t j = 0; j < ch.lambda.size(); ++j) {
        const Subalgebra& part = ch.decomposition.parts[j];
        if (!part.has_commutant_basis())
            throw std::invalid_argument("kraus_form: commutant basis not populated");
        const double dim_comm = static_cast<double>(part.commutant_basis.size());
        identity_coeff += n * ch.lambda[j] / dim_comm;
        for (std::size_t k = 1; k < part.commutant_basis.size(); ++k) {
            form.elements.push_back(part.commutant_basis[k]);
            form.coefficients.push_back((1.0 - sum) / n + n * ch.lambda[j] / dim_comm);
            form.groups.push_back({KrausGroup::Part, static_cast<int>(j), static_cast<int>(k)});
        }
    }
    form.coefficients.insert(form.coefficients.begin(), identity_coeff);
    form.groups.insert(form.groups.begin(), {KrausGroup::Identity, -1, -1});

    // The theorem needs the collected system orthonormal; failure means the
    // commutants are not pairwise complementary.
    for (std::size_t s = 0; s < form.elements.size(); ++s)
        for (std::size_t t = s; t < form.elements.size(); ++t) {
            const Complex ip = hs_inner(form.elements[s], form.elements[t]);
            const Complex expected = (s == t) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(ip - expected) > 1e-10)
                throw std::runtime_error("kraus_form: commutant elements are not orthonormal across parts");
        }

    if (static_cast<int>(form.elements.size()) > n2)
        throw std::runtime_error("kraus_form: more elements than n^2");
    std::vector<CMatrix> units;
    units.reserve(static_cast<std::size_t>(n2));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) units.push_back(matrix_unit(n, i, j));
    const std::vector<CMatrix> extension = complete_orthonormal(form.elements, units, n2);
    int t = 0;
    for (const CMatrix& w : extension) {
        form.elements.push_back(w);
        form.coefficients.push_back((1.0 - sum) / n);
        form.groups.push_back({KrausGroup::Extension, -1, ++t});
    }
    return form;
}

bool kraus_cp_check(const KrausForm& form) {
    for (std::size_t s = 0; s < form.elements.size(); ++s)
        for (std::size_t t = s; t < form.elements.size(); ++t) {
            const Complex ip = hs_inner(form.elements[s], form.elements[t]);
            const Complex expected = (s == t) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(ip - expected) > 1e-10)
                throw std::invalid_argument("kraus_cp_check: elements are not HS-orthonormal");
        }
    for (double c : form.coefficients)
        if (c < -1e-12) return false;
    return true;
}

CMatrix kraus_apply(const KrausForm& form, const CMatrix& a) {
    CMatrix out(a.dim());
    for (std::size_t t = 0; t < form.elements.size(); ++t)
        out += form.elements[t].adjoint() * a * form.elements[t] * form.coefficients[t];
    return out;
}

std::array<double, 4> qubit_mu(const std::array<double, 3>& l) {
    return {0.25 * (1.0 + l[0] + l[1] + l[2]), 0.25 * (1.0 + l[0] - l[1] - l[2]),
            0.25 * (1.0 - l[0] + l[1] - l[2]), 0.25 * (1.0 - l[0] - l[1] + l[2])};
}

std::array<double, 3> qubit_lambda(const std::array<double, 4>& mu) {
    return {mu[0] + mu[1] - mu[2] - mu[3], mu[0] - mu[1] + mu[2] - mu[3],
            mu[0] - mu[1] - mu[2] + mu[3]};
}

bool cp_condition_qubit(const std::array<double, 3>& l) {
    return 1.0 + l[2] >= std::abs(l[0] + l[1]) && 1.0 - l[2] >= std::abs(l[0] - l[1]);
}

SampleStats sample_cp_agreement(const Decomposition& d, long long count, std::uint64_t seed,
                                const std::vector<std::pair<double, double>>& box, double margin) {
    if (margin <= 0.0) throw std::invalid_argument("sample_cp_agreement: margin must be positive");
    const std::size_t r = d.parts.size();
    std::vector<std::pair<double, double>> intervals;
    if (box.size() == 1) {
        intervals.assign(r, box.front());
    } else if (box.size() == r) {
        intervals = box;
    } else {
        throw std::invalid_argument("sample_cp_agreement: box must have 1 or r intervals");
    }
    for (const auto& [lo, hi] : intervals)
        if (!(lo <= hi)) throw std::invalid_argument("sample_cp_agreement: malformed interval");
    if (!validate_decomposition(d).all_passed())
        throw std::invalid_argument("sample_cp_agreement: decomposition does not validate");

    SampleStats stats;
    stats.count = count;
    GeneralizedPauliChannel ch{d, std::vector<double>(r, 0.0)};
    bool have_cp_sample = false;
    for (long long s = 0; s < count; ++s) {
        for (std::size_t c = 0; c < r; ++c)
            ch.lambda[c] = uniform_in(intervals[c].first, intervals[c].second,
                                      rng_key(seed, static_cast<std::uint64_t>(s), c));
        double min_margin = std::numeric_limits<double>::infinity();
        for (const auto& [name, value] : analytic_margins(ch)) min_margin = std::min(min_margin, value);
        if (std::abs(min_margin) <= margin) {
            ++stats.skipped;
            continue;
        }
        const bool analytic = min_margin >= 0.0;
        const NumericCpResult numeric = numeric_cp(ch);
        if (analytic == numeric.cp)
            ++stats.agree;
        else
            ++stats.disagree;
        if (analytic) {
            if (!have_cp_sample || numeric.min_eigenvalue < stats.worst_cp_min_eigenvalue)
                stats.worst_cp_min_eigenvalue = numeric.min_eigenvalue;
            have_cp_sample = true;
        }
    }
    return stats;
}

}  // namespace gpc
