// gpc: build and validate complementary-subalgebra decompositions, evaluate
// generalized Pauli channels, and certify complete positivity analytically
// and numerically.
//
// Exit codes: 0 success / CP verdict positive; 1 verdict negative
// (not CP, validation failed, disagreement found); 2 invalid input or I/O.

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gpc/channel.hpp"
#include "gpc/constructions.hpp"
#include "gpc/json_io.hpp"
#include "gpc/plot.hpp"
#include "gpc/rng.hpp"
#include "gpc/verify.hpp"

namespace {

using gpc::Json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    gpc::write_text_file(out_path, text);
}

gpc::Decomposition load_decomposition(const std::string& spec) {
    if (spec == "qubit-pauli" || spec == "m4-example2" || spec.rfind("mub-p", 0) == 0)
        return gpc::build_decomposition(spec);
    return gpc::decomposition_from_json(gpc::parse_json_file(spec));
}

gpc::GeneralizedPauliChannel load_channel(const std::string& path) {
    return gpc::channel_from_json(gpc::parse_json_file(path));
}

std::vector<std::pair<double, double>> parse_box(const std::string& text) {
    std::vector<std::pair<double, double>> box;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("malformed box interval '" + item + "'");
        std::size_t used_lo = 0, used_hi = 0;
        const double lo = std::stod(item.substr(0, colon), &used_lo);
        const double hi = std::stod(item.substr(colon + 1), &used_hi);
        if (used_lo != colon || used_hi != item.size() - colon - 1 || !(lo <= hi))
            throw std::invalid_argument("malformed box interval '" + item + "'");
        box.emplace_back(lo, hi);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (box.empty()) throw std::invalid_argument("empty box");
    return box;
}

int cmd_decomp_build(const std::string& name, const std::string& out) {
    const gpc::Decomposition d = gpc::build_decomposition(name);
    emit(gpc::dump_json(gpc::decomposition_to_json(d)), out);
    return 0;
}

int cmd_decomp_validate(const std::string& in, const std::string& out) {
    const gpc::Decomposition d = gpc::decomposition_from_json(gpc::parse_json_file(in));
    const gpc::DecompositionReport report = gpc::validate_decomposition(d);
    emit(gpc::dump_json(gpc::decomposition_report_to_json(report)), out);
    return report.all_passed() ? 0 : 1;
}

int cmd_channel_apply(const std::string& channel_path, const std::string& state_path,
                      const std::string& out) {
    const gpc::GeneralizedPauliChannel ch = load_channel(channel_path);
    const gpc::CMatrix state = gpc::matrix_from_json(gpc::parse_json_file(state_path));
    emit(gpc::dump_json(gpc::matrix_to_json(gpc::apply(ch, state))), out);
    return 0;
}

int cmd_channel_choi(const std::string& channel_path, const std::string& out) {
    const gpc::GeneralizedPauliChannel ch = load_channel(channel_path);
    emit(gpc::dump_json(gpc::matrix_to_json(gpc::choi(ch))), out);
    return 0;
}

int cmd_channel_kraus(const std::string& channel_path, const std::string& out) {
    const gpc::GeneralizedPauliChannel ch = load_channel(channel_path);
    emit(gpc::dump_json(gpc::kraus_form_to_json(gpc::kraus_form(ch))), out);
    return 0;
}

int cmd_channel_check_cp(const std::string& channel_path, const std::string& method,
                         const std::string& out) {
    const gpc::GeneralizedPauliChannel ch = load_channel(channel_path);
    if (method == "numeric") {
        const gpc::NumericCpResult res = gpc::numeric_cp(ch);
        Json j;
        j["numeric_cp"] = res.cp;
        j["min_choi_eigenvalue"] = res.min_eigenvalue;
        j["tolerance_used"] = res.tolerance_used;
        emit(gpc::dump_json(j), out);
        return res.cp ? 0 : 1;
    }
    if (method == "analytic") {
        if (!gpc::validate_decomposition(ch.decomposition).all_passed())
            throw std::invalid_argument("decomposition does not validate");
        const auto margins = gpc::analytic_margins(ch);
        bool cp = true;
        Json m;
        for (const auto& [name, value] : margins) {
            m[name] = value;
            if (!(value >= 0.0)) cp = false;
        }
        Json j;
        j["analytic_cp"] = cp;
        j["condition_margins"] = std::move(m);
        emit(gpc::dump_json(j), out);
        return cp ? 0 : 1;
    }
    if (method != "both") throw std::invalid_argument("unknown method '" + method + "'");
    const gpc::CpReport report = gpc::analytic_cp(ch);
    emit(gpc::dump_json(gpc::cp_report_to_json(report)), out);
    if (report.analytic_cp != report.numeric_cp) {
        Json j;
        j["error"] = "analytic and numeric verdicts disagree";
        j["report"] = gpc::cp_report_to_json(report);
        std::cerr << gpc::dump_json(j);
        return 2;
    }
    return report.analytic_cp ? 0 : 1;
}

int cmd_sample(const std::string& decomp, long long count, std::uint64_t seed,
               const std::string& box_text, double margin, const std::string& out) {
    const gpc::Decomposition d = load_decomposition(decomp);
    const auto box = parse_box(box_text);
    const gpc::SampleStats stats = gpc::sample_cp_agreement(d, count, seed, box, margin);
    emit(gpc::dump_json(gpc::sample_stats_to_json(stats)), out);
    return stats.disagree == 0 ? 0 : 1;
}

gpc::IdentityReport aggregate(std::string name, std::vector<gpc::IdentityReport> parts) {
    gpc::IdentityReport total;
    total.name = std::move(name);
    total.tolerance = parts.empty() ? 0.0 : parts.front().tolerance;
    total.passed = true;
    for (const gpc::IdentityReport& r : parts) {
        total.max_violation = std::max(total.max_violation, r.max_violation);
        total.trials += r.trials;
        total.passed = total.passed && r.passed;
        total.tolerance = std::min(total.tolerance, r.tolerance);
    }
    return total;
}

std::vector<gpc::IdentityReport> run_verify_suites(const std::string& suite, std::uint64_t seed) {
    std::vector<gpc::IdentityReport> reports;
    const std::array<int, 4> dims = {2, 3, 4, 5};

    if (suite == "all" || suite == "lemmas") {
        for (int n : dims) {
            std::vector<gpc::IdentityReport> pairs;
            for (int t = 0; t < 20; ++t)
                pairs.push_back(gpc::lemma_trace_product(
                    gpc::random_matrix(n, gpc::rng_key(seed, static_cast<std::uint64_t>(n), 2 * t)),
                    gpc::random_matrix(n, gpc::rng_key(seed, static_cast<std::uint64_t>(n), 2 * t + 1))));
            reports.push_back(aggregate("lemma-trace-product-n" + std::to_string(n), std::move(pairs)));
        }
        for (int n : dims) {
            std::vector<gpc::CMatrix> units;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) units.push_back(gpc::matrix_unit(n, i, j));
            gpc::IdentityReport r = gpc::depolarizing_basis_check(units, 20, seed);
            r.name = "depolarizing-units-n" + std::to_string(n);
            reports.push_back(std::move(r));

            std::vector<gpc::CMatrix> weyls;
            const double scale = 1.0 / std::sqrt(static_cast<double>(n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) weyls.push_back(gpc::weyl(n, a, b) * scale);
            gpc::IdentityReport w = gpc::depolarizing_basis_check(weyls, 20, seed);
            w.name = "depolarizing-weyl-n" + std::to_string(n);
            reports.push_back(std::move(w));
        }
    }

    if (suite == "all" || suite == "projections") {
        const auto sigma = gpc::pauli_matrices();
        std::vector<gpc::CMatrix> paulis;
        for (const gpc::CMatrix& s : sigma) paulis.push_back(s * (1.0 / std::sqrt(2.0)));
        gpc::IdentityReport p = gpc::choi_projection_check(paulis);
        p.name = "choi-projections-pauli";
        reports.push_back(std::move(p));

        for (int n : dims) {
            std::vector<gpc::CMatrix> weyls;
            const double scale = 1.0 / std::sqrt(static_cast<double>(n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) weyls.push_back(gpc::weyl(n, a, b) * scale);
            gpc::IdentityReport r = gpc::choi_projection_check(weyls);
            r.name = "choi-projections-weyl-n" + std::to_string(n);
            reports.push_back(std::move(r));
        }
    }

    if (suite == "all" || suite == "fmap") {
        for (int n : dims) {
            gpc::Subalgebra trivial;
            trivial.ambient_dim = n;
            trivial.basis = {gpc::CMatrix::identity(n) * (1.0 / std::sqrt(static_cast<double>(n)))};
            trivial.blocks = {{1, n}};
            trivial.label = "CI";
            std::vector<gpc::IdentityReport> runs;
            for (int t = 0; t < 5; ++t)
                runs.push_back(gpc::f_map_block_oracle(
                    trivial, gpc::random_matrix(n, gpc::rng_key(seed, 100 + static_cast<std::uint64_t>(n), t))));
            reports.push_back(aggregate("fmap-trivial-n" + std::to_string(n), std::move(runs)));
        }
        {
            gpc::Subalgebra diag = gpc::from_generators(3, {gpc::weyl(3, 0, 1)}, gpc::SubalgebraKind::M, "diag3");
            diag.blocks = {{1, 1}, {1, 1}, {1, 1}};
            std::vector<gpc::IdentityReport> runs;
            for (int t = 0; t < 5; ++t)
                runs.push_back(gpc::f_map_block_oracle(diag, gpc::random_matrix(3, gpc::rng_key(seed, 200, t))));
            reports.push_back(aggregate("fmap-diagonal-masa-m3", std::move(runs)));
        }
        {
            const auto sigma = gpc::pauli_matrices();
            gpc::Subalgebra factor = gpc::from_generators(
                4, {gpc::kron(sigma[1], sigma[0]), gpc::kron(sigma[3], sigma[0])}, gpc::SubalgebraKind::F,
                "M2xI2");
            factor.blocks = {{2, 2}};
            std::vector<gpc::IdentityReport> runs;
            for (int t = 0; t < 5; ++t)
                runs.push_back(gpc::f_map_block_oracle(factor, gpc::random_matrix(4, gpc::rng_key(seed, 300, t))));
            reports.push_back(aggregate("fmap-factor-m2xi2", std::move(runs)));
        }
    }

    if (reports.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return reports;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    const std::vector<gpc::IdentityReport> reports = run_verify_suites(suite, seed);
    Json arr = Json::array();
    bool all = true;
    for (const gpc::IdentityReport& r : reports) {
        arr.push_back(gpc::identity_report_to_json(r));
        all = all && r.passed;
    }
    Json j;
    j["suite"] = suite;
    j["reports"] = std::move(arr);
    j["all_passed"] = all;
    emit(gpc::dump_json(j), out);
    return all ? 0 : 1;
}

int cmd_plot_tetra(double lambda3, int resolution, const std::string& out) {
    const gpc::TetraSlice slice = gpc::classify_tetra_slice(lambda3, resolution);
    emit(gpc::tetra_slice_svg(slice), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Pauli channels over complementary subalgebra decompositions"};
    app.require_subcommand(1);

    std::string name, in_path, out_path, channel_path, state_path;
    std::string method = "both";
    std::string decomp = "qubit-pauli";
    std::string box_text = "-1:1";
    std::string suite = "all";
    long long count = 1000;
    std::uint64_t seed = 0;
    double margin = 1e-6;
    double lambda3 = 0.0;
    int resolution = 64;

    CLI::App* decomp_cmd = app.add_subcommand("decomp", "build or validate decompositions");
    decomp_cmd->require_subcommand(1);
    CLI::App* dbuild = decomp_cmd->add_subcommand("build", "write a named decomposition as JSON");
    dbuild->add_option("--name", name, "qubit-pauli | m4-example2 | mub-p<k>")->required();
    dbuild->add_option("--out", out_path, "output path (default stdout)");
    CLI::App* dvalidate = decomp_cmd->add_subcommand("validate", "run the validation report");
    dvalidate->add_option("--in", in_path, "decomposition JSON file")->required();
    dvalidate->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* channel_cmd = app.add_subcommand("channel", "channel evaluation and CP certification");
    channel_cmd->require_subcommand(1);
    CLI::App* capply = channel_cmd->add_subcommand("apply", "apply the channel to a matrix");
    capply->add_option("--channel", channel_path, "channel JSON file")->required();
    capply->add_option("--state", state_path, "matrix JSON file")->required();
    capply->add_option("--out", out_path, "output path (default stdout)");
    CLI::App* cchoi = channel_cmd->add_subcommand("choi", "write the Choi matrix");
    cchoi->add_option("--channel", channel_path, "channel JSON file")->required();
    cchoi->add_option("--out", out_path, "output path (default stdout)");
    CLI::App* ckraus = channel_cmd->add_subcommand("kraus", "write the Kraus-type expansion");
    ckraus->add_option("--channel", channel_path, "channel JSON file")->required();
    ckraus->add_option("--out", out_path, "output path (default stdout)");
    CLI::App* ccheck = channel_cmd->add_subcommand("check-cp", "certify complete positivity");
    ccheck->add_option("--channel", channel_path, "channel JSON file")->required();
    ccheck->add_option("--method", method, "analytic | numeric | both (default both)");
    ccheck->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* sample_cmd = app.add_subcommand("sample", "cross-check analytic vs numeric CP on random lambda");
    sample_cmd->add_option("--decomp", decomp, "builder name or decomposition JSON path");
    sample_cmd->add_option("--count", count, "number of samples")->check(CLI::NonNegativeNumber);
    sample_cmd->add_option("--seed", seed, "RNG seed");
    sample_cmd->add_option("--box", box_text, "sampling box, lo:hi (all coords) or comma-separated per coord");
    sample_cmd->add_option("--margin", margin, "boundary margin for skipping");
    sample_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
    verify_cmd->add_option("--suite", suite, "all | lemmas | projections | fmap");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* plot_cmd = app.add_subcommand("plot-tetra", "SVG slice of the qubit CP tetrahedron");
    plot_cmd->add_option("--lambda3", lambda3, "fixed lambda_3 of the slice");
    plot_cmd->add_option("--resolution", resolution, "grid cells per axis (>= 8)");
    plot_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dbuild->parsed()) return cmd_decomp_build(name, out_path);
        if (dvalidate->parsed()) return cmd_decomp_validate(in_path, out_path);
        if (capply->parsed()) return cmd_channel_apply(channel_path, state_path, out_path);
        if (cchoi->parsed()) return cmd_channel_choi(channel_path, out_path);
        if (ckraus->parsed()) return cmd_channel_kraus(channel_path, out_path);
        if (ccheck->parsed()) return cmd_channel_check_cp(channel_path, method, out_path);
        if (sample_cmd->parsed()) return cmd_sample(decomp, count, seed, box_text, margin, out_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, out_path);
        if (plot_cmd->parsed()) return cmd_plot_tetra(lambda3, resolution, out_path);
    } catch (const std::exception& e) {
        Json j;
        j["error"] = e.what();
        std::cerr << gpc::dump_json(j);
        return 2;
    }
    return 2;
}
