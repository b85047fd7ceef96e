// Command-line front end: every structural theorem check as a runnable,
// reportable command over groupoid files.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "tga/io.hpp"
#include "tga/structure.hpp"

using namespace tga;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    bool json = false;
    double tolerance = 1e-8;
};

void emit(const Report& report, const GlobalOpts& opts) {
    std::cout << (opts.json ? report.to_json() : report.to_text());
}

AlgElem random_elem(const ContextPtr& ctx, std::mt19937_64& gen) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgElem f(ctx);
    for (int e = 0; e < f.size(); ++e) f[e] = cplx(gauss(gen), gauss(gen));
    return f;
}

AlgElem parse_coeffs(const ContextPtr& ctx, const std::string& text) {
    AlgElem f(ctx);
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError("coefficient entry '" + token + "' is not of the form elem=value", 0);
        std::string elem = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        double re = 0.0, im = 0.0;
        auto colon = value.find(':');
        try {
            if (colon == std::string::npos) {
                re = std::stod(value);
            } else {
                re = std::stod(value.substr(0, colon));
                im = std::stod(value.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw ParseError("bad coefficient value '" + value + "'", 0);
        }
        f[ctx->groupoid().index_of(elem)] = cplx(re, im);
    }
    return f;
}

Report base_report(const std::string& command, const std::string& canonical_input,
                   const GlobalOpts& opts) {
    Report report;
    report.command = command;
    report.inputs_digest = digest(canonical_input);
    report.seed = opts.seed;
    report.tolerance = opts.tolerance;
    return report;
}

std::string canonical_of(const ParsedGroupoid& parsed) {
    return serialize_groupoid(parsed.groupoid, parsed.cocycle ? &*parsed.cocycle : nullptr);
}

int run_validate(const std::string& path, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    Report report = base_report("validate", canonical_of(parsed), opts);
    report.findings["elements"] = parsed.groupoid.size();
    report.findings["units"] = static_cast<int>(parsed.groupoid.units().size());
    report.check("groupoid axioms", true); // parse_groupoid_file validated them
    if (parsed.cocycle) {
        report.findings["cocycle_order"] = parsed.cocycle->order();
        report.check("cocycle identity and normalization", true);
    }
    ContextPtr ctx = parsed.context();
    TwistAxiomReport twist = validate_twist_axioms(ctx->groupoid(), ctx->cocycle());
    report.check("twist: inclusion and projection are homomorphisms",
                 twist.maps_are_homomorphisms);
    report.check("twist: exactness", twist.exact);
    report.check("twist: local triviality (vacuous for discrete models)", twist.locally_trivial);
    report.check("twist: central circle fibre", twist.central);
    if (!twist.first_violation.empty()) report.findings["violation"] = twist.first_violation;
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_info(const std::string& path, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    const FiniteGroupoid& g = ctx->groupoid();
    Report report = base_report("info", canonical_of(parsed), opts);
    report.findings["elements"] = g.size();
    report.findings["units"] = static_cast<int>(g.units().size());
    report.findings["isotropy_size"] = static_cast<int>(interior_isotropy(g).members.size());
    auto parts = orbits(g);
    std::vector<std::vector<std::string>> orbit_names;
    for (const auto& part : parts) {
        std::vector<std::string> names;
        for (int u : part) names.push_back(g.id(u));
        orbit_names.push_back(std::move(names));
    }
    report.findings["orbits"] = orbit_names;
    report.findings["effective"] = is_effective(g);
    report.findings["minimal"] = is_minimal(g);
    report.findings["cocycle_order"] = ctx->order();
    report.findings["algebra_dimension"] = g.size();
    emit(report, opts);
    return 0;
}

int run_norm(const std::string& path, const std::string& coeffs, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    AlgElem f = parse_coeffs(ctx, coeffs);
    Report report = base_report("norm", canonical_of(parsed) + "\ncoeffs " + coeffs, opts);
    report.findings["reduced_norm"] = reduced_norm(f);
    report.findings["sup_norm"] = sup_norm(f);
    emit(report, opts);
    return 0;
}

int run_blocks(const std::string& path, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    Report report = base_report("blocks", canonical_of(parsed), opts);
    std::vector<int> blocks = wedderburn_blocks(algebra_image(ctx), opts.seed);
    report.findings["blocks"] = blocks;
    int total = 0;
    for (int d : blocks) total += d * d;
    report.findings["sum_of_squares"] = total;
    report.check("sum of squared block sizes equals |G|", total == ctx->groupoid().size());
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_embed_check(const std::string& path, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    IsotropySubalgebra sub = isotropy_subalgebra(ctx);
    std::mt19937_64 gen(opts.seed);

    double worst_isometry = 0.0, worst_fix = 0.0, worst_off = 0.0, worst_spec = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        AlgElem x = random_elem(sub.iso, gen);
        AlgElem embedded = sub.embed(x);
        worst_isometry =
            std::max(worst_isometry, std::abs(reduced_norm(embedded) - reduced_norm(x)));
        AlgElem fixed = expect_onto_isotropy(embedded);
        for (int e = 0; e < embedded.size(); ++e)
            worst_fix = std::max(worst_fix, std::abs(fixed[e] - embedded[e]));
        if (trial < 10) {
            for (int u : ctx->groupoid().units()) {
                BlockStructureReport block = verify_block_structure(sub, x, u);
                worst_off = std::max(worst_off, block.off_block_max);
                worst_spec = std::max(worst_spec, block.spectrum_mismatch);
            }
        }
    }
    Report report = base_report("embed-check", canonical_of(parsed), opts);
    report.findings["isotropy_size"] = sub.iso->groupoid().size();
    report.findings["max_isometry_deviation"] = worst_isometry;
    report.findings["max_expectation_deviation"] = worst_fix;
    report.findings["max_off_block"] = worst_off;
    report.findings["max_spectrum_mismatch"] = worst_spec;
    report.check("embedding is isometric", worst_isometry < opts.tolerance);
    report.check("isotropy expectation fixes the embedded copy", worst_fix == 0.0);
    report.check("coset blocks are exact", worst_off < 1e-12);
    report.check("block spectra match the isotropy representations",
                 worst_spec < opts.tolerance);
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_quotient(const std::string& path, const std::string& unit, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    int u = ctx->groupoid().index_of(unit);
    IsotropySubalgebra sub = isotropy_subalgebra(ctx);
    IsotropyGroupAlgebra q = isotropy_group_algebra(ctx, u);
    std::mt19937_64 gen(opts.seed);

    double worst_mult = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        AlgElem x = random_elem(sub.iso, gen);
        AlgElem y = random_elem(sub.iso, gen);
        AlgElem lhs = quotient_to_isotropy_group(q, x * y);
        AlgElem rhs = quotient_to_isotropy_group(q, x) * quotient_to_isotropy_group(q, y);
        for (int e = 0; e < lhs.size(); ++e)
            worst_mult = std::max(worst_mult, std::abs(lhs[e] - rhs[e]));
    }

    AlgElem g(sub.iso);
    for (int iu : sub.iso->groupoid().units()) g[iu] = 0.25;
    g[sub.iso->groupoid().index_of(ctx->groupoid().id(u))] = 1.0;
    AlgElem identity_image = quotient_to_isotropy_group(q, g);
    double unit_dev = 0.0;
    AlgElem expected = unit_element(q.group);
    for (int e = 0; e < identity_image.size(); ++e)
        unit_dev = std::max(unit_dev, std::abs(identity_image[e] - expected[e]));

    int iso_size = sub.iso->groupoid().size();
    int group_size = q.group->groupoid().size();

    Report report = base_report("quotient", canonical_of(parsed) + "\nunit " + unit, opts);
    report.findings["isotropy_size"] = iso_size;
    report.findings["isotropy_group_size"] = group_size;
    report.findings["kernel_dimension"] = iso_size - group_size;
    report.findings["max_multiplicativity_deviation"] = worst_mult;
    report.check("quotient is multiplicative", worst_mult < 1e-10);
    report.check("unit-supported section maps to the group identity", unit_dev == 0.0);
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_uniqueness(const std::string& path, const std::string& hom_path,
                   const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    StarHom h = parse_hom_file(hom_path, ctx);
    UniquenessReport rep = uniqueness_check(h);
    Report report = base_report("uniqueness", canonical_of(parsed) + "\nhom " + hom_path, opts);
    report.findings["hom_validated"] = h.validated;
    report.findings["injective"] = rep.injective;
    report.findings["injective_on_isotropy"] = rep.injective_on_isotropy;
    report.check("injectivity matches injectivity on the isotropy", rep.theorem_consistent);
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_simplicity(const std::string& path, const GlobalOpts& opts) {
    ParsedGroupoid parsed = parse_groupoid_file(path);
    ContextPtr ctx = parsed.context();
    SimplicityReport rep = simplicity_report(ctx, opts.seed);
    Report report = base_report("simplicity", canonical_of(parsed), opts);
    report.findings["effective"] = rep.effective;
    report.findings["minimal"] = rep.minimal;
    if (rep.criterion_applicable)
        report.findings["simple"] = rep.criterion_simple;
    else
        report.findings["simple"] = "criterion inapplicable (groupoid is not effective)";
    report.findings["blocks"] = rep.blocks;
    report.findings["oracle_simple"] = rep.oracle_simple;
    report.check("criterion agrees with the block oracle", rep.consistent);
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

int run_states(const std::string& path, const GlobalOpts& opts) {
    StateProblem problem = parse_state_file(path);
    StateAnalysis analysis =
        analyze_state_extension(problem.algebra, problem.subalgebra, problem.phi, opts.seed);
    std::ifstream in(path);
    std::ostringstream raw;
    raw << in.rdbuf();
    Report report = base_report("states", raw.str(), opts);
    report.findings["ambient_dimension"] = problem.algebra->dim;
    report.findings["algebra_dimension"] = problem.algebra->k();
    report.findings["subalgebra_dimension"] = problem.subalgebra->k();
    report.findings["compressible"] = analysis.compressibility.compressible;
    report.findings["compression_distance"] = analysis.compressibility.max_distance;
    report.findings["unique_extension"] = analysis.extension.unique;
    report.findings["extension_rank"] = analysis.extension.extension_rank;
    report.findings["optimum_spread"] = analysis.extension.max_gap;
    if (analysis.extension.separated) {
        const auto& [s1, s2] = *analysis.extension.separated;
        double gap = 0.0;
        for (int j = 0; j < problem.algebra->k(); ++j) {
            MatrixXcd q = problem.algebra->basis_matrix(j);
            gap = std::max(gap, std::abs(s1.value(q) - s2.value(q)));
        }
        report.findings["separation"] = gap;
    }
    report.check("compressibility implies a unique extension",
                 !analysis.compressibility.compressible || analysis.extension.unique);
    emit(report, opts);
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted groupoid convolution algebras: structure checks at desk scale"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
    app.add_flag("--json", opts.json, "machine-readable output");
    app.add_option("--tolerance", opts.tolerance, "numeric tolerance for report checks")
        ->capture_default_str();

    std::string path, coeffs, unit, hom_path, algebra_path;

    CLI::App* validate = app.add_subcommand("validate", "check groupoid, cocycle, and twist axioms");
    validate->add_option("file", path)->required();

    CLI::App* info = app.add_subcommand("info", "structural invariants");
    info->add_option("file", path)->required();

    CLI::App* norm = app.add_subcommand("norm", "reduced norm of an element");
    norm->add_option("file", path)->required();
    norm->add_option("--coeffs", coeffs, "element as elem=re[:im],... pairs")->required();

    CLI::App* blocks = app.add_subcommand("blocks", "matrix block decomposition");
    blocks->add_option("file", path)->required();

    CLI::App* embed = app.add_subcommand("embed-check", "isotropy embedding checks");
    embed->add_option("file", path)->required();

    CLI::App* quotient = app.add_subcommand("quotient", "quotient onto an isotropy group");
    quotient->add_option("file", path)->required();
    quotient->add_option("--unit", unit, "unit id")->required();

    CLI::App* uniqueness = app.add_subcommand("uniqueness", "injectivity versus the isotropy");
    uniqueness->add_option("file", path)->required();
    uniqueness->add_option("--hom", hom_path, "homomorphism sidecar file")->required();

    CLI::App* simplicity = app.add_subcommand("simplicity", "simplicity criterion and oracle");
    simplicity->add_option("file", path)->required();

    CLI::App* states = app.add_subcommand("states", "state extension analysis");
    states->add_option("--algebra", algebra_path, "algebra/subalgebra/state file")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(path, opts);
        if (info->parsed()) return run_info(path, opts);
        if (norm->parsed()) return run_norm(path, coeffs, opts);
        if (blocks->parsed()) return run_blocks(path, opts);
        if (embed->parsed()) return run_embed_check(path, opts);
        if (quotient->parsed()) return run_quotient(path, unit, opts);
        if (uniqueness->parsed()) return run_uniqueness(path, hom_path, opts);
        if (simplicity->parsed()) return run_simplicity(path, opts);
        if (states->parsed()) return run_states(algebra_path, opts);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
