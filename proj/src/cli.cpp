#include "lieball/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieball/blattner.hpp"
#include "lieball/harmonic.hpp"
#include "lieball/repdata.hpp"
#include "lieball/root_data.hpp"
#include "lieball/weyl.hpp"

namespace lieball::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
    int m = 0;
    std::optional<int> lambda;
    int max_l = 6;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    std::string out_path;

    int effective_lambda() const { return lambda.value_or(m - 1); }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string mpq_string(const mpq_class& q) { return q.get_str(); }

ojson weight_json(const Weight& w)
{
    ojson a = ojson::array();
    for (auto c : w.coords()) {
        if (c.is_integer())
            a.push_back(c.as_integer());
        else
            a.push_back(c.to_string());
    }
    return a;
}

void validate(const RunConfig& cfg, int max_m)
{
    if (cfg.m < 2) throw UsageError("--m must be at least 2");
    if (cfg.m > max_m) throw UsageError("--m must not exceed " + std::to_string(max_m) + " for this subcommand");
    if (cfg.max_l < 0) throw UsageError("--max-l must be nonnegative");
}

// ---------------------------------------------------------------- ktypes

int cmd_ktypes(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, weyl::kMaxEnumerationRank);
    const int lambda = cfg.effective_lambda();
    const auto bounds = blattner::bounds_for_degree(cfg.m, lambda, cfg.max_l);
    const auto table = blattner::ktype_table(cfg.m, lambda, bounds.max_mu0, bounds.max_mu1);
    switch (cfg.format) {
    case OutputFormat::json: out << table_to_json(table) << '\n'; break;
    case OutputFormat::csv: out << table_to_csv(table); break;
    case OutputFormat::text:
        out << "# K-types of R_q^S(C_{lambda - rho(u)}), m=" << table.m << " lambda=" << table.lambda << '\n';
        out << "# values: " << to_string(table.kind) << '\n';
        out << "# scan: mu0 <= " << table.max_mu0 << ", mu1 <= " << table.max_mu1 << '\n';
        for (const auto& [k, v] : table.entries) out << k.to_string() << "  " << v << '\n';
        out << "# " << table.entries.size() << " K-types\n";
        break;
    }
    return kPass;
}

// ---------------------------------------------------------------- harmonic

int cmd_harmonic(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, 64);
    const auto sol = harmonic::sol_ktype_table(cfg.m, cfg.max_l);
    switch (cfg.format) {
    case OutputFormat::json: {
        ojson j;
        j["m"] = sol.table.m;
        j["lambda"] = sol.table.lambda;
        j["kind"] = "multiplicity";
        j["entries"] = ojson::array();
        for (const auto& row : sol.rows) {
            ojson e;
            e["mu0"] = row.ktype.mu0;
            e["mu"] = row.ktype.mu;
            e["mult"] = 1;
            e["l"] = row.l;
            e["harmonic_dim"] = row.harmonic_dim;
            e["weyl_dim"] = row.weyl_dim;
            j["entries"].push_back(std::move(e));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "mu0";
        for (int i = 1; i <= cfg.m; ++i) out << ",mu_" << i;
        out << ",mult,l,harmonic_dim,weyl_dim\n";
        for (const auto& row : sol.rows)
            out << row.ktype.mu0 << ',' << join(row.ktype.mu) << ",1," << row.l << ',' << row.harmonic_dim << ','
                << row.weyl_dim << '\n';
        break;
    case OutputFormat::text:
        out << "# K-types of Sol(D, Laplacian), n=" << 2 * cfg.m << '\n';
        for (const auto& row : sol.rows)
            out << "l=" << row.l << "  " << row.ktype.to_string() << "  dim H^l=" << row.harmonic_dim
                << "  weyl_dim=" << row.weyl_dim << "  certified\n";
        break;
    }
    return kPass;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, weyl::kMaxEnumerationRank);
    VerifyOptions options;
    options.m = cfg.m;
    options.max_l = cfg.max_l;
    options.seed = cfg.seed;
    return emit_verify_report(verify(options), options, cfg.format, out);
}

// ---------------------------------------------------------------- weyl

ojson roots_json(const RootSet& rs)
{
    ojson a = ojson::array();
    for (const auto& r : rs) a.push_back(weight_json(r));
    return a;
}

std::string roots_text(const RootSet& rs)
{
    std::string s = "{";
    bool first = true;
    for (const auto& r : rs) {
        s += (first ? "" : " ") + r.to_string();
        first = false;
    }
    return s + "}";
}

int cmd_weyl(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, weyl::kMaxEnumerationRank);
    const auto& reps = weyl::coset_reps(cfg.m);
    const std::size_t expected = std::size_t{1} << (cfg.m - 1);
    switch (cfg.format) {
    case OutputFormat::json: {
        ojson j;
        j["m"] = cfg.m;
        j["count"] = reps.size();
        j["expected"] = expected;
        j["elements"] = ojson::array();
        for (const auto& rep : reps) {
            ojson e;
            e["code"] = rep.w.code();
            e["perm"] = rep.w.perm();
            e["signs"] = rep.w.signs();
            e["image"] = rep.w.to_string();
            e["length"] = rep.length;
            e["inversions"] = roots_json(weyl::inversion_set(rep.w));
            j["elements"].push_back(std::move(e));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "code,length,image,inversions\n";
        for (const auto& rep : reps)
            out << rep.w.code() << ',' << rep.length << ",\"" << rep.w.to_string() << "\",\""
                << roots_text(weyl::inversion_set(rep.w)) << "\"\n";
        break;
    case OutputFormat::text:
        out << "# W_K^{l∩k} for m=" << cfg.m << ": " << reps.size() << " elements (2^{m-1} = " << expected << ")\n";
        for (const auto& rep : reps)
            out << "len=" << rep.length << "  code=" << rep.w.code() << "  w=" << rep.w.to_string()
                << "  inversions=" << roots_text(weyl::inversion_set(rep.w)) << '\n';
        break;
    }
    return kPass;
}

// ---------------------------------------------------------------- ranges

int cmd_ranges(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, 64);
    const int lambda = cfg.effective_lambda();
    const auto v = repdata::range_verdict(cfg.m, lambda);
    const auto ic = repdata::inf_char(cfg.m, lambda);
    const bool regular = repdata::is_regular_d(ic);
    const auto target = repdata::bwb_target(cfg.m, lambda);

    if (cfg.format == OutputFormat::json) {
        auto witnesses = [](const std::vector<repdata::Witness>& ws) {
            ojson a = ojson::array();
            for (const auto& w : ws) a.push_back({{"root", weight_json(w.root)}, {"pairing", w.pairing.to_string()}});
            return a;
        };
        ojson j;
        j["m"] = cfg.m;
        j["lambda"] = lambda;
        j["weakly_fair"] = v.weakly_fair;
        j["good"] = v.good;
        j["weakly_fair_violations"] = witnesses(v.weakly_fair_violations);
        j["good_violations"] = witnesses(v.good_violations);
        j["inf_char"] = weight_json(ic);
        j["inf_char_regular"] = regular;
        if (target)
            j["bwb_target"] = {{"mu0", target->mu0}, {"mu", target->mu}};
        else
            j["bwb_target"] = nullptr;
        out << j.dump(2) << '\n';
        return kPass;
    }
    if (cfg.format == OutputFormat::csv) {
        out << "m,lambda,weakly_fair,good,inf_char,inf_char_regular,bwb_target\n";
        out << cfg.m << ',' << lambda << ',' << v.weakly_fair << ',' << v.good << ",\"" << ic.to_string() << "\","
            << regular << ",\"" << (target ? target->to_string() : std::string("none")) << "\"\n";
        return kPass;
    }
    out << "m=" << cfg.m << " lambda=" << lambda << '\n';
    out << "weakly fair: " << (v.weakly_fair ? "yes" : "no") << '\n';
    for (const auto& w : v.weakly_fair_violations)
        out << "  violated by " << w.root << ": <lambda 1 - rho(u), alpha> = " << w.pairing << '\n';
    out << "good: " << (v.good ? "yes" : "no") << '\n';
    for (const auto& w : v.good_violations)
        out << "  violated by " << w.root << ": <lambda 1 - rho(u) + rho_l, alpha> = " << w.pairing << '\n';
    out << "infinitesimal character: " << ic << (regular ? " (regular)" : " (singular)") << '\n';
    out << "mu_lambda: " << (target ? target->to_string() : std::string("not dominant")) << '\n';
    out << "table semantics: " << (v.weakly_fair ? "multiplicity" : "Euler characteristic") << '\n';
    return kPass;
}

// ---------------------------------------------------------------- verma

int cmd_verma(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, 64);
    const int m = cfg.m;
    struct Row {
        int l, lambda, nu;
        std::optional<int> hom;
        Weight hc_lambda, hc_nu;
        bool orbit;
        std::optional<int> residue;
    };
    std::vector<Row> rows;
    for (int l = 0; l <= cfg.max_l; ++l) {
        const int lambda = m - l, nu = m + l;
        const auto a = repdata::verma_inf_char(m, lambda);
        const auto b = repdata::verma_inf_char(m, nu);
        rows.push_back({l, lambda, nu, repdata::verma_hom_condition(m, lambda, nu), a, b, repdata::orbit_equal(a, b),
                        repdata::knapp_stein_residue_degree(2 * m, lambda)});
    }
    bool all = true;
    for (const auto& r : rows) all = all && r.hom == r.l && r.orbit;

    if (cfg.format == OutputFormat::json) {
        ojson j;
        j["m"] = m;
        j["rows"] = ojson::array();
        for (const auto& r : rows) {
            ojson e;
            e["l"] = r.l;
            e["lambda"] = r.lambda;
            e["nu"] = r.nu;
            e["hom_degree"] = r.hom ? ojson(*r.hom) : ojson(nullptr);
            e["hc_lambda"] = weight_json(r.hc_lambda);
            e["hc_nu"] = weight_json(r.hc_nu);
            e["orbit_equal"] = r.orbit;
            e["knapp_stein_degree"] = r.residue ? ojson(*r.residue) : ojson(nullptr);
            j["rows"].push_back(std::move(e));
        }
        j["consistent"] = all;
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::csv) {
        out << "l,lambda,nu,hom_degree,orbit_equal,knapp_stein_degree\n";
        for (const auto& r : rows)
            out << r.l << ',' << r.lambda << ',' << r.nu << ',' << (r.hom ? std::to_string(*r.hom) : "") << ','
                << r.orbit << ',' << (r.residue ? std::to_string(*r.residue) : "") << '\n';
    } else {
        out << "# Laplacian^l between scalar generalized Verma modules, m=" << m << '\n';
        for (const auto& r : rows)
            out << "l=" << r.l << "  (lambda,nu)=(" << r.lambda << ',' << r.nu << ")  hom degree="
                << (r.hom ? std::to_string(*r.hom) : "none") << "  HC " << r.hc_lambda << " ~ " << r.hc_nu << ": "
                << (r.orbit ? "same W(D_" + std::to_string(m + 1) + ")-orbit" : "different orbits")
                << "  Knapp-Stein residue degree=" << (r.residue ? std::to_string(*r.residue) : "none") << '\n';
        out << (all ? "consistent" : "INCONSISTENT") << '\n';
    }
    return all ? kPass : kVerificationFailure;
}

// ---------------------------------------------------------------- ehw

int cmd_ehw(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg, 64);
    const int n = 2 * cfg.m;
    const auto c = repdata::ehw_constants(n);
    std::vector<std::pair<mpq_class, bool>> grid;
    for (int twice = -4; twice <= 2 * n; ++twice) {
        mpq_class z(twice, 2);
        z.canonicalize();
        grid.emplace_back(z, repdata::ehw_unitarizable(n, z));
    }
    const auto residue = repdata::knapp_stein_residue_degree(n, cfg.m - 1);

    if (cfg.format == OutputFormat::json) {
        ojson j;
        j["n"] = n;
        j["A"] = mpq_string(c.a);
        j["B"] = mpq_string(c.b);
        j["grid"] = ojson::array();
        for (const auto& [z, u] : grid) j["grid"].push_back({{"z", mpq_string(z)}, {"unitarizable", u}});
        j["knapp_stein_degree_at_m_minus_1"] = residue ? ojson(*residue) : ojson(nullptr);
        out << j.dump(2) << '\n';
    } else if (cfg.format == OutputFormat::csv) {
        out << "z,unitarizable\n";
        for (const auto& [z, u] : grid) out << mpq_string(z) << ',' << u << '\n';
    } else {
        out << "n=" << n << "  A(lambda_0)=" << c.a << "  B(lambda_0)=" << c.b << '\n';
        out << "L((n-1-z) e_0) unitarizable for z <= 0 or z in {" << c.a << ", " << c.b << "}\n";
        for (const auto& [z, u] : grid) out << "z=" << z << "  " << (u ? "unitarizable" : "-") << '\n';
        out << "Knapp-Stein residue at lambda=" << cfg.m - 1 << ": Laplacian^"
            << (residue ? std::to_string(*residue) : "none") << '\n';
    }
    return kPass;
}

}  // namespace

int emit_verify_report(const VerifyReport& report, const VerifyOptions& options, OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::json) {
        ojson j;
        j["m"] = options.m;
        j["max_l"] = options.max_l;
        j["seed"] = options.seed;
        j["pass"] = report.pass;
        j["checks"] = ojson::array();
        for (const auto& c : report.checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (report.first_difference) {
            const auto& d = *report.first_difference;
            j["first_difference"] = {{"mu0", d.ktype.mu0}, {"mu", d.ktype.mu}, {"blattner", d.left}, {"harmonic", d.right}};
        }
        out << j.dump(2) << '\n';
    } else if (format == OutputFormat::csv) {
        out << "check,pass,detail\n";
        for (const auto& c : report.checks) out << c.name << ',' << c.pass << ",\"" << c.detail << "\"\n";
    } else {
        out << "verify m=" << options.m << " max_l=" << options.max_l << " seed=" << options.seed << '\n';
        for (const auto& c : report.checks)
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        out << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? kPass : kVerificationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact K-type computations for the Laplacian kernel on the Lie ball", "lieball"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    int lambda_value = 0;
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "rank parameter m >= 2 (G = SO_0(2, 2m))")->required();
        sub->add_option("--lambda", lambda_value, "line bundle parameter (default m-1)");
        sub->add_option("--max-l", cfg.max_l, "largest degree l")->capture_default_str();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->add_option("--out", cfg.out_path, "output file (default: standard output)");
    };

    using Handler = int (*)(const RunConfig&, std::ostream&);
    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"ktypes", "Blattner K-type table of the Dolbeault cohomology", cmd_ktypes},
        {"harmonic", "certified K-type table of the Laplacian kernel", cmd_harmonic},
        {"verify", "cross-check both K-type tables and supporting identities", cmd_verify},
        {"weyl", "coset representatives W_K^{l∩k} with lengths and inversion sets", cmd_weyl},
        {"ranges", "weakly fair / good range verdicts and infinitesimal character", cmd_ranges},
        {"verma", "Verma homomorphism parameters and orbit consistency", cmd_verma},
        {"ehw", "unitarizability reduction points and Knapp-Stein residue", cmd_ehw},
    };
    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (const auto& [name, help, handler] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        subs.emplace_back(sub, handler);
    }

    std::vector<const char*> argv{"lieball"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    cfg.format = formats.at(format);
    for (const auto& [sub, handler] : subs) {
        if (!sub->parsed()) continue;
        if (sub->count("--lambda")) cfg.lambda = lambda_value;
        try {
            std::ofstream file;
            std::ostream* sink = &out;
            if (!cfg.out_path.empty()) {
                file.open(cfg.out_path, std::ios::binary);
                if (!file) throw UsageError("cannot open output file " + cfg.out_path);
                sink = &file;
            }
            return handler(cfg, *sink);
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n\n" << sub->help();
            return kUsageError;
        } catch (const harmonic::CertificationError& e) {
            err << "certification failure: " << e.what() << '\n';
            return kCertificationFailure;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kUsageError;
        }
    }
    return kUsageError;
}

}  // namespace lieball::cli
