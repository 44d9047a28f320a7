#include "circleroots/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "circleroots/bethe.hpp"
#include "circleroots/criteria.hpp"
#include "circleroots/error.hpp"
#include "circleroots/inversive.hpp"
#include "circleroots/io.hpp"
#include "circleroots/oracle.hpp"
#include "circleroots/salem.hpp"

namespace circleroots::cli {

Tolerances RunConfig::tolerances() const {
    Tolerances tol;
    tol.detect = tol_detect;
    tol.circle = tol_circle;
    tol.annulus = tol_annulus;
    tol.seed = seed;
    return tol;
}

namespace {

using io::Json;

std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    return std::nullopt;
}

struct PolynomialInput {
    std::string coeffs;
    std::string file;

    void attach(CLI::App& cmd) {
        cmd.add_option("--coeffs,-c", coeffs, "comma-separated complex literals, ascending order (e.g. \"1+1i,-2,0,-2i,1+1i\")");
        cmd.add_option("--file,-f", file, "polynomial JSON file {\"coeffs\": [[re, im], ...]}");
    }

    bool given() const { return !coeffs.empty() || !file.empty(); }

    Polynomial load() const {
        if (!coeffs.empty() && !file.empty())
            throw InvalidArgument("give either --coeffs or --file, not both");
        if (!coeffs.empty())
            return io::parse_coefficients(coeffs);
        if (file.empty())
            throw InvalidArgument("no polynomial given (use --coeffs or --file)");
        std::ifstream in(file);
        if (!in)
            throw InvalidArgument("cannot open " + file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw io::ParseError(std::string("malformed JSON in ") + file + ": " + e.what(), e.byte);
        }
        return io::polynomial_from_json(j);
    }
};

std::string fmt(double x) { return io::format_double(x); }

std::string fmt(Coeff c) { return "(" + fmt(c.real()) + ", " + fmt(c.imag()) + ")"; }

void print_prediction_text(std::ostream& out, const RootCountPrediction& p) {
    out << std::left << std::setw(9) << to_string(p.criterion) << " l=" << p.l << "  lhs=" << fmt(p.lhs)
        << "  rhs=" << fmt(p.rhs) << "  margin=" << fmt(p.margin) << "  -> " << to_string(p.kind);
    if (p.fired())
        out << "(" << p.count << (p.simple ? ", simple" : "") << ")";
    out << '\n';
}

void print_roots_text(std::ostream& out, const RootClassification& cls) {
    out << "roots: inside=" << cls.counts.inside << " on=" << cls.counts.on << " outside=" << cls.counts.outside
        << " residual=" << fmt(cls.residual) << '\n';
    for (const auto& r : cls.roots)
        out << "  " << fmt(r.value) << "  |r|=" << fmt(std::abs(r.value)) << "  mult=" << r.multiplicity << "  "
            << to_string(r.band) << '\n';
}

void print_inversive_text(std::ostream& out, const InversiveReport& inv) {
    out << "self-inversive: " << (inv.is_self_inversive ? "yes" : "no");
    if (inv.omega)
        out << "  omega=" << fmt(*inv.omega);
    out << "  self-reciprocal: " << (inv.is_self_reciprocal ? "yes" : "no") << "  residual=" << fmt(inv.max_residual)
        << '\n';
}

int exit_for(ClauseStatus status) {
    switch (status) {
        case ClauseStatus::Pass: return exit_verified;
        case ClauseStatus::Fail: return exit_mismatch;
        case ClauseStatus::Inconclusive: break;
    }
    return exit_inconclusive;
}

int cmd_analyze(const PolynomialInput& input, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Polynomial p = input.load();
    if (p.degree() < 1)
        throw InvalidArgument("polynomial must have degree >= 1");
    const auto tol = cfg.tolerances();
    const auto inv = detect(p, tol.detect);
    if (!inv.is_self_inversive) {
        if (cfg.format == OutputFormat::Json)
            out << Json{{"polynomial", io::to_json(p)}, {"inversive", io::to_json(inv)}}.dump(2) << '\n';
        else if (cfg.format == OutputFormat::Text)
            print_inversive_text(out, inv);
        err << "error: not self-inversive (max residual " << fmt(inv.max_residual) << ")\n";
        return exit_input_error;
    }

    const auto all = all_criteria(p, tol.detect);
    const auto best = best_prediction(p, tol.detect);
    std::optional<Localization> loc;
    std::string loc_error;
    if (best.fired() && best.criterion != Criterion::NoRoots && at_least_criterion(p, best.l, tol.detect).fired()) {
        try {
            loc = trig_localize(p, best.l, tol.detect);
        } catch (const DegenerateNode& e) {
            loc_error = e.what();
        }
    }
    const auto verification = verify_prediction(p, best, tol);

    switch (cfg.format) {
        case OutputFormat::Json: {
            Json fired = Json::array();
            for (const auto& pred : all)
                if (pred.fired())
                    fired.push_back(io::to_json(pred));
            Json j{{"polynomial", io::to_json(p)},
                   {"inversive", io::to_json(inv)},
                   {"predictions", fired},
                   {"best", io::to_json(best)},
                   {"localization", loc ? io::to_json(*loc) : Json(nullptr)}};
            if (verification.has_classification)
                j["classification"] = io::to_json(verification.classification);
            j["verification"] = io::to_json(verification);
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            if (verification.has_classification)
                out << io::roots_csv(verification.classification);
            break;
        case OutputFormat::Text:
            print_inversive_text(out, inv);
            for (const auto& pred : all)
                if (pred.fired())
                    print_prediction_text(out, pred);
            out << "best: " << to_string(best.kind) << " count=" << best.count << " l=" << best.l << '\n';
            if (loc)
                for (const auto& iv : loc->intervals)
                    out << "  interval (" << fmt(iv.t_lo) << ", " << fmt(iv.t_hi) << ") signs " << iv.sign_lo << "/"
                        << iv.sign_hi << '\n';
            if (verification.has_classification)
                print_roots_text(out, verification.classification);
            out << "verification: " << to_string(verification.overall) << '\n';
            for (const auto& c : verification.clauses)
                out << "  " << c.name << ": " << to_string(c.status) << "  " << c.detail << '\n';
            break;
    }
    if (!loc_error.empty())
        err << "warning: " << loc_error << '\n';
    return exit_for(verification.overall);
}

int cmd_criteria(const PolynomialInput& input, std::optional<int> only_l, const RunConfig& cfg, std::ostream& out) {
    const Polynomial p = input.load();
    auto rows = all_criteria(p, cfg.tol_detect);
    if (only_l) {
        if (*only_l < 0 || 2 * *only_l > p.degree())
            throw InvalidArgument("--l must lie in [0, n/2]");
        std::erase_if(rows, [&](const RootCountPrediction& r) { return r.l != *only_l; });
    }

    switch (cfg.format) {
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : rows)
                arr.push_back(io::to_json(r));
            out << Json{{"degree", p.degree()}, {"rows", arr}}.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "criterion,l,kind,count,lhs,rhs,margin\n";
            for (const auto& r : rows)
                out << to_string(r.criterion) << ',' << r.l << ',' << to_string(r.kind) << ',' << r.count << ','
                    << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.margin) << '\n';
            break;
        case OutputFormat::Text:
            for (const auto& r : rows)
                print_prediction_text(out, r);
            break;
    }
    return exit_verified;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        const auto second = text.find(':', colon + 1);
        if (second == std::string::npos)
            throw InvalidArgument("grid must be lo:hi:count or a comma list");
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1, second - colon - 1));
        const int count = std::stoi(text.substr(second + 1));
        if (count < 1)
            throw InvalidArgument("grid count must be positive");
        for (int i = 0; i < count; ++i)
            grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        grid.push_back(std::stod(item));
    if (grid.empty())
        throw InvalidArgument("empty grid");
    return grid;
}

struct BetheArgs {
    int n = 0;
    int a = 0;
    std::optional<double> delta;
    std::string grid;
    std::string omega;
    std::string spec_file;
};

// A sweep is tabular, so it prints CSV unless a format was chosen explicitly.
int cmd_bethe(const BetheArgs& args, const RunConfig& cfg, bool format_explicit, std::ostream& out) {
    BetheSpec spec{args.n, args.a, args.delta.value_or(0.0), std::nullopt};
    if (!args.spec_file.empty()) {
        std::ifstream in(args.spec_file);
        if (!in)
            throw InvalidArgument("cannot open " + args.spec_file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw io::ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
        }
        spec = io::bethe_spec_from_json(j);
    } else if (args.n == 0) {
        throw InvalidArgument("bethe needs -n and -a (or --spec)");
    }
    if (!args.omega.empty())
        spec.omega_override = io::parse_complex(args.omega);
    const auto tol = cfg.tolerances();

    if (!args.grid.empty()) {
        if (spec.omega_override)
            throw InvalidArgument("--grid uses a = index; --omega is only for single evaluations");
        bethe_polynomial(spec);  // validates n, a before sweeping
        const auto grid = parse_grid(args.grid);
        const auto rows = sweep(spec.n, spec.a, grid, tol);
        if (format_explicit && cfg.format == OutputFormat::Json) {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json row{{"delta", r.delta}, {"regime", std::string(to_string(r.regime))}};
                if (r.ok) {
                    row["inside"] = r.counts.inside;
                    row["on"] = r.counts.on;
                    row["outside"] = r.counts.outside;
                    row["simple"] = r.simple;
                    row["min_root_gap"] = r.min_root_gap;
                } else {
                    row["error"] = r.error;
                }
                arr.push_back(row);
            }
            out << Json{{"spec", io::to_json(spec)}, {"rows", arr}}.dump(2) << '\n';
        } else {
            out << io::sweep_csv(rows);
        }
        for (const auto& r : rows)
            if (!r.ok)
                return exit_inconclusive;
        return exit_verified;
    }

    if (!args.delta && args.spec_file.empty())
        throw InvalidArgument("bethe needs --delta or --grid");
    const Polynomial p = bethe_polynomial(spec);
    const auto report = classify_regime(spec, tol);
    switch (cfg.format) {
        case OutputFormat::Json:
            out << Json{{"spec", io::to_json(spec)}, {"polynomial", io::to_json(p)}, {"report", io::to_json(report)}}
                       .dump(2)
                << '\n';
            break;
        case OutputFormat::Csv:
            out << io::roots_csv(*report.classification);
            break;
        case OutputFormat::Text:
            out << "regime: " << to_string(report.regime) << "  thresholds " << fmt(report.threshold_lo) << " / "
                << fmt(report.threshold_hi) << '\n';
            if (report.off_pair)
                out << "off-circle pair: " << fmt(report.off_pair->first) << ", " << fmt(report.off_pair->second)
                    << "  |s s' - omega|=" << fmt(report.pair_product_error) << '\n';
            print_roots_text(out, *report.classification);
            break;
    }
    return exit_verified;
}

int cmd_salem(const PolynomialInput& input, bool boost, const RunConfig& cfg, std::ostream& out) {
    const Polynomial seed = input.load();
    std::optional<Polynomial> boosted;
    SalemReport report;
    if (boost) {
        auto [poly, rep] = boost_to_salem(seed, cfg.tolerances());
        boosted = std::move(poly);
        report = std::move(rep);
    } else {
        report = is_salem(seed, cfg.tolerances());
    }
    const Polynomial& subject = boosted ? *boosted : seed;

    switch (cfg.format) {
        case OutputFormat::Json: {
            Json j = io::to_json(report);
            if (boosted)
                j["boosted"] = io::to_json(*boosted);
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv: {
            out << "salem,salem_number,reasons\n" << (report.is_salem ? "true" : "false") << ','
                << (report.salem_number ? fmt(*report.salem_number) : "NA") << ',';
            for (std::size_t i = 0; i < report.reasons.size(); ++i)
                out << (i ? "; " : "") << report.reasons[i];
            out << '\n';
            break;
        }
        case OutputFormat::Text:
            if (boosted) {
                out << "boosted:";
                for (const auto& c : subject.coeffs())
                    out << ' ' << fmt(c.real());
                out << '\n';
            }
            out << "salem: " << (report.is_salem ? "yes" : "no");
            if (report.salem_number)
                out << "  salem number " << fmt(*report.salem_number);
            out << '\n';
            for (const auto& r : report.reasons)
                out << "  - " << r << '\n';
            break;
    }
    return report.inconclusive ? exit_inconclusive : exit_verified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Root counts of self-inversive polynomials on the unit circle"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format_name;
    if (const char* env = std::getenv("CIRCLEROOTS_FORMAT"))
        format_name = env;
    app.add_option("--tol-detect", cfg.tol_detect, "relative tolerance of the self-inversive test")->check(CLI::PositiveNumber);
    app.add_option("--tol-circle", cfg.tol_circle, "band on ||r|-1| for on-circle roots")->check(CLI::PositiveNumber);
    app.add_option("--tol-annulus", cfg.tol_annulus, "half-width of the counting annulus")->check(CLI::Range(1e-300, 0.5));
    app.add_option("--seed", cfg.seed, "seed for the root-finder start");
    app.add_option("--format", format_name, "json | csv | text (default from CIRCLEROOTS_FORMAT, else json)");

    PolynomialInput analyze_input;
    auto* analyze = app.add_subcommand("analyze", "self-inversive test, criteria, oracle verification");
    analyze_input.attach(*analyze);

    PolynomialInput criteria_input;
    std::optional<int> only_l;
    auto* criteria = app.add_subcommand("criteria", "table of every criterion's margin");
    criteria_input.attach(*criteria);
    criteria->add_option("--l", only_l, "restrict to one index l");

    BetheArgs bethe_args;
    auto* bethe = app.add_subcommand("bethe", "two-magnon Bethe polynomial regimes");
    bethe->add_option("-n,--degree", bethe_args.n, "degree n >= 3");
    bethe->add_option("-a,--index", bethe_args.a, "root-of-unity index a in [1, n]");
    bethe->add_option("-d,--delta", bethe_args.delta, "anisotropy");
    bethe->add_option("--grid", bethe_args.grid, "delta grid: lo:hi:count or comma list");
    bethe->add_option("--omega", bethe_args.omega, "unimodular omega replacing exp(2 pi i a/n)");
    bethe->add_option("--spec", bethe_args.spec_file, "spec JSON {\"n\":..., \"a\":..., \"delta\":...}");

    PolynomialInput salem_input;
    bool boost = false;
    auto* salem = app.add_subcommand("salem", "Salem certification or construction");
    salem_input.attach(*salem);
    salem->add_flag("--boost", boost, "raise a_1 = a_{n-1} until the l = 1 criterion holds");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_verified : exit_input_error;
    }

    if (!format_name.empty()) {
        const auto f = parse_format(format_name);
        if (!f) {
            err << "error: unknown format '" << format_name << "'\n";
            return exit_input_error;
        }
        cfg.format = *f;
    }

    try {
        if (*analyze)
            return cmd_analyze(analyze_input, cfg, out, err);
        if (*criteria)
            return cmd_criteria(criteria_input, only_l, cfg, out);
        if (*bethe)
            return cmd_bethe(bethe_args, cfg, !format_name.empty(), out);
        if (*salem)
            return cmd_salem(salem_input, boost, cfg, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const OracleFailure& e) {
        err << "inconclusive: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
        return exit_inconclusive;
    } catch (const std::logic_error& e) {
        // std::stod / std::stoi
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace circleroots::cli
