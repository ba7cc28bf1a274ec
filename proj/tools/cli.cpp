#include "cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "angle.hpp"
#include "report.hpp"
#include "twistvol/checks.hpp"
#include "twistvol/distance_eq.hpp"
#include "twistvol/lengths.hpp"
#include "twistvol/sweep.hpp"
#include "twistvol/volume.hpp"

namespace twistvol::cli {

namespace {

struct PointOptions {
    int p = 2;
    std::string alpha = "pi/2";
    std::string beta = "pi/2";
};

struct Options {
    PointOptions point;
    bool degrees = false;
    std::string format = "table";
    std::optional<double> tolerance;
    std::vector<std::string> suites;
    std::optional<int> suite_p;
    std::string alpha_range, beta_range;
    bool diagonal = false;
    bool serial = false;
    std::vector<std::string> quantities;
};

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    return Format::Table;
}

QuadratureOptions quadrature(const Options& o)
{
    QuadratureOptions q;
    if (o.tolerance) {
        q.rel_tol = *o.tolerance;
        q.abs_tol = *o.tolerance;
    }
    return q;
}

ConeParams point_params(const Options& o)
{
    return ConeParams(o.point.p, parse_angle(o.point.alpha, o.degrees),
                      parse_angle(o.point.beta, o.degrees));
}

AngleRange parse_range(const std::string& text, bool degrees)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        parts.push_back(item);
    if (parts.size() != 3)
        throw Error(ErrorCode::InvalidArgument, "range must be start,stop,steps: '" + text + "'");
    AngleRange r;
    r.start = parse_angle(parts[0], degrees);
    r.stop = parse_angle(parts[1], degrees);
    std::size_t used = 0;
    try {
        r.steps = std::stoi(parts[2], &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != parts[2].size())
        throw Error(ErrorCode::InvalidArgument, "steps must be an integer: '" + parts[2] + "'");
    return r;
}

Quantities parse_quantities(const std::vector<std::string>& names)
{
    if (names.empty())
        return {};
    Quantities q{false, false, false, true, false};
    for (const std::string& n : names) {
        if (n == "volume")
            q.volume = true;
        else if (n == "lengths")
            q.lengths = true;
        else if (n == "zeta")
            q.zeta = true;
        else if (n == "regime")
            q.regime = true;
        else if (n == "residuals")
            q.residuals = true;
        else
            throw Error(ErrorCode::InvalidArgument, "unknown quantity '" + n + "'");
    }
    return q;
}

int cmd_volume(const Options& o, std::ostream& out)
{
    const ConeParams params = point_params(o);
    const VolumeResult v = volume(params, quadrature(o));
    write_records(out, {volume_record(params, v)}, parse_format(o.format));
    return kExitOk;
}

int cmd_lengths(const Options& o, std::ostream& out)
{
    const ConeParams params = point_params(o);
    Record rec;
    if (params.has_cusp() && params.p() <= 2) {
        const Complex zeta = zeta_root(params).value;
        const auto [ra, rb] = real_lengths(params, zeta);
        rec = cusp_length_record(params, zeta, ra, rb);
    } else {
        rec = length_record(params, compute_lengths(params));
    }
    write_records(out, {rec}, parse_format(o.format));
    return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out)
{
    const ConeParams params = point_params(o);
    std::vector<Record> recs;
    if (!params.has_cusp()) {
        const auto sel = distance_root(params);
        for (Record& r : root_records(params, sel, to_string(sel.kind)))
            recs.push_back(std::move(r));
    }
    if (params.p() <= 2) {
        const auto sel = zeta_root(params);
        for (Record& r : root_records(params, sel, to_string(sel.kind)))
            recs.push_back(std::move(r));
    }
    write_records(out, recs, parse_format(o.format));
    return kExitOk;
}

int cmd_regime(const Options& o, std::ostream& out)
{
    const ConeParams params = point_params(o);
    write_records(out, {regime_record(params, classify_regime(params))}, parse_format(o.format));
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out)
{
    std::vector<SuiteResult> results;
    if (o.suites.empty()) {
        results = run_all_suites(o.suite_p, quadrature(o));
    } else {
        for (const std::string& s : o.suites)
            results.push_back(run_suite(s, o.suite_p, quadrature(o)));
    }
    std::vector<Record> recs;
    bool ok = true;
    for (const SuiteResult& r : results) {
        recs.push_back(suite_record(r));
        ok = ok && r.passed;
    }
    write_records(out, recs, parse_format(o.format));
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    SweepSpec spec;
    spec.p = o.point.p;
    spec.alpha = parse_range(o.alpha_range, o.degrees);
    if (!o.diagonal)
        spec.beta = parse_range(o.beta_range, o.degrees);
    spec.diagonal = o.diagonal;
    spec.quantities = parse_quantities(o.quantities);
    spec.quadrature = quadrature(o);
    const auto points = o.serial ? sweep_serial(spec) : sweep_parallel(spec);

    std::vector<Record> recs;
    bool failures = false;
    for (const PointRecord& pt : points) {
        recs.push_back(point_record(pt));
        if (pt.error) {
            failures = true;
            err << "warning: p=" << pt.p << " alpha=" << pt.alpha << " beta=" << pt.beta << ": "
                << pt.error_message << '\n';
        }
    }
    const Format fmt = parse_format(o.format);
    write_records(out, recs, fmt, fmt == Format::Json ? std::vector<std::string>{}
                                                      : sweep_csv_columns());
    return failures ? kExitNumerical : kExitOk;
}

std::string out_of_regime_name(const Options& o)
{
    try {
        return std::string(to_string(classify_regime(point_params(o))));
    } catch (const Error&) {
        return std::string(to_string(Regime::NonHyperbolic));
    }
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::CuspAngle:
        return kExitUsage;
    case ErrorCode::NoHyperbolicRoot:
    case ErrorCode::OutOfRegime:
        return kExitOutOfRegime;
    default:
        return kExitNumerical;
    }
}

void add_point_flags(CLI::App* cmd, Options& o, std::vector<int> allowed_p)
{
    cmd->add_option("--p", o.point.p, "twist index")
        ->check(CLI::IsMember(std::move(allowed_p)));
    cmd->add_option("--alpha", o.point.alpha, "cone angle alpha (radians, or pi/3 style)");
    cmd->add_option("--beta", o.point.beta, "cone angle beta");
}

void add_common_flags(CLI::App* cmd, Options& o)
{
    cmd->add_flag("--degrees", o.degrees, "plain numeric angles are degrees");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--tolerance", o.tolerance, "quadrature tolerance")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants of twist-link cone-manifolds W_p(alpha, beta)", "twistvol"};
    app.require_subcommand(1);
    Options o;

    auto* vol = app.add_subcommand("volume", "hyperbolic volume (p = 1, 2)");
    add_point_flags(vol, o, {1, 2});
    add_common_flags(vol, o);

    auto* len = app.add_subcommand("lengths", "complex and real lengths, rule residuals");
    add_point_flags(len, o, {1, 2, 3});
    add_common_flags(len, o);

    auto* roots = app.add_subcommand("roots", "roots of the distance and endpoint equations");
    add_point_flags(roots, o, {1, 2, 3});
    add_common_flags(roots, o);

    auto* reg = app.add_subcommand("regime", "geometric regime of a point");
    add_point_flags(reg, o, {1, 2, 3});
    add_common_flags(reg, o);

    auto* chk = app.add_subcommand("check", "run the invariant suites");
    chk->add_option("--suite", o.suites, "suite name (repeatable)");
    chk->add_option("--p", o.suite_p, "restrict to one twist index")
        ->check(CLI::IsMember({1, 2, 3}));
    add_common_flags(chk, o);

    auto* sw = app.add_subcommand("sweep", "evaluate a grid of cone angles");
    sw->add_option("--p", o.point.p, "twist index")->check(CLI::IsMember({1, 2, 3}));
    sw->add_option("--alpha-range", o.alpha_range, "start,stop,steps")->required();
    auto* beta_range = sw->add_option("--beta-range", o.beta_range, "start,stop,steps");
    auto* diag = sw->add_flag("--diagonal", o.diagonal, "alpha = beta along --alpha-range");
    beta_range->excludes(diag);
    sw->add_option("--quantities", o.quantities, "volume,lengths,zeta,regime,residuals")
        ->delimiter(',');
    sw->add_flag("--serial", o.serial, "evaluate without threads");
    add_common_flags(sw, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
        err << "run '" << failing->get_name() << " --help' for usage\n";
        return kExitUsage;
    }

    if (sw->parsed() && !o.diagonal && o.beta_range.empty()) {
        err << "error: sweep needs --beta-range or --diagonal\n";
        return kExitUsage;
    }
    if (sw->parsed() && !sw->count("--format"))
        o.format = "csv";

    try {
        if (vol->parsed())
            return cmd_volume(o, out);
        if (len->parsed())
            return cmd_lengths(o, out);
        if (roots->parsed())
            return cmd_roots(o, out);
        if (reg->parsed())
            return cmd_regime(o, out);
        if (chk->parsed())
            return cmd_check(o, out);
        return cmd_sweep(o, out, err);
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        err << "error: " << e.what() << '\n';
        if (code == kExitOutOfRegime && !chk->parsed() && !sw->parsed())
            err << "regime=" << out_of_regime_name(o) << '\n';
        return code;
    }
}

} // namespace twistvol::cli
