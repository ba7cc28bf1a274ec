#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace twistvol::cli {

namespace {

constexpr int kMachineDigits = 12;
constexpr int kTableDigits = 6;

std::string field_text(const Field& f, int digits)
{
    struct Visitor {
        int digits;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double x) const { return format_number(x, digits); }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(bool x) const { return x ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{digits}, f);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> keys_of(const std::vector<Record>& records,
                                 const std::vector<std::string>& columns)
{
    if (!columns.empty() || records.empty())
        return columns;
    std::vector<std::string> keys;
    for (const auto& [k, v] : records.front().fields)
        keys.push_back(k);
    return keys;
}

void add_complex(Record& r, const std::string& prefix, Complex z)
{
    r.add(prefix + "_re", z.real());
    r.add(prefix + "_im", z.imag());
}

Record angle_head(const ConeParams& params)
{
    Record r;
    r.add("p", static_cast<long long>(params.p()));
    r.add("alpha", params.alpha());
    r.add("beta", params.beta());
    return r;
}

} // namespace

Record& Record::add(std::string key, Field value)
{
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

Record& Record::add_optional(std::string key, const std::optional<double>& value)
{
    return value ? add(std::move(key), Field{*value}) : add(std::move(key), Field{});
}

const Field* Record::find(std::string_view key) const
{
    for (const auto& [k, v] : fields)
        if (k == key)
            return &v;
    return nullptr;
}

double round_significant(double x, int digits)
{
    if (!std::isfinite(x))
        return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

nlohmann::ordered_json to_json(const Record& record)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : record.fields) {
        if (const double* x = std::get_if<double>(&v))
            j[k] = std::isfinite(*x) ? nlohmann::ordered_json(round_significant(*x, kMachineDigits))
                                     : nlohmann::ordered_json(nullptr);
        else if (const long long* n = std::get_if<long long>(&v))
            j[k] = *n;
        else if (const bool* b = std::get_if<bool>(&v))
            j[k] = *b;
        else if (const std::string* s = std::get_if<std::string>(&v))
            j[k] = *s;
        else
            j[k] = nullptr;
    }
    return j;
}

const std::vector<std::string>& sweep_csv_columns()
{
    static const std::vector<std::string> cols{
        "p",       "alpha",   "beta",    "regime",      "volume",    "imag_residual", "r_alpha",
        "r_beta",  "zeta_re", "zeta_im", "tangent_res", "sine_res",  "cosine_res"};
    return cols;
}

void write_records(std::ostream& out, const std::vector<Record>& records, Format format,
                   const std::vector<std::string>& columns)
{
    if (format == Format::Json) {
        for (const Record& r : records)
            out << to_json(r).dump() << '\n';
        return;
    }

    const std::vector<std::string> keys = keys_of(records, columns);
    const int digits = format == Format::Csv ? kMachineDigits : kTableDigits;
    std::vector<std::vector<std::string>> rows;
    for (const Record& r : records) {
        std::vector<std::string> row;
        for (const std::string& k : keys) {
            const Field* f = r.find(k);
            row.push_back(f ? field_text(*f, digits) : "");
        }
        rows.push_back(std::move(row));
    }

    if (format == Format::Csv) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            out << (i ? "," : "") << keys[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_escape(row[i]);
            out << '\n';
        }
        return;
    }

    std::vector<std::size_t> width(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        width[i] = keys[i].size();
        for (const auto& row : rows)
            width[i] = std::max(width[i], row[i].empty() ? 1 : row[i].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string cell = cells[i].empty() ? "-" : cells[i];
            out << (i ? "  " : "") << cell;
            if (i + 1 < cells.size())
                out << std::string(width[i] - cell.size(), ' ');
        }
        out << '\n';
    };
    line(keys);
    for (const auto& row : rows)
        line(row);
}

Record volume_record(const ConeParams& params, const VolumeResult& result)
{
    Record r = angle_head(params);
    r.add("method", std::string(to_string(result.method)));
    r.add("volume", result.volume);
    r.add("imag_residual", result.imag_residual);
    r.add("quadrature_error", result.quadrature_error_estimate);
    add_complex(r, "zeta", result.zeta);
    r.add("panels", static_cast<long long>(result.panels));
    return r;
}

Record length_record(const ConeParams& params, const LengthReport& report)
{
    Record r = angle_head(params);
    r.add("r_alpha", report.r_alpha);
    r.add("r_beta", report.r_beta);
    r.add("phi_alpha", report.phi_alpha);
    r.add("phi_beta", report.phi_beta);
    add_complex(r, "gamma_alpha", report.gamma_alpha);
    add_complex(r, "gamma_beta", report.gamma_beta);
    r.add("tangent_res", report.residuals.tangent);
    r.add("sine_res", report.residuals.sine);
    r.add("cosine_res", report.residuals.cosine);
    return r;
}

Record cusp_length_record(const ConeParams& params, Complex zeta, double r_alpha, double r_beta)
{
    Record r = angle_head(params);
    r.add("r_alpha", r_alpha);
    r.add("r_beta", r_beta);
    for (const char* k : {"phi_alpha", "phi_beta", "gamma_alpha_re", "gamma_alpha_im",
                          "gamma_beta_re", "gamma_beta_im", "tangent_res", "sine_res",
                          "cosine_res"})
        r.add(k, Field{});
    add_complex(r, "zeta", zeta);
    return r;
}

std::vector<Record> root_records(const ConeParams& params, const RootSelection& selection,
                                 std::string_view equation)
{
    std::vector<Record> out;
    for (std::size_t i = 0; i < selection.all_roots.size(); ++i) {
        const Complex z = selection.all_roots[i];
        Record r = angle_head(params);
        r.add("equation", std::string(equation));
        r.add("index", static_cast<long long>(i));
        add_complex(r, "root", z);
        r.add("selected", z == selection.value);
        out.push_back(std::move(r));
    }
    return out;
}

Record regime_record(const ConeParams& params, Regime regime)
{
    Record r = angle_head(params);
    r.add("regime", std::string(to_string(regime)));
    if (params.p() == 2 && params.alpha() == params.beta() && params.alpha() > 0.0)
        r.add("discriminant", diagonal_discriminant(params.alpha()));
    else
        r.add("discriminant", Field{});
    return r;
}

Record point_record(const PointRecord& pt)
{
    Record r;
    r.add("p", static_cast<long long>(pt.p));
    r.add("alpha", pt.alpha);
    r.add("beta", pt.beta);
    r.add("regime", std::string(to_string(pt.regime)));
    r.add_optional("volume", pt.volume);
    r.add_optional("imag_residual", pt.imag_residual);
    r.add_optional("r_alpha", pt.r_alpha);
    r.add_optional("r_beta", pt.r_beta);
    r.add_optional("zeta_re", pt.zeta ? std::optional<double>(pt.zeta->real()) : std::nullopt);
    r.add_optional("zeta_im", pt.zeta ? std::optional<double>(pt.zeta->imag()) : std::nullopt);
    const auto res = [&](double RuleResiduals::*f) {
        return pt.residuals ? std::optional<double>((*pt.residuals).*f) : std::nullopt;
    };
    r.add_optional("tangent_res", res(&RuleResiduals::tangent));
    r.add_optional("sine_res", res(&RuleResiduals::sine));
    r.add_optional("cosine_res", res(&RuleResiduals::cosine));
    r.add("error", pt.error ? Field{pt.error_message} : Field{});
    return r;
}

Record suite_record(const SuiteResult& suite)
{
    Record r;
    r.add("suite", suite.name);
    r.add("status", std::string(suite.passed ? "pass" : "fail"));
    r.add("worst", suite.worst);
    r.add("threshold", suite.threshold);
    r.add("cases", static_cast<long long>(suite.cases));
    r.add("detail", suite.detail);
    return r;
}

} // namespace twistvol::cli
