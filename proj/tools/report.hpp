#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twistvol/checks.hpp"
#include "twistvol/distance_eq.hpp"
#include "twistvol/lengths.hpp"
#include "twistvol/sweep.hpp"
#include "twistvol/volume.hpp"

namespace twistvol::cli {

enum class Format { Json, Csv, Table };

/// Empty (null) or a value; doubles are rounded at output time.
using Field = std::variant<std::monostate, double, long long, bool, std::string>;

/// Flat, ordered key/value output row.
struct Record {
    std::vector<std::pair<std::string, Field>> fields;

    Record& add(std::string key, Field value);
    /// Null when value is empty.
    Record& add_optional(std::string key, const std::optional<double>& value);
    const Field* find(std::string_view key) const;
};

/// x rounded to the given number of significant digits; non-finite unchanged.
double round_significant(double x, int digits);
/// %.{digits}g, with "nan"/"inf" spelled out.
std::string format_number(double x, int digits);

/// Doubles rounded to 12 significant digits, non-finite values as null.
nlohmann::ordered_json to_json(const Record& record);

/// Fixed sweep columns.
const std::vector<std::string>& sweep_csv_columns();

/// JSON writes one object per line. CSV writes a header from columns (or the
/// first record's keys when columns is empty). Table aligns columns with 6
/// significant digits.
void write_records(std::ostream& out, const std::vector<Record>& records, Format format,
                   const std::vector<std::string>& columns = {});

Record volume_record(const ConeParams& params, const VolumeResult& result);
Record length_record(const ConeParams& params, const LengthReport& report);
/// Lengths at a cusp: real lengths only.
Record cusp_length_record(const ConeParams& params, Complex zeta, double r_alpha, double r_beta);
std::vector<Record> root_records(const ConeParams& params, const RootSelection& selection,
                                 std::string_view equation);
Record regime_record(const ConeParams& params, Regime regime);
Record point_record(const PointRecord& point);
Record suite_record(const SuiteResult& suite);

} // namespace twistvol::cli
