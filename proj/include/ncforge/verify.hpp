#ifndef NCFORGE_VERIFY_HPP
#define NCFORGE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ncforge/field.hpp"
#include "ncforge/gbasis.hpp"
#include "ncforge/structure.hpp"

namespace ncforge {

using Json = nlohmann::ordered_json;

/// Unknown check ids, malformed grids and other harness misuse.
class CheckError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact parameter value; mapped into the working field at run time.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string to_string() const;
  bool operator==(const Ratio&) const = default;
};

using GridPoint = std::vector<Ratio>;

struct CheckConfig {
  FieldSpec field = FieldSpec::prime(10009);
  std::uint64_t seed = 42;
  std::size_t degree_bound = kDefaultDegreeBound;
  std::size_t max_rules = kDefaultMaxRules;
  std::size_t trials = 50;
  /// Points to run at; nullopt means the check's own default points.
  std::optional<std::vector<GridPoint>> grid;
};

enum class Status { Pass, Fail, Skipped, Error };

std::string_view status_name(Status s);

struct PointReport {
  Json params;
  Status status = Status::Pass;
  std::string reason;
  Json details = Json::object();
};

/// Schwartz-Zippel bound (degree / sample_size)^trials.
struct ErrorBound {
  std::uint64_t degree = 5;
  std::uint64_t sample_size = 0;
  std::size_t trials = 0;

  double log10() const;
  /// Exact value as "num/den" with both sides expanded.
  std::string exact() const;
};

struct Report {
  std::string check_id;
  Status status = Status::Pass;
  Json config = Json::object();
  std::vector<PointReport> points;
  std::optional<ErrorBound> error_bound;

  Json to_json() const;
};

/// Combined status: error beats fail beats pass; all-skipped is skipped.
Status combine(const std::vector<PointReport>& points);

struct CheckInfo {
  std::string id;
  /// Names of the grid coordinates, e.g. {"alpha1", "alpha2"}; empty for
  /// checks that run once.
  std::vector<std::string> axes;
  std::string summary;
};

const std::vector<CheckInfo>& registered_checks();
const CheckInfo& check_info(std::string_view id);

/// Default points of a check for the given configuration (seeded).
std::vector<GridPoint> default_points(std::string_view id, const CheckConfig& cfg);

/// Runs at cfg.grid when set, else at the default points.
Report run_check(std::string_view id, const CheckConfig& cfg);

/// Like run_check but requires a nonempty cfg.grid.
Report scan(std::string_view id, const CheckConfig& cfg);

/// Grid syntax:
///   "default"               the check's default points
///   "random:N"              N seeded random points
///   "1,2;3,-1/2"            explicit tuples separated by ';'
///   "-2..3x{0,1}"           product of axes; an axis is lo..hi or {v,...}
std::optional<std::vector<GridPoint>> parse_grid(std::string_view text, std::size_t arity,
                                                 const CheckConfig& cfg);

/// Evaluates [[x,y]^2, z] at cfg.trials random triples of the table.
template <Field F>
Report pi_test(const AlgebraTable<F>& table, const CheckConfig& cfg, std::uint64_t seed);

}  // namespace ncforge

#endif  // NCFORGE_VERIFY_HPP
