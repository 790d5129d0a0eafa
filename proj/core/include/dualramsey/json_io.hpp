#pragma once

// JSON wire format for points, intervals, surjections, tuples, Q-copies,
// colorings and reports.

#include "dualramsey/ramsey_lab.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dualramsey {

using Json = nlohmann::ordered_json;

/// Malformed input; `where` is a JSON pointer into the document.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct LoadContext {
    std::vector<std::string> warnings;
};

Json to_json(const Point& p, bool with_base = true);
Point point_from_json(const Json& j, LoadContext& ctx, const std::string& where = "",
                      std::optional<unsigned> base = std::nullopt);

Json to_json(const ClopenInterval& i);
ClopenInterval interval_from_json(const Json& j, LoadContext& ctx, const std::string& where, unsigned base);

Json to_json(const Surjection& f);
Surjection surjection_from_json(const Json& j, LoadContext& ctx, const std::string& where = "");

Json tuple_to_json(unsigned base, const std::vector<Point>& t);
std::vector<Point> tuple_from_json(const Json& j, LoadContext& ctx, unsigned& base, const std::string& where = "");

Json to_json(const QCopy& y);
QCopy qcopy_from_json(const Json& j, LoadContext& ctx, unsigned cap, const std::string& where = "");

Json to_json(const ColoringSpec& c);
ColoringSpec coloring_from_json(const Json& j, LoadContext& ctx, const std::string& where = "");

Json to_json(const DistanceResult& d);
Json to_json(const ExperimentReport& r);
Json to_json(const OscillationReport& r);

Json load_json_file(const std::string& path);

} // namespace dualramsey
