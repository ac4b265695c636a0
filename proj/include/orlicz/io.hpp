#pragma once

#include "orlicz/bvfunc.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/restore.hpp"
#include "orlicz/variation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orlicz::io {

using Json = nlohmann::ordered_json;

/// Serializes with every double printed as %.17g and +inf as "inf";
/// identical values give byte-identical text.
std::string dump(const Json& j, int indent = 2);

/// Parses text; syntax errors become Error(Parse) with line and column.
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

/// Number or the string "inf".
double number_or_inf(const Json& j, const std::string& field);

Profile profile_from_json(const Json& j, const std::string& field = "profile");
Json to_json(const Profile& p);

Phi phi_from_json(const Json& j);
Json to_json(const Phi& phi);

BVFunction bv_from_json(const Json& j);
Json to_json(const BVFunction& f);

Json to_json(const VariationEstimate& e);
VariationEstimate estimate_from_json(const Json& j);
Json to_json(const NormResult& n);
NormResult norm_from_json(const Json& j);
Json to_json(const ConditionReport& r);

RestoreConfig restore_config_from_json(const Json& j);

struct Samples {
    std::vector<double> x;
    std::vector<double> value;
};

/// CSV with header `x,value` (or any two named columns), strictly increasing x.
Samples read_xy_csv(const std::string& path);
void write_csv(const std::string& path, const std::string& header, const std::vector<std::vector<double>>& rows);
std::string format_double(double v);

/// Piecewise-constant density from finite differences. Increments larger
/// than the threshold become atoms at the left sample; by default the
/// threshold is 5x the median absolute increment. Pass a negative
/// threshold to disable jump detection.
BVFunction bv_from_samples(const Samples& s, std::optional<double> jump_threshold = std::nullopt);

/// Uniformly spaced samples as a Signal (spacing checked to 1e-9 relative).
Signal signal_from_samples(const Samples& s);

}  // namespace orlicz::io
