#pragma once

#include "meropole/local_algebra.hpp"
#include "meropole/pencil.hpp"

#include <json.hpp>

#include <string>

namespace meropole {

using Json = nlohmann::ordered_json;

struct MilnorQuery {
    MultiPoly poly;
    Point point;
    MilnorResult result;
};

struct ClassifyQuery {
    MultiPoly poly;
    Point point;
    GermClass cls;
};

Json to_json(const PencilReport& report);
Json to_json(const GermReport& report);
Json to_json(const MilnorQuery& query);
Json to_json(const ClassifyQuery& query);

std::string to_text(const PencilReport& report);
std::string to_text(const GermReport& report);
std::string to_text(const MilnorQuery& query);
std::string to_text(const ClassifyQuery& query);

/// Two-space indented dump with a trailing newline; stable for a given value.
std::string dump(const Json& j);

}  // namespace meropole
