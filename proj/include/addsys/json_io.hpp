#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "addsys/system.hpp"

namespace addsys {

/// On-disk description of a system.  Versioned so unknown descriptors can
/// be rejected with a useful message.  `meta` is free-form and round-trips
/// untouched.
struct SystemDocument {
    std::string version = "1";
    std::vector<SetExpr> sets;
    std::optional<RadixSeq> tail;
    nlohmann::json meta = nlohmann::json::object();

    bool operator==(const SystemDocument& other) const = default;
};

/// Integers are emitted as JSON numbers while they fit 64 bits and as
/// decimal strings beyond that; both forms parse.  Floats are rejected:
/// exactness must survive the text boundary.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json set_expr_to_json(const SetExpr& set);
SetExpr set_expr_from_json(const nlohmann::json& j);

nlohmann::json radix_seq_to_json(const RadixSeq& radices);
RadixSeq radix_seq_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SystemDocument& doc);
SystemDocument parse_system_document(const nlohmann::json& j);
SystemDocument parse_system_document(const std::string& text);

SystemDocument document_from_system(const AdditiveSystem& system);
AdditiveSystem system_from_document(const SystemDocument& doc);

}  // namespace addsys
