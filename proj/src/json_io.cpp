#include "addsys/json_io.hpp"

#include "addsys/index_set.hpp"

namespace addsys {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        raise(errc::bad_document, std::string("missing field '") + name + "'");
    }
    return *it;
}

}  // namespace

json int_to_json(const Int& value) {
    if (value < 0) raise(errc::bad_document, "negative integer in document");
    if (value.fits_ulong_p()) return json(static_cast<std::uint64_t>(value.get_ui()));
    return json(value.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v < 0) raise(errc::bad_document, "negative integer in document");
        return Int(static_cast<unsigned long>(v));
    }
    if (j.is_string()) return parse_int(j.get<std::string>());
    raise(errc::bad_document,
          "expected an integer (number or decimal string), got " + j.dump() +
              "; quote values beyond 64 bits");
}

json radix_seq_to_json(const RadixSeq& radices) {
    json prefix = json::array();
    for (const Int& g : radices.prefix()) prefix.push_back(int_to_json(g));
    return json{{"prefix", std::move(prefix)},
                {"tail", radices.repeats() ? "repeat-last" : "finite"}};
}

RadixSeq radix_seq_from_json(const json& j) {
    if (!j.is_object()) raise(errc::bad_document, "radix descriptor must be an object");
    std::vector<Int> prefix;
    for (const auto& entry : require_field(j, "prefix")) prefix.push_back(int_from_json(entry));
    std::string tail = require_field(j, "tail").get<std::string>();
    if (tail == "repeat-last") return RadixSeq(std::move(prefix), RadixSeq::Tail::RepeatLast);
    if (tail == "finite") return RadixSeq(std::move(prefix), RadixSeq::Tail::Finite);
    raise(errc::bad_document, "unknown radix tail '" + tail + "' (version 1 supports finite, repeat-last)");
}

json set_expr_to_json(const SetExpr& set) {
    return std::visit(
        [&](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SetExpr::Explicit>) {
                json elems = json::array();
                for (const Int& e : n.set.elements()) elems.push_back(int_to_json(e));
                return json{{"type", "explicit"}, {"elements", std::move(elems)}};
            } else if constexpr (std::is_same_v<T, SetExpr::Ray>) {
                return json{{"type", "ray"}, {"modulus", int_to_json(n.modulus)}};
            } else if constexpr (std::is_same_v<T, SetExpr::Dilated>) {
                return json{{"type", "dilated"},
                            {"factor", int_to_json(n.factor)},
                            {"inner", set_expr_to_json(*n.inner)}};
            } else {
                json included = json::array();
                for (int i : n.indices.included()) included.push_back(i);
                return json{{"type", "bns-subsum"},
                            {"radices", radix_seq_to_json(n.radices)},
                            {"indices",
                             json{{"included", std::move(included)},
                                  {"window", n.indices.window()},
                                  {"tailIncluded", n.indices.tail_included()}}}};
            }
        },
        set.node());
}

SetExpr set_expr_from_json(const json& j) {
    if (!j.is_object()) raise(errc::bad_document, "set descriptor must be an object");
    std::string type = require_field(j, "type").get<std::string>();
    if (type == "explicit") {
        std::vector<Int> elems;
        for (const auto& entry : require_field(j, "elements")) elems.push_back(int_from_json(entry));
        return SetExpr::explicit_set(DigitSet::normalized(std::move(elems)));
    }
    if (type == "ray") {
        return SetExpr::ray(int_from_json(require_field(j, "modulus")));
    }
    if (type == "dilated") {
        return SetExpr::dilated_node(int_from_json(require_field(j, "factor")),
                                     set_expr_from_json(require_field(j, "inner")));
    }
    if (type == "bns-subsum") {
        RadixSeq radices = radix_seq_from_json(require_field(j, "radices"));
        const json& idx = require_field(j, "indices");
        std::vector<int> included;
        for (const auto& entry : require_field(idx, "included")) included.push_back(entry.get<int>());
        IndexSet indices(std::move(included), require_field(idx, "window").get<int>(),
                         require_field(idx, "tailIncluded").get<bool>());
        return SetExpr::bns_subsum(std::move(radices), std::move(indices));
    }
    raise(errc::bad_document, "unknown set type '" + type +
                                  "' (document version 1 supports explicit, ray, dilated, bns-subsum)");
}

json to_json(const SystemDocument& doc) {
    json sets = json::array();
    for (const SetExpr& set : doc.sets) sets.push_back(set_expr_to_json(set));
    json out{{"version", doc.version}, {"sets", std::move(sets)}};
    if (doc.tail) out["tail"] = radix_seq_to_json(*doc.tail);
    if (!doc.meta.empty()) out["meta"] = doc.meta;
    return out;
}

SystemDocument parse_system_document(const json& j) {
    if (!j.is_object()) raise(errc::bad_document, "system document must be an object");
    SystemDocument doc;
    if (auto it = j.find("version"); it != j.end()) doc.version = it->get<std::string>();
    if (doc.version != "1") {
        raise(errc::bad_document, "unsupported document version '" + doc.version + "' (this build reads 1)");
    }
    for (const auto& entry : require_field(j, "sets")) doc.sets.push_back(set_expr_from_json(entry));
    if (auto it = j.find("tail"); it != j.end() && !it->is_null()) {
        doc.tail = radix_seq_from_json(*it);
    }
    if (auto it = j.find("meta"); it != j.end()) doc.meta = *it;
    return doc;
}

SystemDocument parse_system_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::bad_document, "not valid JSON");
    return parse_system_document(j);
}

SystemDocument document_from_system(const AdditiveSystem& system) {
    SystemDocument doc;
    doc.sets = system.explicit_sets();
    if (system.has_tail()) doc.tail = system.tail();
    return doc;
}

AdditiveSystem system_from_document(const SystemDocument& doc) {
    return AdditiveSystem(doc.sets, doc.tail);
}

}  // namespace addsys
