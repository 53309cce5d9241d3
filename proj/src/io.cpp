#include "maniplex/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "maniplex/error.hpp"

namespace maniplex {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& message) {
    throw Error(ErrorCode::SchemaError, field + ": " + message);
}

std::uint64_t unsigned_field(const json& value, const std::string& field) {
    if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0))
        schema_error(field, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void dump(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace

std::string serialize(const RootedPremaniplex& rp, std::string_view name) {
    const Premaniplex& p = rp.premaniplex();
    std::ostringstream out;
    out << "{\n";
    if (!name.empty()) out << "  \"name\": " << json(std::string(name)).dump() << ",\n";
    out << "  \"rank\": " << p.rank() << ",\n";
    out << "  \"flag_count\": " << p.flag_count() << ",\n";
    out << "  \"base_flag\": " << rp.base() << ",\n";
    out << "  \"connections\": [\n";
    for (int i = 0; i < p.rank(); ++i) {
        out << "    [";
        auto row = p.row(i);
        for (std::size_t f = 0; f < row.size(); ++f) out << (f ? "," : "") << row[f];
        out << "]" << (i + 1 < p.rank() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string serialize(const Document& doc) { return serialize(doc.premaniplex, doc.name); }

Document parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, "byte " + std::to_string(e.byte) + ": malformed document");
    }
    if (!root.is_object()) schema_error("$", "expected an object");
    for (const auto& [key, value] : root.items()) {
        if (key != "name" && key != "rank" && key != "flag_count" && key != "base_flag" && key != "connections")
            schema_error(key, "unknown field");
    }
    for (const char* required : {"rank", "flag_count", "connections"})
        if (!root.contains(required)) schema_error(required, "missing");

    std::string name;
    if (root.contains("name")) {
        if (!root["name"].is_string()) schema_error("name", "expected a string");
        name = root["name"].get<std::string>();
    }
    const auto rank = unsigned_field(root["rank"], "rank");
    const auto flag_count = unsigned_field(root["flag_count"], "flag_count");
    const auto base = root.contains("base_flag") ? unsigned_field(root["base_flag"], "base_flag") : 0;
    if (rank < 1 || rank > kMaxRank) schema_error("rank", "must lie in [1, " + std::to_string(kMaxRank) + "]");
    if (flag_count < 1) schema_error("flag_count", "must be positive");
    if (base >= flag_count) schema_error("base_flag", "must be below flag_count");

    const json& rows = root["connections"];
    if (!rows.is_array()) schema_error("connections", "expected an array");
    if (rows.size() != rank) schema_error("connections", "expected " + std::to_string(rank) + " rows");
    std::vector<std::vector<Flag>> connections(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const std::string row_field = "connections[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) schema_error(row_field, "expected an array");
        if (rows[i].size() != flag_count) schema_error(row_field, "expected " + std::to_string(flag_count) + " entries");
        connections[i].reserve(flag_count);
        for (std::size_t f = 0; f < flag_count; ++f) {
            const std::string field = row_field + "[" + std::to_string(f) + "]";
            const auto target = unsigned_field(rows[i][f], field);
            if (target >= flag_count) schema_error(field, "flag out of range");
            connections[i].push_back(static_cast<Flag>(target));
        }
    }
    try {
        return Document{std::move(name),
                        RootedPremaniplex(Premaniplex::validate(static_cast<int>(rank), flag_count, connections),
                                          static_cast<Flag>(base))};
    } catch (const ValidationError& e) {
        std::string where = "connections";
        if (e.color() >= 0) where += "[" + std::to_string(e.color()) + "]";
        if (e.color() >= 0 && e.flag() >= 0) where += "[" + std::to_string(e.flag()) + "]";
        std::string detail = e.what();
        detail.erase(0, detail.find(": ") + 2);
        throw ValidationError(e.code(), "at " + where + ": " + detail, e.color(), e.other_color(), e.flag());
    }
}

Document read_document(const std::string& path) { return parse_document(slurp(path)); }

void write_document(const Document& doc, const std::string& path) { dump(serialize(doc), path); }

std::string dot_string(const RootedPremaniplex& rp) {
    const Premaniplex& p = rp.premaniplex();
    std::ostringstream out;
    out << "graph premaniplex {\n";
    for (Flag f = 0; f < p.flag_count(); ++f) {
        out << "  " << f;
        if (f == rp.base()) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (int i = 0; i < p.rank(); ++i) {
        for (Flag f = 0; f < p.flag_count(); ++f) {
            const Flag g = p.adjacent(i, f);
            if (f <= g) out << "  " << f << " -- " << g << " [color=" << i << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

void export_dot(const RootedPremaniplex& rp, const std::string& path) { dump(dot_string(rp), path); }

}  // namespace maniplex
