#include "hlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace hlab {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void atomic_write(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << text;
        if (!out) {
            std::filesystem::remove(tmp);
            return;  // cache is best-effort
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::optional<json> read_entry(const std::filesystem::path& path, const std::string& kind) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (!j.is_object() || j.value("kind", "") != kind ||
        j.value("schema_version", -1) != kCacheSchemaVersion)
        return std::nullopt;
    if (!j.contains("payload") || !j.contains("checksum")) return std::nullopt;
    if (std::to_string(fnv1a(j["payload"].dump())) != j["checksum"].get<std::string>())
        return std::nullopt;
    return j;
}

void write_entry(const std::filesystem::path& path, const std::string& kind,
                 json key, json payload) {
    json j;
    j["kind"] = kind;
    j["schema_version"] = kCacheSchemaVersion;
    j["key"] = std::move(key);
    j["checksum"] = std::to_string(fnv1a(payload.dump()));
    j["payload"] = std::move(payload);
    atomic_write(path, j.dump());
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

}  // namespace

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("HLAB_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(".hlab-cache");
}

std::optional<CharacterTable> load_character_table(int d) {
    const auto path = cache_dir() / ("chars-d" + std::to_string(d) + ".json");
    auto entry = read_entry(path, "chars");
    if (!entry || (*entry)["key"].value("d", -1) != d) return std::nullopt;
    const auto order = enumerate_partitions(d);
    const auto& rows = (*entry)["payload"]["chi"];
    if (rows.size() != order.size()) return std::nullopt;
    std::vector<std::vector<Int>> chi(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        if (rows[i].size() != order.size()) return std::nullopt;
        chi[i].reserve(order.size());
        for (const auto& cell : rows[i]) chi[i].emplace_back(cell.get<std::string>());
    }
    return CharacterTable(d, order, std::move(chi));
}

void store_character_table(const CharacterTable& table) {
    json rows = json::array();
    for (const auto& row : table.matrix()) {
        json r = json::array();
        for (const Int& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    const int d = table.degree();
    write_entry(cache_dir() / ("chars-d" + std::to_string(d) + ".json"), "chars",
                json{{"d", d}}, json{{"chi", std::move(rows)}});
}

namespace {

std::filesystem::path hurwitz_path(int mode, bool connected, int d_max, int genus_max) {
    return cache_dir() / ("hurwitz-" + std::string(connected ? "conn" : "disc") + "-m" +
                          std::to_string(mode) + "-d" + std::to_string(d_max) + "-g" +
                          std::to_string(genus_max) + ".json");
}

}  // namespace

std::optional<HurwitzTable> load_hurwitz_table(int mode, bool connected, int d_max,
                                               int genus_max) {
    const std::string kind = connected ? "hurwitz-conn" : "hurwitz-disc";
    auto entry = read_entry(hurwitz_path(mode, connected, d_max, genus_max), kind);
    if (!entry) return std::nullopt;
    const auto& key = (*entry)["key"];
    if (key.value("mode", -1) != mode || key.value("d_max", -1) != d_max ||
        key.value("genus_max", std::numeric_limits<int>::min()) != genus_max)
        return std::nullopt;
    HurwitzTable table(mode, connected, d_max, genus_max);
    for (const auto& rec : (*entry)["payload"]["entries"]) {
        const int d = rec["d"].get<int>();
        PairKey pk{partition_from(rec["alpha"]), partition_from(rec["beta"])};
        for (const auto& gv : rec["values"])
            table.set(d, gv[0].get<int>(), pk, Int(gv[1].get<std::string>()));
    }
    return table;
}

void store_hurwitz_table(const HurwitzTable& table) {
    json entries = json::array();
    for (const auto& [dk, by_genus] : table.entries()) {
        json rec;
        rec["d"] = dk.first;
        rec["alpha"] = partition_json(dk.second.alpha);
        rec["beta"] = partition_json(dk.second.beta);
        json values = json::array();
        for (const auto& [g, v] : by_genus) values.push_back({g, v.get_str()});
        rec["values"] = std::move(values);
        entries.push_back(std::move(rec));
    }
    const std::string kind = table.connected() ? "hurwitz-conn" : "hurwitz-disc";
    write_entry(hurwitz_path(table.mode(), table.connected(), table.d_max(),
                             table.genus_max()),
                kind,
                json{{"mode", table.mode()},
                     {"d_max", table.d_max()},
                     {"genus_max", table.genus_max()}},
                json{{"entries", std::move(entries)}});
}

void install_cache() {
    set_character_table_loader([](int d) -> std::shared_ptr<const CharacterTable> {
        if (auto t = load_character_table(d))
            return std::make_shared<CharacterTable>(std::move(*t));
        return nullptr;
    });
}

HurwitzTable cached_disconnected_table(int mode, int d_max, int genus_max) {
    if (auto t = load_hurwitz_table(mode, false, d_max, genus_max)) return std::move(*t);
    auto t = disconnected_table(mode, d_max, genus_max);
    store_hurwitz_table(t);
    return t;
}

HurwitzTable cached_connected_table(int mode, int d_max, int genus_max) {
    if (auto t = load_hurwitz_table(mode, true, d_max, genus_max)) return std::move(*t);
    auto t = connected_table(mode, d_max, genus_max);
    store_hurwitz_table(t);
    return t;
}

}  // namespace hlab
