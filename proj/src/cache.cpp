#include "tslice/cache.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace tslice {

namespace {

constexpr const char* kCacheVersion = "1";

std::string entry_path(const std::string& dir, const std::string& key) {
    return (std::filesystem::path(dir) / (key + ".json")).string();
}

} // namespace

std::string group_cache_key(const FiniteGroup& g) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(std::uint32_t(g.order));
    for (int v : g.mul) mix(std::uint32_t(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

bool load_lattice_cache(GroupCtx& ctx, const std::string& dir) {
    if (ctx.lattice_ready()) return false;
    std::string key = group_cache_key(*ctx.group());
    std::string path = entry_path(dir, key);
    std::ifstream in(path);
    if (!in) return false;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<std::string>() != kCacheVersion) return false;
        if (j.at("order").get<int>() != ctx.group()->order) return false;
        if (j.at("key").get<std::string>() != key) return false;

        std::vector<Bitset> subs;
        for (const auto& hex : j.at("subgroups"))
            subs.push_back(Bitset::from_hex(ctx.group()->order, hex.get<std::string>()));
        SubgroupLattice lat = lattice_from_subgroup_sets(ctx.group(), std::move(subs));

        std::vector<std::tuple<int, int, long long>> triples;
        for (const auto& t : j.at("mobius"))
            triples.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(),
                                 t.at(2).get<long long>());
        MobiusTable mob = mobius_from_values(lat, triples);

        ctx.adopt_lattice(std::move(lat), std::move(mob));
        return true;
    } catch (const std::exception& e) {
        std::cerr << "cache: ignoring entry " << path << " (" << e.what() << ")\n";
        return false;
    }
}

void store_lattice_cache(GroupCtx& ctx, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cache: cannot create " << dir << " (" << ec.message() << ")\n";
        return;
    }

    const SubgroupLattice& lat = ctx.lattice();
    const MobiusTable& mob = ctx.mobius();
    std::string key = group_cache_key(*ctx.group());

    nlohmann::ordered_json j;
    j["version"] = kCacheVersion;
    j["order"] = ctx.group()->order;
    j["key"] = key;
    j["subgroups"] = nlohmann::ordered_json::array();
    for (const Bitset& s : lat.subs) j["subgroups"].push_back(s.to_hex());
    j["mobius"] = nlohmann::ordered_json::array();
    for (int x = 0; x < lat.size(); ++x) {
        std::vector<int> uppers = lat.up[x].bits();
        for (std::size_t yi = 0; yi < uppers.size(); ++yi)
            j["mobius"].push_back({x, uppers[yi], mob.values[x][yi]});
    }

    std::string path = entry_path(dir, key);
    std::ofstream out(path);
    if (!out || !(out << j.dump() << "\n")) {
        std::cerr << "cache: cannot write " << path << "\n";
        std::error_code rm;
        std::filesystem::remove(path, rm);
    }
}

} // namespace tslice
