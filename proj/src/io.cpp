#include "hodgewalk/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hodgewalk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string run_manifest_json(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    std::uint64_t seed,
    const std::vector<std::pair<std::string, std::string>>& input_digests) {
    nlohmann::json j;
    j["command"] = command;
    auto& p = j["parameters"] = nlohmann::json::object();
    for (auto& [k, v] : parameters) p[k] = v;
    j["seed"] = seed;
    j["rng"] = "mt19937_64 seeded per trial via splitmix64(seed + golden*(trial+1))";
    j["versions"] = {{"hodgewalk", HODGEWALK_VERSION},
                     {"digest_algorithm", "fnv1a64"}};
    auto& d = j["input_digests"] = nlohmann::json::object();
    for (auto& [k, v] : input_digests) d[k] = "fnv1a64:" + v;
    return j.dump(2) + "\n";
}

}  // namespace hodgewalk
