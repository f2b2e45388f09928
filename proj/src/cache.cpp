#include "tangles/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tangles {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (hex(fnv1a64(key)) + ".result");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string stored_key, stored_hash;
    if (!std::getline(in, stored_key) || !std::getline(in, stored_hash)) return std::nullopt;
    if (stored_key != key) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    std::string payload = body.str();
    if (stored_hash != hex(fnv1a64(payload))) return std::nullopt;
    return payload;
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
    if (!enabled() || key.find('\n') != std::string::npos) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    // Write then rename so readers never see a partial file.
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << key << "\n" << hex(fnv1a64(payload)) << "\n" << payload;
        if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
}

} // namespace tangles
