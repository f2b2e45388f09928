#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace tangles {

std::uint64_t fnv1a64(const std::string& data);

// Content-addressed result store. Each file holds a header line with the
// payload hash; a payload that fails the check is treated as a miss.
class ResultCache {
public:
    // An empty directory disables the cache.
    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

} // namespace tangles
