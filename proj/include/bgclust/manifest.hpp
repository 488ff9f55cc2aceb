#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgclust {

// Ordered key=value store, serialized one entry per line. A run writes every
// decided default (seeds, grid shape, schedule constants, dataset hashes)
// into its manifest so the identical run can be replayed byte-for-byte.
class Manifest {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value);
    void set(const std::string& key, double value);
    void set(const std::string& key, std::uint64_t value);
    void set(const std::string& key, std::int64_t value);
    void set(const std::string& key, int value);
    void set(const std::string& key, bool value);

    std::optional<std::string> get(const std::string& key) const;
    std::string require(const std::string& key) const;  // DataError when absent
    double require_double(const std::string& key) const;
    std::uint64_t require_u64(const std::string& key) const;
    bool require_bool(const std::string& key) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const {
        return entries_;
    }

    std::string serialize() const;
    void write(const std::string& path) const;
    static Manifest parse(const std::string& text);
    static Manifest load(const std::string& path);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace bgclust
