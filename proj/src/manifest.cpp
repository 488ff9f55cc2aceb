#include "bgclust/manifest.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bgclust/data.hpp"
#include "bgclust/errors.hpp"

namespace bgclust {

void Manifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, const char* value) {
    set(key, std::string(value));
}
void Manifest::set(const std::string& key, double value) { set(key, format_double(value)); }
void Manifest::set(const std::string& key, std::uint64_t value) {
    set(key, std::to_string(value));
}
void Manifest::set(const std::string& key, std::int64_t value) {
    set(key, std::to_string(value));
}
void Manifest::set(const std::string& key, int value) { set(key, std::to_string(value)); }
void Manifest::set(const std::string& key, bool value) {
    set(key, std::string(value ? "true" : "false"));
}

std::optional<std::string> Manifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::string Manifest::require(const std::string& key) const {
    const auto v = get(key);
    if (!v) throw DataError("manifest is missing required key '" + key + "'");
    return *v;
}

double Manifest::require_double(const std::string& key) const {
    const std::string text = require(key);
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw DataError("manifest key '" + key + "' is not a number: '" + text + "'");
    }
    return v;
}

std::uint64_t Manifest::require_u64(const std::string& key) const {
    const std::string text = require(key);
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (...) {
        throw DataError("manifest key '" + key + "' is not an unsigned integer: '" + text +
                        "'");
    }
}

bool Manifest::require_bool(const std::string& key) const {
    const std::string text = require(key);
    if (text == "true") return true;
    if (text == "false") return false;
    throw DataError("manifest key '" + key + "' is not a boolean: '" + text + "'");
}

std::string Manifest::serialize() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries_) {
        out << k << '=' << v << '\n';
    }
    return out.str();
}

void Manifest::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open manifest for writing: " + path);
    out << serialize();
    if (!out) throw DataError("manifest write failed: " + path);
}

Manifest Manifest::parse(const std::string& text) {
    Manifest m;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw DataError("manifest line " + std::to_string(line_no) +
                            " is not key=value: '" + line + "'");
        }
        m.entries_.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return m;
}

Manifest Manifest::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open manifest: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace bgclust
