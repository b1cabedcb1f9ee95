#pragma once

#include "dwc/poly.hpp"
#include "dwc/rational.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dwc {

// Append-only key/value log. One entry per line:
//   <schema>\t<key>\t<value>\t<meta>
// Later lines win. Lines with another schema are ignored; unparsable lines
// are skipped with a warning.
class ResultCache {
public:
    static constexpr const char* kSchema = "dwc1";

    ResultCache() = default;  // in-memory only
    explicit ResultCache(std::string path);

    std::optional<std::string> get(const std::string& key);
    void put(const std::string& key, const std::string& value, const std::string& meta = "");

    bool persistent() const { return !path_.empty(); }
    const std::string& path() const { return path_; }
    std::size_t hits() const;
    std::size_t misses() const;
    std::size_t size() const;
    std::vector<std::string> warnings() const;

private:
    void load();

    std::string path_;
    mutable std::mutex mu_;
    std::map<std::string, std::string> entries_;
    std::vector<std::string> warnings_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

// value encodings used in the log: "q:<rational>" and "p:<c0>,<c1>,..."
std::string encode_value(const Rational& q);
std::string encode_value(const Poly& p);
std::optional<Rational> decode_rational(const std::string& s);
std::optional<Poly> decode_poly(const std::string& s);

// default path from DWC_CACHE, empty if unset
std::string default_cache_path();

}  // namespace dwc
