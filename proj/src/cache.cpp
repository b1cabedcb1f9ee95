#include "dwc/cache.hpp"

#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <sys/file.h>
#include <unistd.h>

namespace dwc {

namespace {

// holds an flock for the lifetime of the object
class FileLock {
public:
    FileLock(const std::string& path, int mode, int flags) {
        fd_ = ::open(path.c_str(), flags, 0644);
        if (fd_ >= 0) ::flock(fd_, mode);
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;
    int fd() const { return fd_; }

private:
    int fd_ = -1;
};

bool valid_value(const std::string& v) { return decode_rational(v).has_value() || decode_poly(v).has_value(); }

bool clean_field(const std::string& s) { return s.find('\t') == std::string::npos && s.find('\n') == std::string::npos; }

}  // namespace

std::string encode_value(const Rational& q) { return "q:" + q.get_str(); }

std::string encode_value(const Poly& p) {
    std::string s = "p:";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].get_str();
    return s;
}

std::optional<Rational> decode_rational(const std::string& s) {
    if (s.rfind("q:", 0) != 0) return std::nullopt;
    try {
        return parse_rational(s.substr(2));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<Poly> decode_poly(const std::string& s) {
    if (s.rfind("p:", 0) != 0) return std::nullopt;
    std::vector<Rational> c;
    std::string body = s.substr(2);
    if (body.empty()) return Poly();
    std::stringstream ss(body);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) c.push_back(parse_rational(tok));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!c.empty() && c.back() == 0) return std::nullopt;  // not canonical
    return Poly(std::move(c));
}

std::string default_cache_path() {
    const char* p = std::getenv("DWC_CACHE");
    return p ? std::string(p) : std::string();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    if (!path_.empty()) load();
}

void ResultCache::load() {
    FileLock lock(path_, LOCK_SH, O_RDONLY);
    if (lock.fd() < 0) return;  // no file yet
    std::ifstream in(path_, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0, lineno = 0;
    while (pos < content.size()) {
        std::size_t nl = content.find('\n', pos);
        ++lineno;
        if (nl == std::string::npos) {
            warnings_.push_back("cache line " + std::to_string(lineno) + ": truncated entry ignored");
            break;
        }
        std::string line = content.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string t;
        while (std::getline(ls, t, '\t')) f.push_back(t);
        if (line.back() == '\t') f.push_back("");
        if (f.size() != 4) {
            warnings_.push_back("cache line " + std::to_string(lineno) + ": malformed entry ignored");
            continue;
        }
        if (f[0] != kSchema) continue;
        if (!valid_value(f[2])) {
            warnings_.push_back("cache line " + std::to_string(lineno) + ": bad value ignored");
            continue;
        }
        entries_[f[1]] = f[2];
    }
}

std::optional<std::string> ResultCache::get(const std::string& key) {
    std::lock_guard<std::mutex> g(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void ResultCache::put(const std::string& key, const std::string& value, const std::string& meta) {
    if (!clean_field(key) || !clean_field(value) || !clean_field(meta))
        throw std::invalid_argument("cache fields must not contain tabs or newlines");
    std::lock_guard<std::mutex> g(mu_);
    entries_[key] = value;
    if (path_.empty()) return;
    FileLock lock(path_, LOCK_EX, O_RDWR | O_CREAT | O_APPEND);
    if (lock.fd() < 0) {
        warnings_.push_back("cannot open cache file " + path_);
        return;
    }
    std::string line;
    // repair a torn final line left by an interrupted writer
    off_t end = ::lseek(lock.fd(), 0, SEEK_END);
    if (end > 0) {
        char last = 0;
        if (::pread(lock.fd(), &last, 1, end - 1) == 1 && last != '\n') line += '\n';
    }
    line += std::string(kSchema) + "\t" + key + "\t" + value + "\t" + meta + "\n";
    std::size_t off = 0;
    while (off < line.size()) {
        ssize_t w = ::write(lock.fd(), line.data() + off, line.size() - off);
        if (w <= 0) {
            warnings_.push_back("short write to cache file " + path_);
            return;
        }
        off += static_cast<std::size_t>(w);
    }
}

std::size_t ResultCache::hits() const {
    std::lock_guard<std::mutex> g(mu_);
    return hits_;
}

std::size_t ResultCache::misses() const {
    std::lock_guard<std::mutex> g(mu_);
    return misses_;
}

std::size_t ResultCache::size() const {
    std::lock_guard<std::mutex> g(mu_);
    return entries_.size();
}

std::vector<std::string> ResultCache::warnings() const {
    std::lock_guard<std::mutex> g(mu_);
    return warnings_;
}

}  // namespace dwc
