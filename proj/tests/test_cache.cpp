#include "doctest.h"

#include "dwc/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unistd.h>

using namespace dwc;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& tag) {
        path = fs::temp_directory_path() / ("dwc_test_" + tag + "_" + std::to_string(::getpid()) + ".log");
        fs::remove(path);
    }
    ~TempFile() { fs::remove(path); }
    void write(const std::string& s) const {
        std::ofstream out(path, std::ios::binary | std::ios::app);
        out << s;
    }
};

}  // namespace

TEST_CASE("value encoding") {
    CHECK(encode_value(make_rational(-3, 2)) == "q:-3/2");
    CHECK(*decode_rational("q:-3/2") == make_rational(-3, 2));
    CHECK_FALSE(decode_rational("p:1,2").has_value());
    CHECK_FALSE(decode_rational("q:1/0").has_value());
    Poly p(std::vector<Rational>{Rational(1), make_rational(1, 2)});
    CHECK(encode_value(p) == "p:1,1/2");
    CHECK(*decode_poly("p:1,1/2") == p);
    CHECK(*decode_poly("p:") == Poly());
    CHECK_FALSE(decode_poly("p:1,0").has_value());
    CHECK_FALSE(decode_poly("q:1").has_value());
}

TEST_CASE("cache roundtrip through the file") {
    TempFile f("roundtrip");
    {
        ResultCache c(f.path.string());
        CHECK_FALSE(c.get("k1").has_value());
        c.put("k1", "q:5/7", "engine=1");
        c.put("k2", "p:0,1", "");
        CHECK(*c.get("k1") == "q:5/7");
        CHECK(c.hits() == 1);
        CHECK(c.misses() == 1);
    }
    ResultCache again(f.path.string());
    CHECK(again.size() == 2);
    CHECK(*again.get("k1") == "q:5/7");
    CHECK(*again.get("k2") == "p:0,1");
    CHECK(again.warnings().empty());
    CHECK_THROWS_AS(again.put("bad\tkey", "q:1"), std::invalid_argument);
}

TEST_CASE("schema mismatch is a miss") {
    TempFile f("schema");
    f.write("dwc0\tk1\tq:1\t\n");
    ResultCache c(f.path.string());
    CHECK_FALSE(c.get("k1").has_value());
    CHECK(c.warnings().empty());
}

TEST_CASE("corrupt lines are skipped with a warning") {
    TempFile f("corrupt");
    f.write("dwc1\tgood\tq:2\t\n");
    f.write("garbage line\n");
    f.write("dwc1\tbadvalue\tq:1/0\t\n");
    f.write("dwc1\ttorn\tq:3");
    ResultCache c(f.path.string());
    CHECK(*c.get("good") == "q:2");
    CHECK_FALSE(c.get("badvalue").has_value());
    CHECK_FALSE(c.get("torn").has_value());
    CHECK(c.warnings().size() == 3);
    // appending after a torn line starts a fresh line
    c.put("next", "q:4");
    ResultCache d(f.path.string());
    CHECK(*d.get("next") == "q:4");
    CHECK(*d.get("good") == "q:2");
}

TEST_CASE("concurrent writers of one key") {
    TempFile f("concurrent");
    ResultCache c(f.path.string());
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i) ts.emplace_back([&] {
        for (int j = 0; j < 20; ++j) c.put("same", "q:11/3");
    });
    for (auto& t : ts) t.join();
    ResultCache d(f.path.string());
    CHECK(d.size() == 1);
    CHECK(*d.get("same") == "q:11/3");
    CHECK(d.warnings().empty());
}

TEST_CASE("default cache path comes from the environment") {
    ::setenv("DWC_CACHE", "/tmp/somewhere.log", 1);
    CHECK(default_cache_path() == "/tmp/somewhere.log");
    ::unsetenv("DWC_CACHE");
    CHECK(default_cache_path().empty());
}
