#include "doctest.h"

#include "orthoseq/cache.hpp"
#include "orthoseq/errors.hpp"

#include "fixtures.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

using namespace orthoseq;
namespace fs = std::filesystem;

namespace {

fs::path tmpdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("orthoseq-cache-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string tmpfile_path(const char* name) { return (tmpdir() / name).string(); }

// independent FNV-1a 64 so the writer's checksum line has an outside witness
std::string sum_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void put(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(static_cast<bool>(out));
    out << contents;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream all;
    all << in.rdbuf();
    return all.str();
}

// full file with a correct checksum over `payload`
std::string crafted(const std::string& engine, long n_max, long prec, long rows,
                    const std::string& payload) {
    std::ostringstream f;
    f << "orthoseq-table v1\n"
      << "engine " << engine << '\n'
      << "n_max " << n_max << '\n'
      << "precision_bits " << prec << '\n'
      << "rows " << rows << '\n'
      << "checksum " << sum_hex(payload) << '\n'
      << payload;
    return f.str();
}

template <class F>
std::optional<CacheError::Kind> cache_kind(F&& f) {
    try {
        std::forward<F>(f)();
        return std::nullopt;
    } catch (const CacheError& e) {
        return e.kind();
    }
}

} // namespace

TEST_SUITE("cache") {

TEST_CASE("exact table round-trips with every column intact") {
    const ExactTable& t = fixtures::exact60();
    const std::string path = tmpfile_path("roundtrip-exact");
    store_exact(t, path);
    ExactTable back = load_exact(path);

    REQUIRE(back.n_max() == t.n_max());
    for (long n = 0; n <= t.n_max(); ++n) {
        CHECK(back.coeffs[n] == t.coeffs[n]);
        CHECK(back.partial_sums[n] == t.partial_sums[n]);
        CHECK(back.norms_sq[n] == t.norms_sq[n]);
        CHECK(back.energies[n] == t.energies[n]);
    }
}

TEST_CASE("stored header checksum matches an independent fnv1a-64") {
    const std::string path = tmpfile_path("checksum-witness");
    store_exact(exact_coefficients(5), path);
    std::string raw = slurp(path);

    std::istringstream in(raw);
    std::string line, sum_line;
    CHECK(std::getline(in, line));
    CHECK(line == "orthoseq-table v1");
    CHECK(std::getline(in, line));
    CHECK(line == "engine exact");
    CHECK(std::getline(in, line));
    CHECK(line == "n_max 5");
    CHECK(std::getline(in, line));
    CHECK(line == "precision_bits 0");
    CHECK(std::getline(in, line));
    CHECK(line == "rows 6");
    CHECK(std::getline(in, sum_line));
    REQUIRE(sum_line.rfind("checksum ", 0) == 0);

    std::string payload = raw.substr(static_cast<size_t>(in.tellg()));
    CHECK(sum_line.substr(9) == sum_hex(payload));
    CHECK(payload.rfind("0,1,1\n", 0) == 0); // rows are n,num,den
}

TEST_CASE("ball table round-trips bit-identically") {
    const BallTable& t = fixtures::ball200();
    const std::string path = tmpfile_path("roundtrip-ball");
    store_ball(t, path);
    BallTable back = load_ball(path);

    REQUIRE(back.n_max() == t.n_max());
    CHECK(back.precision_bits == t.precision_bits);
    for (long n = 0; n <= t.n_max(); ++n) {
        CHECK(back.coeffs[n].mid_hex() == t.coeffs[n].mid_hex());
        CHECK(back.coeffs[n].rad_hex() == t.coeffs[n].rad_hex());
        CHECK(back.coeffs[n].precision() == t.coeffs[n].precision());
        // derived columns are recomputed on load; same inputs, same bits
        CHECK(back.partial_sums[n].mid_hex() == t.partial_sums[n].mid_hex());
        CHECK(back.norms_sq[n].rad_hex() == t.norms_sq[n].rad_hex());
        CHECK(back.energies[n].mid_hex() == t.energies[n].mid_hex());
    }
}

TEST_CASE("load_exact_as_ball agrees with promoting the loaded table") {
    const ExactTable& t = fixtures::exact60();
    const std::string path = tmpfile_path("exact-as-ball");
    store_exact(t, path);

    BallTable via_cache = load_exact_as_ball(path, 128);
    BallTable direct = promote(t, 128);
    REQUIRE(via_cache.n_max() == direct.n_max());
    CHECK(via_cache.precision_bits == direct.precision_bits);
    for (long n = 0; n <= direct.n_max(); ++n) {
        CHECK(via_cache.coeffs[n].mid_hex() == direct.coeffs[n].mid_hex());
        CHECK(via_cache.coeffs[n].rad_hex() == direct.coeffs[n].rad_hex());
        CHECK(via_cache.norms_sq[n].mid_hex() == direct.norms_sq[n].mid_hex());
    }
}

TEST_CASE("peek_engine sniffs the header without loading") {
    const std::string pe = tmpfile_path("peek-exact");
    const std::string pb = tmpfile_path("peek-ball");
    store_exact(exact_coefficients(3), pe);
    store_ball(ball_coefficients(3), pb);
    CHECK(peek_engine(pe) == CacheEngine::Exact);
    CHECK(peek_engine(pb) == CacheEngine::Ball);

    CHECK(cache_kind([&] { peek_engine(tmpfile_path("no-such-file")); }) ==
          CacheError::Kind::Io);

    const std::string bad_magic = tmpfile_path("peek-bad-magic");
    put(bad_magic, "orthoseq-table v9\nengine exact\n");
    CHECK(cache_kind([&] { peek_engine(bad_magic); }) == CacheError::Kind::Version);

    const std::string truncated = tmpfile_path("peek-truncated");
    put(truncated, "orthoseq-table v1");
    CHECK(cache_kind([&] { peek_engine(truncated); }) == CacheError::Kind::Format);

    const std::string weird = tmpfile_path("peek-weird-engine");
    put(weird, "orthoseq-table v1\nengine decimal\n");
    CHECK(cache_kind([&] { peek_engine(weird); }) == CacheError::Kind::Format);
}

TEST_CASE("engine mismatch is its own error kind") {
    const std::string pe = tmpfile_path("mismatch-exact");
    const std::string pb = tmpfile_path("mismatch-ball");
    store_exact(exact_coefficients(3), pe);
    store_ball(ball_coefficients(3), pb);
    CHECK(cache_kind([&] { load_ball(pe); }) == CacheError::Kind::Mismatch);
    CHECK(cache_kind([&] { load_exact(pb); }) == CacheError::Kind::Mismatch);
}

TEST_CASE("io and version failures") {
    CHECK(cache_kind([&] { load_exact(tmpfile_path("missing")); }) ==
          CacheError::Kind::Io);
    CHECK(cache_kind([&] { load_ball(tmpfile_path("missing")); }) ==
          CacheError::Kind::Io);
    CHECK(cache_kind([&] {
              store_exact(exact_coefficients(2),
                          (tmpdir() / "no-such-dir" / "f").string());
          }) == CacheError::Kind::Io);

    const std::string vpath = tmpfile_path("wrong-version");
    put(vpath, crafted("exact", 0, 0, 1, "0,1,1\n")); // then break the magic
    put(vpath, "orthoseq-table v2\n" + slurp(vpath).substr(18));
    CHECK(cache_kind([&] { load_exact(vpath); }) == CacheError::Kind::Version);
}

TEST_CASE("payload corruption and truncation trip the checksum first") {
    const std::string path = tmpfile_path("corrupt");
    store_exact(exact_coefficients(10), path);
    std::string raw = slurp(path);

    std::string flipped = raw;
    flipped[flipped.size() - 2] ^= 1; // last digit of the final row
    put(path, flipped);
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Checksum);

    std::string cut = raw.substr(0, raw.find_last_of('\n', raw.size() - 2) + 1);
    put(path, cut); // drops the final row but keeps the header's row count
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Checksum);
}

TEST_CASE("malformed headers are format errors") {
    const std::string path = tmpfile_path("bad-header");

    put(path, "orthoseq-table v1\nengine exact\n"); // header stops early
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    put(path, "orthoseq-table v1\nflavour exact\nn_max 0\n"); // wrong key
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    std::string file = crafted("exact", 0, 0, 1, "0,1,1\n");
    put(path, file);
    CHECK_NOTHROW(load_exact(path)); // the template itself is sound

    // non-numeric n_max
    std::string broken = file;
    broken.replace(broken.find("n_max 0"), 7, "n_max x");
    put(path, broken);
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    // row count disagrees with n_max (checksum still valid)
    put(path, crafted("exact", 0, 0, 2, "0,1,1\n"));
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);
}

TEST_CASE("malformed exact rows are format errors") {
    const std::string path = tmpfile_path("bad-exact-rows");

    put(path, crafted("exact", 1, 0, 2, "0,1,1\n2,1,1\n")); // index skips 1
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    put(path, crafted("exact", 1, 0, 2, "0,1,1\n1,1\n")); // missing column
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    put(path, crafted("exact", 1, 0, 2, "0,1,1\n1,7,0\n")); // zero denominator
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    put(path, crafted("exact", 1, 0, 2, "0,1,1\n1,seven,2\n")); // garbage digits
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);

    // payload shorter than advertised, checksum computed over what is there
    put(path, crafted("exact", 1, 0, 2, "0,1,1\n"));
    CHECK(cache_kind([&] { load_exact(path); }) == CacheError::Kind::Format);
}

TEST_CASE("non-canonical rationals are canonicalized on load") {
    const std::string path = tmpfile_path("non-canonical");
    put(path, crafted("exact", 1, 0, 2, "0,4,8\n1,3,-2\n"));
    ExactTable t = load_exact(path);
    CHECK(t.coeffs[0] == Rational(1, 2));
    CHECK(t.coeffs[1].get_num() == -3); // sign lives on the numerator
    CHECK(t.coeffs[1].get_den() == 2);
}

TEST_CASE("malformed ball rows are format errors") {
    const std::string path = tmpfile_path("bad-ball-rows");

    put(path, crafted("ball", 0, 64, 1, "0,zzz,0x0p+0,64\n")); // unparsable mid
    CHECK(cache_kind([&] { load_ball(path); }) == CacheError::Kind::Format);

    put(path, crafted("ball", 0, 64, 1, "0,0x1p+0,-0x1p-50,64\n")); // radius < 0
    CHECK(cache_kind([&] { load_ball(path); }) == CacheError::Kind::Format);

    put(path, crafted("ball", 0, 64, 1, "0,0x1p+0,0x0p+0,128\n")); // prec drift
    CHECK(cache_kind([&] { load_ball(path); }) == CacheError::Kind::Format);

    put(path, crafted("ball", 0, 1, 1, "0,0x0p+0,0x0p+0,1\n")); // prec below floor
    CHECK(cache_kind([&] { load_ball(path); }) == CacheError::Kind::Format);

    put(path, crafted("ball", 0, 64, 1, "0,0x1p+0,0x0p+0\n")); // missing column
    CHECK(cache_kind([&] { load_ball(path); }) == CacheError::Kind::Format);
}

TEST_CASE("a hand-written ball row loads into an honest enclosure") {
    const std::string path = tmpfile_path("handmade-ball");
    put(path, crafted("ball", 1, 64, 2, "0,0x1p+0,0x0p+0,64\n1,-0x1.8p+0,0x1p-40,64\n"));
    BallTable t = load_ball(path);
    CHECK(t.coeffs[0].is_exact());
    CHECK(t.coeffs[0].mid_double() == 1.0);
    CHECK(t.coeffs[1].mid_double() == -1.5);
    CHECK(t.coeffs[1].rad_double() == doctest::Approx(0x1p-40).epsilon(1e-12));
    CHECK(t.coeffs[1].contains(Rational(-3, 2)));
}

TEST_CASE("default cache dir honors the environment override") {
    const char* old = std::getenv("ORTHOSEQ_CACHE_DIR");
    std::string saved = old ? old : "";

    setenv("ORTHOSEQ_CACHE_DIR", "/tmp/orthoseq-elsewhere", 1);
    CHECK(default_cache_dir() == "/tmp/orthoseq-elsewhere");

    setenv("ORTHOSEQ_CACHE_DIR", "", 1); // empty counts as unset
    CHECK(default_cache_dir() == ".orthoseq-cache");

    unsetenv("ORTHOSEQ_CACHE_DIR");
    CHECK(default_cache_dir() == ".orthoseq-cache");

    if (old) setenv("ORTHOSEQ_CACHE_DIR", saved.c_str(), 1);
}

} // TEST_SUITE
