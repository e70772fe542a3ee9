#include "orthoseq/cache.hpp"
#include "orthoseq/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace orthoseq {

namespace {

constexpr const char* kMagic = "orthoseq-table v1";

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string checksum_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

void write_file(const std::string& path, const std::string& engine, long n_max,
                long precision_bits, const std::string& payload) {
    std::ostringstream head;
    head << kMagic << '\n'
         << "engine " << engine << '\n'
         << "n_max " << n_max << '\n'
         << "precision_bits " << precision_bits << '\n'
         << "rows " << (n_max + 1) << '\n'
         << "checksum " << checksum_hex(payload) << '\n';

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(CacheError::Kind::Io, "cannot open for writing: " + path);
    out << head.str() << payload;
    out.flush();
    if (!out) throw CacheError(CacheError::Kind::Io, "write failed: " + path);
}

struct Header {
    std::string engine;
    long n_max = 0;
    long precision_bits = 0;
    long rows = 0;
    std::string payload;
};

long parse_long(const std::string& s, const std::string& path) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CacheError(CacheError::Kind::Format, "bad integer field in " + path);
    }
}

std::string expect_field(std::istringstream& in, const std::string& key,
                         const std::string& path) {
    std::string line;
    if (!std::getline(in, line))
        throw CacheError(CacheError::Kind::Format, "truncated header in " + path);
    if (line.rfind(key + " ", 0) != 0)
        throw CacheError(CacheError::Kind::Format, "expected '" + key + "' in " + path);
    return line.substr(key.size() + 1);
}

Header read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CacheError(CacheError::Kind::Io, "cannot open: " + path);
    std::ostringstream all;
    all << f.rdbuf();
    if (f.bad()) throw CacheError(CacheError::Kind::Io, "read failed: " + path);

    std::istringstream in(all.str());
    std::string magic;
    if (!std::getline(in, magic))
        throw CacheError(CacheError::Kind::Format, "empty file: " + path);
    if (magic != kMagic)
        throw CacheError(CacheError::Kind::Version, "unrecognized format line in " + path);

    Header h;
    h.engine = expect_field(in, "engine", path);
    h.n_max = parse_long(expect_field(in, "n_max", path), path);
    h.precision_bits = parse_long(expect_field(in, "precision_bits", path), path);
    h.rows = parse_long(expect_field(in, "rows", path), path);
    std::string sum = expect_field(in, "checksum", path);

    const std::streampos pos = in.tellg();
    if (pos < 0)
        h.payload.clear();
    else
        h.payload.assign(all.str(), static_cast<size_t>(pos), std::string::npos);
    if (checksum_hex(h.payload) != sum)
        throw CacheError(CacheError::Kind::Checksum, "checksum mismatch in " + path);
    if (h.rows != h.n_max + 1)
        throw CacheError(CacheError::Kind::Format, "row count disagrees with n_max in " + path);
    return h;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

std::string default_cache_dir() {
    if (const char* env = std::getenv("ORTHOSEQ_CACHE_DIR"); env && *env)
        return env;
    return ".orthoseq-cache";
}

void store_exact(const ExactTable& table, const std::string& path) {
    std::ostringstream payload;
    for (long n = 0; n <= table.n_max(); ++n) {
        const Rational& q = table.coeffs[n];
        payload << n << ',' << q.get_num().get_str() << ',' << q.get_den().get_str()
                << '\n';
    }
    write_file(path, "exact", table.n_max(), 0, payload.str());
}

ExactTable load_exact(const std::string& path) {
    Header h = read_file(path);
    if (h.engine != "exact")
        throw CacheError(CacheError::Kind::Mismatch, "not an exact table: " + path);

    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(h.rows));
    std::istringstream in(h.payload);
    std::string line;
    for (long n = 0; n <= h.n_max; ++n) {
        if (!std::getline(in, line))
            throw CacheError(CacheError::Kind::Format, "missing rows in " + path);
        auto parts = split(line, ',');
        if (parts.size() != 3 || parse_long(parts[0], path) != n)
            throw CacheError(CacheError::Kind::Format, "bad row " + std::to_string(n) + " in " + path);
        try {
            Rational q{Integer(parts[1]), Integer(parts[2])};
            if (sgn(q.get_den()) == 0)
                throw CacheError(CacheError::Kind::Format, "zero denominator in " + path);
            q.canonicalize();
            coeffs.push_back(q);
        } catch (const CacheError&) {
            throw;
        } catch (const std::exception&) {
            throw CacheError(CacheError::Kind::Format, "bad rational in " + path);
        }
    }
    return assemble_exact_table(std::move(coeffs));
}

namespace {

// hex float, exact at `prec` bits or the row is corrupt
void parse_hex(mpfr_ptr out, const std::string& s, const std::string& path) {
    char* end = nullptr;
    int t = mpfr_strtofr(out, s.c_str(), &end, 0, MPFR_RNDN);
    if (t != 0 || end == s.c_str() || *end != '\0')
        throw CacheError(CacheError::Kind::Format, "bad float field in " + path);
}

} // namespace

void store_ball(const BallTable& table, const std::string& path) {
    std::ostringstream payload;
    for (long n = 0; n <= table.n_max(); ++n) {
        const Ball& b = table.coeffs[n];
        payload << n << ',' << b.mid_hex() << ',' << b.rad_hex() << ','
                << b.precision() << '\n';
    }
    write_file(path, "ball", table.n_max(), table.precision_bits, payload.str());
}

BallTable load_ball(const std::string& path) {
    Header h = read_file(path);
    if (h.engine != "ball")
        throw CacheError(CacheError::Kind::Mismatch, "not a ball table: " + path);
    if (h.precision_bits < 2)
        throw CacheError(CacheError::Kind::Format, "bad precision in " + path);

    std::vector<Ball> coeffs;
    coeffs.reserve(static_cast<size_t>(h.rows));
    std::istringstream in(h.payload);
    std::string line;
    mpfr_t mid, rad;
    mpfr_init2(mid, static_cast<mpfr_prec_t>(h.precision_bits));
    mpfr_init2(rad, Ball::radius_precision);
    try {
        for (long n = 0; n <= h.n_max; ++n) {
            if (!std::getline(in, line))
                throw CacheError(CacheError::Kind::Format, "missing rows in " + path);
            auto parts = split(line, ',');
            if (parts.size() != 4 || parse_long(parts[0], path) != n ||
                parse_long(parts[3], path) != h.precision_bits)
                throw CacheError(CacheError::Kind::Format,
                                 "bad row " + std::to_string(n) + " in " + path);
            parse_hex(mid, parts[1], path);
            parse_hex(rad, parts[2], path);
            if (mpfr_sgn(rad) < 0)
                throw CacheError(CacheError::Kind::Format, "negative radius in " + path);
            coeffs.push_back(Ball::from_parts(mid, rad));
        }
    } catch (...) {
        mpfr_clears(mid, rad, (mpfr_ptr) nullptr);
        throw;
    }
    mpfr_clears(mid, rad, (mpfr_ptr) nullptr);
    return assemble_ball_table(std::move(coeffs), h.precision_bits);
}

CacheEngine peek_engine(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CacheError(CacheError::Kind::Io, "cannot open: " + path);
    std::string magic, engine;
    if (!std::getline(f, magic) || !std::getline(f, engine))
        throw CacheError(CacheError::Kind::Format, "truncated header in " + path);
    if (magic != kMagic)
        throw CacheError(CacheError::Kind::Version, "unrecognized format line in " + path);
    if (engine == "engine exact") return CacheEngine::Exact;
    if (engine == "engine ball") return CacheEngine::Ball;
    throw CacheError(CacheError::Kind::Format, "unknown engine in " + path);
}

BallTable load_exact_as_ball(const std::string& path, long precision_bits) {
    return promote(load_exact(path), precision_bits);
}

} // namespace orthoseq
