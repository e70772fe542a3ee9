#pragma once

#include <stdexcept>
#include <string>

namespace orthoseq {

// Requested range exceeds a configured engine cap. Never silently truncate.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, long requested, long cap)
        : std::runtime_error(what), requested_(requested), cap_(cap) {}
    long requested() const { return requested_; }
    long cap() const { return cap_; }

private:
    long requested_;
    long cap_;
};

// Target radius unreachable within the precision ceiling; carries how far we got.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, long achieved_n, long precision_bits)
        : std::runtime_error(what), achieved_n_(achieved_n), precision_bits_(precision_bits) {}
    long achieved_n() const { return achieved_n_; }
    long precision_bits() const { return precision_bits_; }

private:
    long achieved_n_;
    long precision_bits_;
};

class CacheError : public std::runtime_error {
public:
    enum class Kind { Io, Format, Version, Checksum, Mismatch };

    CacheError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace orthoseq
