// Error types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace cychom {

// Base for everything thrown on purpose by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input could not be parsed (bad JSON, bad scalar literal, bad usage).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A mathematical validation failed; `kind` is a stable machine-readable tag
// such as "NotAssociative" or "NotATrace", `detail` names the counterexample.
struct validation_error : error {
    std::string kind;
    std::string detail;
    validation_error(std::string k, std::string d)
        : error(k + ": " + d), kind(std::move(k)), detail(std::move(d)) {}
};

struct field_mismatch : error {
    explicit field_mismatch(const std::string& msg = "operands live in different fields")
        : error("FieldMismatch: " + msg) {}
};

struct division_by_zero : error {
    division_by_zero() : error("DivisionByZero") {}
};

// A chain-space dimension exceeded the configured size cap.
struct size_cap_error : error {
    long long needed;
    long long cap;
    size_cap_error(long long need, long long c)
        : error("DegreeTooLarge: space of dimension " + std::to_string(need) +
                " exceeds size cap " + std::to_string(c)),
          needed(need), cap(c) {}
};

struct not_a_complex : error {
    explicit not_a_complex(const std::string& msg) : error("NotAComplex: " + msg) {}
};

struct carrier_mismatch : error {
    carrier_mismatch() : error("CarrierMismatch") {}
};

struct degree_mismatch : error {
    explicit degree_mismatch(const std::string& msg) : error("DegreeMismatch: " + msg) {}
};

struct no_certificate : error {
    explicit no_certificate(const std::string& msg) : error("NoCertificate: " + msg) {}
};

struct not_invertible : error {
    explicit not_invertible(const std::string& msg) : error("NotInvertible: " + msg) {}
};

struct fuel_exhausted : error {
    explicit fuel_exhausted(const std::string& msg)
        : error("FuelExhausted: " + msg) {}
};

struct unknown_entry : error {
    explicit unknown_entry(const std::string& msg) : error("UnknownEntry: " + msg) {}
};

} // namespace cychom
