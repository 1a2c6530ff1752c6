#pragma once

#include <stdexcept>
#include <string>

namespace cvirus {

enum class Errc {
    invalid_range,
    invalid_count,
    empty_society,
    index_out_of_range,
    length_mismatch,
    unevaluated_population,
    insufficient_replications,
    unknown_key,
    out_of_range,
    io_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Raised while reading configuration; carries the offending key.
class ConfigError : public Error {
public:
    ConfigError(Errc code, std::string key, const std::string& what)
        : Error(code, key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace cvirus
