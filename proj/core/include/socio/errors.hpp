#pragma once

#include <stdexcept>
#include <string>

namespace socio {

// Mode of an author's price histogram is not unique.
class TieError : public std::runtime_error {
public:
    explicit TieError(const std::string& what) : std::runtime_error(what) {}
};

// A class required for downsampling has no authors.
class BalanceError : public std::runtime_error {
public:
    BalanceError(int class_id, const std::string& what)
        : std::runtime_error(what), class_id_(class_id) {}
    int class_id() const { return class_id_; }

private:
    int class_id_;
};

// Readability formulas are undefined for empty text.
class UndefinedScoreError : public std::runtime_error {
public:
    explicit UndefinedScoreError(const std::string& what) : std::runtime_error(what) {}
};

// CoNLL-U parse failure; carries the 1-based line number.
class ConlluError : public std::runtime_error {
public:
    ConlluError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Broken or stale stage chain in the pipeline manifest.
class ManifestError : public std::runtime_error {
public:
    explicit ManifestError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace socio
