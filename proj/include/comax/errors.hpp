#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace comax {

/// Bad argument to a library operation (index out of range, empty
/// generator set, non-ideal passed to quotient, ...).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A construction would exceed a configured size cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The question cannot be decided at this scale. Distinct from a negative
/// answer. Carries whatever bounds were established before giving up.
class CapabilityError : public std::runtime_error {
  public:
    explicit CapabilityError(const std::string& what, std::optional<std::size_t> lower = std::nullopt,
                             std::optional<std::size_t> upper = std::nullopt)
        : std::runtime_error(what), lower_(lower), upper_(upper)
    {
    }
    std::optional<std::size_t> lower_bound() const { return lower_; }
    std::optional<std::size_t> upper_bound() const { return upper_; }

  private:
    std::optional<std::size_t> lower_;
    std::optional<std::size_t> upper_;
};

/// Ring-spec syntax or semantic error. `position` is a 0-based byte offset
/// into the original text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position, std::vector<std::string> expected = {})
        : std::runtime_error(format(message, position, expected)), position_(position),
          expected_(std::move(expected))
    {
    }
    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    static std::string format(const std::string& message, std::size_t position,
                              const std::vector<std::string>& expected)
    {
        std::string s = "at position " + std::to_string(position) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i)
                    s += i + 1 == expected.size() ? " or " : ", ";
                s += expected[i];
            }
            s += ")";
        }
        return s;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

/// Malformed table file or a ring-axiom violation found while loading.
/// For axiom failures, `witness` holds the offending element triple.
class TableError : public std::runtime_error {
  public:
    explicit TableError(const std::string& what, std::string axiom = {}, std::vector<std::size_t> witness = {})
        : std::runtime_error(what), axiom_(std::move(axiom)), witness_(std::move(witness))
    {
    }
    const std::string& axiom() const { return axiom_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

  private:
    std::string axiom_;
    std::vector<std::size_t> witness_;
};

} // namespace comax
