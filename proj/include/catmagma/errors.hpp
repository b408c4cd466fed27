#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catmagma {

/// Raised by the text codecs. `syntax` means the text is malformed,
/// `validity` means it is well formed but violates a structural invariant
/// (balance, non-crossing, 321-avoidance, unimodularity, ...).
class parse_error : public std::runtime_error {
public:
    enum class kind { syntax, validity };

    parse_error(kind k, std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          kind_(k),
          pos_(pos) {}

    kind error_kind() const { return kind_; }
    std::size_t position() const { return pos_; }

private:
    kind kind_;
    std::size_t pos_;
};

/// Raised on contract violations (wrong family, generator-count mismatch)
/// and on the enumeration resource guard.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr long long kDefaultNormCap = 12;

} // namespace catmagma
