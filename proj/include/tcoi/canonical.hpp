#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tcoi/tree.hpp"

namespace tcoi {

/// Isomorphism-class identifier for a free tree.
///
/// The code is the AHU parenthesis string of the tree rooted at its center
/// ('(' = 1, ')' = 0, packed MSB-first), prefixed by the order as two
/// big-endian bytes. Bicentral trees use the smaller of the two rootings.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<unsigned char>& bytes() const { return bytes_; }
  std::string to_hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<unsigned char> bytes_;
};

/// Rooted AHU string ("(...)" nesting, children sorted) of `t` rooted at `root`.
std::string rooted_code(const Tree& t, Vertex root);

CanonicalCode canonical_code(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);

}  // namespace tcoi
