#include "tcoi/canonical.hpp"

#include <algorithm>

namespace tcoi {

std::string CanonicalCode::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError("canonical code hex has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError("invalid hex digit in canonical code");
  };
  std::vector<unsigned char> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<unsigned char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return CanonicalCode(std::move(bytes));
}

std::string rooted_code(const Tree& t, Vertex root) {
  auto view = root_at(t, root);
  std::vector<std::string> code(t.order());
  std::vector<std::vector<std::string*>> child_codes(t.order());
  for (auto it = view.preorder.rbegin(); it != view.preorder.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& out = code[v];
    out.push_back('(');
    for (const std::string* k : kids) out += *k;
    out.push_back(')');
    if (v != root) child_codes[view.parent[v]].push_back(&out);
  }
  return std::move(code[root]);
}

CanonicalCode canonical_code(const Tree& t) {
  auto c = centers(t);
  std::string best = rooted_code(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));

  std::vector<unsigned char> bytes;
  bytes.reserve(2 + (best.size() + 7) / 8);
  bytes.push_back(static_cast<unsigned char>((t.order() >> 8) & 0xff));
  bytes.push_back(static_cast<unsigned char>(t.order() & 0xff));
  unsigned char acc = 0;
  int filled = 0;
  for (char ch : best) {
    acc = static_cast<unsigned char>((acc << 1) | (ch == '(' ? 1 : 0));
    if (++filled == 8) {
      bytes.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) bytes.push_back(static_cast<unsigned char>(acc << (8 - filled)));
  return CanonicalCode(std::move(bytes));
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace tcoi
