#include "ncsym/bigint.hpp"

#include "ncsym/errors.hpp"

namespace ncsym {

Int parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw SyntaxError("expected an integer, got '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw SyntaxError("bad integer '" + text + "'");
  return Int(text);
}

}  // namespace ncsym
