#include "agorank/errors.hpp"

#include <sstream>

namespace agorank {

std::string ParseError::format(const std::string& file, long line, long column,
                               const std::string& rule) {
  std::ostringstream msg;
  msg << file << ":" << line;
  if (column > 0) msg << ":" << column;
  msg << ": " << rule;
  return msg.str();
}

}  // namespace agorank
