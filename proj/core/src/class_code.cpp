#include "monoclass/class_code.hpp"

#include <stdexcept>

namespace monoclass {

std::string ClassCode::str() const {
  std::string s(5, '0');
  s[0] = pm ? '1' : '0';
  s[1] = sm ? '1' : '0';
  s[2] = cm3 ? '1' : '0';
  s[3] = mm ? '1' : '0';
  s[4] = star3 ? '1' : '0';
  return s;
}

ClassCode ClassCode::parse(const std::string& bits) {
  if (bits.size() != 5) throw std::invalid_argument("ClassCode: expected 5 characters");
  for (char c : bits)
    if (c != '0' && c != '1') throw std::invalid_argument("ClassCode: expected 0/1 characters");
  ClassCode code;
  code.pm = bits[0] == '1';
  code.sm = bits[1] == '1';
  code.cm3 = bits[2] == '1';
  code.mm = bits[3] == '1';
  code.star3 = bits[4] == '1';
  return code;
}

}  // namespace monoclass
