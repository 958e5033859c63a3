#pragma once

#include <iosfwd>
#include <string>

#include "aqc/code.hpp"

namespace aqc {

// Text format for a code:
//   # comments and blank lines are ignored
//   q n rows kind [r=R]
//   one generator per line, n field elements separated by spaces
// Elements use the notation of Field::parse; kind is E, TrE, H or TrH.
struct CodeFile {
    Code code;
    InnerProduct kind;
};

CodeFile read_code(std::istream& in);
CodeFile load_code(const std::string& path);
std::string format_code(const Code& C, InnerProduct kind);

}  // namespace aqc
