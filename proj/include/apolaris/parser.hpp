#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "apolaris/poly.hpp"

namespace apolaris {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the polynomial grammar:
///
///   poly   := ('+'|'-')? term (('+'|'-') term)*
///   term   := coeff ('*'? mono)? | mono
///   mono   := var ('^' uint)? ('*'? var ('^' uint)?)*
///   var    := 'x' uint | 'w' uint
///   coeff  := rational | rational? 'i' | '(' rational (('+'|'-') rational? 'i')? ')'
///   rational := int ('/' uint)?
///
/// "x<k>" is variable k. "w<j>" maps to variable b + j where b is the largest
/// x-index appearing in the same text (homogenization output places its fresh
/// variables after the original ones). All indices must be within `arity`.
Poly parse(std::string_view text, int arity);

/// Largest x-index and w-index appearing in the text; used to infer arity.
struct VariableScan {
    int max_x = 0;
    int max_w = 0;
};
VariableScan scan_variables(std::string_view text);

}  // namespace apolaris
