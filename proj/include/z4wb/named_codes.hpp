#pragma once

#include <string>

#include "z4wb/binary_code.hpp"

namespace z4wb {

// Fixed reference constructions.  The nine doubly even self-dual codes of
// length 24 are built from their weight-4 component codes (d_m, e7, e8) and
// completed to self-dual codes by a glue search; each result is validated
// (self-dual, doubly even, and no weight-4 codewords outside the
// components), which pins the construction to its label.
//
// Labels: g24, d12^2, d10e7^2, d8^3, d6^4, d24, d4^6, e8^3, d16e8,
//         e6_parity, e7, e8, d16plus, M12_bordered, C7_1, C7_2.
BinaryCode named_code(const std::string& label);

// The nine doubly even self-dual code labels of length 24.
const std::vector<std::string>& self_dual24_labels();

// Component codes at a coordinate offset inside a length-n ambient space.
BinaryCode d_component(int m, int offset, int n);
BinaryCode e7_component(int offset, int n);
BinaryCode e8_component(int offset, int n);

// Extend a self-orthogonal doubly even code K to a doubly even self-dual
// code with no weight-4 codewords outside K.  Throws if none exists.
BinaryCode complete_self_dual(const BinaryCode& K);

}  // namespace z4wb
