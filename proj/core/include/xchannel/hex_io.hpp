#pragma once

#include <string>
#include <vector>

#include "xchannel/bit_matrix.hpp"

namespace xchan {

// Row serialization used in precoder dumps: one hex string per row, padded to
// ceil(cols/4) digits, with the most significant bit of the string carrying
// column 0.
std::vector<std::string> rows_to_hex(const BitMatrix& m);
BitMatrix matrix_from_hex(std::size_t rows, std::size_t cols, const std::vector<std::string>& row_hex);

}  // namespace xchan
