#include "xchannel/hex_io.hpp"

#include <stdexcept>

namespace xchan {

namespace {
const char* kDigits = "0123456789abcdef";

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
}
}  // namespace

std::vector<std::string> rows_to_hex(const BitMatrix& m) {
    std::size_t ndigits = (m.cols() + 3) / 4;
    std::vector<std::string> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string s(ndigits, '0');
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.get(r, c)) continue;
            std::size_t digit = c / 4;
            int bit = 3 - static_cast<int>(c % 4);
            s[digit] = kDigits[hex_val(s[digit]) | (1 << bit)];
        }
        out.push_back(std::move(s));
    }
    return out;
}

BitMatrix matrix_from_hex(std::size_t rows, std::size_t cols, const std::vector<std::string>& row_hex) {
    if (row_hex.size() != rows) throw std::invalid_argument("row_hex count mismatch");
    std::size_t ndigits = (cols + 3) / 4;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string& s = row_hex[r];
        if (s.size() != ndigits) throw std::invalid_argument("row_hex width mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            int v = hex_val(s[c / 4]);
            if ((v >> (3 - c % 4)) & 1) m.set(r, c, true);
        }
    }
    return m;
}

}  // namespace xchan
