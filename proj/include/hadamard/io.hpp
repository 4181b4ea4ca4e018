#pragma once

// Line-oriented matrix text format.
//
//   line 1         decimal order n
//   lines 2..n+1   n characters each, all from {0,1} or all from {+,-}
//                  ('+' is 0, '-' is 1)
//
// The trailing newline is optional; blank lines after the last row are
// ignored. Anything else is a ParseError carrying the line number.

#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"

namespace hadamard {

enum class Alphabet { binary, plus_minus };

inline constexpr std::size_t max_file_order = 1u << 16;

namespace detail {

inline std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

inline std::string describe(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string("'") + c + "'";
    std::ostringstream os;
    os << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
    return os.str();
}

}  // namespace detail

inline BinaryMatrix read_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(detail::strip_cr(text.substr(pos, end - pos)));
        pos = end + 1;
    }

    if (lines.empty()) throw ParseError(1, "missing order header");
    const std::string_view header = lines[0];
    if (header.empty()) throw ParseError(1, "missing order header");
    std::size_t n = 0;
    for (char c : header) {
        if (c < '0' || c > '9') throw ParseError(1, "order header must be a decimal integer, found " + detail::describe(c));
        n = n * 10 + static_cast<std::size_t>(c - '0');
        if (n > max_file_order) throw ParseError(1, "order exceeds the limit " + std::to_string(max_file_order));
    }
    if (n == 0) throw ParseError(1, "order must be positive");

    std::optional<Alphabet> alphabet;
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t lineno = r + 2;
        if (lineno > lines.size()) throw ParseError(lineno, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
        const std::string_view line = lines[r + 1];
        if (line.size() != n) {
            throw ParseError(lineno, "row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
        }
        BitVector row(n);
        for (std::size_t c = 0; c < n; ++c) {
            const char ch = line[c];
            if (!alphabet) {
                if (ch == '0' || ch == '1') alphabet = Alphabet::binary;
                else if (ch == '+' || ch == '-') alphabet = Alphabet::plus_minus;
            }
            bool bit = false;
            if (alphabet == Alphabet::binary && (ch == '0' || ch == '1')) {
                bit = ch == '1';
            } else if (alphabet == Alphabet::plus_minus && (ch == '+' || ch == '-')) {
                bit = ch == '-';
            } else {
                throw ParseError(lineno, "illegal character " + detail::describe(ch) + " in column " + std::to_string(c + 1));
            }
            row.set(c, bit);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t l = n + 1; l < lines.size(); ++l) {
        if (!lines[l].empty()) throw ParseError(l + 1, "unexpected content after " + std::to_string(n) + " rows");
    }
    return BinaryMatrix(std::move(rows));
}

inline BinaryMatrix read_matrix(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_matrix(std::string_view(text));
}

inline void write_matrix(std::ostream& out, const BinaryMatrix& m, Alphabet alphabet = Alphabet::binary) {
    if (!m.is_square()) throw DimensionError("write_matrix: the file format holds square matrices only");
    const char zero = alphabet == Alphabet::binary ? '0' : '+';
    const char one = alphabet == Alphabet::binary ? '1' : '-';
    out << m.rows() << '\n';
    for (const auto& r : m.row_vectors()) out << r.to_string(zero, one) << '\n';
}

inline std::string write_matrix(const BinaryMatrix& m, Alphabet alphabet = Alphabet::binary) {
    std::ostringstream os;
    write_matrix(os, m, alphabet);
    return os.str();
}

}  // namespace hadamard
