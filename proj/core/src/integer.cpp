// Copyright 2026 The qpcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpcodes/integer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string_view>
#include <system_error>

namespace qpcodes {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}

Int ipow(Int base, int p) {
  if (p < 0) throw InvalidArgument("negative exponent");
  Int result = 1;
  for (int i = 0; i < p; ++i) result = checked_mul(result, base);
  return result;
}

BigInt big_pow(const BigInt& base, int p) {
  BigInt result = 1;
  for (int i = 0; i < p; ++i) result *= base;
  return result;
}

Int iroot_floor(Int s, int p) {
  if (s < 0 || p < 1) throw InvalidArgument("iroot_floor: need s >= 0 and p >= 1");
  if (p == 1 || s <= 1) return s;
  // Bisection on a in [0, s]; the powers are compared in BigInt.
  Int lo = 0;
  Int hi = std::min<Int>(s, Int{1} << std::min(62, 63 / p + 1));
  const BigInt target = s;
  while (lo < hi) {
    Int mid = lo + (hi - lo + 1) / 2;
    if (big_pow(BigInt(mid), p) <= target) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Int floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidArgument("empty rational");
  auto parse_int = [&](const std::string& part) -> Int {
    if (part.empty() || part == "-" || part == "+") throw InvalidArgument("malformed rational '" + text + "'");
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed rational '" + text + "'");
    }
    if (pos != part.size()) throw InvalidArgument("malformed rational '" + text + "'");
    return v;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        frac.size() > 15) {
      throw InvalidArgument("malformed rational '" + text + "'");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    Int w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    Int den = ipow(10, static_cast<int>(frac.size()));
    Int num = checked_add(checked_mul(w < 0 ? -w : w, den), parse_int(frac));
    return Rational(negative ? -num : num, den);
  }
  return Rational(parse_int(s));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m) {
      throw InvalidArgument("ragged matrix: every row must have the same length");
    }
    for (int j = 0; j < m; ++j) out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    auto r = row(i);
    out[static_cast<std::size_t>(i)].assign(r.begin(), r.end());
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidArgument("matrix product: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      Int acc = 0;
      for (int k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul((*this)(i, k), other(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

std::string to_json_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string to_compact_string(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
  }
  return os.str();
}

IntMatrix parse_matrix(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw InvalidArgument("empty matrix");
  std::vector<std::vector<Int>> rows;
  auto parse_row = [&](std::string_view row) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      const std::size_t comma = std::min(row.find(',', pos), row.size());
      const std::string_view tok = row.substr(pos, comma - pos);
      Int v = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
        throw InvalidArgument("malformed matrix entry '" + std::string(tok) + "' in '" + text + "'");
      }
      out.push_back(v);
      pos = comma + 1;
    }
    rows.push_back(std::move(out));
  };
  if (t.front() == '[') {
    if (t.size() < 4 || t.substr(0, 2) != "[[" || t.substr(t.size() - 2) != "]]") {
      throw InvalidArgument("malformed JSON matrix '" + text + "'");
    }
    const std::string body = t.substr(2, t.size() - 4);
    std::size_t pos = 0;
    for (;;) {
      const std::size_t sep = body.find("],[", pos);
      parse_row(std::string_view(body).substr(pos, sep == std::string::npos ? std::string::npos : sep - pos));
      if (sep == std::string::npos) break;
      pos = sep + 3;
    }
  } else {
    std::size_t pos = 0;
    for (;;) {
      const std::size_t sep = t.find(';', pos);
      parse_row(std::string_view(t).substr(pos, sep == std::string::npos ? std::string::npos : sep - pos));
      if (sep == std::string::npos) break;
      pos = sep + 1;
    }
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace qpcodes
