#include "rook/one_line.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rook {

namespace {

constexpr int kMaxEnumerate = 8;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_value(std::string_view token, std::string_view text) {
  token = trim(token);
  if (token.empty()) {
    throw std::invalid_argument("empty value in element '" + std::string(text) + "'");
  }
  long value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed value '" + std::string(token) + "' in element '" +
                                  std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > 1'000'000) {
      throw std::invalid_argument("value out of range in element '" + std::string(text) + "'");
    }
  }
  return static_cast<int>(value);
}

void enumerate_from(int pos, std::vector<int>& current, std::vector<char>& used,
                    std::vector<OneLine>& out) {
  const int n = static_cast<int>(current.size());
  if (pos == n) {
    out.emplace_back(current);
    return;
  }
  current[pos] = 0;
  enumerate_from(pos + 1, current, used, out);
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    current[pos] = v;
    enumerate_from(pos + 1, current, used, out);
    used[v] = 0;
  }
  current[pos] = 0;
}

}  // namespace

OneLine::OneLine(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("rook element must have at least one entry");
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    if (v < 0 || v > n) {
      throw std::invalid_argument("entry " + std::to_string(v) + " outside [0, " +
                                  std::to_string(n) + "]");
    }
    if (v != 0) {
      if (seen[v]) throw std::invalid_argument("duplicate nonzero entry " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

OneLine OneLine::zero(int n) { return OneLine(std::vector<int>(n, 0)); }

OneLine OneLine::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return OneLine(std::move(e));
}

OneLine OneLine::longest(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return OneLine(std::move(e));
}

int OneLine::entry(int i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("index " + std::to_string(i) + " outside [1, " +
                            std::to_string(size()) + "]");
  }
  return entries_[i - 1];
}

std::uint64_t OneLine::code() const noexcept {
  const std::uint64_t base = static_cast<std::uint64_t>(size()) + 1;
  std::uint64_t c = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) c = c * base + *it;
  return c;
}

RookMatrix::RookMatrix(DenseMatrix<int> cells) : cells_(std::move(cells)) {
  if (cells_.rows() != cells_.cols() || cells_.rows() == 0) {
    throw std::invalid_argument("rook matrix must be square and nonempty");
  }
  if ((cells_.array() != 0 && cells_.array() != 1).any()) {
    throw std::invalid_argument("rook matrix entries must be 0 or 1");
  }
  if ((cells_.rowwise().sum().array() > 1).any() || (cells_.colwise().sum().array() > 1).any()) {
    throw std::invalid_argument("rook matrix has more than one 1 in a row or column");
  }
}

OneLine parse_one_line(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw std::invalid_argument("empty element text");

  std::vector<int> values;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      values.push_back(parse_value(body.substr(start, comma - start), text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    // Compact digit form; a single token is also a valid one-element vector.
    std::string compact;
    for (char c : body) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.size() > 9) {
      throw std::invalid_argument("compact form is only accepted for n <= 9: '" +
                                  std::string(text) + "'");
    }
    for (char c : compact) values.push_back(parse_value(std::string_view(&c, 1), text));
  }
  return OneLine(std::move(values));
}

std::string to_string(const OneLine& x) {
  std::string s;
  for (int i = 0; i < x.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(x.entries()[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const OneLine& x) { return os << to_string(x); }

OneLine from_matrix(const RookMatrix& m) {
  const int n = m.size();
  std::vector<int> e(n, 0);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      if (m.cells()(row, col) == 1) e[col] = row + 1;
    }
  }
  return OneLine(std::move(e));
}

RookMatrix to_matrix(const OneLine& x) { return RookMatrix(to_dense<int>(x)); }

OneLine multiply(const OneLine& x, const OneLine& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("cannot multiply elements of R_" + std::to_string(x.size()) +
                                " and R_" + std::to_string(y.size()));
  }
  // Column j of x*y is x applied to column j of y.
  std::vector<int> e(x.size(), 0);
  for (int j = 0; j < y.size(); ++j) {
    const int b = y.entries()[j];
    e[j] = b == 0 ? 0 : x.entries()[b - 1];
  }
  return OneLine(std::move(e));
}

int rank(const OneLine& x) noexcept {
  return static_cast<int>(std::count_if(x.entries().begin(), x.entries().end(),
                                        [](int v) { return v != 0; }));
}

bool is_permutation(const OneLine& x) noexcept { return rank(x) == x.size(); }

std::vector<OneLine> enumerate(int n) {
  if (n < 1 || n > kMaxEnumerate) {
    throw std::invalid_argument("enumerate supports 1 <= n <= " + std::to_string(kMaxEnumerate) +
                                ", got " + std::to_string(n));
  }
  std::vector<OneLine> out;
  std::vector<int> current(n, 0);
  std::vector<char> used(n + 1, 0);
  enumerate_from(0, current, used, out);
  return out;
}

std::vector<OneLine> read_elements(std::istream& in) {
  std::vector<OneLine> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    try {
      out.push_back(parse_one_line(body));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace rook
