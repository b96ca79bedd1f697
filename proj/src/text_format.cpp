#include "bpair/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "bpair/errors.hpp"

namespace bpair {

namespace {

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of text[0] in the source line
  std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Significant lines, comments and surrounding whitespace stripped.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('\n', start), text.size());
      ++number;
      std::string_view raw = text.substr(start, end - start);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      std::size_t lead = 0;
      while (lead < raw.size() && is_space(raw[lead])) ++lead;
      std::size_t tail = raw.size();
      while (tail > lead && is_space(raw[tail - 1])) --tail;
      if (tail > lead) lines_.push_back({number, lead + 1, raw.substr(lead, tail - lead)});
      last_line_ = number;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }
  std::size_t last_line() const { return last_line_; }

  const Line& next(const char* expecting) {
    if (done()) throw ParseError(last_line_, 1, std::string("unexpected end of input, expected ") + expecting);
    return lines_[next_++];
  }

  std::optional<Line> peek() const {
    if (done()) return std::nullopt;
    return lines_[next_];
  }

  void expect_end() const {
    if (!done()) {
      const Line& l = lines_[next_];
      throw ParseError(l.number, l.column, "unexpected content '" + std::string(l.text) + "'");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 1;
};

std::vector<std::pair<std::size_t, std::string_view>> split_words(const Line& line) {
  std::vector<std::pair<std::size_t, std::string_view>> words;
  std::size_t i = 0;
  while (i < line.text.size()) {
    while (i < line.text.size() && is_space(line.text[i])) ++i;
    const std::size_t start = i;
    while (i < line.text.size() && !is_space(line.text[i])) ++i;
    if (i > start) words.push_back({line.column + start, line.text.substr(start, i - start)});
  }
  return words;
}

void expect_keyword(LineReader& in, std::string_view keyword) {
  const Line& l = in.next(std::string(keyword).c_str());
  if (l.text != keyword) {
    throw ParseError(l.number, l.column,
                     "expected '" + std::string(keyword) + "', found '" + std::string(l.text) + "'");
  }
}

std::size_t parse_count(const Line& l, std::size_t column, std::string_view digits) {
  std::size_t value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || digits.empty()) {
    throw ParseError(l.number, column, "expected a non-negative integer, found '" +
                                           std::string(digits) + "'");
  }
  return value;
}

// "<keyword> <n>"
std::size_t expect_size(LineReader& in, std::string_view keyword) {
  const Line& l = in.next(std::string(keyword).c_str());
  const auto words = split_words(l);
  if (words.empty() || words[0].second != keyword) {
    throw ParseError(l.number, l.column,
                     "expected '" + std::string(keyword) + " <n>', found '" + std::string(l.text) + "'");
  }
  if (words.size() != 2) {
    throw ParseError(l.number, l.column + l.text.size(),
                     "expected exactly one size after '" + std::string(keyword) + "'");
  }
  return parse_count(l, words[1].first, words[1].second);
}

Rel read_rows(LineReader& in, std::size_t rows, std::size_t cols) {
  Rel r(rows, cols);
  if (cols == 0) return r;
  for (std::size_t x = 0; x < rows; ++x) {
    const Line& l = in.next("a matrix row");
    for (std::size_t k = 0; k < l.text.size(); ++k) {
      const char c = l.text[k];
      if (c != '0' && c != '1') {
        throw ParseError(l.number, l.column + k,
                         std::string("illegal character '") + c + "' in matrix row");
      }
      if (k >= cols) {
        throw ParseError(l.number, l.column + k,
                         "row has " + std::to_string(l.text.size()) + " entries, expected " +
                             std::to_string(cols));
      }
      if (c == '1') r.set(x, k);
    }
    if (l.text.size() < cols) {
      throw ParseError(l.number, l.column + l.text.size(),
                       "row has " + std::to_string(l.text.size()) + " entries, expected " +
                           std::to_string(cols));
    }
  }
  return r;
}

void write_rows(std::ostringstream& os, const Rel& r) {
  if (r.target_size() == 0) return;
  for (std::size_t x = 0; x < r.source_size(); ++x) {
    for (std::size_t y = 0; y < r.target_size(); ++y) os << (r.holds(x, y) ? '1' : '0');
    os << '\n';
  }
}

}  // namespace

BasicPairDocument parse_basic_pair_document(std::string_view text) {
  LineReader in(text);
  expect_keyword(in, "basicpair");
  const std::size_t n = expect_size(in, "X");
  const std::size_t m = expect_size(in, "S");
  BasicPairDocument doc;
  while (auto l = in.peek()) {
    const auto words = split_words(*l);
    if (words[0].second != "labels") break;
    in.next("labels");
    if (words.size() < 2 || (words[1].second != "X" && words[1].second != "S")) {
      throw ParseError(l->number, l->column, "expected 'labels X ...' or 'labels S ...'");
    }
    const bool points = words[1].second == "X";
    auto& target = points ? doc.point_labels : doc.index_labels;
    const std::size_t expected = points ? n : m;
    if (!target.empty()) throw ParseError(l->number, l->column, "labels given twice");
    if (words.size() - 2 != expected) {
      throw ParseError(l->number, l->column,
                       "expected " + std::to_string(expected) + " labels, found " +
                           std::to_string(words.size() - 2));
    }
    for (std::size_t i = 2; i < words.size(); ++i) target.emplace_back(words[i].second);
  }
  expect_keyword(in, "rel");
  Rel forces = read_rows(in, n, m);
  in.expect_end();
  doc.pair = BasicPair(std::move(forces));
  return doc;
}

BasicPair parse_basic_pair(std::string_view text) {
  return parse_basic_pair_document(text).pair;
}

std::string print_basic_pair_document(const BasicPairDocument& doc) {
  std::ostringstream os;
  os << "basicpair\nX " << doc.pair.points() << "\nS " << doc.pair.indexes() << '\n';
  auto labels = [&](const char* side, const std::vector<std::string>& ls) {
    if (ls.empty()) return;
    os << "labels " << side;
    for (const auto& l : ls) os << ' ' << l;
    os << '\n';
  };
  labels("X", doc.point_labels);
  labels("S", doc.index_labels);
  os << "rel\n";
  write_rows(os, doc.pair.forces());
  return os.str();
}

std::string print_basic_pair(const BasicPair& bp) {
  return print_basic_pair_document(BasicPairDocument{bp, {}, {}});
}

Rel parse_relation(std::string_view text) {
  LineReader in(text);
  expect_keyword(in, "relation");
  const std::size_t n = expect_size(in, "FROM");
  const std::size_t m = expect_size(in, "TO");
  expect_keyword(in, "rel");
  Rel r = read_rows(in, n, m);
  in.expect_end();
  return r;
}

std::string print_relation(const Rel& r) {
  std::ostringstream os;
  os << "relation\nFROM " << r.source_size() << "\nTO " << r.target_size() << "\nrel\n";
  write_rows(os, r);
  return os.str();
}

FiniteTopology parse_topology(std::string_view text) {
  LineReader in(text);
  expect_keyword(in, "topology");
  const std::size_t n = expect_size(in, "OMEGA");
  expect_keyword(in, "opens");
  FiniteTopology t{{n, "Ω"}, {}};
  std::size_t last_line = 0;
  while (!in.done()) {
    const Line& l = in.next("an open set");
    last_line = l.number;
    try {
      t.opens.push_back(parse_subset_literal(l.text, n));
    } catch (const ParseError& e) {
      throw ParseError(l.number, l.column + e.column() - 1, e.message());
    }
  }
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line == 0 ? in.last_line() : last_line, 1,
                     std::string("not a topology: ") + e.what());
  }
  return t;
}

std::string print_topology(const FiniteTopology& t) {
  std::ostringstream os;
  os << "topology\nOMEGA " << t.ground.size << "\nopens\n";
  for (const auto& o : t.opens) os << o.to_string() << '\n';
  return os.str();
}

Subset parse_subset_literal(std::string_view text, std::size_t carrier_size) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(1, i + 1, what); };
  skip();
  if (i >= text.size() || text[i] != '{') throw fail("subset literal must start with '{'");
  ++i;
  Subset out(carrier_size);
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      skip();
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw fail("expected an element index");
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc{} || ptr != text.data() + i) {
        i = start;
        throw fail("element index out of range");
      }
      if (value >= carrier_size) {
        i = start;
        throw fail("element " + std::to_string(value) + " outside carrier of size " +
                   std::to_string(carrier_size));
      }
      if (out.contains(value)) {
        i = start;
        throw fail("element " + std::to_string(value) + " listed twice");
      }
      out.insert(value);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw fail("expected ',' or '}'");
    }
  }
  skip();
  if (i != text.size()) throw fail("trailing characters after '}'");
  return out;
}

}  // namespace bpair
