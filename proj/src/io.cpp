#include "sgkit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sgkit {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line>  out;
      std::istringstream in{std::string(text)};
      std::string        raw;
      std::size_t        number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream       words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
          tokens.push_back(std::move(w));
        }
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
      }
      return out;
    }

    [[noreturn]] void fail(char const* what, std::size_t line,
                           std::string const& msg) {
      throw ParseError(std::string(what) + ": line " + std::to_string(line)
                       + ": " + msg);
    }

    std::size_t to_number(std::string const& tok, char const* what,
                          std::size_t line) {
      std::size_t v   = 0;
      auto        res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        fail(what, line, "expected a non-negative integer, got '" + tok + "'");
      }
      return v;
    }

  }  // namespace

  Semigroup parse_sg(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens.size() != 2
        || lines[0].tokens[0] != "n") {
      fail("sgcore", lines.empty() ? 1 : lines[0].number,
           "expected 'n <count>'");
    }
    std::size_t const n = to_number(lines[0].tokens[1], "sgcore",
                                    lines[0].number);
    if (n == 0) {
      fail("sgcore", lines[0].number, "empty semigroup");
    }
    if (lines.size() < n + 1) {
      fail("sgcore", lines.back().number,
           "expected " + std::to_string(n) + " table rows");
    }
    std::vector<index_t> table;
    table.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
      auto const& l = lines[r];
      if (l.tokens.size() != n) {
        fail("sgcore", l.number,
             "row has " + std::to_string(l.tokens.size()) + " entries, expected "
                 + std::to_string(n));
      }
      for (auto const& tok : l.tokens) {
        std::size_t v = to_number(tok, "sgcore", l.number);
        if (v >= n) {
          fail("sgcore", l.number, "index " + tok + " out of range");
        }
        table.push_back(static_cast<index_t>(v));
      }
    }
    std::vector<std::string> labels;
    if (lines.size() > n + 1) {
      auto const& l = lines[n + 1];
      if (l.tokens[0] != "labels" || l.tokens.size() != n + 1
          || lines.size() > n + 2) {
        fail("sgcore", l.number, "expected 'labels' with "
                                     + std::to_string(n) + " entries");
      }
      labels.assign(l.tokens.begin() + 1, l.tokens.end());
    }
    return Semigroup::from_table(n, std::move(table), std::move(labels));
  }

  std::string format_sg(Semigroup const& s) {
    std::ostringstream out;
    out << "n " << s.size() << '\n';
    for (index_t i = 0; i < s.size(); ++i) {
      for (index_t j = 0; j < s.size(); ++j) {
        out << (j ? " " : "") << s.product(i, j);
      }
      out << '\n';
    }
    if (s.has_labels()) {
      out << "labels";
      for (auto const& l : s.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
    return out.str();
  }

  std::vector<std::vector<index_t>> parse_tgen(std::string_view text) {
    std::vector<std::vector<index_t>> out;
    for (auto const& l : tokenize(text)) {
      std::vector<index_t> map;
      for (auto const& tok : l.tokens) {
        map.push_back(static_cast<index_t>(to_number(tok, "sgcore", l.number)));
      }
      if (!out.empty() && map.size() != out.front().size()) {
        fail("sgcore", l.number, "degree differs from the first map");
      }
      for (auto v : map) {
        if (v >= map.size()) {
          fail("sgcore", l.number, "image " + std::to_string(v)
                                       + " out of range");
        }
      }
      out.push_back(std::move(map));
    }
    if (out.empty()) {
      throw ParseError("sgcore: no transformations given");
    }
    return out;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw PreconditionError("cli: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

}  // namespace sgkit
