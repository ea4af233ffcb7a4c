#include "thuekit/parse.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    Pattern parse_runs(std::string_view text, bool allow_n) {
      Pattern     out;
      std::size_t i = 0;
      text          = trim(text);
      if (text == "\"\"") {
        return out;
      }
      while (i < text.size()) {
        char const c = text[i];
        if (is_space(c)) {
          ++i;
          continue;
        }
        if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
          i += 2;
          continue;
        }
        if (!is_valid_symbol(c)) {
          throw ParseError("unexpected character '" + std::string(1, c)
                           + "' in word \"" + std::string(text) + "\"");
        }
        ++i;
        ExponentExpr e = ExponentExpr::constant(1);
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t start = i;
          if (i < text.size() && text[i] == '(') {
            int depth = 0;
            for (; i < text.size(); ++i) {
              if (text[i] == '(') {
                ++depth;
              } else if (text[i] == ')' && --depth == 0) {
                ++i;
                break;
              }
            }
            if (depth != 0) {
              throw ParseError("unbalanced parentheses in \""
                               + std::string(text) + "\"");
            }
          } else if (i < text.size() && text[i] == 'n') {
            ++i;
          } else {
            while (i < text.size()
                   && std::isdigit(static_cast<unsigned char>(text[i]))) {
              ++i;
            }
          }
          if (i == start) {
            throw ParseError("missing exponent after '^' in \""
                             + std::string(text) + "\"");
          }
          e = parse_exponent(text.substr(start, i - start), allow_n);
        }
        out.push_back({c, std::move(e)});
      }
      return out;
    }

    bool is_label(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'
              || c == '.' || c == '\'')) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Word parse_word(std::string_view text) {
    Pattern p = parse_runs(text, false);
    Word    w;
    for (auto const& r : p) {
      w.append(r.symbol, r.exponent.c0());
    }
    return w;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word w = parse_word(text);
    alphabet.check(w);
    return w;
  }

  Pattern parse_pattern(std::string_view text) {
    return parse_runs(text, true);
  }

  RewritingSystem parse_system(std::string_view text, std::string name) {
    static std::regex const schema_suffix(
        R"(^(.*\S)\s+for\s+n\s*>=\s*(-?[0-9]+)\s*$)");

    std::istringstream      in{std::string(text)};
    std::string             raw;
    std::size_t             line_no = 0;
    std::optional<Alphabet> alphabet;
    std::vector<Rule>       rules;
    std::vector<RuleSchema> schemas;

    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      try {
        if (!alphabet) {
          constexpr std::string_view key = "alphabet:";
          if (line.substr(0, key.size()) != key) {
            throw ParseError("expected 'alphabet:' line", line_no);
          }
          std::string symbols;
          for (char c : line.substr(key.size())) {
            if (!is_space(c)) {
              symbols += c;
            }
          }
          alphabet.emplace(symbols);
          continue;
        }

        auto const arrow = line.find("->");
        if (arrow == std::string_view::npos) {
          throw ParseError("expected 'LHS -> RHS'", line_no);
        }
        std::string_view lhs_text = line.substr(0, arrow);
        std::string      rhs_text(trim(line.substr(arrow + 2)));
        std::string      label;
        if (auto colon = lhs_text.find(':'); colon != std::string_view::npos) {
          label = std::string(trim(lhs_text.substr(0, colon)));
          if (!is_label(label)) {
            throw ParseError("bad rule label '" + label + "'", line_no);
          }
          lhs_text = lhs_text.substr(colon + 1);
        }
        if (rhs_text.find("->") != std::string::npos) {
          throw ParseError("more than one '->'", line_no);
        }

        std::smatch m;
        if (std::regex_match(rhs_text, m, schema_suffix)) {
          if (label.empty()) {
            label = "s" + std::to_string(schemas.size() + 1);
          }
          std::int64_t const n_min = std::stoll(m[2].str());
          Pattern            lhs   = parse_pattern(lhs_text);
          Pattern            rhs   = parse_pattern(m[1].str());
          for (auto const* p : {&lhs, &rhs}) {
            for (auto const& r : *p) {
              if (!alphabet->contains(r.symbol)) {
                throw UnknownSymbol(r.symbol, line_no);
              }
            }
          }
          schemas.emplace_back(label, std::move(lhs), std::move(rhs), n_min);
        } else {
          if (label.empty()) {
            label = "r" + std::to_string(rules.size() + 1);
          }
          Word lhs = parse_word(lhs_text);
          Word rhs = parse_word(rhs_text);
          for (auto const* w : {&lhs, &rhs}) {
            for (auto const& r : w->runs()) {
              if (!alphabet->contains(r.symbol)) {
                throw UnknownSymbol(r.symbol, line_no);
              }
            }
          }
          if (lhs.empty()) {
            throw ParseError("left-hand side is empty", line_no);
          }
          rules.push_back(Rule{label, std::move(lhs), std::move(rhs)});
        }
      } catch (ParseError const& e) {
        if (e.line() != 0) {
          throw;
        }
        throw ParseError(e.what(), line_no);
      }
    }
    if (!alphabet) {
      throw ParseError("missing 'alphabet:' line", line_no == 0 ? 1 : line_no);
    }
    return RewritingSystem(std::move(name), std::move(*alphabet),
                           std::move(rules), std::move(schemas));
  }

  RewritingSystem load_system_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open system file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str(), path);
  }

  std::string format_system(RewritingSystem const& system) {
    std::string out = "alphabet:";
    for (char c : system.alphabet().symbols()) {
      out += ' ';
      out += c;
    }
    out += '\n';
    for (auto const& r : system.rules()) {
      out += r.id + ": " + r.lhs.to_string() + " -> " + r.rhs.to_string()
             + '\n';
    }
    auto pattern = [](Pattern const& p) {
      if (p.empty()) {
        return std::string("\"\"");
      }
      std::string s;
      for (auto const& r : p) {
        if (!s.empty()) {
          s += ' ';
        }
        s += r.symbol;
        auto const& e = r.exponent;
        if (e.is_constant() && e.c0() == 1) {
          continue;
        }
        s += "^(" + e.to_string() + ")";
      }
      return s;
    };
    for (auto const& s : system.schemas()) {
      out += s.id() + ": " + pattern(s.lhs()) + " -> " + pattern(s.rhs())
             + " for n>=" + std::to_string(s.n_min()) + '\n';
    }
    return out;
  }

}  // namespace thuekit
