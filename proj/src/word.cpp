#include "thuekit/word.hpp"

#include <algorithm>
#include <cctype>

#include "thuekit/errors.hpp"

namespace thuekit {

  bool is_valid_symbol(char c) noexcept {
    auto const u = static_cast<unsigned char>(c);
    if (u < 0x21 || u > 0x7e) {
      return false;
    }
    constexpr std::string_view reserved = "^()#:\"-><+*=,;";
    return reserved.find(c) == std::string_view::npos;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char const c = symbols_[i];
      if (!is_valid_symbol(c)) {
        throw ParseError(std::string("invalid alphabet symbol '") + c + "'");
      }
      if (symbols_.find(c, i + 1) != std::string::npos) {
        throw ParseError(std::string("duplicate alphabet symbol '") + c + "'");
      }
    }
  }

  void Alphabet::check(Word const& w) const {
    for (auto const& r : w.runs()) {
      if (!contains(r.symbol)) {
        throw UnknownSymbol(r.symbol);
      }
    }
  }

  void Alphabet::check(std::string_view dense) const {
    for (char c : dense) {
      if (!contains(c)) {
        throw UnknownSymbol(c);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Run> runs) {
    runs_.reserve(runs.size());
    for (auto& r : runs) {
      append(r.symbol, r.exponent);
    }
  }

  Word Word::dense(std::string_view symbols) {
    Word w;
    std::size_t i = 0;
    while (i < symbols.size()) {
      std::size_t j = i + 1;
      while (j < symbols.size() && symbols[j] == symbols[i]) {
        ++j;
      }
      w.runs_.push_back({symbols[i], BigInt(j - i)});
      i = j;
    }
    return w;
  }

  Word Word::power(char symbol, BigInt const& exponent) {
    Word w;
    w.append(symbol, exponent);
    return w;
  }

  void Word::append(char symbol, BigInt const& exponent) {
    if (exponent < 0) {
      throw std::invalid_argument("negative exponent");
    }
    if (exponent == 0) {
      return;
    }
    if (!runs_.empty() && runs_.back().symbol == symbol) {
      runs_.back().exponent += exponent;
    } else {
      runs_.push_back({symbol, exponent});
    }
  }

  void Word::append(Word const& other) {
    for (auto const& r : other.runs_) {
      append(r.symbol, r.exponent);
    }
  }

  BigInt Word::length() const {
    BigInt n = 0;
    for (auto const& r : runs_) {
      n += r.exponent;
    }
    return n;
  }

  BigInt Word::count(char symbol) const {
    BigInt n = 0;
    for (auto const& r : runs_) {
      if (r.symbol == symbol) {
        n += r.exponent;
      }
    }
    return n;
  }

  bool Word::contains_symbol(char symbol) const noexcept {
    return std::any_of(runs_.begin(), runs_.end(), [symbol](Run const& r) {
      return r.symbol == symbol;
    });
  }

  Word Word::prefix(BigInt const& n) const {
    Word   w;
    BigInt left = n;
    for (auto const& r : runs_) {
      if (left <= 0) {
        break;
      }
      if (r.exponent <= left) {
        w.runs_.push_back(r);
        left -= r.exponent;
      } else {
        w.runs_.push_back({r.symbol, left});
        left = 0;
      }
    }
    return w;
  }

  Word Word::drop(BigInt const& n) const {
    Word        w;
    BigInt      skip = n;
    std::size_t i    = 0;
    for (; i < runs_.size(); ++i) {
      if (skip < runs_[i].exponent) {
        break;
      }
      skip -= runs_[i].exponent;
    }
    if (i == runs_.size()) {
      return w;
    }
    w.runs_.reserve(runs_.size() - i);
    w.runs_.push_back({runs_[i].symbol, runs_[i].exponent - skip});
    w.runs_.insert(w.runs_.end(), runs_.begin() + i + 1, runs_.end());
    return w;
  }

  std::string Word::to_dense(std::size_t cap) const {
    BigInt const n = length();
    if (n > cap) {
      throw DenseCapExceeded("word of length " + n.str()
                             + " exceeds the dense cap of "
                             + std::to_string(cap));
    }
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (auto const& r : runs_) {
      s.append(static_cast<std::size_t>(r.exponent), r.symbol);
    }
    return s;
  }

  std::string Word::to_string() const {
    if (runs_.empty()) {
      return "\"\"";
    }
    std::string s;
    for (auto const& r : runs_) {
      if (!s.empty()) {
        s += ' ';
      }
      s += r.symbol;
      if (r.exponent != 1) {
        s += '^';
        s += r.exponent.str();
      }
    }
    return s;
  }

  std::uint64_t Word::hash() const noexcept {
    // FNV-1a over (symbol, exponent limbs).
    std::uint64_t h   = 0xcbf29ce484222325ULL;
    auto          mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    };
    for (auto const& r : runs_) {
      mix(static_cast<unsigned char>(r.symbol));
      auto const& backend = r.exponent.backend();
      for (std::size_t i = 0; i < backend.size(); ++i) {
        mix(backend.limbs()[i]);
      }
    }
    return h;
  }

  bool operator<(Word const& x, Word const& y) {
    auto const& a = x.runs_;
    auto const& b = y.runs_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i].symbol != b[i].symbol) {
        return a[i].symbol < b[i].symbol;
      }
      if (a[i].exponent != b[i].exponent) {
        return a[i].exponent < b[i].exponent;
      }
    }
    return a.size() < b.size();
  }

  bool shortlex_less(Word const& x, Word const& y) {
    BigInt const lx = x.length();
    BigInt const ly = y.length();
    if (lx != ly) {
      return lx < ly;
    }
    auto const& a = x.runs();
    auto const& b = y.runs();
    std::size_t i = 0, j = 0;
    BigInt      ra, rb;
    if (!a.empty()) {
      ra = a[0].exponent;
    }
    if (!b.empty()) {
      rb = b[0].exponent;
    }
    while (i < a.size() && j < b.size()) {
      if (a[i].symbol != b[j].symbol) {
        return static_cast<unsigned char>(a[i].symbol)
               < static_cast<unsigned char>(b[j].symbol);
      }
      BigInt const step = ra < rb ? ra : rb;
      ra -= step;
      rb -= step;
      if (ra == 0 && ++i < a.size()) {
        ra = a[i].exponent;
      }
      if (rb == 0 && ++j < b.size()) {
        rb = b[j].exponent;
      }
    }
    return false;
  }

}  // namespace thuekit
