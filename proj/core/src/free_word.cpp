#include "covspec/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

bool rank_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return letter_rank(x) < letter_rank(y); });
}

std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w;
  std::vector<Letter> rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rank_less(rot, best)) best = rot;
  }
  return best;
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw ArgumentError("letter 0 is not a generator");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(int k) {
  if (k == 0) throw ArgumentError("generator indices start at 1");
  FreeWord w;
  w.letters_.push_back(k);
  return w;
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == '*'))
      ++i;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string token(text.substr(start, i - start));
    if (token.empty() || token == "-" || token == "+")
      throw ArgumentError("malformed word '" + std::string(text) + "'");
    return std::stoi(token);
  };
  skip();
  if (text.substr(i) == "e") return FreeWord{};
  while (i < text.size()) {
    int letter;
    if (text[i] == 'g' || text[i] == 'x') {
      ++i;
      letter = read_int(false);
      if (i < text.size() && text[i] == '^') {
        ++i;
        int exponent = read_int(true);
        for (int k = 0; k < std::abs(exponent); ++k) letters.push_back(exponent < 0 ? -letter : letter);
        skip();
        continue;
      }
    } else {
      letter = read_int(true);
    }
    if (letter == 0) throw ArgumentError("letter 0 in word '" + std::string(text) + "'");
    letters.push_back(letter);
    skip();
  }
  return FreeWord(std::move(letters));
}

int FreeWord::max_generator() const noexcept {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FreeWord FreeWord::power(int k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

FreeWord FreeWord::conjugated_by(const FreeWord& u) const { return u * *this * u.inverse(); }

FreeWord FreeWord::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

FreeWord FreeWord::cyclic_normal_form() const {
  FreeWord reduced = cyclically_reduced();
  if (reduced.is_identity()) return reduced;
  auto a = least_rotation(reduced.letters_);
  auto b = least_rotation(reduced.inverse().letters_);
  FreeWord w;
  w.letters_ = rank_less(b, a) ? std::move(b) : std::move(a);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 'g';
    out += std::to_string(std::abs(letters_[i]));
    if (letters_[i] < 0) out += "^-1";
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (Letter l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  if (rank_less(a.letters_, b.letters_)) return std::strong_ordering::less;
  if (rank_less(b.letters_, a.letters_)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(l));
    if (k > images.size()) throw ArgumentError("substitution has no image for g" + std::to_string(k));
    const FreeWord& img = images[k - 1];
    if (l > 0) {
      for (Letter x : img.letters()) push_reduced(out, x);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FreeWord(std::move(out));
}

}  // namespace covspec
