#include "covspec/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "covspec/errors.hpp"

namespace covspec {

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::in:
      return "in";
    case Membership::out:
      return "out";
    case Membership::unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    case Tri::unknown:
      return "unknown";
  }
  return "unknown";
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators " << p.generators << '\n';
  for (const auto& r : p.relators) out << r.to_string() << '\n';
  return out.str();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!have_header) {
      std::istringstream header(line);
      std::string keyword;
      header >> keyword >> p.generators;
      if (keyword != "generators" || !header || p.generators < 0)
        throw ArgumentError("presentation must start with 'generators <n>'");
      have_header = true;
      continue;
    }
    FreeWord r = FreeWord::parse(line);
    if (r.max_generator() > p.generators)
      throw ArgumentError("relator '" + line + "' uses an undeclared generator");
    p.relators.push_back(std::move(r));
  }
  if (!have_header) throw ArgumentError("empty presentation");
  return p;
}

namespace {

// Position of the unique occurrence of generator k in w, or -1.
std::ptrdiff_t sole_occurrence(const FreeWord& w, int k) {
  std::ptrdiff_t at = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::abs(w.letters()[i]) != k) continue;
    if (at >= 0) return -1;
    at = static_cast<std::ptrdiff_t>(i);
  }
  return at;
}

}  // namespace

TietzeReduction tietze_reduce(const Presentation& p, std::size_t max_word_length) {
  const int n = p.generators;
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) images.push_back(FreeWord::generator(k));
  std::vector<FreeWord> relators;
  std::set<FreeWord> seen;
  for (const auto& r : p.relators) {
    FreeWord c = r.cyclic_normal_form();
    if (!c.is_identity() && seen.insert(c).second) relators.push_back(std::move(c));
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  while (true) {
    std::erase_if(relators, [](const FreeWord& r) { return r.is_identity(); });
    // Shortest relator with a generator that occurs once.
    std::size_t best = relators.size();
    int best_gen = 0;
    std::ptrdiff_t best_pos = -1;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (best < relators.size() && relators[i].size() >= relators[best].size()) continue;
      for (Letter l : relators[i].letters()) {
        int k = std::abs(l);
        auto pos = sole_occurrence(relators[i], k);
        if (pos >= 0) {
          best = i;
          best_gen = k;
          best_pos = pos;
          break;
        }
      }
    }
    if (best == relators.size()) break;

    // r = x^e u (after rotation) gives x = u^-1 for e = +1 and x = u for e = -1.
    std::vector<Letter> rotated = relators[best].letters();
    std::rotate(rotated.begin(), rotated.begin() + best_pos, rotated.end());
    const Letter head = rotated.front();
    FreeWord rest(std::vector<Letter>(rotated.begin() + 1, rotated.end()));
    FreeWord solution = head > 0 ? rest.inverse() : rest;

    std::vector<FreeWord> sub;
    for (int k = 1; k <= n; ++k) sub.push_back(k == best_gen ? solution : FreeWord::generator(k));
    relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(best));
    bool too_long = false;
    for (auto& r : relators) {
      r = substitute(r, sub).cyclic_normal_form();
      too_long = too_long || r.size() > max_word_length;
    }
    for (auto& img : images) {
      img = substitute(img, sub);
      too_long = too_long || img.size() > max_word_length;
    }
    alive[static_cast<std::size_t>(best_gen - 1)] = false;
    if (too_long) break;
  }

  // Renumber surviving generators as 1..k.
  std::vector<FreeWord> renumber;
  int next = 0;
  for (int k = 1; k <= n; ++k) {
    if (alive[static_cast<std::size_t>(k - 1)])
      renumber.push_back(FreeWord::generator(++next));
    else
      renumber.emplace_back();  // eliminated: never occurs any more
  }
  TietzeReduction out;
  out.remaining.generators = next;
  for (const auto& r : relators) out.remaining.relators.push_back(substitute(r, renumber));
  for (const auto& img : images) out.images.push_back(substitute(img, renumber));
  return out;
}

PresentedQuotient::PresentedQuotient(const Presentation& p, std::size_t max_cosets)
    : generators_(p.generators), kind_(Kind::unknown), reduction_(tietze_reduce(p)) {
  if (reduction_.remaining.relators.empty()) {
    kind_ = Kind::free;
    if (reduction_.remaining.generators == 0) {
      kind_ = Kind::finite;
      table_ = CosetTable(0, {std::vector<int>{}});
    }
    return;
  }
  table_ = enumerate_cosets(reduction_.remaining, {}, max_cosets);
  if (table_) kind_ = Kind::finite;
}

std::size_t PresentedQuotient::order() const {
  if (kind_ != Kind::finite) throw ArgumentError("quotient is not known to be finite");
  return table_->size();
}

Membership PresentedQuotient::contains(const FreeWord& w) const {
  if (w.max_generator() > generators_) throw ArgumentError("word " + w.to_string() + " uses an unknown generator");
  FreeWord image = substitute(w, reduction_.images);
  switch (kind_) {
    case Kind::free:
      return image.is_identity() ? Membership::in : Membership::out;
    case Kind::finite:
      return table_->act(0, image) == 0 ? Membership::in : Membership::out;
    case Kind::unknown:
      // A word that dies under the Tietze substitution, or is conjugate to a
      // surviving relator or its inverse, is in the closure regardless of
      // what the remaining relators do.
      if (image.is_identity()) return Membership::in;
      {
        const FreeWord form = image.cyclic_normal_form();
        for (const auto& r : reduction_.remaining.relators)
          if (r.cyclic_normal_form() == form) return Membership::in;
      }
      return Membership::unknown;
  }
  return Membership::unknown;
}

Tri PresentedQuotient::is_trivial() const {
  switch (kind_) {
    case Kind::free:
      return Tri::no;
    case Kind::finite:
      return table_->size() == 1 ? Tri::yes : Tri::no;
    case Kind::unknown:
      return Tri::unknown;
  }
  return Tri::unknown;
}

std::optional<QuotientInvariant> PresentedQuotient::invariant() const {
  switch (kind_) {
    case Kind::free:
      return QuotientInvariant::free(free_rank());
    case Kind::finite:
      return QuotientInvariant::finite(static_cast<unsigned long>(table_->size()));
    case Kind::unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> PresentedQuotient::generator_action() const {
  if (kind_ != Kind::finite) throw ArgumentError("generator action needs a finite quotient");
  std::vector<std::vector<int>> action;
  for (int k = 1; k <= generators_; ++k) {
    const FreeWord& img = reduction_.images[static_cast<std::size_t>(k - 1)];
    std::vector<int> perm(table_->size());
    for (std::size_t c = 0; c < table_->size(); ++c) perm[c] = table_->act(static_cast<int>(c), img);
    action.push_back(std::move(perm));
  }
  return action;
}

}  // namespace covspec
