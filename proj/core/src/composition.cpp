#include "mzv/composition.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mzv {

namespace {

void require_positive(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive, got " +
                                  std::to_string(p));
    }
  }
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) {
  require_positive(parts_);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
}

Composition Composition::parse(std::string_view text) {
  if (text.empty()) return Composition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
      throw std::invalid_argument("invalid composition part \"" +
                                  std::string(token) + "\"");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::int64_t Composition::weight() const noexcept {
  std::int64_t w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool Composition::admissible() const noexcept {
  return !parts_.empty() && parts_.front() >= 2;
}

int Composition::first() const {
  if (parts_.empty()) throw std::logic_error("first() on empty composition");
  return parts_.front();
}

Composition Composition::tail() const {
  if (parts_.empty()) throw std::logic_error("tail() on empty composition");
  return Composition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Composition Composition::prepended(int part) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + 1);
  parts.push_back(part);
  parts.insert(parts.end(), parts_.begin(), parts_.end());
  return Composition(std::move(parts));
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << '(' << c.str() << ')';
}

std::vector<Composition> compositions_of(std::int64_t m, int h) {
  std::vector<Composition> out;
  if (m == 0 && h == 0) {
    out.emplace_back();
    return out;
  }
  if (h < 1 || h > m) return out;
  // First part a = 1..m-h+1, then recurse; recursion depth is h <= m.
  std::vector<int> prefix;
  auto rec = [&](auto&& self, std::int64_t rem, int slots) -> void {
    if (slots == 1) {
      prefix.push_back(static_cast<int>(rem));
      out.emplace_back(prefix);
      prefix.pop_back();
      return;
    }
    for (std::int64_t a = 1; a <= rem - slots + 1; ++a) {
      prefix.push_back(static_cast<int>(a));
      self(self, rem - a, slots - 1);
      prefix.pop_back();
    }
  };
  rec(rec, m, h);
  return out;
}

}  // namespace mzv
