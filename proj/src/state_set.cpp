#include "khow/state_set.hpp"

#include <bit>
#include <cassert>

namespace khow {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

StateSet::StateSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  StateSet s(universe);
  for (std::size_t m : members) s.insert(static_cast<StateId>(m));
  return s;
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool StateSet::contains(StateId s) const {
  const std::size_t i = index_of(s);
  return i < universe_ && (words_[i / 64] >> (i % 64) & 1U) != 0;
}

void StateSet::insert(StateId s) {
  const std::size_t i = index_of(s);
  assert(i < universe_);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void StateSet::erase(StateId s) {
  const std::size_t i = index_of(s);
  assert(i < universe_);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool StateSet::is_subset_of(const StateSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

StateSet StateSet::complement() const {
  StateSet out = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  out.reserve(count());
  for_each([&](StateId s) { out.push_back(s); });
  return out;
}

std::size_t StateSet::hash() const {
  std::size_t h = universe_;
  for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace khow
