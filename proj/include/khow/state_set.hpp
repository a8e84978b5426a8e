#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace khow {

enum class StateId : std::uint32_t {};
enum class ActionId : std::uint32_t {};

constexpr std::size_t index_of(StateId s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(ActionId a) { return static_cast<std::size_t>(a); }

/// Subset of the states of one model, stored as a bitset over declaration
/// indices. Iteration visits members in declaration order, so two sets with
/// the same members are indistinguishable; this is the canonical form used for
/// belief states.
class StateSet {
 public:
  StateSet() = default;
  /// Empty subset of a universe of `universe` states.
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<std::size_t> members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;

  bool contains(StateId s) const;
  void insert(StateId s);
  void erase(StateId s);

  bool is_subset_of(const StateSet& other) const;
  bool is_full() const { return count() == universe_; }

  StateSet complement() const;
  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

  std::vector<StateId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<StateId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const StateSet& a, const StateSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using BeliefState = StateSet;

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace khow
