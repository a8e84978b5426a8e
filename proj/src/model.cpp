#include "khow/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "khow/error.hpp"
#include "khow/syntax.hpp"

namespace khow {

namespace {

bool is_valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::optional<StateId> Model::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionId> Model::find_action(std::string_view name) const {
  auto it = action_index_.find(std::string(name));
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const StateId> Model::successors(StateId s, ActionId a) const {
  return successors_[index_of(a)][index_of(s)];
}

StateSet Model::letter_extension(std::string_view letter) const {
  StateSet out(state_count());
  for (std::size_t i = 0; i < state_count(); ++i) {
    const auto& v = valuation_[i];
    if (std::binary_search(v.begin(), v.end(), letter)) out.insert(static_cast<StateId>(i));
  }
  return out;
}

StateId ModelBuilder::add_state(std::string name, std::vector<std::string> letters) {
  if (!is_valid_id(name)) throw ModelError(0, "invalid state id '" + name + "'");
  if (model_.state_index_.contains(name)) throw ModelError(0, "duplicate state id '" + name + "'");
  for (const auto& l : letters) {
    if (!is_valid_letter(l)) throw ModelError(0, "invalid proposition letter '" + l + "'");
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  const auto id = static_cast<StateId>(model_.state_names_.size());
  model_.state_index_.emplace(name, id);
  model_.state_names_.push_back(std::move(name));
  model_.valuation_.push_back(std::move(letters));
  return id;
}

ActionId ModelBuilder::add_action(std::string_view name) {
  if (auto existing = model_.find_action(name)) return *existing;
  if (!is_valid_id(name)) throw ModelError(0, "invalid action name '" + std::string(name) + "'");
  const auto id = static_cast<ActionId>(model_.action_names_.size());
  model_.action_index_.emplace(std::string(name), id);
  model_.action_names_.emplace_back(name);
  model_.relations_.emplace_back();
  return id;
}

void ModelBuilder::add_transition(std::string_view source, std::string_view action, std::string_view target) {
  const auto s = model_.find_state(source);
  if (!s) throw ModelError(0, "transition from undeclared state '" + std::string(source) + "'");
  const auto t = model_.find_state(target);
  if (!t) throw ModelError(0, "transition to undeclared state '" + std::string(target) + "'");
  add_transition(*s, add_action(action), *t);
}

void ModelBuilder::add_transition(StateId source, ActionId action, StateId target) {
  model_.relations_[index_of(action)].emplace_back(source, target);
}

Model ModelBuilder::build() && {
  if (model_.state_names_.empty()) throw ModelError(0, "a model needs at least one state");
  const std::size_t n = model_.state_count();
  model_.successors_.assign(model_.action_count(), std::vector<std::vector<StateId>>(n));
  for (std::size_t a = 0; a < model_.action_count(); ++a) {
    auto& rel = model_.relations_[a];
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    for (const auto& [s, t] : rel) model_.successors_[a][index_of(s)].push_back(t);
  }
  return std::move(model_);
}

Model parse_model(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> words;
  };
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      ++number;
      std::string_view raw = text.substr(pos, nl - pos);
      pos = nl + 1;
      auto words = split_words(raw);
      if (words.empty() || words.front().starts_with('#')) continue;
      lines.push_back({number, std::move(words)});
    }
  }

  ModelBuilder builder;
  auto at_line = [](std::size_t number, auto&& fn) {
    try {
      fn();
    } catch (const ModelError& e) {
      throw ModelError(number, e.detail());
    }
  };

  // States first, so transitions may mention states declared further down.
  for (const auto& [number, words] : lines) {
    if (words.front() != "state") continue;
    at_line(number, [&, &words = words] {
      if (words.size() < 2) throw ModelError(0, "expected 'state <id> [<letter> ...]'");
      // Re-tokenize the bracket so "[p q]", "[ p q ]" and "[]" all work.
      std::string rest;
      for (std::size_t i = 2; i < words.size(); ++i) rest += words[i] + ' ';
      std::vector<std::string> letters;
      if (!rest.empty()) {
        std::string spaced;
        for (char c : rest) {
          if (c == '[' || c == ']') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
          } else {
            spaced += c;
          }
        }
        auto toks = split_words(spaced);
        if (toks.size() < 2 || toks.front() != "[" || toks.back() != "]") {
          throw ModelError(0, "valuation must be written as [<letter> ...]");
        }
        for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
          if (toks[i] == "[" || toks[i] == "]") throw ModelError(0, "unbalanced brackets in valuation");
          letters.push_back(toks[i]);
        }
      }
      builder.add_state(words[1], std::move(letters));
    });
  }

  for (const auto& [number, words] : lines) {
    const std::string& head = words.front();
    if (head == "state") continue;
    at_line(number, [&, &words = words, &head = head] {
      if (head == "action") {
        if (words.size() != 2) throw ModelError(0, "expected 'action <name>'");
        builder.add_action(words[1]);
      } else if (head == "trans") {
        if (words.size() != 4) throw ModelError(0, "expected 'trans <source> <action> <target>'");
        builder.add_transition(words[1], words[2], words[3]);
      } else {
        throw ModelError(0, "unknown directive '" + head + "'");
      }
    });
  }

  return std::move(builder).build();
}

std::string print_model(const Model& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.state_count(); ++i) {
    const auto s = static_cast<StateId>(i);
    out << "state " << m.state_name(s) << " [";
    const auto& v = m.valuation(s);
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
    out << "]\n";
  }
  for (const auto& a : m.action_names()) out << "action " << a << '\n';
  for (std::size_t a = 0; a < m.action_count(); ++a) {
    const auto act = static_cast<ActionId>(a);
    for (const auto& [s, t] : m.transitions(act)) {
      out << "trans " << m.state_name(s) << ' ' << m.action_name(act) << ' ' << m.state_name(t) << '\n';
    }
  }
  return out.str();
}

StateSet post_image(const Model& m, const StateSet& from, ActionId a) {
  StateSet out(m.state_count());
  from.for_each([&](StateId s) {
    for (StateId t : m.successors(s, a)) out.insert(t);
  });
  return out;
}

bool applicable(const Model& m, const StateSet& from, ActionId a) {
  bool ok = true;
  from.for_each([&](StateId s) { ok = ok && !m.successors(s, a).empty(); });
  return ok;
}

StateSet states_named(const Model& m, std::span<const std::string> names) {
  StateSet out(m.state_count());
  for (const auto& n : names) {
    auto s = m.find_state(n);
    if (!s) throw ModelError(0, "unknown state '" + n + "'");
    out.insert(*s);
  }
  return out;
}

}  // namespace khow
