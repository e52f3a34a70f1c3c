#include "mre/labels.hpp"

#include <algorithm>
#include <cctype>

#include "mre/errors.hpp"

namespace mre {

namespace {

// Characters with a syntactic meaning in the expression grammar can never be
// alphabet letters.
bool reserved_char(char c) {
  switch (c) {
    case '(': case ')': case '<': case '>': case '|': case '+':
    case '*': case '{': case '}': case '\\': case ';': case ',':
    case '=':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

}  // namespace

Context Context::parse(const std::string& description) {
  Context ctx;
  bool saw_tapes = false, saw_weights = false;
  std::size_t pos = 0;
  while (pos < description.size()) {
    auto end = description.find(',', pos);
    if (end == std::string::npos) end = description.size();
    std::string field = description.substr(pos, end - pos);
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw ContextError("bad context field '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "tapes") {
      saw_tapes = true;
      std::size_t p = 0;
      while (true) {
        auto semi = value.find(';', p);
        std::string alphabet = value.substr(p, semi == std::string::npos ? std::string::npos : semi - p);
        if (alphabet.empty()) throw ContextError("empty alphabet in context");
        for (char c : alphabet)
          if (reserved_char(c))
            throw ContextError(std::string("reserved character '") + c + "' in alphabet");
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
        ctx.tapes.push_back(alphabet);
        if (semi == std::string::npos) break;
        p = semi + 1;
      }
    } else if (key == "weights") {
      saw_weights = true;
      ctx.weights = semiring_from_token(value);
    } else {
      throw ContextError("unknown context key '" + key + "'");
    }
    pos = end + (end < description.size() ? 1 : 0);
  }
  if (!saw_tapes || ctx.tapes.empty())
    throw ContextError("context needs at least one tape (tapes=...)");
  if (!saw_weights)
    throw ContextError("context needs a semiring (weights=b|z|q)");
  return ctx;
}

std::string Context::to_string() const {
  std::string out = "tapes=";
  for (std::size_t i = 0; i < tapes.size(); ++i) {
    if (i) out += ';';
    out += tapes[i];
  }
  out += ",weights=";
  out += semiring_token(weights);
  return out;
}

bool Context::letter_on_tape(char letter, int tape) const {
  const std::string& alphabet = tapes.at(static_cast<std::size_t>(tape));
  return alphabet.find(letter) != std::string::npos;
}

bool Context::letter_anywhere(char letter) const {
  for (int i = 0; i < tape_count(); ++i)
    if (letter_on_tape(letter, i)) return true;
  return false;
}

bool GenLabel::all_epsilon() const {
  for (const auto& c : components)
    if (!c.empty()) return false;
  return true;
}

int GenLabel::gradation() const {
  int g = 0;
  for (const auto& c : components) g += static_cast<int>(c.size());
  return g;
}

std::string GenLabel::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += '|';
    out += components[i].empty() ? "\\e" : components[i];
  }
  return out;
}

GenLabel GenLabel::parse(const std::string& text, const Context& ctx) {
  GenLabel label;
  std::size_t pos = 0;
  while (true) {
    auto bar = text.find('|', pos);
    std::string part = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (part == "\\e")
      label.components.emplace_back();
    else if (part.size() == 1)
      label.components.push_back(part);
    else
      throw SyntaxError(pos, "label component must be a single letter or \\e");
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  if (label.arity() != ctx.tape_count())
    throw ArityMismatchError("label " + label.to_string() + " has arity " +
                             std::to_string(label.arity()) + ", context has " +
                             std::to_string(ctx.tape_count()) + " tapes");
  for (int i = 0; i < label.arity(); ++i)
    if (!label.components[i].empty() && !ctx.letter_on_tape(label.components[i][0], i))
      throw UnknownLetterError("letter '" + label.components[i] +
                               "' is not in the alphabet of tape " + std::to_string(i + 1));
  if (label.all_epsilon())
    throw SyntaxError(0, "generator must not be epsilon on every tape");
  return label;
}

MonoidElement MonoidElement::epsilon(int arity) {
  MonoidElement m;
  m.words.assign(static_cast<std::size_t>(arity), std::string());
  return m;
}

MonoidElement MonoidElement::parse(const std::string& text) {
  MonoidElement m;
  std::size_t pos = 0;
  while (true) {
    auto bar = text.find('|', pos);
    std::string part = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    if (part == "\\e") part.clear();
    m.words.push_back(part);
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return m;
}

int MonoidElement::gradation() const {
  int g = 0;
  for (const auto& w : words) g += static_cast<int>(w.size());
  return g;
}

std::string MonoidElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += '|';
    out += words[i].empty() ? "\\e" : words[i];
  }
  return out;
}

MonoidElement concat(const MonoidElement& m, const MonoidElement& n) {
  if (m.arity() != n.arity())
    throw ArityMismatchError("concatenating words of arities " +
                             std::to_string(m.arity()) + " and " +
                             std::to_string(n.arity()));
  MonoidElement out = m;
  for (std::size_t i = 0; i < out.words.size(); ++i) out.words[i] += n.words[i];
  return out;
}

MonoidElement lift(const GenLabel& a) {
  MonoidElement m;
  m.words = a.components;
  return m;
}

std::optional<MonoidElement> factorizations(const MonoidElement& m, const GenLabel& a) {
  if (m.arity() != a.arity()) return std::nullopt;
  MonoidElement rest;
  rest.words.reserve(m.words.size());
  for (std::size_t i = 0; i < m.words.size(); ++i) {
    const std::string& prefix = a.components[i];
    const std::string& word = m.words[i];
    if (word.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    rest.words.push_back(word.substr(prefix.size()));
  }
  return rest;
}

bool GradedLess::operator()(const MonoidElement& a, const MonoidElement& b) const {
  int ga = a.gradation(), gb = b.gradation();
  if (ga != gb) return ga < gb;
  return a.words < b.words;
}

}  // namespace mre
