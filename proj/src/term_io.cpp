#include "tokspace/term_io.hpp"

#include <cctype>

namespace tokspace {

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void err(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("SyntaxError", what + " at " + std::to_string(line) + ":" +
                            std::to_string(col) + " (offset " + std::to_string(i) + ")");
  }

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string name() {
    std::size_t start = i;
    while (i < s.size() && name_char(s[i])) ++i;
    if (i == start) err("expected a symbol");
    return s.substr(start, i - start);
  }

  Symbol marker() {
    // after '#': letters form the name, trailing digits the index; a name
    // that is all digits ("#0", "#1") has no index part
    std::size_t start = i;
    while (i < s.size() && name_char(s[i])) ++i;
    if (i == start) err("expected a marker name");
    std::string body = s.substr(start, i - start);
    std::size_t split = body.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(body[split - 1])))
      --split;
    if (split == 0) return Symbol::marker(body);
    std::string nm = body.substr(0, split);
    int idx = split < body.size() ? std::stoi(body.substr(split)) : 0;
    return Symbol::marker(nm, idx);
  }

  Symbol symbol() {
    ws();
    if (eat('#')) return marker();
    if (eat('<')) {
      Symbol l = symbol();
      ws();
      expect(',');
      Symbol r = symbol();
      ws();
      expect('>');
      return Symbol::pair(std::move(l), std::move(r));
    }
    std::string n = name();
    if (peek() != ':') return Symbol::atom(std::move(n));
    ++i;
    if (n == "fn") {
      expect('{');
      std::vector<std::pair<Symbol, Symbol>> kv;
      ws();
      if (!eat('}')) {
        do {
          Symbol k = symbol();
          ws();
          expect('>');
          Symbol v = symbol();
          kv.emplace_back(std::move(k), std::move(v));
          ws();
        } while (eat(','));
        expect('}');
      }
      return Symbol::fn(std::move(kv));
    }
    if (n == "set") {
      expect('{');
      std::vector<Symbol> members;
      ws();
      if (!eat('}')) {
        do {
          members.push_back(symbol());
          ws();
        } while (eat(','));
        expect('}');
      }
      return Symbol::subset(std::move(members));
    }
    if (n == "term") return Symbol::term(term());
    return Symbol::tag(std::move(n), symbol());
  }

  TreeTerm term() {
    ws();
    if (eat('(')) {
      std::vector<TreeTerm> parts;
      ws();
      if (!eat(')')) {
        do {
          parts.push_back(term());
          ws();
        } while (eat(','));
        expect(')');
      }
      return TreeTerm::amp(TreeTerm::concat(std::move(parts)));
    }
    Symbol leaf = symbol();
    if (leaf.kind() == Symbol::Kind::Atom && leaf.text() == "eps") return TreeTerm::eps();
    return TreeTerm::leaf(std::move(leaf));
  }

  void end() {
    ws();
    if (i != s.size()) err("trailing input");
  }
};

}  // namespace

Symbol parse_symbol(const std::string& text) {
  Parser p(text);
  Symbol s = p.symbol();
  p.end();
  return s;
}

TreeTerm parse_term(const std::string& text) {
  Parser p(text);
  TreeTerm t = p.term();
  p.end();
  return t;
}

std::string print_symbol(const Symbol& s) { return s.str(); }
std::string print_term(const TreeTerm& t) { return t.str(); }

}  // namespace tokspace
