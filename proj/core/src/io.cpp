#include "drinmod/io.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace drinmod {

std::string to_string(const RingElem& x) {
  if (x.is_zero()) return "0";
  const Fq& f = *x.field();
  std::string out;
  for (const Term& t : x.terms()) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    bool constant_monomial = t.m.t == 0 && t.m.total_gdeg() == 0;
    if (t.c != 1 || constant_monomial) {
      std::string c = f.to_string(t.c);
      if (!f.is_prime_field() && c.find('+') != std::string::npos) c = "(" + c + ")";
      factors.push_back(c);
    }
    if (t.m.t != 0)
      factors.push_back(t.m.t == 1 ? "T" : "T^" + std::to_string(t.m.t));
    for (unsigned i = 0; i < x.nvars(); ++i) {
      if (t.m.g[i] == 0) continue;
      std::string g = "g" + std::to_string(i + 1);
      if (t.m.g[i] != 1) g += "^" + std::to_string(t.m.g[i]);
      factors.push_back(g);
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const Fq& f;
  unsigned nvars;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void die(const std::string& why) {
    throw std::invalid_argument("parse_ring_elem: " + why + " at position " +
                                std::to_string(pos) + " in '" + s + "'");
  }

  long long integer() {
    ws();
    bool neg = eat('-');
    ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      die("expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  // coefficient factor: "7", "(w+1)", "w", "w^2"
  uint32_t coefficient() {
    ws();
    if (eat('(')) {
      size_t start = pos;
      int depth = 1;
      while (pos < s.size() && depth > 0) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) die("unbalanced parentheses");
      return f.from_string(s.substr(start, pos - 1 - start));
    }
    if (pos < s.size() && s[pos] == 'w') {
      size_t start = pos;
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
      return f.from_string(s.substr(start, pos - start));
    }
    long long v = integer();
    if (f.is_prime_field()) return f.from_int(v);
    if (v < 0 || static_cast<uint64_t>(v) >= f.q()) die("coefficient code out of range");
    return static_cast<uint32_t>(v);
  }

  Term term() {
    Term t;
    t.c = 1;
    bool any = false;
    for (;;) {
      ws();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (c == 'T') {
        ++pos;
        long long e = eat('^') ? integer() : 1;
        if (e < INT32_MIN || e > INT32_MAX) die("T exponent out of range");
        t.m.t += static_cast<int32_t>(e);
      } else if (c == 'g') {
        ++pos;
        long long idx = integer();
        if (idx < 1 || static_cast<unsigned>(idx) > nvars) die("bad g index");
        long long e = eat('^') ? integer() : 1;
        if (e < 0 || e > 0xffff) die("g exponent out of range");
        t.m.g[idx - 1] = static_cast<uint16_t>(t.m.g[idx - 1] + e);
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'w') {
        t.c = f.mul(t.c, coefficient());
      } else {
        die("unexpected character");
      }
      any = true;
      ws();
      if (!eat('*')) break;
    }
    if (!any) die("empty term");
    return t;
  }
};

}  // namespace

RingElem parse_ring_elem(const std::string& s, const FqPtr& field, unsigned nvars) {
  Parser p{s, 0, *field, nvars};
  p.ws();
  if (p.pos >= s.size()) throw std::invalid_argument("parse_ring_elem: empty input");
  std::vector<Term> terms;
  for (;;) {
    Term t = p.term();
    if (t.c != 0) terms.push_back(t);
    p.ws();
    if (p.pos >= s.size()) break;
    if (!p.eat('+')) p.die("expected '+' between terms");
  }
  // "0" parses as the single term 0*1 which the filter above drops.
  return RingElem::from_terms(field, nvars, std::move(terms));
}

std::string to_string(const UPoly<RingElem>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = 0; i <= p.degree(); ++i) {
    const RingElem& c = p.coeff(static_cast<size_t>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    bool needs_parens = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c.is_one())
      out += var;
    else
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace drinmod
