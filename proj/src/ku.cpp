#include "defk/ku.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "defk/error.hpp"

namespace defk {

std::uint64_t ExtNat::finite() const {
  if (is_infinite()) throw std::logic_error("finite() on an infinite multiplicity");
  return value_;
}

ExtNat ExtNat::operator+(ExtNat other) const {
  if (is_infinite() || other.is_infinite()) return infinity();
  return ExtNat(value_ + other.value_);
}

ExtNat ExtNat::operator*(ExtNat other) const {
  if (is_zero() || other.is_zero()) return ExtNat(0);
  if (is_infinite() || other.is_infinite()) return infinity();
  return ExtNat(value_ * other.value_);
}

ExtNat ExtNat::minus_one() const {
  if (is_infinite()) return infinity();
  if (is_zero()) throw std::logic_error("minus_one() on zero");
  return ExtNat(value_ - 1);
}

std::string to_string(ExtNat x) {
  return x.is_infinite() ? "inf" : std::to_string(x.finite());
}

void ElementaryKuModule::add(KuSummand s, ExtNat mult) {
  if (mult.is_zero()) return;
  if (s.torsion == 1) return;  // ku/1 is contractible
  auto [it, inserted] = summands_.emplace(s, mult);
  if (!inserted) it->second = it->second + mult;
}

ExtNat ElementaryKuModule::multiplicity(KuSummand s) const {
  auto it = summands_.find(s);
  return it == summands_.end() ? ExtNat(0) : it->second;
}

ElementaryKuModule ku_module(std::initializer_list<std::pair<KuSummand, ExtNat>> parts) {
  ElementaryKuModule x;
  for (const auto& [s, mult] : parts) x.add(s, mult);
  return x;
}

void HomotopyGroupData::add_rank(ExtNat r) { rank = rank + r; }

void HomotopyGroupData::add_torsion(std::uint64_t n, ExtNat mult) {
  if (mult.is_zero()) return;
  auto [it, inserted] = torsion.emplace(n, mult);
  if (!inserted) it->second = it->second + mult;
}

std::string to_string(const HomotopyGroupData& g) {
  if (g.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (!g.rank.is_zero()) {
    if (g.rank.is_infinite())
      out << "Z^inf";
    else if (g.rank.finite() == 1)
      out << "Z";
    else
      out << "Z^" << g.rank.finite();
    first = false;
  }
  for (const auto& [n, mult] : g.torsion) {
    if (mult.is_infinite()) {
      if (!first) out << " + ";
      out << "(Z/" << n << ")^inf";
      first = false;
    } else {
      for (std::uint64_t i = 0; i < mult.finite(); ++i) {
        if (!first) out << " + ";
        out << "Z/" << n;
        first = false;
      }
    }
  }
  return out.str();
}

HomotopyGroupData pi(const ElementaryKuModule& x, int m) {
  HomotopyGroupData out;
  if (m < 0) return out;  // connective
  for (const auto& [s, mult] : x.summands()) {
    if (m < static_cast<int>(s.suspension)) continue;
    if ((m - static_cast<int>(s.suspension)) % 2 != 0) continue;
    if (s.is_free())
      out.add_rank(mult);
    else
      out.add_torsion(s.torsion, mult);
  }
  return out;
}

HomotopyGroupData bott_cokernel(const ElementaryKuModule& x, int m) {
  HomotopyGroupData out;
  if (m < 0) return out;
  for (const auto& [s, mult] : x.summands()) {
    if (static_cast<int>(s.suspension) != m) continue;
    if (s.is_free())
      out.add_rank(mult);
    else
      out.add_torsion(s.torsion, mult);
  }
  return out;
}

bool bott_injective(const ElementaryKuModule& x, int m) {
  // beta is diagonal with respect to the wedge decomposition, so injectivity
  // reduces to the source slots embedding into the target slots.
  HomotopyGroupData source = pi(x, m - 2);
  HomotopyGroupData target = pi(x, m);
  if (source.rank > target.rank) return false;
  for (const auto& [n, mult] : source.torsion) {
    auto it = target.torsion.find(n);
    ExtNat available = it == target.torsion.end() ? ExtNat(0) : it->second;
    if (mult > available) return false;
  }
  return true;
}

std::uint32_t suspension_degree(const ElementaryKuModule& x) {
  if (x.is_zero()) raise("ZeroModule", "suspension degree of the zero module");
  std::uint32_t degree = 0;
  for (const auto& [s, mult] : x.summands()) degree = std::max(degree, s.suspension);
  return degree;
}

ElementaryKuModule smash(const ElementaryKuModule& x, const ElementaryKuModule& y) {
  ElementaryKuModule out;
  for (const auto& [sx, mx] : x.summands())
    for (const auto& [sy, my] : y.summands()) {
      const std::uint32_t susp = sx.suspension + sy.suspension;
      const ExtNat mult = mx * my;
      if (sx.is_free() && sy.is_free()) {
        out.add(ku_summand(susp), mult);
      } else if (sx.is_free() || sy.is_free()) {
        out.add(ku_mod(sx.torsion + sy.torsion, susp), mult);
      } else {
        const std::uint64_t g = std::gcd(sx.torsion, sy.torsion);
        out.add(ku_mod(g, susp), mult);
        out.add(ku_mod(g, susp + 1), mult);
      }
    }
  return out;
}

ElementaryKuModule free_product(const ElementaryKuModule& x, const ElementaryKuModule& y) {
  const KuSummand unit = ku_summand(0);
  if (x.multiplicity(unit).is_zero() || y.multiplicity(unit).is_zero())
    raise("NoUnitSummand", "free product needs a degree-0 ku summand on both sides");
  ElementaryKuModule out;
  out.add(unit, 1);
  for (const auto& [s, mult] : x.summands())
    out.add(s, s == unit ? mult.minus_one() : mult);
  for (const auto& [s, mult] : y.summands())
    out.add(s, s == unit ? mult.minus_one() : mult);
  return out;
}

ElementaryKuModule kdef_finite_group(std::uint64_t r) {
  if (r == 0) raise("ZeroModule", "a group has at least one irreducible representation");
  ElementaryKuModule out;
  out.add(ku_summand(0), r);
  return out;
}

HomotopyGroupData deformation_rho(const ElementaryKuModule& x, int m) {
  if (m < 1) raise("NonPositiveDegree", "the splitting only applies in degrees m >= 1");
  if (x.multiplicity(ku_summand(0)).is_zero())
    raise("NoUnitSummand", "no K^{-m}(*) summand to split off");
  HomotopyGroupData out = pi(x, m);
  if (m % 2 == 0) out.rank = out.rank.minus_one();
  return out;
}

std::string to_string(const ElementaryKuModule& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, mult] : x.summands()) {
    if (!first) out << " + ";
    first = false;
    if (mult.is_infinite())
      out << "inf*";
    else if (mult.finite() != 1)
      out << mult.finite() << "*";
    if (s.suspension == 1)
      out << "S(";
    else if (s.suspension >= 2)
      out << "S^" << s.suspension << "(";
    out << "ku";
    if (!s.is_free()) out << "/" << s.torsion;
    if (s.suspension >= 1) out << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    std::string token = pos < text.size() ? text.substr(pos, 8) : "<end of input>";
    raise("ParseError", what + " at '" + token + "' (position " + std::to_string(pos) + ")");
  }

  bool consume_word(const char* word) {
    skip_space();
    std::size_t len = std::char_traits<char>::length(word);
    if (text.compare(pos, len, word) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return value;
  }

  ElementaryKuModule expression() {
    ElementaryKuModule out = term();
    while (consume('+')) {
      ElementaryKuModule next = term();
      for (const auto& [s, mult] : next.summands()) out.add(s, mult);
    }
    return out;
  }

  ElementaryKuModule term() {
    // multiplicity prefix: K*term or inf*term
    skip_space();
    std::size_t saved = pos;
    if (consume_word("inf")) {
      if (consume('*')) return scale(term(), ExtNat::infinity());
      pos = saved;
    } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t k = number();
      if (consume('*')) return scale(term(), ExtNat(k));
      if (k == 0) return ElementaryKuModule{};  // bare 0 = the zero module
      pos = saved;
      fail("expected '*' after a multiplicity");
    }
    return primary();
  }

  ElementaryKuModule primary() {
    if (consume_word("ku")) {
      if (consume('/')) {
        std::uint64_t n = number();
        if (n < 2) fail("ku/N needs N >= 2");
        return ku_module({{ku_mod(n), 1}});
      }
      return ku_module({{ku_summand(0), 1}});
    }
    if (consume_word("S")) {
      std::uint32_t i = 1;
      if (consume('^')) i = static_cast<std::uint32_t>(number());
      if (!consume('(')) fail("expected '(' after suspension");
      ElementaryKuModule inner = expression();
      if (!consume(')')) fail("expected ')'");
      return suspend(inner, i);
    }
    if (consume('(')) {
      ElementaryKuModule inner = expression();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    fail("expected 'ku', 'ku/N', 'S', '0' or '('");
  }

  static ElementaryKuModule scale(const ElementaryKuModule& x, ExtNat k) {
    ElementaryKuModule out;
    for (const auto& [s, mult] : x.summands()) out.add(s, mult * k);
    return out;
  }

  static ElementaryKuModule suspend(const ElementaryKuModule& x, std::uint32_t i) {
    ElementaryKuModule out;
    for (const auto& [s, mult] : x.summands())
      out.add(KuSummand{s.suspension + i, s.torsion}, mult);
    return out;
  }
};

}  // namespace

ElementaryKuModule parse_ku_expression(const std::string& text) {
  Parser p(text);
  ElementaryKuModule out = p.expression();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return out;
}

}  // namespace defk
