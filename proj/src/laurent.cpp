#include "clusterscope/laurent.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "clusterscope/qvr.hpp"

namespace clusterscope {

namespace {

std::int64_t degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

}  // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, std::int64_t power) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = power;
  return monomial(std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(Exponent e, const BigInt& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::require_same(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Laurent polynomials over " + std::to_string(nvars_) + " and " +
                                std::to_string(o.nvars_) + " variables");
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same(b);
  LaurentPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result = LaurentPoly::constant(p.nvars(), 1);
  LaurentPoly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (p.nvars() != q.nvars()) throw std::invalid_argument("exact_div: variable count mismatch");
  const std::size_t n = p.nvars();
  if (p.is_zero()) return LaurentPoly(n);

  // Strip the common monomial factor of each side so both become
  // polynomials with no variable dividing them; then p/q is Laurent iff the
  // shifted quotient is a polynomial.
  auto min_exponent = [n](const LaurentPoly& f) {
    Exponent m = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
      for (std::size_t i = 0; i < n; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  };
  const Exponent mp = min_exponent(p), mq = min_exponent(q);
  auto shifted = [n](const LaurentPoly& f, const Exponent& m) {
    LaurentPoly out(n);
    Exponent e(n);
    for (const auto& [fe, c] : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = fe[i] - m[i];
      out.add_term(e, c);
    }
    return out;
  };
  LaurentPoly rem = shifted(p, mp);
  const LaurentPoly divisor = shifted(q, mq);
  const auto& [lead_e, lead_c] = *divisor.terms().begin();

  LaurentPoly quotient(n);
  Exponent te(n), e(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    for (std::size_t i = 0; i < n; ++i) {
      te[i] = re[i] - lead_e[i];
      if (te[i] < 0) return std::nullopt;
    }
    if (rc % lead_c != 0) return std::nullopt;
    const BigInt tc = rc / lead_c;
    quotient.add_term(te, tc);
    for (const auto& [de, dc] : divisor.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = te[i] + de[i];
      rem.add_term(e, -tc * dc);
    }
  }
  Exponent shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = mp[i] - mq[i];
  LaurentPoly out(n);
  for (const auto& [qe, c] : quotient.terms()) {
    for (std::size_t i = 0; i < n; ++i) e[i] = qe[i] + shift[i];
    out.add_term(e, c);
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += " * ";
      factors += "x" + std::to_string(i + 1);
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + " * " + factors;
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly out(nvars_);
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      auto [e, c] = term();
      out.add_term(e, negative ? BigInt(-c) : c);
      skip();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = text_[pos_++] == '-';
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Laurent polynomial: " + what + " at offset " + std::to_string(pos_), 0);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Exponent, BigInt> term() {
    Exponent e(nvars_, 0);
    BigInt c = 1;
    while (true) {
      const char ch = peek();
      if (ch == 'x') {
        ++pos_;
        const auto index = std::stoull(digits());
        if (index < 1 || index > nvars_) fail("variable x" + std::to_string(index) + " out of range");
        std::int64_t power = 1;
        if (peek() == '^') {
          ++pos_;
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos_;
          }
          power = std::stoll(digits());
          if (neg) power = -power;
        }
        e[index - 1] += power;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= BigInt(digits());
      } else {
        fail("expected a coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, c};
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars) {
  return LaurentParser(text, nvars).parse();
}

BigRational evaluate(const LaurentPoly& p, std::span<const BigRational> values) {
  if (values.size() != p.nvars()) throw std::invalid_argument("evaluate: wrong number of values");
  BigRational total = 0;
  for (const auto& [e, c] : p.terms()) {
    BigRational t = BigRational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i] == 0)
        throw std::domain_error("evaluate: x" + std::to_string(i + 1) + " is zero");
      BigRational base = e[i] > 0 ? values[i] : BigRational(1) / values[i];
      for (std::int64_t k = 0; k < (e[i] > 0 ? e[i] : -e[i]); ++k) t *= base;
    }
    total += t;
  }
  return total;
}

}  // namespace clusterscope
