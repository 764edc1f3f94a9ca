#include "kostka/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kostka {

QPoly::QPoly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(const Rat& c, int k) {
  if (c == 0) return QPoly();
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::t_monomial(const Rat& c, int k) { return monomial(c, 2 * k); }

QPoly QPoly::from_t_coeffs(const std::vector<Rat>& tcoeffs) {
  std::vector<Rat> v(tcoeffs.size() * 2, Rat(0));
  for (std::size_t i = 0; i < tcoeffs.size(); ++i) v[2 * i] = tcoeffs[i];
  return QPoly(std::move(v));
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rat QPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat QPoly::leading() const {
  if (coeffs_.empty()) return Rat(0);
  return coeffs_.back();
}

bool QPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool QPoly::has_nonneg_int_coeffs() const {
  for (const auto& c : coeffs_)
    if (c < 0 || denominator(c) != 1) return false;
  return true;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v) c = -c;
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rat& c) const {
  if (c == 0) return QPoly();
  std::vector<Rat> v(coeffs_);
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

QPoly operator*(const Rat& c, const QPoly& p) { return p.scaled(c); }

QPoly QPoly::power_substitute(int k) const {
  if (k < 1) throw std::invalid_argument("power_substitute requires k >= 1");
  if (is_zero()) return QPoly();
  std::vector<Rat> v((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return QPoly(std::move(v));
}

Rat QPoly::evaluate(const Rat& q) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rat> r(a.coeffs_);
  int db = b.degree();
  std::vector<Rat> q_coeffs;
  if (static_cast<int>(r.size()) - 1 >= db)
    q_coeffs.assign(r.size() - static_cast<std::size_t>(db), Rat(0));
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    if (r[static_cast<std::size_t>(d)] == 0) continue;
    Rat f = r[static_cast<std::size_t>(d)] / b.coeffs_.back();
    q_coeffs[static_cast<std::size_t>(d - db)] = f;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(d - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
  }
  quot = QPoly(std::move(q_coeffs));
  rem = QPoly(std::move(r));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rat(1) / a.leading());  // monic
}

namespace {

std::string term_string(const Rat& c, int k, const char* var, int stride) {
  int e = k / stride;
  std::string coef = rat_to_string(c);
  if (e == 0) return coef;
  std::string pow = (e == 1) ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  if (c == 1) return pow;
  if (c == -1) return "-" + pow;
  return coef + "*" + pow;
}

std::string render(const std::vector<Rat>& coeffs, const char* var, int stride) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    std::string term = term_string(coeffs[k], static_cast<int>(k), var, stride);
    if (first) {
      out << term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string QPoly::to_string() const { return render(coeffs_, "q", 1); }

std::string QPoly::pretty(bool var_q) const {
  if (var_q || !is_even()) return render(coeffs_, "q", 1);
  return render(coeffs_, "t", 2);
}

QPoly QPoly::parse(const std::string& text) {
  // Terms separated by +/- at top level: "c", "c*q^k", "q^k", "q".
  std::vector<Rat> coeffs;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size()) throw std::invalid_argument("empty polynomial literal");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("expected +/- in polynomial: " + text);
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // optional sign attached to the coefficient itself ("+ -2*q")
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    // read coefficient (optional) and variable part (optional)
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    Rat coef(1);
    bool have_coef = i > start;
    if (have_coef) coef = parse_rat(text.substr(start, i - start));
    skip_ws();
    int expo = 0;
    bool have_var = false;
    if (i < text.size() && (text[i] == '*' || text[i] == 'q')) {
      if (text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= text.size() || text[i] != 'q')
        throw std::invalid_argument("expected q in polynomial: " + text);
      ++i;
      have_var = true;
      expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == es) throw std::invalid_argument("missing exponent: " + text);
        expo = std::stoi(text.substr(es, i - es));
      }
    }
    if (!have_coef && !have_var)
      throw std::invalid_argument("malformed polynomial term: " + text);
    if (static_cast<std::size_t>(expo) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(expo) + 1, Rat(0));
    coeffs[static_cast<std::size_t>(expo)] += sign * coef;
    skip_ws();
  }
  return QPoly(std::move(coeffs));
}

}  // namespace kostka
