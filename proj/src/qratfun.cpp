#include "kostka/qratfun.hpp"

namespace kostka {

QRatFun::QRatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

void QRatFun::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (!g.is_one()) {
    QPoly q, r;
    QPoly::divmod(num_, g, q, r);
    num_ = q;
    QPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rat(1) / lead);
    den_ = den_.scaled(Rat(1) / lead);  // den becomes monic
  }
}

const QPoly& QRatFun::as_polynomial() const {
  if (!den_.is_one())
    throw std::runtime_error("rational function is not a polynomial: " + to_string());
  return num_;
}

QRatFun QRatFun::operator+(const QRatFun& o) const {
  return QRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRatFun QRatFun::operator-(const QRatFun& o) const {
  return QRatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRatFun QRatFun::operator-() const {
  QRatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

QRatFun QRatFun::operator*(const QRatFun& o) const {
  return QRatFun(num_ * o.num_, den_ * o.den_);
}

QRatFun QRatFun::operator/(const QRatFun& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return QRatFun(num_ * o.den_, den_ * o.num_);
}

std::string QRatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

QRatFun QRatFun::parse(const std::string& text) {
  // Either a plain polynomial or "(num) / (den)".
  auto strip = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };
  std::string s = strip(text);
  if (!s.empty() && s.front() == '(') {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') {
        --depth;
        if (depth == 0) {
          std::string rest = strip(s.substr(i + 1));
          if (rest.empty()) break;  // "(poly)" alone
          if (rest.front() != '/')
            throw std::invalid_argument("malformed rational function: " + text);
          std::string den = strip(rest.substr(1));
          if (den.size() < 2 || den.front() != '(' || den.back() != ')')
            throw std::invalid_argument("malformed rational function: " + text);
          return QRatFun(QPoly::parse(s.substr(1, i - 1)),
                         QPoly::parse(den.substr(1, den.size() - 2)));
        }
      }
    }
    return QRatFun(QPoly::parse(s.substr(1, s.find_last_of(')') - 1)));
  }
  return QRatFun(QPoly::parse(s));
}

}  // namespace kostka
