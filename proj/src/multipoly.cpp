#include "liecheck/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         terms_.begin()->first == Exponents(nvars_, 0);
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::promoted(std::size_t nvars) const {
  if (nvars_ == nvars) return *this;
  if (nvars_ != 0 || nvars < nvars_)
    throw DimensionMismatch("polynomial variable count");
  // a 0-variable polynomial is a constant; re-key it
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms_) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) {
    if (nvars_ == 0) {
      *this = promoted(o.nvars_);
    } else if (o.nvars_ == 0) {
      return *this += o.promoted(nvars_);
    } else {
      throw DimensionMismatch("polynomial variable count");
    }
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  MultiPoly neg = -o;
  return *this += neg;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) {
    if (a.nvars_ == 0) return a.promoted(b.nvars_) * b;
    if (b.nvars_ == 0) return a * b.promoted(a.nvars_);
    throw DimensionMismatch("polynomial variable count");
  }
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point size");
  Rational total{0};
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational a = abs(c);
    bool monomial = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (monomial) mono << "*";
      monomial = true;
      if (i < names.size())
        mono << names[i];
      else
        mono << "x" << i;
      if (e[i] > 1) mono << "^" << e[i];
    }
    if (!monomial) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << a.get_str() << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

} // namespace liecheck
