#include "efp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace efp {

Int floor_rat(const Rat& a) {
  Int q = numerator(a) / denominator(a);  // truncates toward zero
  if (numerator(a) < 0 && q * denominator(a) != numerator(a)) --q;
  return q;
}

Int ceil_rat(const Rat& a) { return -floor_rat(-a); }

Int floor_div(const Rat& a, const Rat& b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  return floor_rat(a / b);
}

bool on_grid(const Rat& v, const Rat& spacing) {
  if (v < 0) return false;
  Rat q = v / spacing;
  return denominator(q) == 1;
}

Rat round_up_to_grid(const Rat& v, const Rat& spacing) {
  Int k = ceil_rat(v / spacing);
  if (k < 0) k = 0;
  return Rat(k) * spacing;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  std::string t = s;
  bool negative = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    t = t.substr(1);
  }
  if (t.empty()) throw std::invalid_argument("empty rational: '" + s + "'");

  Rat result;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash);
    std::string den = t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    result = Rat(Int(num), d);
  } else if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string whole = t.substr(0, dot);
    std::string frac = t.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rat(Int(whole) * scale + Int(frac), scale);
  } else {
    if (!all_digits(t))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    result = Rat(Int(t));
  }
  return negative ? Rat(-result) : result;
}

std::string format_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace efp
