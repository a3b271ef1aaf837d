#include "bms/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bms {

namespace {

// Recursive-descent parser over the scalar field.
class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) : text_(text) {}

  Scalar parse() {
    Scalar v = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << "parse error at position " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expression() {
    Scalar v = consume('-') ? -term() : term();
    while (true) {
      if (consume('+'))
        v += term();
      else if (consume('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        Scalar d = factor();
        if (d.isZero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    Scalar v = base();
    if (consume('^')) {
      bool neg = consume('-');
      long e = integer();
      v = v.pow(static_cast<int>(neg ? -e : e));
    }
    return v;
  }

  long integer() {
    skipSpace();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  Scalar base() {
    char c = peek();
    if (c == '(') {
      consume('(');
      Scalar v = expression();
      if (!consume(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      consume('-');
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skipSpace();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(mpq_class(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      skipSpace();
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return Scalar::variable(static_cast<Var>(i));
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parseScalar(const std::string& text) { return ScalarParser(text).parse(); }

mpq_class parseRational(const std::string& text) {
  Scalar s = parseScalar(text);
  return s.asRational();
}

std::string toText(const ModuleVector& v) {
  if (v.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.coeffs()) {
    Scalar coeff = c;
    bool negative = coeff.num().leadingCoeff() < 0;
    if (negative) coeff = -coeff;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool bare = coeff.isOne();
    if (m.empty()) {
      os << coeff.str();
      continue;
    }
    if (!bare) {
      bool simple = coeff.isRational() && coeff.den().isOne();
      if (simple)
        os << coeff.str() << " ";
      else
        os << "(" << coeff.str() << ") ";
    }
    os << m.str();
  }
  return os.str();
}

namespace {

std::string qPower(int level2) {
  std::ostringstream os;
  if (level2 == 2) return "q";
  if (level2 % 2 == 0) {
    os << "q^" << level2 / 2;
  } else {
    os << "q^{" << level2 << "/2}";
  }
  return os.str();
}

}  // namespace

std::string toText(const QSeries& s) {
  std::ostringstream os;
  os << "q^{" << s.offset.str() << "} * (";
  bool first = true;
  for (const auto& [l2, c] : s.coeffs) {
    if (c == 0) continue;
    long long v = c;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    long long a = v < 0 ? -v : v;
    if (l2 == 0) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      os << qPower(l2);
    }
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

nlohmann::json toJson(const ModuleVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : v.coeffs()) {
    nlohmann::json t;
    t["m"] = nlohmann::json::array();
    for (int a : m.mPart) t["m"].push_back(-a);
    t["q"] = nlohmann::json::array();
    for (int j : m.qPart) t["q"].push_back(-(2 * j - 1));  // doubled modes
    t["l"] = nlohmann::json::array();
    for (int a : m.lPart) t["l"].push_back(-a);
    t["coeff"] = {{"num", polyToString(c.num())}, {"den", polyToString(c.den())}};
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"level2", v.level2()}, {"terms", std::move(terms)}};
}

ModuleVector vectorFromJson(const nlohmann::json& j) {
  ModuleVector v(j.at("level2").get<int>());
  for (const auto& t : j.at("terms")) {
    PBWMonomial m;
    for (const auto& a : t.at("m")) m.mPart.push_back(-a.get<int>());
    for (const auto& a : t.at("q")) m.qPart.push_back((-a.get<int>() + 1) / 2);
    for (const auto& a : t.at("l")) m.lPart.push_back(-a.get<int>());
    Scalar num = parseScalar(t.at("coeff").at("num").get<std::string>());
    Scalar den = parseScalar(t.at("coeff").at("den").get<std::string>());
    v.add(m, num / den);
  }
  return v;
}

nlohmann::json toJson(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [l2, c] : s.coeffs) coeffs[std::to_string(l2)] = c;
  return nlohmann::json{
      {"offset", s.offset.str()}, {"cutoff2", s.cutoff2}, {"coeffs", std::move(coeffs)}};
}

QSeries seriesFromJson(const nlohmann::json& j) {
  QSeries s;
  s.offset = parseScalar(j.at("offset").get<std::string>());
  s.cutoff2 = j.at("cutoff2").get<int>();
  for (const auto& [key, val] : j.at("coeffs").items())
    s.coeffs[std::stoi(key)] = val.get<long long>();
  return s;
}

}  // namespace bms
