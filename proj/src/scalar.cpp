#include "aomoto/scalar.hpp"

#include <cctype>

namespace aomoto {
namespace {

mpq_class parse_rat(const std::string& s) {
  if (s.empty() || s == "+" || s == "-")
    throw Error(ErrorKind::MalformedScalar, "malformed rational: '" + s + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
        c != '+')
      throw Error(ErrorKind::MalformedScalar, "malformed rational: '" + s + "'");
  }
  try {
    mpq_class v(s.front() == '+' ? s.substr(1) : s);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::MalformedScalar, "malformed rational: '" + s + "'");
  }
}

}  // namespace

std::string Scalar::str() const {
  std::string out = p_.get_str();
  if (q_ != 0) {
    if (p_ == 0) out.clear();
    std::string qs = q_.get_str();
    if (!out.empty() && qs.front() != '-') out += "+";
    out += qs + "w";
  }
  return out;
}

Scalar Scalar::parse(const std::string& text, const Field& field) {
  auto w = text.find('w');
  if (w == std::string::npos) return Scalar(parse_rat(text));
  if (!field.quadratic())
    throw Error(ErrorKind::MixedField,
                "quadratic scalar '" + text + "' in a rational-field file");
  if (w + 1 != text.size())
    throw Error(ErrorKind::MalformedScalar, "malformed scalar: '" + text + "'");
  std::string body = text.substr(0, w);
  // Split "alpha+beta" / "alpha-beta" at the last sign that is not a leading
  // sign; anything before the split is the rational part.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        std::isdigit(static_cast<unsigned char>(body[i - 1]))) {
      split = i;
      break;
    }
  }
  mpq_class p = 0, q;
  std::string qs = body;
  if (split != std::string::npos) {
    p = parse_rat(body.substr(0, split));
    qs = body.substr(split);
  }
  if (qs.empty() || qs == "+")
    q = 1;
  else if (qs == "-")
    q = -1;
  else
    q = parse_rat(qs);
  return Scalar(p, q, field.d);
}

}  // namespace aomoto
