#include "hauteur/rational.hpp"

#include <stdexcept>

namespace hauteur {

ExactRational::ExactRational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational ExactRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_integer(text));
  return ExactRational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

}  // namespace hauteur
