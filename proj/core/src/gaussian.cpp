#include "magical/gaussian.hpp"

#include <sstream>
#include <stdexcept>

namespace magical {

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw std::invalid_argument("Gaussian division by zero");
  Rational norm = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / norm;
  im = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  return *this;
}

std::string Gaussian::to_string() const {
  if (im == 0) return re.get_str();
  std::ostringstream out;
  if (re != 0) out << re.get_str() << (im > 0 ? " + " : " - ");
  else if (im < 0) out << "-";
  Rational mag = abs(im);
  if (mag != 1) out << mag.get_str();
  out << "i";
  return out.str();
}

}  // namespace magical
