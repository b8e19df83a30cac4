#include "kronkit/rational.hpp"

#include <cctype>
#include <ostream>

#include "kronkit/error.hpp"

namespace kronkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case Errc::NonPositiveRow: return "NonPositiveRow";
    case Errc::EmptyDiagram: return "EmptyDiagram";
    case Errc::BoxCountMismatch: return "BoxCountMismatch";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ComponentNotTraceless: return "ComponentNotTraceless";
    case Errc::NotSquare: return "NotSquare";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::TruncatedToZero: return "TruncatedToZero";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InternalNonInteger: return "InternalNonInteger";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw Error(Errc::ParseError, "empty integer '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(Errc::ParseError, "not an integer '" + std::string(text) + "'");
    }
  }
  // mpz rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm2();
  if (n.is_zero()) throw std::domain_error("GaussianRational division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  return os << "(" << g.re << " + " << g.im << "i)";
}

}  // namespace kronkit
