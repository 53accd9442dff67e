#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace graphmass {

/// Arbitrary-precision integers and rationals. Exact arithmetic is the
/// default in the recurrence solvers; doubles enter only at evaluation
/// boundaries.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

/// Rising factorial (z)_k = z (z+1) ... (z+k-1), with (z)_0 = 1.
template <typename Scalar>
Scalar rising_factorial(const Scalar& z, int k) {
  Scalar p(1);
  Scalar term(z);
  for (int i = 0; i < k; ++i) {
    p *= term;
    term += 1;
  }
  return p;
}

inline double to_double(const BigRat& q) { return q.template convert_to<double>(); }

/// Parses "p/q", an integer "p", or a decimal like "0.25" (read exactly as
/// 25/100). Throws on malformed input or zero denominator.
inline BigRat parse_rational(const std::string& s) {
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return BigRat(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
      if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
      BigInt den = 1;
      for (std::size_t k = 0; k < tail.size(); ++k) den *= 10;
      const bool negative = !head.empty() && head[0] == '-';
      BigInt whole = head.empty() || head == "-" || head == "+" ? BigInt(0)
                                                                : abs(BigInt(head));
      BigRat value = BigRat(whole * den + BigInt(tail), den);
      return negative ? -value : value;
    }
    return BigRat(BigInt(s));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

inline std::string format_rational(const BigRat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace graphmass
