/*
   Copyright 2026 The mahler-gauge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MG_INTS_HPP
#define MG_INTS_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mg {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

/* Error hierarchy shared across the library.  The code() values match the
 * statuses of the public C API so the mapping there is a cast. */
class Error : public std::runtime_error {
 public:
  Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& w) : Error(2, w) {}
};
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& w) : Error(3, w) {}
};
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& w) : Error(4, w) {}
};
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& w) : Error(5, w) {}
};
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& w) : Error(6, w) {}
};

inline int sign_of(const BigInt& z) { return z.sign(); }
inline int sign_of(const BigRat& q) { return q.sign(); }

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline BigRat rat_pow(const BigRat& base, long e) {
  if (e >= 0) {
    BigRat r(boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                        static_cast<unsigned>(e)),
             boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                        static_cast<unsigned>(e)));
    return r;
  }
  if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
  BigRat inv(boost::multiprecision::denominator(base),
             boost::multiprecision::numerator(base));
  return rat_pow(inv, -e);
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= BigInt(i + 1);
  }
  return r;
}

/* Floor of the integer square root; input must be >= 0. */
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

/* Parses a decimal string ("-3", "2.75", "1e3", "4.1e-2") or a fraction
 * ("22/7") into an exact rational. */
inline BigRat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  std::string s = text;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return BigRat(num, den);
  }
  try {
    long expo = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
      expo = std::stol(s.substr(epos + 1));
      s = s.substr(0, epos);
    }
    std::string digits = s;
    auto dot = s.find('.');
    long frac_len = 0;
    if (dot != std::string::npos) {
      frac_len = static_cast<long>(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad number '" + text + "'");
    BigInt mant(digits);
    BigRat r(mant);
    long net = expo - frac_len;
    BigInt p10 = int_pow(BigInt(10), static_cast<unsigned long>(net >= 0 ? net : -net));
    if (net >= 0)
      r *= BigRat(p10);
    else
      r /= BigRat(p10);
    return r;
  } catch (const std::exception&) {
    throw ParseError("cannot parse number '" + text + "'");
  }
}

/* First primes, used for mod-p irreducibility batteries. */
inline const std::vector<long>& small_primes() {
  static const std::vector<long> p = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                      31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                      73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  return p;
}

inline bool is_small_prime(long n) {
  for (long p : small_primes())
    if (p == n) return true;
  return false;
}

}  // namespace mg

#endif
