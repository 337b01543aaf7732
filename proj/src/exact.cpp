#include "permstat/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace permstat {

ExactInt::ExactInt(const std::string& decimal) {
  if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
  }
}

ExactInt factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

ExactInt binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);  // 0 when k > n
  return ExactInt(std::move(r));
}

ExactInt multinomial(std::span<const unsigned long> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("multinomial of an empty part list");
  }
  // (n1+..+nm)! / (n1!..nm!) as a product of binomials of running sums;
  // every intermediate stays an integer.
  mpz_class result = 1;
  unsigned long running = 0;
  mpz_class c;
  for (unsigned long p : parts) {
    running += p;
    mpz_bin_uiui(c.get_mpz_t(), running, p);
    result *= c;
  }
  return ExactInt(std::move(result));
}

ExactInt pow(const ExactInt& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
  return ExactInt(std::move(r));
}

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
  if (den.sign() == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

ExactRational::ExactRational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    ExactInt n(text);
    v_ = mpq_class(n.raw());
    return;
  }
  ExactInt n(text.substr(0, slash));
  ExactInt d(text.substr(slash + 1));
  *this = ExactRational(n, d);
}

std::string ExactRational::str() const {
  if (v_.get_den() == 1) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRational ExactRational::operator/(const ExactRational& o) const {
  if (o.sign() == 0) {
    throw std::domain_error("division by zero");
  }
  return ExactRational(mpq_class(v_ / o.v_));
}

ExactRational pow(const ExactRational& base, unsigned long exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().raw().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.den().raw().get_mpz_t(), exp);
  return ExactRational(ExactInt(std::move(n)), ExactInt(std::move(d)));
}

namespace {

// ln of a positive mpz via mantissa (in [0.5,1)) and binary exponent.
double ln_positive(const mpz_class& z) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace

double ln_exact(const ExactRational& q) {
  if (q.sign() <= 0) {
    throw std::domain_error("ln of non-positive value " + q.str());
  }
  return ln_positive(q.num().raw()) - ln_positive(q.den().raw());
}

double ln_exact(const ExactInt& n) { return ln_exact(ExactRational(n)); }

}  // namespace permstat
