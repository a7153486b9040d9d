// Copyright 2026 The bincov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "upward_log.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <memory>
#include <string>

#include "bincov/errors.hpp"

namespace bincov::detail {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void setRational(Real& out, const Rational& value, mpfr_rnd_t rnd) {
  mpq_t q;
  mpq_init(q);
  const std::string text = formatRational(value);
  mpq_set_str(q, text.c_str(), 10);
  mpq_canonicalize(q);
  mpfr_set_q(out.get(), q, rnd);
  mpq_clear(q);
}

BigInt ceilToInteger(Real& value) {
  mpfr_ceil(value.get(), value.get());
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, value.get(), MPFR_RNDU);
  std::unique_ptr<char, void (*)(void*)> text(mpz_get_str(nullptr, 10, z), std::free);
  mpz_clear(z);
  return BigInt(std::string(text.get()));
}

}  // namespace

BigInt ceilScaledLog(const Rational& factor, const Rational& x) {
  if (factor < 0 || x < 1) throw InvalidArgument("scaled logarithm needs factor >= 0 and x >= 1");
  Real arg, f;
  setRational(arg, x, MPFR_RNDU);
  mpfr_log(arg.get(), arg.get(), MPFR_RNDU);
  setRational(f, factor, MPFR_RNDU);
  mpfr_mul(arg.get(), arg.get(), f.get(), MPFR_RNDU);
  return ceilToInteger(arg);
}

BigInt ceilScaledConfidenceLog(const Rational& factor, const Rational& delta) {
  if (factor < 0 || delta <= 0 || delta >= 1) {
    throw InvalidArgument("confidence logarithm needs factor >= 0 and 0 < delta < 1");
  }
  Real v, f;
  // Each step rounds in the direction that can only enlarge the result.
  setRational(v, Rational(1) - delta, MPFR_RNDU);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDU);
  mpfr_ui_sub(v.get(), 1, v.get(), MPFR_RNDD);
  mpfr_ui_div(v.get(), 2, v.get(), MPFR_RNDU);
  mpfr_log(v.get(), v.get(), MPFR_RNDU);
  setRational(f, factor, MPFR_RNDU);
  mpfr_mul(v.get(), v.get(), f.get(), MPFR_RNDU);
  return ceilToInteger(v);
}

}  // namespace bincov::detail
