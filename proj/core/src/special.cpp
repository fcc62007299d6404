// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/special.hpp"
#include "gfmix/errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <mutex>
#include <string>

namespace gfmix::special {

namespace {

// GSL's default error handler aborts the process; errors are reported
// through return codes instead.
void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

[[noreturn]] void raise(const char* fn, int status, double a, double x) {
    throw std::domain_error(std::string(fn) + "(" + std::to_string(a) + ", " +
                            std::to_string(x) + "): " + gsl_strerror(status));
}

} // namespace

double gamma_p(double a, double x) {
    disable_gsl_abort();
    if (x <= 0.0) return 0.0;
    gsl_sf_result r;
    int status = gsl_sf_gamma_inc_P_e(a, x, &r);
    if (status != GSL_SUCCESS) raise("gamma_p", status, a, x);
    return r.val;
}

double gamma_q(double a, double x) {
    disable_gsl_abort();
    if (x <= 0.0) return 1.0;
    gsl_sf_result r;
    int status = gsl_sf_gamma_inc_Q_e(a, x, &r);
    if (status != GSL_SUCCESS) raise("gamma_q", status, a, x);
    return r.val;
}

double upper_gamma(double a, double x) {
    disable_gsl_abort();
    gsl_sf_result r;
    int status = gsl_sf_gamma_inc_e(a, x, &r);
    if (status == GSL_EUNDRFLW) return 0.0;
    if (status != GSL_SUCCESS) raise("upper_gamma", status, a, x);
    return r.val;
}

std::complex<double> complex_gamma(std::complex<double> z) {
    disable_gsl_abort();
    gsl_sf_result lnr, arg;
    int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (status != GSL_SUCCESS) raise("complex_gamma", status, z.real(), z.imag());
    return std::polar(std::exp(lnr.val), arg.val);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * (1.0 / std::sqrt(2.0))); }

} // namespace gfmix::special
