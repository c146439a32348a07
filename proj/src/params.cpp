#include "mbasym/params.hpp"

#include "mbasym/special.hpp"

namespace mbasym {

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::JSeries: return "J";
        case SeriesKind::AlternatingJ: return "alternating-J";
        case SeriesKind::YSeries: return "Y";
    }
    return "?";
}

Params::Params(Real a, Real b, Real g, Real nu, Real mu)
    : a_(std::move(a)), b_(std::move(b)), g_(std::move(g)),
      nu_(std::move(nu)), mu_(std::move(mu)) {
    if (a_.sign() <= 0) throw DomainError("Params: a must be positive");
    if (b_.sign() <= 0) throw DomainError("Params: b must be positive");
    if (mu_.sign() <= 0) throw DomainError("Params: mu must be positive");
    // 2 mu - g > 1/2 makes the summand decay like n^(-delta) with delta > 1.
    Real margin = 2 * mu_ - g_;
    if (!(margin > Real::parse("0.5", 20))) {
        throw DomainError("Params: need 2*mu - g > 1/2 for convergence");
    }
}

Params Params::parse(const std::string& a, const std::string& b,
                     const std::string& g, const std::string& nu,
                     const std::string& mu, long digits) {
    return Params(Real::parse(a, digits), Real::parse(b, digits),
                  Real::parse(g, digits), Real::parse(nu, digits),
                  Real::parse(mu, digits));
}

long Params::digits() const {
    long d = a_.digits();
    for (const Real* f : {&b_, &g_, &nu_, &mu_}) {
        if (f->digits() < d) d = f->digits();
    }
    return d;
}

Real Params::chi() const { return sqr(b_) / 4; }

Real Params::coeff_b() const {
    return pow(b_ / 2, nu_) / (2 * gamma(mu_));
}

Real Params::delta() const {
    return 2 * mu_ - g_ + Real::parse("0.5", digits());
}

Real Params::lambda(const Real& s) const { return (s + g_ + nu_) / 2; }

Real Params::omega(long k) const { return g_ + nu_ + 2 * k; }

Params Params::with_a(const Real& new_a) const {
    return Params(new_a, b_, g_, nu_, mu_);
}

Params Params::with_negated_nu() const {
    return Params(a_, b_, g_, -nu_, mu_);
}

} // namespace mbasym
