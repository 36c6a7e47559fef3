#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lumps/jet.hpp"

namespace lumps {

/// Generator function A(lambda) of a rotation-invariant Kahler metric on the
/// degree-1 moduli space, exposed as a 6th-order Taylor jet so exact
/// derivatives flow into the coefficient and curvature formulas.  The second
/// generator B = (1+2 l^2)A/4 + (l+l^3)A'/4 has a default implementation;
/// profiles with a cancellation-free closed form override it.
///
/// Internally the jets run in quad precision: the curvature formulas at the ends
/// of the lambda range lose ~12 digits to cancellation in double.
class CoefficientProfile {
public:
    virtual ~CoefficientProfile() = default;

    virtual std::string name() const = 0;

    /// Taylor jet of A about lambda (>= 0).
    virtual jet6 A(double lambda) const = 0;

    /// Taylor jet of B about lambda; top jet coefficient is degraded by the
    /// derivative in the default route.
    virtual jet6 B(double lambda) const;

    double A_value(double lambda) const { return (double)A(lambda).value(); }
    double B_value(double lambda) const { return (double)B(lambda).value(); }
};

/// Kinetic-energy (L^2) metric profile,
/// A = 4 pi mu (mu^4 - 4 mu^2 log mu - 1)/(mu^2-1)^3, mu = (sqrt(1+l^2)+l)^2,
/// with a power-series branch near mu = 1 where the closed form cancels.
class L2Profile : public CoefficientProfile {
public:
    std::string name() const override { return "l2"; }
    jet6 A(double lambda) const override;
    jet6 B(double lambda) const override; // exact closed form
};

/// Ambient Fubini-Study profile, A = 2 mu / (1 + mu^2); B = (A/2)^2 exactly.
class FSProfile : public CoefficientProfile {
public:
    std::string name() const override { return "fs"; }
    jet6 A(double lambda) const override;
    jet6 B(double lambda) const override;
};

/// Profile interpolated from a CSV table with columns lambda, A, A', A''
/// (piecewise-quintic Hermite, so the tabulated derivatives are matched
/// exactly at the nodes).
class TabulatedProfile : public CoefficientProfile {
public:
    TabulatedProfile(std::vector<double> lambda, std::vector<double> A,
                     std::vector<double> Ap, std::vector<double> App,
                     std::string label = "tabulated");
    static TabulatedProfile from_csv(const std::string& path);

    std::string name() const override { return label_; }
    jet6 A(double lambda) const override;

private:
    std::vector<double> lam_, a_, ap_, app_;
    std::string label_;
};

/// mu(lambda) = (sqrt(1+lambda^2) + lambda)^2; mu(0) = 1, monotone.
double mu_of_lambda(double lambda);
/// Inverse of mu_of_lambda: lambda = (mu - 1)/(2 sqrt(mu)).
double lambda_of_mu(double mu);
/// Jet of mu about lambda.
jet6 mu_jet(double lambda);

/// Named profile factory: "l2" or "fs"; anything else is treated as a CSV
/// path for a tabulated profile.
std::shared_ptr<const CoefficientProfile> make_profile(const std::string& name);

} // namespace lumps
