#pragma once

#include "pinclass/enumeration.hpp"
#include "pinclass/genfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pinclass {

enum class Certification { FullyCertified, FormulaOnly, ExpectedValueOnly };
std::string to_string(Certification c);

struct CatalogEntry {
    std::string name;
    std::string description;
    std::optional<std::string> word; // pin-word spec text
    std::optional<RationalGF> indec_gf;
    std::optional<RationalGF> class_gf;
    IntPolynomial polynomial; // growth rate is its largest real root
    std::string expected;     // decimal exactly as printed
    Certification certification = Certification::FormulaOnly;
};

const std::vector<CatalogEntry>& catalog();
/// Throws ValidationError for unknown names.
const CatalogEntry& entry(const std::string& name);

RationalGF g_one_ell(unsigned ell);       // indecomposables of w_{1,l}
RationalGF g_star();                      // limit of g_{1,l}
RationalGF g_s(unsigned k);               // k >= 4
RationalGF g_k(unsigned k);               // indecomposables of the family approaching mu
RationalGF s_profile_gf(unsigned k);      // from s_k through the factor formula, any k >= 2
std::vector<unsigned> s_profile(unsigned k, std::size_t n_max);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    std::string expected;
    double computed = 0;
    double delta = 0;
    Certification certification = Certification::FormulaOnly;
    std::vector<Check> checks;
    bool passed() const;
    std::string to_json() const;
};

struct VerifyOptions {
    std::size_t n_max = 8;
    EnumerationOptions enumeration{400, std::nullopt};
    double tol = kDefaultTolerance;
};

VerifyReport verify(const CatalogEntry& e, const VerifyOptions& opts = {});

struct Section4Row {
    unsigned ell = 0;
    std::vector<BigInt> sequence; // box-indecomposable counts from length 1
    double growth = 0;
    std::string expected;
};

std::vector<Section4Row> section4_table(double tol = kDefaultTolerance);

struct MuCertificate {
    unsigned k = 0;
    RationalGF gf;                 // lower-bound indecomposable GF
    bool profile_matches = false;  // GF series equals the s_k profile pushed through the factor formula
    bool identity_holds = false;   // k >= 4 only: g_s - g_star = z^{2k-2}(1-2z^2)/(1-z)^2
    bool nonnegative = false;      // k >= 4 only: that difference is >= 0 on [0, 1/2]
    double root = 0;               // smallest positive solution of gf = 1
    double bound = 0;              // 1/root
    bool passed = false;
};

MuCertificate mu_lower_bound_certificate(unsigned k, double tol = kDefaultTolerance);

struct GkRoot {
    unsigned k = 0;
    double root = 0;
};

std::vector<GkRoot> gk_family(unsigned k_max, double tol = kDefaultTolerance);

struct BoundCheck {
    std::string name;
    RationalGF gf;
    std::string displayed_gf; // the closed form the construction should reproduce
    bool gf_matches = false;
    std::string expected;
    double computed = 0;
    bool passed = false;
};

std::vector<BoundCheck> three_quadrant_bound_check(double tol = kDefaultTolerance);
std::vector<BoundCheck> four_quadrant_bound_check(double tol = kDefaultTolerance);

/// Largest distance from the printed decimal that still agrees in every
/// printed digit.
double printed_precision(const std::string& decimal);

} // namespace pinclass
