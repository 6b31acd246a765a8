#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsalg/cdga.hpp"

namespace hsalg {

/// Connection form plus the tower of twisted 1-forms defining a jet-order-k
/// splitting over a finite model: a is closed degree 1 (the flat connection
/// is d - a), etas[i-1] is the weight -i form eta_i for i = 1..k-1. The
/// corresponding algebroid has order k+1.
struct SplittingData {
    ModelPtr model;
    GradedElement a;
    int k = 1;
    std::vector<GradedElement> etas;

    const GradedElement& eta(int i) const { return etas.at(size_t(i) - 1); }
};

/// Throws on malformed data (degrees, counts, closedness of a, weight tags).
void validate_splitting(const SplittingData& s);

struct McReport {
    bool pass = false;
    std::vector<GradedElement> residuals;  // index r-1 for r = 1..k-1
};

/// Residual of the quadratic closure system:
///   d_{-r}(eta_r) + 1/2 sum_{i+j=r} (j-i) eta_i ^ eta_j  for r = 1..k-1.
McReport check_maurer_cartan(const SplittingData& s);

/// 1/2 sum_{i+j=k} (j-i) eta_i ^ eta_j, the degree-2 weight -k form whose
/// class obstructs raising the order by one.
GradedElement extension_form(const SplittingData& s);
/// The same form written as sum_{i<k/2} (k-2i) eta_i ^ eta_{k-i}.
GradedElement extension_form_alt(const SplittingData& s);

struct ExtensionClassResult {
    GradedElement form;
    bool closed = false;     // under the weight -k twist
    bool nonzero_class = false;
    ModelClassResult cls;
};
ExtensionClassResult extension_class(const SplittingData& s);

/// The total complex on (k+1) weighted copies of the model with the
/// staircase differential; blocks (r -> r) carry d - r a^ and blocks
/// (r -> r-i) carry (i-r) eta_i ^ . Squares to zero exactly when the
/// closure system holds.
struct SkComplexBuild {
    SplittingData data;
    ChainComplex complex;
    bool d2_zero = false;
    std::string witness;  // block/basis location when d2 fails

    int block_count() const { return data.k + 1; }
};
SkComplexBuild build_sk_complex(const SplittingData& s);

std::vector<int> sk_cohomology_dims(const SkComplexBuild& sk);

/// Dimensions of the first page of the weight filtration: column r holds the
/// cohomology of the associated-graded differential on the weight-r block,
/// which equals the twisted cohomology H(L^r).
struct FiltrationPage {
    int k = 0;
    std::vector<std::vector<int>> columns;  // columns[r][j] = dim H^j of block r
};
FiltrationPage filtration_e1(const SkComplexBuild& sk);

/// Independent column values: twisted cohomology dims at weight r.
std::vector<int> twisted_column_dims(const SplittingData& s, int r);

/// Complex of the restriction to the hypersurface: Omega_W in degree m plus a
/// copy of the weight-k twist shifted by one, glued by the extension form.
struct GysinReport {
    ChainComplex complex;
    std::vector<int> dims;              // cohomology of the restricted complex
    std::vector<int> expected;          // ker/coker combination through e ^ .
    bool identity_holds = false;
    GradedElement ext;
};
GysinReport restricted_complex(const SplittingData& s);

enum class CheckStatus { pass, fail, undecidable };
std::string to_string(CheckStatus st);

/// Closed 2-form beta plus the tower alpha_0..alpha_k of weight +r forms
/// making up a symplectic structure over the splitting.
struct SymplecticData {
    SplittingData s;
    GradedElement beta;
    std::vector<GradedElement> alphas;  // index r = 0..k

    const GradedElement& alpha(int r) const { return alphas.at(size_t(r)); }
};

struct SympReport {
    bool beta_closed = false;
    std::vector<GradedElement> closure_residuals;  // r = 0..k
    bool closure_pass = false;
    GradedElement gamma;                    // beta + sum alpha_r ^ eta_r
    CheckStatus alpha_k_nonvanishing = CheckStatus::undecidable;
    CheckStatus nondegenerate = CheckStatus::undecidable;
    ExactMatrix pairing;                    // gamma on ker(alpha_k), coframe models only
    bool pass() const;
};
SympReport check_symplectic_data(const SymplecticData& sd);

struct VariationResult {
    QuotientResult quotient;
    GradedElement omega_f;    // image of gamma
    GradedElement var;        // image of -extension form
    ModelClassResult omega_f_class;
    ModelClassResult var_class;
    bool var_nonzero = false;
};
VariationResult symplectic_variation(const SymplecticData& sd);

/// Scale eta_i by s^i.
SplittingData deform_family(const SplittingData& s, const Rational& scale);

struct DeformReport {
    SplittingData scaled;
    bool mc_pass = false;
    GradedElement ext_base;
    GradedElement ext_scaled;
    bool homogeneity = false;  // ext_scaled == scale^k * ext_base
};
DeformReport deform_report(const SplittingData& s, const Rational& scale);

/// Leafwise form of the scaled family: base_form - s^k * e(sigma).
GradedElement deformed_leaf_form(const SplittingData& s, const GradedElement& base_form,
                                 const Rational& scale);

}  // namespace hsalg
