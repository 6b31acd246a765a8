#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsalg/matrix.hpp"
#include "hsalg/scalar.hpp"

namespace hsalg {

struct BasisElement {
    std::string name;
    int degree = 0;
    long weight = 0;
};

using SparseVec = std::vector<std::pair<int, Scalar>>;  // sorted by index, nonzero entries

class FiniteCdga;
using ModelPtr = std::shared_ptr<const FiniteCdga>;

/// Exact-coefficient vector over the basis of a finite cdga.
class GradedElement {
  public:
    GradedElement() = default;
    GradedElement(ModelPtr model, std::vector<Scalar> coeffs);
    static GradedElement zero(ModelPtr model);
    static GradedElement basis(ModelPtr model, int index);

    const ModelPtr& model() const { return model_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    std::vector<Scalar>& coeffs() { return c_; }

    bool is_zero() const;
    /// Homogeneous degree; nullopt for zero or mixed-degree elements.
    std::optional<int> degree() const;
    bool is_mixed() const;
    /// Homogeneous weight of the support; nullopt for zero or mixed weights.
    std::optional<long> weight() const;

    GradedElement operator-() const;
    friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b);
    GradedElement operator*(const Scalar& c) const;
    friend bool operator==(const GradedElement& a, const GradedElement& b);

    std::string str() const;

  private:
    ModelPtr model_;
    std::vector<Scalar> c_;
};

/// Cochain complex presented by per-degree dimensions and the matrices of the
/// differential between consecutive degrees.
struct ChainComplex {
    std::vector<int> dims;          // dims[i], i = 0..top
    std::vector<ExactMatrix> maps;  // maps[i] : dims[i] -> dims[i+1]

    int top_degree() const { return int(dims.size()) - 1; }
    const ExactMatrix* map_from(int degree) const;
    bool check_d2(std::string* witness = nullptr) const;
    std::vector<int> cohomology_dims() const;
};

struct ClassResult {
    bool exact = false;
    std::vector<Scalar> witness;  // y with d y = x when exact
    std::vector<Scalar> coords;   // class coordinates otherwise
};

/// Cohomology of a ChainComplex with deterministic representatives (kernel
/// vectors reduced against the image in pivot order).
class ComplexCohomology {
  public:
    explicit ComplexCohomology(ChainComplex cc);

    const ChainComplex& complex() const { return cc_; }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<std::vector<Scalar>>& representatives(int degree) const;
    /// x must be closed in the given degree.
    ClassResult class_of(int degree, const std::vector<Scalar>& x) const;

  private:
    ChainComplex cc_;
    std::vector<int> dims_;
    std::vector<std::vector<std::vector<Scalar>>> reps_;
    std::vector<ExactMatrix> image_rows_;        // rref rows spanning each image
    std::vector<std::vector<int>> image_pivots_;
};

struct ValidationReport {
    struct Violation {
        std::string axiom;
        std::string detail;
    };
    std::vector<Violation> violations;
    bool assoc_exhaustive = true;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Finitely-presented graded-commutative differential algebra over Q or
/// Q(sqrt d): named basis with degrees and optional weight tags, structure
/// constants for the product, and the matrix of a degree +1 differential.
class FiniteCdga {
  public:
    FiniteCdga(long field_disc, std::vector<BasisElement> basis, int unit_index);

    // Construction (before finalize)
    void set_product(int i, int j, SparseVec v);
    void set_diff(int i, SparseVec v);
    void set_coframe(std::vector<std::string> names);
    /// Fills unit products and the graded-commutative mirrors, then freezes.
    void finalize();

    // Queries
    long field_disc() const { return field_disc_; }
    int dim() const { return int(basis_.size()); }
    const BasisElement& elem(int i) const { return basis_[i]; }
    int unit_index() const { return unit_; }
    std::optional<int> index_of(const std::string& name) const;
    int require_index(const std::string& name) const;
    int max_degree() const { return max_degree_; }
    const std::vector<int>& degree_indices(int d) const;
    const std::vector<std::string>& coframe() const { return coframe_; }
    bool has_weights() const;

    const SparseVec& product(int i, int j) const;
    const SparseVec& diff(int i) const;
    const std::map<std::pair<int, int>, SparseVec>& product_table() const { return products_; }

    // Element operations (free functions take shared_ptrs; these work on raw coeffs)
    std::vector<Scalar> wedge_coeffs(const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& y) const;
    std::vector<Scalar> diff_coeffs(const std::vector<Scalar>& x) const;
    SparseVec wedge_sparse(const SparseVec& x, const SparseVec& y) const;
    SparseVec diff_sparse(const SparseVec& x) const;

    /// Matrix of d from degree d to d+1.
    ExactMatrix diff_matrix(int degree) const;
    /// Matrix of left wedge by a homogeneous element a (degree da) from
    /// `degree` to degree+da.
    ExactMatrix wedge_matrix(const GradedElement& a, int degree) const;

    std::vector<Scalar> degree_coords(const GradedElement& x, int degree) const;
    GradedElement from_degree_coords(ModelPtr self, int degree,
                                     const std::vector<Scalar>& coords) const;

    ChainComplex as_complex() const;
    /// Complex of the same graded space with differential d - w * (a ^ .).
    ChainComplex twisted_complex(const GradedElement& a, long w) const;

  private:
    long field_disc_;
    std::vector<BasisElement> basis_;
    int unit_;
    std::map<std::pair<int, int>, SparseVec> products_;
    std::vector<SparseVec> diff_;
    std::vector<std::string> coframe_;
    std::map<std::string, int> name_index_;
    std::vector<std::vector<int>> by_degree_;
    int max_degree_ = 0;
    bool finalized_ = false;

    void require_finalized() const;
};

GradedElement wedge(const GradedElement& x, const GradedElement& y);
GradedElement d(const GradedElement& x);
/// d - w * (a ^ .), the differential on weight-w objects for connection a.
GradedElement twisted_d(const GradedElement& x, const GradedElement& a, long w);

/// Parse an element given as {basis name: coefficient} pairs.
GradedElement element_from_map(ModelPtr model,
                               const std::vector<std::pair<std::string, Scalar>>& entries);

ValidationReport validate(const FiniteCdga& model, int assoc_limit = 200);

struct CohomologyResult {
    std::vector<int> dims;
    std::vector<std::vector<GradedElement>> representatives;  // per degree
};

CohomologyResult cohomology(ModelPtr model);
CohomologyResult twisted_cohomology(ModelPtr model, const GradedElement& a, long w);

/// Class of a closed homogeneous element in the model complex (or a twist of
/// it): exactness witness or coordinates in the representative basis.
struct ModelClassResult {
    bool exact = false;
    GradedElement witness;
    std::vector<Scalar> coords;
    std::vector<GradedElement> representatives;
};
ModelClassResult class_of(const GradedElement& x);
ModelClassResult class_of_twisted(const GradedElement& x, const GradedElement& a, long w);

struct QuotientResult {
    ModelPtr model;
    std::vector<int> surviving;  // original basis indices carried to the quotient
    ExactMatrix projection;      // quotient coords = projection * original coords

    GradedElement project(const GradedElement& x) const;
};

/// Quotient by the differential graded ideal generated by a degree-1 element;
/// requires d(gen) to lie in the ideal.
QuotientResult quotient_by_ideal(ModelPtr model, const GradedElement& gen);

/// Exterior algebra on degree-1 generators with prescribed differentials.
/// diff_specs[g] lists (sorted generator index tuple, coefficient) pairs.
ModelPtr make_exterior_model(
    long field_disc, const std::vector<std::string>& gen_names,
    const std::vector<long>& gen_weights,
    const std::vector<std::vector<std::pair<std::vector<int>, Scalar>>>& diff_specs,
    const std::vector<std::string>& coframe = {});

/// Basis-size cap honoring HSALG_MAX_DIM (default 4096).
int max_model_dim();
void check_model_dim(size_t dim);

}  // namespace hsalg
