#include "hsalg/cdga.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hsalg {

namespace {

const SparseVec kEmpty;

void sparse_add(SparseVec& acc, int idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(acc.begin(), acc.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != acc.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    } else {
        acc.insert(it, {idx, c});
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedElement

GradedElement::GradedElement(ModelPtr model, std::vector<Scalar> coeffs)
    : model_(std::move(model)), c_(std::move(coeffs)) {
    if (!model_) throw DomainError("element without model");
    if (int(c_.size()) != model_->dim()) throw DimensionError("element coefficient size mismatch");
}

GradedElement GradedElement::zero(ModelPtr model) {
    std::vector<Scalar> c(model->dim());
    return GradedElement(std::move(model), std::move(c));
}

GradedElement GradedElement::basis(ModelPtr model, int index) {
    std::vector<Scalar> c(model->dim());
    c.at(index) = Scalar(1);
    return GradedElement(std::move(model), std::move(c));
}

bool GradedElement::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<int> GradedElement::degree() const {
    std::optional<int> deg;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        int d = model_->elem(int(i)).degree;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

bool GradedElement::is_mixed() const {
    return !is_zero() && !degree().has_value();
}

std::optional<long> GradedElement::weight() const {
    std::optional<long> w;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long x = model_->elem(int(i)).weight;
        if (w && *w != x) return std::nullopt;
        w = x;
    }
    return w;
}

GradedElement GradedElement::operator-() const {
    GradedElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

static void check_same_model(const GradedElement& a, const GradedElement& b) {
    if (a.model() != b.model()) throw DomainError("elements belong to different models");
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
    check_same_model(a, b);
    GradedElement r = a;
    for (size_t i = 0; i < r.coeffs().size(); ++i) r.coeffs()[i] += b.coeffs()[i];
    return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) {
    check_same_model(a, b);
    GradedElement r = a;
    for (size_t i = 0; i < r.coeffs().size(); ++i) r.coeffs()[i] -= b.coeffs()[i];
    return r;
}

GradedElement GradedElement::operator*(const Scalar& c) const {
    GradedElement r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.model_ == b.model_ && a.c_ == b.c_;
}

std::string GradedElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Scalar a = c_[i];
        bool neg = a.is_rational() && a.rat_part().sign() < 0;
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        if (neg) a = -a;
        const std::string& name = model_->elem(int(i)).name;
        bool is_unit = int(i) == model_->unit_index();
        if (a.is_one()) {
            os << (is_unit ? "1" : name);
        } else {
            std::string cs = a.str();
            if (!a.is_rational()) cs = "(" + cs + ")";
            os << cs;
            if (!is_unit) os << "*" << name;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// FiniteCdga

FiniteCdga::FiniteCdga(long field_disc, std::vector<BasisElement> basis, int unit_index)
    : field_disc_(field_disc), basis_(std::move(basis)), unit_(unit_index) {
    check_model_dim(basis_.size());
    if (unit_ < 0 || unit_ >= int(basis_.size())) throw DomainError("unit index out of range");
    if (basis_[unit_].degree != 0) throw DomainError("unit must have degree 0");
    diff_.resize(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree < 0) throw DomainError("negative basis degree");
        if (!name_index_.emplace(basis_[i].name, int(i)).second)
            throw DomainError("duplicate basis name '" + basis_[i].name + "'");
        max_degree_ = std::max(max_degree_, basis_[i].degree);
    }
    by_degree_.assign(max_degree_ + 1, {});
    for (size_t i = 0; i < basis_.size(); ++i) by_degree_[basis_[i].degree].push_back(int(i));
}

void FiniteCdga::set_product(int i, int j, SparseVec v) {
    if (finalized_) throw DomainError("model is frozen");
    if (v.empty())
        products_.erase({i, j});
    else
        products_[{i, j}] = std::move(v);
}

void FiniteCdga::set_diff(int i, SparseVec v) {
    if (finalized_) throw DomainError("model is frozen");
    diff_.at(i) = std::move(v);
}

void FiniteCdga::set_coframe(std::vector<std::string> names) {
    if (finalized_) throw DomainError("model is frozen");
    for (const auto& n : names) {
        auto idx = index_of(n);
        if (!idx) throw DomainError("coframe name '" + n + "' not in basis");
        if (basis_[*idx].degree != 1) throw DomainError("coframe elements must have degree 1");
    }
    coframe_ = std::move(names);
}

void FiniteCdga::finalize() {
    if (finalized_) return;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        products_[{unit_, i}] = {{i, Scalar(1)}};
        products_[{i, unit_}] = {{i, Scalar(1)}};
    }
    // Fill missing mirrors by graded commutativity.
    std::vector<std::pair<std::pair<int, int>, SparseVec>> to_add;
    for (const auto& [key, row] : products_) {
        auto mirror = std::make_pair(key.second, key.first);
        if (products_.count(mirror)) continue;
        int sign = (basis_[key.first].degree * basis_[key.second].degree) % 2 ? -1 : 1;
        SparseVec m = row;
        if (sign < 0)
            for (auto& [idx, c] : m) c = -c;
        to_add.push_back({mirror, std::move(m)});
    }
    for (auto& [key, row] : to_add) products_[key] = std::move(row);
    finalized_ = true;
}

void FiniteCdga::require_finalized() const {
    if (!finalized_) throw DomainError("model not finalized");
}

std::optional<int> FiniteCdga::index_of(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

int FiniteCdga::require_index(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw DomainError("unknown basis element '" + name + "'");
    return *idx;
}

const std::vector<int>& FiniteCdga::degree_indices(int d) const {
    static const std::vector<int> empty;
    if (d < 0 || d > max_degree_) return empty;
    return by_degree_[d];
}

bool FiniteCdga::has_weights() const {
    for (const auto& b : basis_)
        if (b.weight != 0) return true;
    return false;
}

const SparseVec& FiniteCdga::product(int i, int j) const {
    require_finalized();
    auto it = products_.find({i, j});
    return it == products_.end() ? kEmpty : it->second;
}

const SparseVec& FiniteCdga::diff(int i) const {
    return diff_.at(i);
}

std::vector<Scalar> FiniteCdga::wedge_coeffs(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
    require_finalized();
    std::vector<Scalar> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            auto it = products_.find({i, j});
            if (it == products_.end()) continue;
            Scalar f = x[i] * y[j];
            for (const auto& [idx, c] : it->second) out[idx] += f * c;
        }
    }
    return out;
}

std::vector<Scalar> FiniteCdga::diff_coeffs(const std::vector<Scalar>& x) const {
    std::vector<Scalar> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [idx, c] : diff_[i]) out[idx] += x[i] * c;
    }
    return out;
}

SparseVec FiniteCdga::wedge_sparse(const SparseVec& x, const SparseVec& y) const {
    require_finalized();
    SparseVec out;
    for (const auto& [i, xi] : x)
        for (const auto& [j, yj] : y) {
            auto it = products_.find({i, j});
            if (it == products_.end()) continue;
            Scalar f = xi * yj;
            for (const auto& [idx, c] : it->second) sparse_add(out, idx, f * c);
        }
    return out;
}

SparseVec FiniteCdga::diff_sparse(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [i, xi] : x)
        for (const auto& [idx, c] : diff_[i]) sparse_add(out, idx, xi * c);
    return out;
}

ExactMatrix FiniteCdga::diff_matrix(int degree) const {
    const auto& src = degree_indices(degree);
    const auto& dst = degree_indices(degree + 1);
    std::vector<int> pos(dim(), -1);
    for (size_t r = 0; r < dst.size(); ++r) pos[dst[r]] = int(r);
    ExactMatrix m(int(dst.size()), int(src.size()));
    for (size_t c = 0; c < src.size(); ++c)
        for (const auto& [idx, v] : diff_[src[c]]) {
            if (pos[idx] < 0) throw DomainError("differential does not raise degree by 1");
            m.at(pos[idx], int(c)) = v;
        }
    return m;
}

ExactMatrix FiniteCdga::wedge_matrix(const GradedElement& a, int degree) const {
    require_finalized();
    auto da = a.degree();
    int adeg = da.value_or(1);
    const auto& src = degree_indices(degree);
    const auto& dst = degree_indices(degree + adeg);
    std::vector<int> pos(dim(), -1);
    for (size_t r = 0; r < dst.size(); ++r) pos[dst[r]] = int(r);
    ExactMatrix m(int(dst.size()), int(src.size()));
    const auto& ac = a.coeffs();
    for (size_t c = 0; c < src.size(); ++c) {
        for (int i = 0; i < dim(); ++i) {
            if (ac[i].is_zero()) continue;
            auto it = products_.find({i, src[c]});
            if (it == products_.end()) continue;
            for (const auto& [idx, v] : it->second) {
                if (pos[idx] < 0) continue;  // lands outside the target degree: impossible for homogeneous a
                m.at(pos[idx], int(c)) += ac[i] * v;
            }
        }
    }
    return m;
}

std::vector<Scalar> FiniteCdga::degree_coords(const GradedElement& x, int degree) const {
    const auto& idx = degree_indices(degree);
    std::vector<Scalar> out(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) out[i] = x.coeffs()[idx[i]];
    return out;
}

GradedElement FiniteCdga::from_degree_coords(ModelPtr self, int degree,
                                             const std::vector<Scalar>& coords) const {
    const auto& idx = degree_indices(degree);
    if (coords.size() != idx.size()) throw DimensionError("degree coordinate size mismatch");
    std::vector<Scalar> c(dim());
    for (size_t i = 0; i < idx.size(); ++i) c[idx[i]] = coords[i];
    return GradedElement(std::move(self), std::move(c));
}

ChainComplex FiniteCdga::as_complex() const {
    ChainComplex cc;
    for (int d = 0; d <= max_degree_; ++d) cc.dims.push_back(int(degree_indices(d).size()));
    for (int d = 0; d < max_degree_; ++d) cc.maps.push_back(diff_matrix(d));
    return cc;
}

ChainComplex FiniteCdga::twisted_complex(const GradedElement& a, long w) const {
    if (!a.is_zero()) {
        auto deg = a.degree();
        if (!deg || *deg != 1) throw DomainError("twist connection must be homogeneous degree 1");
    }
    ChainComplex cc;
    for (int d = 0; d <= max_degree_; ++d) cc.dims.push_back(int(degree_indices(d).size()));
    for (int d = 0; d < max_degree_; ++d) {
        ExactMatrix m = diff_matrix(d);
        if (w != 0 && !a.is_zero()) m = m - wedge_matrix(a, d) * Scalar(Rational(w));
        cc.maps.push_back(std::move(m));
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Free element functions

GradedElement wedge(const GradedElement& x, const GradedElement& y) {
    check_same_model(x, y);
    return GradedElement(x.model(), x.model()->wedge_coeffs(x.coeffs(), y.coeffs()));
}

GradedElement d(const GradedElement& x) {
    return GradedElement(x.model(), x.model()->diff_coeffs(x.coeffs()));
}

GradedElement twisted_d(const GradedElement& x, const GradedElement& a, long w) {
    GradedElement out = d(x);
    if (w != 0 && !a.is_zero()) out = out - wedge(a, x) * Scalar(Rational(w));
    return out;
}

GradedElement element_from_map(ModelPtr model,
                               const std::vector<std::pair<std::string, Scalar>>& entries) {
    GradedElement e = GradedElement::zero(model);
    for (const auto& [name, c] : entries) e.coeffs()[model->require_index(name)] += c;
    return e;
}

// ---------------------------------------------------------------------------
// ChainComplex and cohomology

const ExactMatrix* ChainComplex::map_from(int degree) const {
    if (degree < 0 || degree >= int(maps.size())) return nullptr;
    return &maps[degree];
}

bool ChainComplex::check_d2(std::string* witness) const {
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
        ExactMatrix p = maps[i + 1] * maps[i];
        if (!p.is_zero()) {
            if (witness) {
                for (int r = 0; r < p.rows(); ++r)
                    for (int c = 0; c < p.cols(); ++c)
                        if (!p.at(r, c).is_zero()) {
                            *witness = "d^2 != 0 from degree " + std::to_string(i) +
                                       " column " + std::to_string(c) + " (value " +
                                       p.at(r, c).str() + ")";
                            return false;
                        }
            }
            return false;
        }
    }
    return true;
}

std::vector<int> ChainComplex::cohomology_dims() const {
    std::vector<int> ranks(dims.size(), 0);
    for (size_t i = 0; i < maps.size(); ++i) ranks[i] = rank_of(maps[i]);
    std::vector<int> h(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) {
        int rank_out = i < maps.size() ? ranks[i] : 0;
        int rank_in = i > 0 ? ranks[i - 1] : 0;
        h[i] = dims[i] - rank_out - rank_in;
    }
    return h;
}

ComplexCohomology::ComplexCohomology(ChainComplex cc) : cc_(std::move(cc)) {
    size_t n = cc_.dims.size();
    reps_.resize(n);
    image_rows_.resize(n);
    image_pivots_.resize(n);
    dims_.resize(n);

    for (size_t i = 0; i < n; ++i) {
        // rows spanning the image of the incoming differential
        if (i > 0 && cc_.dims[i - 1] > 0) {
            image_rows_[i] = rref(cc_.maps[i - 1].transposed(), &image_pivots_[i]);
        } else {
            image_rows_[i] = ExactMatrix(0, cc_.dims[i]);
        }
        // kernel of the outgoing differential
        std::vector<std::vector<Scalar>> kernel;
        if (i < cc_.maps.size()) {
            kernel = solve_linear(cc_.maps[i]).kernel;
        } else {
            kernel.reserve(cc_.dims[i]);
            for (int j = 0; j < cc_.dims[i]; ++j) {
                std::vector<Scalar> v(cc_.dims[i]);
                v[j] = Scalar(1);
                kernel.push_back(std::move(v));
            }
        }
        int target = int(kernel.size()) - int(image_pivots_[i].size());
        dims_[i] = target;
        // reduce kernel vectors mod the image, keep an independent set
        ExactMatrix sel(target, cc_.dims[i]);
        int got = 0;
        std::vector<int> sel_pivots;
        for (auto& v : kernel) {
            if (got == target) break;
            std::vector<Scalar> red =
                reduce_mod_rows(image_rows_[i], image_pivots_[i], std::move(v));
            // reduce against already chosen representatives
            ExactMatrix trial(got + 1, cc_.dims[i]);
            for (int r = 0; r < got; ++r)
                for (int c = 0; c < cc_.dims[i]; ++c) trial.at(r, c) = sel.at(r, c);
            for (int c = 0; c < cc_.dims[i]; ++c) trial.at(got, c) = red[c];
            if (rank_of(trial) == got + 1) {
                reps_[i].push_back(red);
                for (int c = 0; c < cc_.dims[i]; ++c) sel.at(got, c) = red[c];
                ++got;
            }
        }
        if (got != target) throw Error("internal: representative extraction failed");
    }
}

const std::vector<std::vector<Scalar>>& ComplexCohomology::representatives(int degree) const {
    static const std::vector<std::vector<Scalar>> empty;
    if (degree < 0 || degree >= int(reps_.size())) return empty;
    return reps_[degree];
}

ClassResult ComplexCohomology::class_of(int degree, const std::vector<Scalar>& x) const {
    if (degree < 0 || degree >= int(cc_.dims.size())) throw DimensionError("degree out of range");
    if (int(x.size()) != cc_.dims[degree]) throw DimensionError("class_of: coordinate size mismatch");
    if (const ExactMatrix* out = cc_.map_from(degree)) {
        auto dx = out->apply(x);
        for (const auto& s : dx)
            if (!s.is_zero()) throw DomainError("class_of: element is not closed");
    }
    ClassResult res;
    if (degree > 0) {
        auto sol = solve_affine(cc_.maps[degree - 1], x);
        if (sol) {
            res.exact = true;
            res.witness = std::move(*sol);
            return res;
        }
    } else {
        bool zero = true;
        for (const auto& s : x) zero = zero && s.is_zero();
        if (zero) {
            res.exact = true;
            res.witness = {};
            return res;
        }
    }
    std::vector<Scalar> red = reduce_mod_rows(image_rows_[degree], image_pivots_[degree], x);
    ExactMatrix repmat = from_columns(cc_.dims[degree], reps_[degree]);
    auto coords = solve_affine(repmat, red);
    if (!coords) throw Error("internal: closed class outside representative span");
    res.coords = std::move(*coords);
    return res;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::summary() const {
    if (violations.empty()) return "valid";
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  [" << v.axiom << "] " << v.detail;
    return os.str();
}

ValidationReport validate(const FiniteCdga& model, int assoc_limit) {
    ValidationReport rep;
    auto fail = [&](const std::string& axiom, const std::string& detail) {
        if (rep.violations.size() < 64) rep.violations.push_back({axiom, detail});
    };
    int n = model.dim();

    // unit
    for (int i = 0; i < n; ++i) {
        const auto& row = model.product(model.unit_index(), i);
        if (!(row.size() == 1 && row[0].first == i && row[0].second.is_one()))
            fail("unit", "1 * " + model.elem(i).name + " != " + model.elem(i).name);
    }

    // degree/weight homogeneity and graded commutativity, walking the sparse
    // table (absent pairs are zero on both sides)
    bool weighted = model.has_weights();
    for (const auto& [key, pij] : model.product_table()) {
        int i = key.first, j = key.second;
        for (const auto& [idx, c] : pij) {
            if (model.elem(idx).degree != model.elem(i).degree + model.elem(j).degree)
                fail("degree", model.elem(i).name + " * " + model.elem(j).name +
                                   " has a component of wrong degree");
            if (weighted && model.elem(idx).weight != model.elem(i).weight + model.elem(j).weight)
                fail("weight", model.elem(i).name + " * " + model.elem(j).name +
                                   " has a component of wrong weight");
        }
        const auto& pji = model.product(j, i);
        int sign = (model.elem(i).degree * model.elem(j).degree) % 2 ? -1 : 1;
        SparseVec mirrored = pji;
        if (sign < 0)
            for (auto& [idx, c] : mirrored) c = -c;
        if (pij != mirrored)
            fail("graded-commutativity",
                 model.elem(i).name + " * " + model.elem(j).name + " vs mirror");
    }

    // d raises degree by 1, preserves weight
    for (int i = 0; i < n; ++i) {
        for (const auto& [idx, c] : model.diff(i)) {
            if (model.elem(idx).degree != model.elem(i).degree + 1)
                fail("differential-degree", "d(" + model.elem(i).name + ") not in degree +1");
            if (weighted && model.elem(idx).weight != model.elem(i).weight)
                fail("differential-weight", "d(" + model.elem(i).name + ") changes weight");
        }
    }

    // d^2 = 0
    for (int i = 0; i < n; ++i) {
        SparseVec ei{{i, Scalar(1)}};
        if (!model.diff_sparse(model.diff_sparse(ei)).empty())
            fail("d-squared", "d^2(" + model.elem(i).name + ") != 0");
    }

    // Leibniz: d(xy) = dx * y + (-1)^|x| x * dy on basis pairs
    for (int i = 0; i < n; ++i) {
        SparseVec ei{{i, Scalar(1)}};
        SparseVec di = model.diff_sparse(ei);
        for (int j = 0; j < n; ++j) {
            SparseVec ej{{j, Scalar(1)}};
            SparseVec lhs = model.diff_sparse(model.wedge_sparse(ei, ej));
            SparseVec rhs = model.wedge_sparse(di, ej);
            SparseVec xdy = model.wedge_sparse(ei, model.diff_sparse(ej));
            int sign = model.elem(i).degree % 2 ? -1 : 1;
            for (const auto& [idx, c] : xdy)
                sparse_add(rhs, idx, sign < 0 ? -c : c);
            if (lhs != rhs) {
                fail("leibniz", "d(" + model.elem(i).name + " * " + model.elem(j).name + ")");
                break;
            }
        }
    }

    // associativity (exhaustive only within the limit)
    rep.assoc_exhaustive = n <= assoc_limit;
    if (rep.assoc_exhaustive) {
        for (int i = 0; i < n && rep.violations.size() < 64; ++i) {
            SparseVec ei{{i, Scalar(1)}};
            for (int j = 0; j < n; ++j) {
                SparseVec ej{{j, Scalar(1)}};
                SparseVec ij = model.wedge_sparse(ei, ej);
                for (int l = 0; l < n; ++l) {
                    SparseVec el{{l, Scalar(1)}};
                    SparseVec jl = model.wedge_sparse(ej, el);
                    if (ij.empty() && jl.empty()) continue;
                    SparseVec lhs = model.wedge_sparse(ij, el);
                    SparseVec rhs = model.wedge_sparse(ei, jl);
                    if (lhs != rhs) {
                        fail("associativity", "(" + model.elem(i).name + " * " +
                                                  model.elem(j).name + ") * " +
                                                  model.elem(l).name);
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cohomology of models

CohomologyResult cohomology(ModelPtr model) {
    ComplexCohomology cc(model->as_complex());
    CohomologyResult res;
    res.dims = cc.dims();
    for (int deg = 0; deg <= model->max_degree(); ++deg) {
        std::vector<GradedElement> reps;
        for (const auto& r : cc.representatives(deg))
            reps.push_back(model->from_degree_coords(model, deg, r));
        res.representatives.push_back(std::move(reps));
    }
    return res;
}

CohomologyResult twisted_cohomology(ModelPtr model, const GradedElement& a, long w) {
    ComplexCohomology cc(model->twisted_complex(a, w));
    CohomologyResult res;
    res.dims = cc.dims();
    for (int deg = 0; deg <= model->max_degree(); ++deg) {
        std::vector<GradedElement> reps;
        for (const auto& r : cc.representatives(deg))
            reps.push_back(model->from_degree_coords(model, deg, r));
        res.representatives.push_back(std::move(reps));
    }
    return res;
}

static ModelClassResult class_of_impl(const GradedElement& x, const ChainComplex& raw) {
    auto deg = x.degree();
    if (!deg) {
        if (x.is_zero()) {
            ModelClassResult res;
            res.exact = true;
            res.witness = x;
            return res;
        }
        throw DomainError("class_of needs a homogeneous element");
    }
    const ModelPtr& model = x.model();
    ComplexCohomology cc(raw);
    ClassResult cr = cc.class_of(*deg, model->degree_coords(x, *deg));
    ModelClassResult res;
    res.exact = cr.exact;
    if (cr.exact) {
        res.witness = *deg > 0 ? model->from_degree_coords(model, *deg - 1, cr.witness)
                               : GradedElement::zero(model);
    } else {
        res.coords = cr.coords;
        for (const auto& r : cc.representatives(*deg))
            res.representatives.push_back(model->from_degree_coords(model, *deg, r));
    }
    return res;
}

ModelClassResult class_of(const GradedElement& x) {
    return class_of_impl(x, x.model()->as_complex());
}

ModelClassResult class_of_twisted(const GradedElement& x, const GradedElement& a, long w) {
    return class_of_impl(x, x.model()->twisted_complex(a, w));
}

// ---------------------------------------------------------------------------
// Quotient by a dg ideal

QuotientResult quotient_by_ideal(ModelPtr model, const GradedElement& gen) {
    auto gdeg = gen.degree();
    if (!gdeg || *gdeg != 1) throw DomainError("ideal generator must be homogeneous of degree 1");

    int n = model->dim();
    // span of gen ^ (basis), per degree
    std::vector<ExactMatrix> ideal_rows(model->max_degree() + 1);
    std::vector<std::vector<int>> ideal_pivots(model->max_degree() + 1);
    for (int deg = 0; deg <= model->max_degree(); ++deg) {
        const auto& below = model->degree_indices(deg - 1);
        std::vector<std::vector<Scalar>> span;
        for (int b : below) {
            GradedElement prod = wedge(gen, GradedElement::basis(model, b));
            if (!prod.is_zero()) span.push_back(model->degree_coords(prod, deg));
        }
        int cols = int(model->degree_indices(deg).size());
        ExactMatrix rows(int(span.size()), cols);
        for (size_t r = 0; r < span.size(); ++r)
            for (int c = 0; c < cols; ++c) rows.at(int(r), c) = span[r][c];
        ideal_rows[deg] = rref(rows, &ideal_pivots[deg]);
    }

    // d-stability: d(gen) must lie in the ideal
    {
        GradedElement dg = d(gen);
        if (!dg.is_zero()) {
            auto coords = model->degree_coords(dg, 2);
            auto red = reduce_mod_rows(ideal_rows[2], ideal_pivots[2], coords);
            for (const auto& s : red)
                if (!s.is_zero())
                    throw DomainError("ideal is not d-stable: d(generator) = " + dg.str() +
                                      " does not lie in the ideal");
        }
    }

    // surviving coordinates = non-pivot positions, per degree
    std::vector<int> surviving;
    std::vector<int> new_index(n, -1);
    for (int deg = 0; deg <= model->max_degree(); ++deg) {
        const auto& idx = model->degree_indices(deg);
        std::vector<bool> is_pivot(idx.size(), false);
        for (int p : ideal_pivots[deg]) is_pivot[p] = true;
        for (size_t i = 0; i < idx.size(); ++i)
            if (!is_pivot[i]) surviving.push_back(idx[i]);
    }
    std::sort(surviving.begin(), surviving.end());
    for (size_t i = 0; i < surviving.size(); ++i) new_index[surviving[i]] = int(i);

    if (new_index[model->unit_index()] < 0) throw DomainError("ideal contains the unit");

    // projection matrix: reduce mod ideal rows, then restrict to survivors
    ExactMatrix projection(int(surviving.size()), n);
    for (int i = 0; i < n; ++i) {
        int deg = model->elem(i).degree;
        const auto& idx = model->degree_indices(deg);
        std::vector<Scalar> v(idx.size());
        for (size_t c = 0; c < idx.size(); ++c)
            if (idx[c] == i) v[c] = Scalar(1);
        auto red = reduce_mod_rows(ideal_rows[deg], ideal_pivots[deg], v);
        for (size_t c = 0; c < idx.size(); ++c) {
            int ni = new_index[idx[c]];
            if (ni >= 0) projection.at(ni, i) = red[c];
        }
    }

    std::vector<BasisElement> qbasis;
    for (int s : surviving) qbasis.push_back(model->elem(s));
    auto q = std::make_shared<FiniteCdga>(model->field_disc(), qbasis,
                                          new_index[model->unit_index()]);

    auto project_coeffs = [&](const std::vector<Scalar>& full) {
        std::vector<Scalar> out(surviving.size());
        for (size_t r = 0; r < surviving.size(); ++r)
            for (int c = 0; c < n; ++c)
                if (!projection.at(int(r), c).is_zero() && !full[c].is_zero())
                    out[r] += projection.at(int(r), c) * full[c];
        return out;
    };

    for (size_t i = 0; i < surviving.size(); ++i) {
        for (size_t j = 0; j < surviving.size(); ++j) {
            std::vector<Scalar> full(n);
            for (const auto& [idx, c] : model->product(surviving[i], surviving[j])) full[idx] = c;
            auto proj = project_coeffs(full);
            SparseVec row;
            for (size_t t = 0; t < proj.size(); ++t)
                if (!proj[t].is_zero()) row.push_back({int(t), proj[t]});
            if (!row.empty()) q->set_product(int(i), int(j), std::move(row));
        }
        std::vector<Scalar> full(n);
        for (const auto& [idx, c] : model->diff(surviving[i])) full[idx] = c;
        auto proj = project_coeffs(full);
        SparseVec row;
        for (size_t t = 0; t < proj.size(); ++t)
            if (!proj[t].is_zero()) row.push_back({int(t), proj[t]});
        q->set_diff(int(i), std::move(row));
    }
    q->finalize();

    QuotientResult res;
    res.model = q;
    res.surviving = std::move(surviving);
    res.projection = std::move(projection);
    return res;
}

GradedElement QuotientResult::project(const GradedElement& x) const {
    std::vector<Scalar> out(surviving.size());
    const auto& c = x.coeffs();
    for (int r = 0; r < projection.rows(); ++r)
        for (int j = 0; j < projection.cols(); ++j)
            if (!projection.at(r, j).is_zero() && !c[j].is_zero())
                out[r] += projection.at(r, j) * c[j];
    return GradedElement(model, std::move(out));
}

// ---------------------------------------------------------------------------
// Exterior model builder

ModelPtr make_exterior_model(
    long field_disc, const std::vector<std::string>& gen_names,
    const std::vector<long>& gen_weights,
    const std::vector<std::vector<std::pair<std::vector<int>, Scalar>>>& diff_specs,
    const std::vector<std::string>& coframe) {
    size_t g = gen_names.size();
    if (gen_weights.size() != g || diff_specs.size() != g)
        throw DimensionError("exterior model spec size mismatch");
    check_model_dim(size_t(1) << g);

    // subsets ordered by (size, lex)
    std::vector<std::vector<int>> subsets;
    for (size_t size = 0; size <= g; ++size) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (cur.size() == size) {
                subsets.push_back(cur);
                return;
            }
            for (int i = start; i < int(g); ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::map<std::vector<int>, int> subset_index;
    std::vector<BasisElement> basis;
    for (size_t i = 0; i < subsets.size(); ++i) {
        subset_index[subsets[i]] = int(i);
        BasisElement be;
        be.degree = int(subsets[i].size());
        long w = 0;
        std::string name;
        for (int gi : subsets[i]) {
            if (!name.empty()) name += "^";
            name += gen_names[gi];
            w += gen_weights[gi];
        }
        be.name = name.empty() ? "1" : name;
        be.weight = w;
        basis.push_back(std::move(be));
    }

    auto mdl = std::make_shared<FiniteCdga>(field_disc, basis, 0);

    // merge two disjoint sorted index sets, counting inversions for the sign
    auto merge_sign = [](const std::vector<int>& a, const std::vector<int>& b,
                         std::vector<int>& out) -> int {
        out.clear();
        int inversions = 0;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return 0;
            if (a[i] < b[j]) {
                out.push_back(a[i++]);
            } else {
                inversions += int(a.size() - i);
                out.push_back(b[j++]);
            }
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) out.push_back(b[j++]);
        return inversions % 2 ? -1 : 1;
    };

    std::vector<int> merged;
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = 0; j < subsets.size(); ++j) {
            if (subsets[i].empty() || subsets[j].empty()) continue;
            int sign = merge_sign(subsets[i], subsets[j], merged);
            if (sign == 0) continue;
            mdl->set_product(int(i), int(j),
                             {{subset_index.at(merged), Scalar(Rational(sign))}});
        }

    // differential on generators, extended by the Leibniz rule:
    // d(x_{i1}..x_{ip}) = sum_j (-1)^{j-1} x_{i1}..d(x_{ij})..x_{ip}
    for (size_t i = 0; i < subsets.size(); ++i) {
        const auto& S = subsets[i];
        if (S.empty()) continue;
        std::map<int, Scalar> acc;
        for (size_t j = 0; j < S.size(); ++j) {
            std::vector<int> rest;
            for (size_t l = 0; l < S.size(); ++l)
                if (l != j) rest.push_back(S[l]);
            int outer_sign = j % 2 ? -1 : 1;
            for (const auto& [dterm, coeff] : diff_specs[S[j]]) {
                int sign = merge_sign(dterm, rest, merged);
                if (sign == 0) continue;
                // move d(x_{ij}) (degree 2, even) to the front: no extra sign
                Scalar c = coeff * Scalar(Rational(sign * outer_sign));
                acc[subset_index.at(merged)] += c;
            }
        }
        SparseVec row;
        for (const auto& [idx, c] : acc)
            if (!c.is_zero()) row.push_back({idx, c});
        mdl->set_diff(int(i), std::move(row));
    }
    if (!coframe.empty()) mdl->set_coframe(coframe);
    mdl->finalize();
    return mdl;
}

int max_model_dim() {
    if (const char* env = std::getenv("HSALG_MAX_DIM")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4096;
}

void check_model_dim(size_t dim) {
    if (dim > size_t(max_model_dim()))
        throw DomainError("model basis size " + std::to_string(dim) +
                          " exceeds HSALG_MAX_DIM = " + std::to_string(max_model_dim()));
}

}  // namespace hsalg
