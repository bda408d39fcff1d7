#include "toric/cone.hpp"

#include <algorithm>
#include <mutex>

#include "toric/double_description.hpp"

namespace toric {

struct Cone::Data {
  std::vector<LatticeVector> generators;
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
  HalfspaceRep halfspaces;

  std::once_flag hilbert_once;
  std::vector<LatticeVector> hilbert;
};

Cone::Cone(std::size_t dim) : Cone(dim, {}) {}

Cone::Cone(std::size_t dim, const std::vector<LatticeVector>& generators)
    : dim_(dim), data_(std::make_shared<Data>()) {
  if (dim == 0) throw DomainError("cone: ambient dimension must be positive");
  for (const auto& g : generators) {
    if (g.size() != dim)
      throw DomainError("cone: generator " + to_string(g) + " has wrong dimension");
    if (g.is_zero()) throw DomainError("cone: zero generator");
    LatticeVector p = primitive(g);
    auto& gens = data_->generators;
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  }
  const ConeGenerators dual = double_description(dim, data_->generators);
  data_->halfspaces.normals = dual.rays;
  data_->halfspaces.equations = dual.lineality;
  const ConeGenerators own = double_description(dim, dual.rays, dual.lineality);
  data_->rays = own.rays;
  data_->lineality = own.lineality;
}

const std::vector<LatticeVector>& Cone::generators() const noexcept { return data_->generators; }
const std::vector<LatticeVector>& Cone::extreme_rays() const noexcept { return data_->rays; }
const std::vector<LatticeVector>& Cone::lineality() const noexcept { return data_->lineality; }
const HalfspaceRep& Cone::halfspaces() const noexcept { return data_->halfspaces; }

std::size_t Cone::dimension() const noexcept {
  return dim_ - data_->halfspaces.equations.size();
}

bool Cone::is_full_dimensional() const noexcept { return data_->halfspaces.equations.empty(); }

bool Cone::is_simplicial() const noexcept {
  return data_->lineality.empty() && data_->rays.size() == dimension();
}

bool Cone::contains(const LatticeVector& x) const {
  if (x.size() != dim_) throw DomainError("cone: point has wrong dimension");
  for (const auto& e : data_->halfspaces.equations)
    if (dot(e, x) != 0) return false;
  for (const auto& b : data_->halfspaces.normals)
    if (dot(b, x) < 0) return false;
  return true;
}

bool Cone::same_set(const Cone& other) const {
  return dim_ == other.dim_ && data_->rays == other.data_->rays &&
         data_->lineality == other.data_->lineality;
}

const std::vector<LatticeVector>& Cone::memo_hilbert(
    const std::function<std::vector<LatticeVector>(const Cone&)>& compute) const {
  std::call_once(data_->hilbert_once, [&] { data_->hilbert = compute(*this); });
  return data_->hilbert;
}

std::string to_string(const Cone& c) {
  std::string s = "Con(";
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    if (i) s += ",";
    s += to_string(c.generators()[i]);
  }
  return s + ")";
}

namespace {

Cone cone_from(std::size_t dim, const ConeGenerators& g) {
  std::vector<LatticeVector> gens = g.rays;
  for (const auto& l : g.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return Cone(dim, gens);
}

}  // namespace

Cone dual_cone(const Cone& c) {
  return cone_from(c.ambient_dim(),
                   ConeGenerators{c.halfspaces().normals, c.halfspaces().equations});
}

bool is_pointed(const Cone& c) { return c.lineality().empty(); }

Integer lattice_index(const std::vector<LatticeVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 1;
  const SmithForm s = smith_normal_form(IntegerMatrix::from_rows(vectors, dim));
  if (s.invariants.size() < vectors.size()) return 0;
  Integer product = 1;
  for (const auto& d : s.invariants) product *= d;
  return product;
}

bool is_regular(const Cone& c) {
  if (!is_pointed(c)) throw DomainError("is_regular: cone " + to_string(c) + " is not pointed");
  return c.is_simplicial() && lattice_index(c.extreme_rays(), c.ambient_dim()) == 1;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("intersect: dimension mismatch");
  std::vector<LatticeVector> ineq = a.halfspaces().normals;
  std::vector<LatticeVector> eq = a.halfspaces().equations;
  ineq.insert(ineq.end(), b.halfspaces().normals.begin(), b.halfspaces().normals.end());
  eq.insert(eq.end(), b.halfspaces().equations.begin(), b.halfspaces().equations.end());
  return cone_from(a.ambient_dim(), double_description(a.ambient_dim(), ineq, eq));
}

Cone face_cut(const Cone& c, const LatticeVector& u) {
  std::vector<LatticeVector> eq = c.halfspaces().equations;
  eq.push_back(u);
  return cone_from(c.ambient_dim(), double_description(c.ambient_dim(), c.halfspaces().normals, eq));
}

IntegerMatrix span_lattice_basis(const Cone& c) {
  const auto& eqs = c.halfspaces().equations;
  const auto basis = integer_kernel(IntegerMatrix::from_rows(eqs, c.ambient_dim()));
  return IntegerMatrix::from_columns(basis, c.ambient_dim());
}

LatticeVector span_coordinates(const IntegerMatrix& basis, const LatticeVector& x) {
  const IntegerMatrix bt = basis.transpose();
  const std::vector<Rational> coords = solve_rational(bt * basis, bt * x);
  LatticeVector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!is_integer(coords[i])) throw DomainError("span_coordinates: point not in span lattice");
    out[i] = numerator(coords[i]);
  }
  if (basis * out != x) throw DomainError("span_coordinates: point not in span");
  return out;
}

FanReport fan_validate(const Fan& f) {
  FanReport report;
  for (const auto& c : f.cones)
    if (c.ambient_dim() != f.ambient_dim) throw DomainError("fan: cone dimension mismatch");
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      const Cone& a = f.cones[i];
      const Cone& b = f.cones[j];
      std::vector<LatticeVector> gens = a.generators();
      for (const auto& g : b.generators()) gens.push_back(-g);
      const Cone sep = dual_cone(Cone(f.ambient_dim, gens));
      LatticeVector u(f.ambient_dim);
      for (const auto& r : sep.extreme_rays()) u += r;
      report.witnesses.push_back(u);

      const Cone common = intersect(a, b);
      const bool face_a = face_cut(a, u).same_set(common);
      const bool face_b = face_cut(b, u).same_set(common);
      if (face_a && face_b) continue;
      if (report.valid) {
        report.valid = false;
        report.offending = std::make_pair(i, j);
        report.reason = "intersection " + to_string(common) + " of cones " + std::to_string(i) +
                        " and " + std::to_string(j) + " is not a face of " +
                        (face_a ? "cone " + std::to_string(j) : "cone " + std::to_string(i));
      }
    }
  }
  return report;
}

namespace {

struct Projected {
  std::vector<LatticeVector> rays;
  std::size_t dim = 0;
};

Projected project_rays(const Cone& c, bool project) {
  if (!project) return {c.extreme_rays(), c.ambient_dim()};
  const IntegerMatrix basis = span_lattice_basis(c);
  Projected p;
  p.dim = basis.cols();
  for (const auto& r : c.extreme_rays()) p.rays.push_back(span_coordinates(basis, r));
  std::sort(p.rays.begin(), p.rays.end());
  return p;
}

// Greedy choice of rank-many independent rays.
std::vector<std::size_t> independent_subset(const std::vector<LatticeVector>& rays,
                                            std::size_t dim) {
  std::vector<std::size_t> chosen;
  std::vector<LatticeVector> picked;
  for (std::size_t i = 0; i < rays.size() && picked.size() < dim; ++i) {
    picked.push_back(rays[i]);
    if (rank(picked, dim) == picked.size()) {
      chosen.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  return chosen;
}

}  // namespace

std::optional<ConeIsomorphism> cone_isomorphism(const Cone& c1, const Cone& c2) {
  if (c1.ambient_dim() != c2.ambient_dim())
    throw DomainError("cone_isomorphism: ambient dimensions differ");
  if (!is_pointed(c1) || !is_pointed(c2))
    throw DomainError("cone_isomorphism: both cones must be pointed");
  if (c1.dimension() != c2.dimension() || c1.extreme_rays().size() != c2.extreme_rays().size())
    return std::nullopt;

  const bool project = !c1.is_full_dimensional() || !c2.is_full_dimensional();
  const Projected p1 = project_rays(c1, project);
  const Projected p2 = project_rays(c2, project);
  const std::size_t k = p1.dim;
  if (k == 0) return ConeIsomorphism{IntegerMatrix::identity(0), project};

  const std::vector<std::size_t> basis_idx = independent_subset(p1.rays, k);
  std::vector<LatticeVector> basis_vecs;
  for (auto i : basis_idx) basis_vecs.push_back(p1.rays[i]);
  const auto b1_inv = rational_inverse(IntegerMatrix::from_columns(basis_vecs, k));

  std::vector<std::size_t> tuple;
  std::vector<bool> used(p2.rays.size(), false);
  std::optional<ConeIsomorphism> found;
  std::optional<ConeIsomorphism> reversing;

  std::function<void()> search = [&] {
    if (found) return;
    if (tuple.size() == k) {
      IntegerMatrix l(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Rational s = 0;
          for (std::size_t t = 0; t < k; ++t) s += Rational(p2.rays[tuple[t]][i]) * b1_inv[t][j];
          if (!is_integer(s)) return;
          l(i, j) = numerator(s);
        }
      const Integer det = determinant(l);
      if (abs(det) != 1) return;
      std::vector<LatticeVector> image;
      for (const auto& r : p1.rays) image.push_back(l * r);
      std::sort(image.begin(), image.end());
      if (image != p2.rays) return;
      // Orientation-preserving witnesses are preferred when both exist.
      if (det == 1) {
        found = ConeIsomorphism{std::move(l), project};
      } else if (!reversing) {
        reversing = ConeIsomorphism{std::move(l), project};
      }
      return;
    }
    for (std::size_t i = 0; i < p2.rays.size() && !found; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(i);
      search();
      tuple.pop_back();
      used[i] = false;
    }
  };
  search();
  return found ? found : reversing;
}

}  // namespace toric
