#include "leflab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace leflab {

Json json_rational(const Rational& r) { return rat_str(r); }

Rational rational_from_json(const Json& j)
{
  if (j.is_number_integer()) return Rational((long)j.get<long long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" or integer");
}

Json json_vec(const Vec& v)
{
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(json_rational(x));
  return out;
}

Vec vec_from_json(const Json& j)
{
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json json_matrix(const Matrix& m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_vec(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j)
{
  if (!j.is_array()) throw std::invalid_argument("expected a matrix as nested arrays");
  std::vector<Vec> rows;
  std::size_t cols = 0;
  for (const Json& r : j) {
    rows.push_back(vec_from_json(r));
    if (rows.size() == 1)
      cols = rows[0].size();
    else if (rows.back().size() != cols)
      throw std::invalid_argument("ragged matrix rows");
  }
  return Matrix::from_rows(rows, cols);
}

namespace {

GradedSpace space_from_json(const Json& j)
{
  if (!j.is_object()) throw std::invalid_argument("\"pieces\" must be an object");
  GradedSpace s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int deg = std::stoi(it.key());
    int dim = it.value().get<int>();
    if (dim < 0) throw std::invalid_argument("negative dimension");
    if (dim > 0) s.pieces[deg] = dim;
  }
  return s;
}

Json space_to_json(const GradedSpace& s)
{
  Json out = Json::object();
  for (const auto& [deg, dim] : s.pieces) out[std::to_string(deg)] = dim;
  return out;
}

}  // namespace

Json algebra_to_json(const GradedAlgebra& alg)
{
  Json out;
  out["pieces"] = space_to_json(alg.space);
  Json mult = Json::array();
  for (int p : alg.space.degrees())
    for (int q : alg.space.degrees()) {
      if (alg.space.dim(p + q) == 0) continue;
      for (int i = 0; i < alg.space.dim(p); ++i)
        for (int j = 0; j < alg.space.dim(q); ++j) {
          Vec v = alg.basis_product(p, i, q, j);
          bool zero = true;
          for (const Rational& x : v)
            if (x != 0) zero = false;
          if (zero) continue;
          mult.push_back(Json::array({p, i, q, j, json_vec(v)}));
        }
    }
  out["mult"] = mult;
  return out;
}

GradedAlgebra algebra_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("pieces"))
    throw std::invalid_argument("algebra document needs \"pieces\"");
  GradedAlgebra alg;
  alg.space = space_from_json(j.at("pieces"));
  if (j.contains("mult")) {
    const Json& mult = j.at("mult");
    if (!mult.is_array()) throw std::invalid_argument("\"mult\" must be an array");
    for (const Json& e : mult) {
      if (!e.is_array() || e.size() != 5)
        throw std::invalid_argument("each \"mult\" entry is [p, i, q, j, coeffs]");
      int p = e[0].get<int>(), i = e[1].get<int>(), q = e[2].get<int>(), jj = e[3].get<int>();
      Vec v = vec_from_json(e[4]);
      if (i < 0 || i >= alg.space.dim(p) || jj < 0 || jj >= alg.space.dim(q) ||
          (int)v.size() != alg.space.dim(p + q))
        throw std::invalid_argument("\"mult\" entry out of range");
      alg.set_product(p, i, q, jj, std::move(v));
    }
  }
  return alg;
}

LefschetzModule module_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("pieces"))
    throw std::invalid_argument("module document needs \"pieces\"");
  if (j.contains("a_basis")) {
    LefschetzModule L;
    L.M = space_from_json(j.at("pieces"));
    const Json& ops = j.at("a_basis");
    if (!ops.is_array()) throw std::invalid_argument("\"a_basis\" must be an array");
    for (const Json& op : ops) {
      GradedMap m = GradedMap::zero(L.M, 2);
      if (!op.is_object()) throw std::invalid_argument("operator blocks must be objects");
      for (auto it = op.begin(); it != op.end(); ++it) {
        int src = std::stoi(it.key());
        Matrix blk = matrix_from_json(it.value());
        if ((int)blk.rows() != L.M.dim(src + 2) || (int)blk.cols() != L.M.dim(src))
          throw std::invalid_argument("operator block has wrong shape");
        m.blocks[src] = std::move(blk);
      }
      L.a_basis.push_back(std::move(m));
    }
    L.validate();
    return L;
  }
  GradedAlgebra alg = algebra_from_json(j);
  Vec integral;
  if (j.contains("integral")) {
    integral = vec_from_json(j.at("integral"));
  } else {
    if (alg.space.dim(alg.top_degree()) != 1)
      throw std::invalid_argument("\"integral\" required when the top piece is not a line");
    integral = Vec{Rational(1)};
  }
  return module_from_algebra(alg, integral);
}

Json module_to_json(const LefschetzModule& L)
{
  Json out;
  out["pieces"] = space_to_json(L.M);
  Json ops = Json::array();
  for (const GradedMap& m : L.a_basis) {
    Json op = Json::object();
    for (const auto& [src, blk] : m.blocks)
      if (!blk.is_zero()) op[std::to_string(src)] = json_matrix(blk);
    ops.push_back(op);
  }
  out["a_basis"] = ops;
  return out;
}

Json fingerprint_to_json(const LieFingerprint& fp)
{
  Json out;
  out["dim"] = fp.dim;
  Json adh = Json::object();
  for (const auto& [deg, d] : fp.adh) adh[std::to_string(deg)] = d;
  out["adh"] = adh;
  out["dim_g0"] = fp.dim_g0;
  out["killing_signature"] = Json::array({(int)fp.killing_sig.positive,
                                          (int)fp.killing_sig.negative,
                                          (int)fp.killing_sig.zero});
  out["center_dim"] = fp.center_dim;
  out["semisimple"] = fp.semisimple;
  return out;
}

namespace {

void render(const Json& j, int indent, std::ostringstream& out)
{
  std::string pad(2 * indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << pad << it.key() << ":";
      if (it.value().is_object() || (it.value().is_array() && it.value().size() > 8)) {
        out << "\n";
        render(it.value(), indent + 1, out);
      } else {
        out << " " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (e.is_object() || e.is_array()) {
        out << pad << "-\n";
        render(e, indent + 1, out);
      } else {
        out << pad << "- " << e.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j)
{
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace leflab
