#include "scs/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace scs {

using nlohmann::json;

CMatrix parse_cmatrix(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InputError(what + ": matrix needs \"re\" and \"im\" arrays");
  const json& re = j["re"];
  const json& im = j["im"];
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    throw InputError(what + ": matrix re/im shape mismatch");
  const std::size_t rows = re.size();
  const std::size_t cols = re[0].size();
  CMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!re[i].is_array() || re[i].size() != cols || !im[i].is_array() || im[i].size() != cols)
      throw InputError(what + ": ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<int>(i), static_cast<int>(k)) = {re[i][k].get<double>(),
                                                     im[i][k].get<double>()};
  }
  return m;
}

json cmatrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json rrow = json::array(), irow = json::array();
    for (int j = 0; j < m.cols; ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<FieldComponentModes> parse_component_list(const json& j, int n_axes, int rows,
                                                      int cols, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected a components array");
  std::vector<FieldComponentModes> out;
  for (const json& jc : j) {
    FieldComponentModes comp;
    if (!jc.contains("index") || !jc["index"].is_array())
      throw InputError(what + " component: missing index");
    for (const auto& v : jc["index"]) comp.index.push_back(v.get<int>());
    Mask mask = 0;
    if (!axes_to_mask(comp.index, n_axes, &mask))
      throw InputError(what + " component: index must be strictly increasing within 1.." +
                       std::to_string(n_axes));
    if (!jc.contains("modes") || !jc["modes"].is_array())
      throw InputError(what + " component: missing modes");
    for (const json& jm : jc["modes"]) {
      FieldMode mode;
      if (!jm.contains("freq") || !jm["freq"].is_array() ||
          static_cast<int>(jm["freq"].size()) != n_axes)
        throw InputError(what + " mode: freq must list one integer per axis");
      for (const auto& v : jm["freq"]) mode.freq.push_back(v.get<int>());
      mode.matrix = parse_cmatrix(jm.contains("matrix") ? jm["matrix"] : json{}, what + " mode");
      if (mode.matrix.rows != rows || mode.matrix.cols != cols)
        throw InputError(what + " mode: matrix must be " + std::to_string(rows) + "x" +
                         std::to_string(cols));
      comp.modes.push_back(std::move(mode));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

json component_list_to_json(const std::vector<FieldComponentModes>& components) {
  json comps = json::array();
  for (const auto& c : components) {
    json jc;
    jc["index"] = c.index;
    json modes = json::array();
    for (const auto& m : c.modes)
      modes.push_back(json{{"freq", m.freq}, {"matrix", cmatrix_to_json(m.matrix)}});
    jc["modes"] = std::move(modes);
    comps.push_back(std::move(jc));
  }
  return comps;
}

bool operator==(const FieldModes& a, const FieldModes& b) {
  if (a.grid != b.grid || !(a.ranks == b.ranks) || a.components.size() != b.components.size())
    return false;
  for (std::size_t c = 0; c < a.components.size(); ++c) {
    const auto& ca = a.components[c];
    const auto& cb = b.components[c];
    if (ca.index != cb.index || ca.modes.size() != cb.modes.size()) return false;
    for (std::size_t m = 0; m < ca.modes.size(); ++m)
      if (ca.modes[m].freq != cb.modes[m].freq || !(ca.modes[m].matrix == cb.modes[m].matrix))
        return false;
  }
  return true;
}

FieldModes parse_field_modes(const json& j) {
  FieldModes spec;
  if (!j.is_object()) throw InputError("field: expected an object");
  if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty())
    throw InputError("field: missing grid");
  for (const auto& v : j["grid"]) spec.grid.push_back(v.get<int>());
  if (!j.contains("ranks") || !j["ranks"].contains("even") || !j["ranks"].contains("odd"))
    throw InputError("field: missing ranks {even, odd}");
  spec.ranks.even = j["ranks"]["even"].get<int>();
  spec.ranks.odd = j["ranks"]["odd"].get<int>();
  if (spec.ranks.even < 0 || spec.ranks.odd < 0 || spec.ranks.total() == 0)
    throw InputError("field: ranks must be nonnegative with r+s > 0");
  const int n = static_cast<int>(spec.grid.size());
  const int m = spec.ranks.total();
  if (!j.contains("components"))
    throw InputError("field: missing components array");
  spec.components = parse_component_list(j["components"], n, m, m, "field");
  return spec;
}

json field_modes_to_json(const FieldModes& spec) {
  json j;
  j["grid"] = spec.grid;
  j["ranks"] = json{{"even", spec.ranks.even}, {"odd", spec.ranks.odd}};
  j["components"] = component_list_to_json(spec.components);
  return j;
}

std::string write_field_modes(const FieldModes& spec) { return field_modes_to_json(spec).dump(2); }

FieldModes parse_field_modes_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InputError("field: malformed JSON");
  return parse_field_modes(j);
}

void validate_band_limit(const FieldModes& spec, const TorusGrid& grid,
                         const std::string& what) {
  for (const auto& c : spec.components)
    for (const auto& m : c.modes)
      for (int k = 0; k < grid.dim(); ++k)
        if (std::abs(m.freq[k]) > grid.band_limit(k))
          throw InputError(what + ": frequency " + std::to_string(m.freq[k]) + " on axis " +
                           std::to_string(k + 1) + " exceeds the band limit " +
                           std::to_string(grid.band_limit(k)) + " (aliasing)");
}

MatrixFormField evaluate_modes(const FieldModes& spec, const TorusGrid& grid,
                               const std::string& what) {
  if (static_cast<int>(spec.grid.size()) != grid.dim())
    throw InputError(what + ": grid dimension mismatch");
  validate_band_limit(spec, grid, what);
  const int n = grid.dim();
  const int m = spec.ranks.total();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  MatrixFormField field(grid, spec.ranks);
  const double two_pi = 2.0 * std::numbers::pi;
  for (const auto& c : spec.components) {
    Mask mask = 0;
    axes_to_mask(c.index, n, &mask);
    auto& dst = field.component(mask);
    for (const auto& mode : c.modes) {
      for (std::size_t p = 0; p < grid.total_points(); ++p) {
        std::vector<int> coords = grid.coords(p);
        double phase = 0.0;
        for (int k = 0; k < n; ++k)
          phase += static_cast<double>(mode.freq[k]) * coords[k] / grid.points(k);
        const cplx w = std::polar(1.0, two_pi * phase);
        cplx* b = dst.data() + p * bs;
        for (std::size_t e = 0; e < bs; ++e)
          b[e] += w * mode.matrix.a[e];
      }
    }
  }
  return field;
}

FieldModes field_to_modes(const MatrixFormField& field, double prune_tol) {
  const TorusGrid& grid = field.grid();
  const int n = grid.dim();
  const int m = field.msize();
  const std::size_t bs = static_cast<std::size_t>(m) * m;
  const double two_pi = 2.0 * std::numbers::pi;
  FieldModes spec;
  spec.grid = grid.shape();
  spec.ranks = field.ranks();
  for (const auto& [mask, data] : field.components()) {
    // Separable DFT: transform one axis at a time.
    std::vector<cplx> coef = data;
    std::vector<cplx> next(coef.size());
    for (int axis = 0; axis < n; ++axis) {
      const int np = grid.points(axis);
      const std::ptrdiff_t stride = static_cast<std::ptrdiff_t>(grid.stride(axis)) * bs;
      for (std::size_t p = 0; p < grid.total_points(); ++p) {
        const int j = static_cast<int>((p / grid.stride(axis)) % np);
        const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(p) * bs;
        // p is reinterpreted as frequency bin j on this axis.
        for (std::size_t e = 0; e < bs; ++e) {
          cplx acc{};
          for (int l = 0; l < np; ++l) {
            const cplx w = std::polar(1.0 / np, -two_pi * j * l / np);
            acc += w * coef[base + static_cast<std::ptrdiff_t>(l - j) * stride + e];
          }
          next[base + e] = acc;
        }
      }
      std::swap(coef, next);
    }
    FieldComponentModes comp;
    comp.index = mask_to_axes(mask);
    for (std::size_t p = 0; p < grid.total_points(); ++p) {
      const cplx* b = coef.data() + p * bs;
      double peak = 0.0;
      for (std::size_t e = 0; e < bs; ++e) peak = std::max(peak, std::abs(b[e]));
      if (peak <= prune_tol) continue;
      FieldMode mode;
      std::vector<int> bins = grid.coords(p);
      mode.freq.resize(n);
      for (int k = 0; k < n; ++k)
        mode.freq[k] = bins[k] <= grid.points(k) / 2 ? bins[k] : bins[k] - grid.points(k);
      mode.matrix = CMatrix(m, m);
      for (std::size_t e = 0; e < bs; ++e) mode.matrix.a[e] = b[e];
      comp.modes.push_back(std::move(mode));
    }
    if (!comp.modes.empty()) spec.components.push_back(std::move(comp));
  }
  return spec;
}

}  // namespace scs
