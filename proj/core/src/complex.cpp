#include "drep/complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace drep {

void TruncatedComplex::add_cell(int h, int w, std::vector<std::string> labels) {
  cells[{h, w}] = std::move(labels);
}

void TruncatedComplex::set_diff(int h, int w, QMatrix m) {
  if (m.cols != dim(h, w) || m.rows != dim(h - 1, w))
    throw std::invalid_argument("set_diff: shape mismatch at cell");
  diff[{h, w}] = std::move(m);
}

const QMatrix* TruncatedComplex::get_diff(int h, int w) const {
  auto it = diff.find({h, w});
  return it == diff.end() ? nullptr : &it->second;
}

std::vector<CellKey> TruncatedComplex::d_squared_violations() const {
  std::vector<CellKey> bad;
  for (const auto& [key, d] : diff) {
    const QMatrix* dn = get_diff(key.h - 1, key.w);
    if (!dn) continue;
    if (!mat_mul(*dn, d).is_zero()) bad.push_back(key);
  }
  return bad;
}

BettiTable betti(const TruncatedComplex& c) {
  auto bad = c.d_squared_violations();
  if (!bad.empty()) {
    std::ostringstream os;
    os << "betti: d^2 != 0 at cell (h=" << bad[0].h << ", w=" << bad[0].w << ")";
    throw std::logic_error(os.str());
  }
  BettiTable b;
  for (const auto& [key, labels] : c.cells) {
    long dim = static_cast<long>(labels.size());
    const QMatrix* dout = c.get_diff(key.h, key.w);
    const QMatrix* din = c.get_diff(key.h + 1, key.w);
    long r_out = dout ? rank_exact(*dout) : 0;
    long r_in = din ? rank_exact(*din) : 0;
    BettiCell cell;
    cell.dim = dim - r_out - r_in;
    if (cell.dim < 0) throw std::logic_error("betti: negative homology dim");
    cell.lower_bound_only = c.incomplete_weights.count(key.w) > 0;
    if (cell.dim != 0 || cell.lower_bound_only) b.cells[key] = cell;
  }
  return b;
}

std::map<int, long> euler(const TruncatedComplex& c) {
  std::map<int, long> chi;
  for (const auto& [key, labels] : c.cells) {
    long s = static_cast<long>(labels.size());
    chi[key.w] += (parity_of(key.h) ? -s : s);
  }
  return chi;
}

std::map<int, long> euler(const BettiTable& b) {
  std::map<int, long> chi;
  for (const auto& [key, cell] : b.cells)
    chi[key.w] += (parity_of(key.h) ? -cell.dim : cell.dim);
  return chi;
}

static std::map<int, long> euler_betti_checked(const TruncatedComplex& c) {
  auto chi_c = euler(c);
  auto chi_h = euler(betti(c));
  for (const auto& [w, v] : chi_c)
    if (chi_h.count(w) ? chi_h.at(w) != v : v != 0)
      throw std::logic_error("euler: complex-level and homology-level sums differ");
  return chi_c;
}

LesReport les_check(const TruncatedComplex& sub, const TruncatedComplex& mid,
                    const TruncatedComplex& quot) {
  LesReport rep;
  std::set<CellKey> keys;
  for (const auto* c : {&sub, &mid, &quot})
    for (const auto& [key, labels] : c->cells) keys.insert(key);
  for (const auto& key : keys) {
    long s = sub.dim(key.h, key.w), m = mid.dim(key.h, key.w),
         q = quot.dim(key.h, key.w);
    if (m != s + q) {
      rep.dims_ok = false;
      std::ostringstream os;
      os << "dim mismatch at (h=" << key.h << ", w=" << key.w << "): " << m
         << " != " << s << " + " << q;
      rep.notes.push_back(os.str());
    }
  }
  if (!rep.dims_ok) return rep;

  auto chi_s = euler_betti_checked(sub);
  auto chi_m = euler_betti_checked(mid);
  auto chi_q = euler_betti_checked(quot);
  std::set<int> weights;
  for (const auto* chi : {&chi_s, &chi_m, &chi_q})
    for (const auto& [w, v] : *chi) weights.insert(w);
  auto at = [](const std::map<int, long>& m, int w) {
    auto it = m.find(w);
    return it == m.end() ? 0L : it->second;
  };
  for (int w : weights) {
    if (at(chi_m, w) != at(chi_s, w) + at(chi_q, w)) {
      rep.euler_complex_ok = false;
      std::ostringstream os;
      os << "chi(complex) additivity fails at weight " << w;
      rep.notes.push_back(os.str());
    }
  }
  // With exact dims additivity, the homology-level alternating-sum identity is
  // the consistency condition a long exact sequence imposes.
  auto hs = euler(betti(sub)), hm = euler(betti(mid)), hq = euler(betti(quot));
  for (int w : weights) {
    if (at(hm, w) != at(hs, w) + at(hq, w)) {
      rep.euler_homology_ok = false;
      std::ostringstream os;
      os << "chi(homology) additivity fails at weight " << w;
      rep.notes.push_back(os.str());
    }
  }
  return rep;
}

std::string betti_json(const BettiTable& b,
                       const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream os;
  os << "{\"cells\": [";
  bool first = true;
  for (const auto& [key, cell] : b.cells) {
    if (cell.dim == 0 && !cell.lower_bound_only) continue;
    if (!first) os << ", ";
    first = false;
    os << "{\"hdeg\": " << key.h << ", \"weight\": " << key.w
       << ", \"dim\": " << cell.dim;
    if (cell.lower_bound_only) os << ", \"lower_bound_only\": true";
    os << "}";
  }
  os << "], \"meta\": {";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) os << ", ";
    os << "\"" << meta[i].first << "\": " << meta[i].second;
  }
  os << "}}";
  return os.str();
}

std::string betti_grid(const BettiTable& b) {
  if (b.cells.empty()) return "(empty table)\n";
  int hmin = 0, hmax = 0, wmin = 1, wmax = 1;
  bool first = true;
  for (const auto& [key, cell] : b.cells) {
    if (first) {
      hmin = hmax = key.h;
      wmin = wmax = key.w;
      first = false;
    }
    hmin = std::min(hmin, key.h);
    hmax = std::max(hmax, key.h);
    wmin = std::min(wmin, key.w);
    wmax = std::max(wmax, key.w);
  }
  std::ostringstream os;
  os << "h\\w";
  for (int w = wmin; w <= wmax; ++w) os << "\t" << w;
  os << "\n";
  for (int h = hmax; h >= hmin; --h) {
    os << h;
    for (int w = wmin; w <= wmax; ++w) {
      auto it = b.cells.find({h, w});
      os << "\t";
      if (it == b.cells.end()) {
        os << ".";
      } else {
        os << it->second.dim;
        if (it->second.lower_bound_only) os << "+";
      }
    }
    os << "\n";
  }
  return os.str();
}


std::map<CellKey, std::vector<CommMono>> enumerate_monomials(
    const CommVarTable& tab, int max_weight, long cell_budget,
    bool include_unit) {
  std::map<CellKey, std::vector<CommMono>> cells;
  CommMono cur;
  long total = 0;
  std::function<void(VarId, int)> rec = [&](VarId v, int wleft) {
    {
      CellKey key{mono_hdeg(cur, tab), mono_weight(cur, tab)};
      if (key.w >= 1 || include_unit) {
        cells[key].push_back(cur);
        if (++total > cell_budget)
          throw std::length_error(
              "monomial budget exceeded (" + std::to_string(cell_budget) +
              "); reduce the weight cutoff or raise the cell budget");
      }
    }
    for (VarId u = v; u < tab.size(); ++u) {
      int wu = tab[u].weight;
      if (wu > wleft) continue;
      int cap = tab[u].parity() ? 1 : wleft / wu;
      if (cap < 1) continue;
      cur.push_back({u, 1});
      for (int e = 1; e <= cap; ++e) {
        cur.back().second = e;
        rec(u + 1, wleft - e * wu);
      }
      cur.pop_back();
    }
  };
  rec(0, max_weight);
  for (auto& [key, list] : cells) std::sort(list.begin(), list.end());
  return cells;
}

}  // namespace drep
