#include "drep/repfunctor.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace drep {

MatrixAlgebra rep_n(const DGAPresentation& p, int n) {
  p.require_differential();
  if (n < 1) throw std::invalid_argument("rep_n: n >= 1 required");
  MatrixAlgebra ma;
  ma.pres = &p;
  ma.n = n;
  for (GenId g = 0; g < p.tab.size(); ++g) {
    const Generator& gen = p.tab[g];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::ostringstream nm;
        nm << gen.name << "_" << (i + 1) << "_" << (j + 1);
        ma.vars.add({nm.str(), gen.hdeg, gen.weight});
      }
  }
  ma.vdiff.assign(ma.vars.size(), CommPoly{});
  for (GenId g = 0; g < p.tab.size(); ++g) {
    if (p.diff[g].is_zero()) continue;
    // d(x^g_{ij}) = || pi(d x^g) ||_{ij}
    std::vector<std::vector<CommPoly>> dm(n, std::vector<CommPoly>(n));
    for (const auto& [w, c] : p.diff[g].terms) {
      auto wm = evaluate_word_matrix(ma, w);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dm[i][j] = dm[i][j] + wm[i][j] * c;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ma.vdiff[ma.vid(g, i, j)] = dm[i][j];
  }
  return ma;
}

std::vector<std::vector<CommPoly>> evaluate_word_matrix(const MatrixAlgebra& ma,
                                                        const Word& w) {
  const int n = ma.n;
  std::vector<std::vector<CommPoly>> m(n, std::vector<CommPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = comm_one();
  for (GenId g : w) {
    std::vector<std::vector<CommPoly>> next(n, std::vector<CommPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CommPoly acc;
        for (int k = 0; k < n; ++k) {
          if (m[i][k].is_zero()) continue;
          acc = acc + mul_comm(m[i][k], comm_var(ma.vid(g, k, j)), ma.vars);
        }
        next[i][j] = std::move(acc);
      }
    m = std::move(next);
  }
  return m;
}

CommPoly trace_word(const MatrixAlgebra& ma, const Word& w) {
  auto m = evaluate_word_matrix(ma, w);
  CommPoly tr;
  for (int i = 0; i < ma.n; ++i) tr = tr + m[i][i];
  return tr;
}

CommPoly trace_cyclic(const MatrixAlgebra& ma, const CyclicWord& cw) {
  return trace_word(ma, cw.rep);
}

CommPoly d_comm(const MatrixAlgebra& ma, const CommPoly& p) {
  CommPoly out;
  for (const auto& [m, c] : p.terms) {
    CommPoly dm = derive_monomial(
        m, ma.vars,
        [&](VarId v) -> const CommPoly& { return ma.vdiff[v]; }, true);
    out = out + dm * c;
  }
  return out;
}

std::vector<CommPoly> gl_residuals(const MatrixAlgebra& ma, const CommPoly& p) {
  const int n = ma.n;
  const std::size_t ngens = ma.pres->tab.size();
  std::vector<CommPoly> res(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (E_ab . X)_{ij} = delta_{ia} x_{bj} - x_{ia} delta_{jb}
      std::vector<CommPoly> action(ma.vars.size());
      for (GenId g = 0; g < ngens; ++g)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            CommPoly v;
            if (i == a) v = v + comm_var(ma.vid(g, b, j));
            if (j == b) v = v - comm_var(ma.vid(g, i, a));
            action[ma.vid(g, i, j)] = std::move(v);
          }
      CommPoly r;
      for (const auto& [m, c] : p.terms) {
        CommPoly dm = derive_monomial(
            m, ma.vars,
            [&](VarId v) -> const CommPoly& { return action[v]; }, false);
        r = r + dm * c;
      }
      res[static_cast<std::size_t>(a) * n + b] = std::move(r);
    }
  return res;
}

CommPoly stabilization_map(const MatrixAlgebra& from, const MatrixAlgebra& to,
                           const CommPoly& p) {
  if (to.n != from.n - 1 || to.pres != from.pres)
    throw std::invalid_argument("stabilization_map: target must be the same "
                                "presentation at size n-1");
  const int n = from.n;
  CommPoly out;
  for (const auto& [m, c] : p.terms) {
    CommMono img;
    bool killed = false;
    for (const auto& [v, e] : m) {
      // Decode (g, i, j) from the from-table layout.
      std::size_t lin = v;
      int j = static_cast<int>(lin % n);
      lin /= n;
      int i = static_cast<int>(lin % n);
      GenId g = static_cast<GenId>(lin / n);
      if (i == n - 1 || j == n - 1) {
        killed = true;
        break;
      }
      img.push_back({to.vid(g, i, j), e});
    }
    if (killed) continue;
    // The (g,i,j) order is preserved by the re-indexing, so img stays sorted.
    out.add_term(img, c);
  }
  return out;
}

std::string serialize_matrix_algebra(const MatrixAlgebra& ma) {
  std::ostringstream os;
  if (!ma.pres->name.empty()) os << "algebra " << ma.pres->name << "\n";
  if (ma.pres->complete_to_weight)
    os << "complete-to-weight " << *ma.pres->complete_to_weight << "\n";
  os << "commutative\n";
  for (VarId v = 0; v < ma.vars.size(); ++v) {
    const CommVar& cv = ma.vars[v];
    os << "generator " << cv.name << " hdeg " << cv.hdeg << " weight "
       << cv.weight << "\n";
  }
  for (VarId v = 0; v < ma.vars.size(); ++v) {
    if (ma.vdiff[v].is_zero()) continue;
    // Render each monomial as a *-separated word of variable names.
    std::ostringstream rhs;
    bool first = true;
    for (const auto& [m, c] : ma.vdiff[v].terms) {
      Scalar a = c;
      bool neg = a < 0;
      if (neg) a = Scalar(-a);
      rhs << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      if (a != 1) rhs << scalar_str(a) << "*";
      rhs << mono_str(m, ma.vars);
    }
    os << "d " << ma.vars[v].name << " = " << rhs.str() << "\n";
  }
  return os.str();
}

// --- full monomial complex -------------------------------------------------------

TruncatedComplex full_complex(const MatrixAlgebra& ma, int max_weight,
                              long cell_budget) {
  ma.pres->require_weight(max_weight);
  auto cells = enumerate_monomials(ma.vars, max_weight, cell_budget);
  TruncatedComplex tc;
  std::map<CellKey, std::map<CommMono, int>> index;
  for (auto& [key, list] : cells) {
    std::vector<std::string> labels;
    labels.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      index[key][list[i]] = static_cast<int>(i);
      labels.push_back(mono_str(list[i], ma.vars));
    }
    tc.add_cell(key.h, key.w, std::move(labels));
  }
  for (auto& [key, list] : cells) {
    QMatrix d(tc.dim(key.h - 1, key.w), static_cast<int>(list.size()));
    CellKey tgt{key.h - 1, key.w};
    for (std::size_t j = 0; j < list.size(); ++j) {
      CommPoly dp = d_comm(ma, [&] {
        CommPoly p;
        p.add_term(list[j], Scalar(1));
        return p;
      }());
      for (const auto& [m, c] : dp.terms) {
        auto it = index.find(tgt);
        if (it == index.end())
          throw std::logic_error("full_complex: differential escapes cells");
        d.set(it->second.at(m), static_cast<int>(j), c);
      }
    }
    tc.set_diff(key.h, key.w, std::move(d));
  }
  return tc;
}

long invariant_dim_ambient(const MatrixAlgebra& ma, int h, int w,
                           long cell_budget) {
  auto cells = enumerate_monomials(ma.vars, w, cell_budget);
  auto it = cells.find({h, w});
  if (it == cells.end()) return 0;
  const auto& monos = it->second;
  std::map<CommMono, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i)
    index[monos[i]] = static_cast<int>(i);
  const int dim = static_cast<int>(monos.size());
  const int n = ma.n;
  // Stack the n^2 derivation matrices and take the kernel dimension.
  QMatrix stacked(dim * n * n, dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<CommPoly> action(ma.vars.size());
      for (GenId g = 0; g < ma.pres->tab.size(); ++g)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            CommPoly v;
            if (i == a) v = v + comm_var(ma.vid(g, b, j));
            if (j == b) v = v - comm_var(ma.vid(g, i, a));
            action[ma.vid(g, i, j)] = std::move(v);
          }
      int block = (a * n + b) * dim;
      for (int col = 0; col < dim; ++col) {
        CommPoly dm = derive_monomial(
            monos[col], ma.vars,
            [&](VarId v) -> const CommPoly& { return action[v]; }, false);
        for (const auto& [m, c] : dm.terms)
          stacked.set(block + index.at(m), col, c);
      }
    }
  return dim - rank_exact(stacked);
}

// --- stable complex ----------------------------------------------------------------

int StableComplexData::index_in_cell(const CellKey& key, const CommMono& m) const {
  auto it = cells.find(key);
  if (it == cells.end()) return -1;
  auto pos = std::lower_bound(it->second.begin(), it->second.end(), m);
  if (pos == it->second.end() || !(*pos == m)) return -1;
  return static_cast<int>(pos - it->second.begin());
}

StableComplexData stable_complex(const DGAPresentation& p, int max_weight) {
  StableComplexData st;
  st.cyc = cyclic_basis(p, max_weight);
  for (const auto& cw : st.cyc.all)
    st.lambda_vars.add({"[" + word_str(cw.rep, p.tab) + "]", cw.hdeg, cw.weight});
  // Monomials in the cyclic-word variables, truncated by weight.
  auto cells = enumerate_monomials(st.lambda_vars, max_weight, kDefaultCellBudget);
  st.cells = std::move(cells);
  for (auto& [key, list] : st.cells) {
    std::vector<std::string> labels;
    for (const auto& m : list) labels.push_back(mono_str(m, st.lambda_vars));
    st.complex.add_cell(key.h, key.w, std::move(labels));
  }
  // Differential of a cyclic-word variable, in lambda coordinates.
  std::vector<CommPoly> dvar(st.lambda_vars.size());
  for (std::size_t id = 0; id < st.cyc.all.size(); ++id) {
    NCPoly d = extend_derivation(p, nc_word(st.cyc.all[id].rep));
    CommPoly out;
    for (auto& [cw, c] : cyclic_project(d, p.tab)) {
      auto idt = st.cyc.id_of.find(cw.rep);
      if (idt == st.cyc.id_of.end())
        throw std::logic_error("stable_complex: differential escapes basis");
      out.add_term(CommMono{{static_cast<VarId>(idt->second), 1}}, c);
    }
    dvar[id] = std::move(out);
  }
  for (auto& [key, list] : st.cells) {
    QMatrix d(st.complex.dim(key.h - 1, key.w), static_cast<int>(list.size()));
    CellKey tgt{key.h - 1, key.w};
    for (std::size_t j = 0; j < list.size(); ++j) {
      CommPoly dm = derive_monomial(
          list[j], st.lambda_vars,
          [&](VarId v) -> const CommPoly& { return dvar[v]; }, true);
      for (const auto& [m, c] : dm.terms) {
        int row = st.index_in_cell(tgt, m);
        if (row < 0) throw std::logic_error("stable_complex: bad target cell");
        d.set(row, static_cast<int>(j), c);
      }
    }
    st.complex.set_diff(key.h, key.w, std::move(d));
  }
  return st;
}

// --- trace-monomial cells -------------------------------------------------------

SymTraceCell sym_trace_cell(const MatrixAlgebra& ma, const StableComplexData& st,
                            int h, int w, long cell_budget) {
  SymTraceCell cell;
  auto it = st.cells.find({h, w});
  if (it == st.cells.end()) return cell;
  cell.domain = it->second;
  // Cache the trace of each cyclic word on first use.
  std::map<VarId, CommPoly> trace_of;
  auto trace_var = [&](VarId v) -> const CommPoly& {
    auto found = trace_of.find(v);
    if (found == trace_of.end()) {
      CommPoly t = trace_cyclic(ma, st.cyc.all[v]);
      found = trace_of.emplace(v, std::move(t)).first;
    }
    return found->second;
  };
  std::map<CommMono, int> colindex;
  for (const CommMono& m : cell.domain) {
    CommPoly img = comm_one();
    for (const auto& [v, e] : m)
      for (int k = 0; k < e; ++k) img = mul_comm(img, trace_var(v), ma.vars);
    for (const auto& [mono, c] : img.terms) colindex.emplace(mono, 0);
    cell.expansions.push_back(std::move(img));
  }
  if (static_cast<long>(colindex.size()) > cell_budget)
    throw std::length_error("sym_trace_cell: monomial budget exceeded");
  int col = 0;
  for (auto& [mono, idx] : colindex) {
    idx = col++;
    cell.columns.push_back(mono);
  }
  cell.matrix = QMatrix(static_cast<int>(cell.domain.size()), col);
  for (std::size_t r = 0; r < cell.expansions.size(); ++r)
    for (const auto& [mono, c] : cell.expansions[r].terms)
      cell.matrix.set(static_cast<int>(r), colindex.at(mono), c);
  return cell;
}

static std::vector<DenseRow> dense_rows_of(const QMatrix& m) {
  std::vector<DenseRow> rows(m.rows, DenseRow(m.cols, Scalar(0)));
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [j, v] : m.row[i]) rows[i][j] = v;
  return rows;
}

InvariantComplex invariant_subcomplex(const DGAPresentation& p, int n,
                                      int max_weight, long cell_budget,
                                      int jobs) {
  p.require_weight(max_weight);
  MatrixAlgebra ma = rep_n(p, n);
  StableComplexData st = stable_complex(p, max_weight);
  InvariantComplex inv;

  struct CellWork {
    CellKey key;
    SymTraceCell cell;
    std::vector<int> chosen;
  };
  std::vector<CellKey> keys;
  for (const auto& [key, list] : st.cells) keys.push_back(key);
  std::vector<CellWork> work(keys.size());

  auto run_cell = [&](std::size_t idx) {
    const CellKey key = keys[idx];
    CellWork w;
    w.key = key;
    w.cell = sym_trace_cell(ma, st, key.h, key.w, cell_budget);
    auto rows = dense_rows_of(w.cell.matrix);
    w.chosen = independent_rows(rows);
    work[idx] = std::move(w);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < keys.size(); i = next++) run_cell(i);
      });
    for (auto& th : pool) th.join();
  }

  for (auto& w : work) {
    if (w.cell.domain.empty()) continue;
    std::vector<CommMono> monos;
    std::vector<CommPoly> polys;
    std::vector<std::string> labels;
    for (int r : w.chosen) {
      monos.push_back(w.cell.domain[r]);
      polys.push_back(w.cell.expansions[r]);
      labels.push_back(mono_str(w.cell.domain[r], st.lambda_vars));
    }
    if (labels.empty()) continue;
    inv.basis_monos[w.key] = std::move(monos);
    inv.basis_polys[w.key] = std::move(polys);
    inv.complex.add_cell(w.key.h, w.key.w, std::move(labels));
  }

  // Differentials: d(basis poly) solved against the target cell basis.
  for (const auto& [key, polys] : inv.basis_polys) {
    CellKey tgt{key.h - 1, key.w};
    const auto target = inv.basis_polys.find(tgt);
    QMatrix d(inv.complex.dim(tgt.h, tgt.w),
              static_cast<int>(polys.size()));
    for (std::size_t j = 0; j < polys.size(); ++j) {
      CommPoly dp = d_comm(ma, polys[j]);
      if (dp.is_zero()) continue;
      if (target == inv.basis_polys.end())
        throw std::logic_error(
            "invariant_subcomplex: differential escapes the trace span");
      // Coordinates of dp and the target basis on their joint support.
      std::map<CommMono, int> support;
      for (const auto& q : target->second)
        for (const auto& [m, c] : q.terms) support.emplace(m, 0);
      for (const auto& [m, c] : dp.terms) support.emplace(m, 0);
      int col = 0;
      for (auto& [m, idx] : support) idx = col++;
      std::vector<DenseRow> basis_rows(target->second.size(),
                                       DenseRow(col, Scalar(0)));
      for (std::size_t r = 0; r < target->second.size(); ++r)
        for (const auto& [m, c] : target->second[r].terms)
          basis_rows[r][support.at(m)] = c;
      DenseRow v(col, Scalar(0));
      for (const auto& [m, c] : dp.terms) v[support.at(m)] = c;
      auto sol = solve_in_row_span(basis_rows, v);
      if (!sol)
        throw std::logic_error(
            "invariant_subcomplex: d-image escapes the invariant span");
      for (std::size_t r = 0; r < sol->size(); ++r)
        if ((*sol)[r] != 0) d.set(static_cast<int>(r), static_cast<int>(j), (*sol)[r]);
    }
    inv.complex.set_diff(key.h, key.w, std::move(d));
  }
  return inv;
}

ObstructionComplex obstruction_complex(const DGAPresentation& p, int n,
                                       int max_weight, long cell_budget,
                                       int jobs) {
  p.require_weight(max_weight);
  MatrixAlgebra ma = rep_n(p, n);
  StableComplexData st = stable_complex(p, max_weight);
  ObstructionComplex ob;
  std::vector<CellKey> keys;
  for (const auto& [key, domain] : st.cells) keys.push_back(key);
  std::vector<std::vector<DenseRow>> kernels(keys.size());
  auto run_cell = [&](std::size_t idx) {
    const CellKey key = keys[idx];
    SymTraceCell cell = sym_trace_cell(ma, st, key.h, key.w, cell_budget);
    // Kernel of the row map: x with x * matrix = 0, i.e. kernel of the
    // transpose acting on domain coordinates.
    std::vector<DenseRow> cols(cell.matrix.cols,
                               DenseRow(cell.domain.size(), Scalar(0)));
    for (int r = 0; r < cell.matrix.rows; ++r)
      for (const auto& [c, v] : cell.matrix.row[r]) cols[c][r] = v;
    kernels[idx] = nullspace(cols, static_cast<int>(cell.domain.size()));
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < keys.size(); i = next++) run_cell(i);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (kernels[i].empty()) continue;
    const CellKey key = keys[i];
    ob.kernel[key] = kernels[i];
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < kernels[i].size(); ++k)
      labels.push_back("k" + std::to_string(k) + "(h" + std::to_string(key.h) +
                       ",w" + std::to_string(key.w) + ")");
    ob.complex.add_cell(key.h, key.w, std::move(labels));
  }
  // Differential: stable differential restricted to the kernel.
  for (const auto& [key, kern] : ob.kernel) {
    CellKey tgt{key.h - 1, key.w};
    const QMatrix* dstable = st.complex.get_diff(key.h, key.w);
    QMatrix d(ob.complex.dim(tgt.h, tgt.w), static_cast<int>(kern.size()));
    for (std::size_t j = 0; j < kern.size(); ++j) {
      DenseRow img(st.complex.dim(tgt.h, tgt.w), Scalar(0));
      bool nonzero = false;
      if (dstable)
        for (int r = 0; r < dstable->rows; ++r) {
          Scalar acc(0);
          for (const auto& [c, v] : dstable->row[r]) acc += v * kern[j][c];
          img[r] = acc;
          if (acc != 0) nonzero = true;
        }
      if (!nonzero) continue;
      auto kt = ob.kernel.find(tgt);
      if (kt == ob.kernel.end())
        throw std::logic_error("obstruction_complex: kernel is not a subcomplex");
      auto sol = solve_in_row_span(kt->second, img);
      if (!sol)
        throw std::logic_error("obstruction_complex: kernel is not a subcomplex");
      for (std::size_t r = 0; r < sol->size(); ++r)
        if ((*sol)[r] != 0) d.set(static_cast<int>(r), static_cast<int>(j), (*sol)[r]);
    }
    ob.complex.set_diff(key.h, key.w, std::move(d));
  }
  return ob;
}

StabilityTable empirical_stability(const DGAPresentation& p, int max_weight,
                                   int max_n, long cell_budget, int jobs) {
  StabilityTable table;
  StableComplexData st = stable_complex(p, max_weight);
  table.stable = betti(st.complex);
  for (int n = 1; n <= max_n; ++n) {
    InvariantComplex inv = invariant_subcomplex(p, n, max_weight, cell_budget, jobs);
    table.invariant[n] = betti(inv.complex);
  }
  for (int w = 1; w <= max_weight; ++w) {
    std::optional<int> least;
    for (int n = 1; n <= max_n && !least; ++n) {
      bool all_match = true;
      // Compare every homological degree present on either side.
      std::set<int> hs;
      for (const auto& [key, cell] : table.stable.cells)
        if (key.w == w) hs.insert(key.h);
      for (const auto& [key, cell] : table.invariant[n].cells)
        if (key.w == w) hs.insert(key.h);
      for (int h : hs)
        if (table.stable.dim(h, w) != table.invariant[n].dim(h, w))
          all_match = false;
      if (all_match) least = n;
    }
    table.least_n[w] = least;
  }
  return table;
}

}  // namespace drep
