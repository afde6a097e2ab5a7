#include "drep/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

namespace drep {

std::pair<Word, Scalar> rotate(const Word& w, const GeneratorTable& tab) {
  if (w.empty()) throw std::invalid_argument("rotate: empty word");
  int last = tab[w.back()].parity();
  int rest = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) rest += tab[w[i]].parity();
  Word r;
  r.reserve(w.size());
  r.push_back(w.back());
  r.insert(r.end(), w.begin(), w.end() - 1);
  return {r, (last && rest % 2) ? Scalar(-1) : Scalar(1)};
}

// All rotations with composed signs: entry k is (tau^k w, sign_k).
static std::vector<std::pair<Word, Scalar>> rotations(const Word& w,
                                                      const GeneratorTable& tab) {
  std::vector<std::pair<Word, Scalar>> out;
  out.reserve(w.size());
  out.push_back({w, Scalar(1)});
  Word cur = w;
  Scalar sign(1);
  for (std::size_t k = 1; k < w.size(); ++k) {
    auto [next, s] = rotate(cur, tab);
    sign *= s;
    cur = std::move(next);
    out.push_back({cur, sign});
  }
  return out;
}

NCPoly norm_operator(const Word& w, const GeneratorTable& tab) {
  if (w.empty()) return nc_one();  // N(1) := 1
  NCPoly n;
  for (auto& [rw, s] : rotations(w, tab)) n.add_term(rw, s);
  return n;
}

std::optional<std::pair<CyclicWord, Scalar>> canonical_cyclic(
    const Word& w, const GeneratorTable& tab) {
  if (w.empty()) throw std::invalid_argument("canonical_cyclic: empty word");
  auto rots = rotations(w, tab);
  // Bad iff w = -tau^k(w) for some k: same rotation word with sign -1.
  for (std::size_t k = 1; k < rots.size(); ++k)
    if (rots[k].first == w && rots[k].second == -1) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t k = 1; k < rots.size(); ++k)
    if (rots[k].first < rots[best].first) best = k;
  CyclicWord cw;
  cw.rep = rots[best].first;
  cw.hdeg = word_hdeg(cw.rep, tab);
  cw.weight = word_weight(cw.rep, tab);
  return std::make_pair(cw, rots[best].second);
}

NCPoly cyclic_derivative(const NCPoly& p, GenId g, const GeneratorTable& tab) {
  NCPoly out;
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) continue;
    for (auto& [rw, s] : rotations(w, tab))
      if (rw.front() == g)
        out.add_term(Word(rw.begin() + 1, rw.end()), Scalar(c * s));
  }
  return out;
}

std::map<CyclicWord, Scalar> cyclic_project(const NCPoly& p,
                                            const GeneratorTable& tab) {
  std::map<CyclicWord, Scalar> out;
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) continue;  // reduced part only
    auto can = canonical_cyclic(w, tab);
    if (!can) continue;  // bad words die in C(R)
    auto& acc = out[can->first];
    acc += c * can->second;
    if (acc == 0) out.erase(can->first);
  }
  return out;
}

CyclicBasis cyclic_words(const GeneratorTable& tab, int max_weight,
                         int max_len) {
  CyclicBasis b;
  // Enumerate all words of weight <= W; keep those that are the canonical
  // representative of a good class.
  std::map<Word, bool> seen;
  struct Item { Word w; int weight; };
  std::vector<Item> todo{{Word{}, 0}};
  while (!todo.empty()) {
    Item it = std::move(todo.back());
    todo.pop_back();
    if (max_len >= 0 && static_cast<int>(it.w.size()) >= max_len) continue;
    for (GenId g = 0; g < tab.size(); ++g) {
      int nw = it.weight + tab[g].weight;
      if (nw > max_weight) continue;
      Word w = it.w;
      w.push_back(g);
      auto can = canonical_cyclic(w, tab);
      if (can && can->first.rep == w) seen[w] = true;
      todo.push_back({std::move(w), nw});
    }
  }
  for (auto& [rep, _] : seen) {
    CyclicWord cw{rep, word_hdeg(rep, tab), word_weight(rep, tab)};
    b.cells[{cw.hdeg, cw.weight}].push_back(cw);
  }
  for (auto& [key, list] : b.cells) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      b.index[list[i].rep] = {key, static_cast<int>(i)};
  }
  for (auto& [key, list] : b.cells)
    for (auto& cw : list) {
      b.id_of[cw.rep] = static_cast<int>(b.all.size());
      b.all.push_back(cw);
    }
  return b;
}

CyclicBasis cyclic_basis(const DGAPresentation& p, int max_weight) {
  p.require_differential();
  p.require_weight(max_weight);
  return cyclic_words(p.tab, max_weight);
}

CyclicComplex cyclic_complex(const DGAPresentation& p, int max_weight) {
  CyclicComplex cc;
  cc.basis = cyclic_basis(p, max_weight);
  for (const auto& [key, list] : cc.basis.cells) {
    std::vector<std::string> labels;
    labels.reserve(list.size());
    for (const auto& cw : list) labels.push_back("[" + word_str(cw.rep, p.tab) + "]");
    cc.complex.add_cell(key.h, key.w, std::move(labels));
  }
  for (const auto& [key, list] : cc.basis.cells) {
    QMatrix d(cc.complex.dim(key.h - 1, key.w), static_cast<int>(list.size()));
    for (std::size_t j = 0; j < list.size(); ++j) {
      NCPoly dv = extend_derivation(p, nc_word(list[j].rep));
      for (auto& [cw, c] : cyclic_project(dv, p.tab)) {
        auto it = cc.basis.index.find(cw.rep);
        if (it == cc.basis.index.end())
          throw std::logic_error("cyclic_complex: differential escapes basis");
        d.set(it->second.second, static_cast<int>(j), c);
      }
    }
    cc.complex.set_diff(key.h, key.w, std::move(d));
  }
  return cc;
}

}  // namespace drep
