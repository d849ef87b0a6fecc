#ifndef LGQ_TESTS_FIXTURES_HPP
#define LGQ_TESTS_FIXTURES_HPP

// Shared fixtures: the worked examples transcribed from their figures, the
// golden Cartan matrices, and the deterministic property-test corpus.

#include <string>
#include <utility>
#include <vector>

#include "lgq/cartan.hpp"
#include "lgq/format.hpp"
#include "lgq/generator.hpp"

namespace fixtures {

using namespace lgq;

// Three vertices, five arrows, one length-5 cycle with no relations of
// weight q^6 t^5; weights q^(m_e) t with m = 2 on arrow e and m = 1
// elsewhere. This is also the quiver the six-arrow double triangle below
// reduces to.
inline const char* kExample33Text =
    "# three-vertex quiver, weights q^m*t\n"
    "vertex 1\n"
    "vertex 2\n"
    "vertex 3\n"
    "arrow a 1 -> 2\n"
    "arrow b 2 -> 3\n"
    "arrow c 2 -> 3\n"
    "arrow d 3 -> 1\n"
    "arrow e 3 -> 2\n"
    "rel a c\n"
    "rel b d\n"
    "rel c e\n"
    "rel e b\n"
    "weight a q*t\n"
    "weight b q*t\n"
    "weight c q*t\n"
    "weight d q*t\n"
    "weight e q^2*t\n";

inline ParsedQuiver example33() { return parse_quiver_text(kExample33Text); }

// Double triangle: two parallel oriented 3-cycles with full relations and
// one alternating length-6 cycle with no relations; every arrow weighted q.
inline const char* kExample43Text =
    "vertex 1\n"
    "vertex 2\n"
    "vertex 3\n"
    "arrow a1 1 -> 2\n"
    "arrow a2 2 -> 3\n"
    "arrow a3 3 -> 1\n"
    "arrow b1 1 -> 2\n"
    "arrow b2 2 -> 3\n"
    "arrow b3 3 -> 1\n"
    "rel a1 a2\n"
    "rel a2 a3\n"
    "rel a3 a1\n"
    "rel b1 b2\n"
    "rel b2 b3\n"
    "rel b3 b1\n"
    "weight a1 q\n"
    "weight a2 q\n"
    "weight a3 q\n"
    "weight b1 q\n"
    "weight b2 q\n"
    "weight b3 q\n";

inline ParsedQuiver example43() { return parse_quiver_text(kExample43Text); }

// Two-vertex critical quiver with relations ad, bc, db, ca; generic weights.
inline const char* kCritical2Text =
    "vertex 1\n"
    "vertex 2\n"
    "arrow a 1 -> 2\n"
    "arrow b 1 -> 2\n"
    "arrow c 2 -> 1\n"
    "arrow d 2 -> 1\n"
    "rel a d\n"
    "rel b c\n"
    "rel d b\n"
    "rel c a\n";

inline ParsedQuiver critical2() { return parse_quiver_text(kCritical2Text); }

// One vertex, one loop, the loop squares to zero (gentle).
inline const char* kGentleLoopText =
    "vertex v\n"
    "arrow eps v -> v\n"
    "rel eps eps\n"
    "weight eps q\n";

inline ParsedQuiver gentle_loop() { return parse_quiver_text(kGentleLoopText); }

// Helpers for golden matrices over q, t.
inline Monomial qt_mono(Var q, int a, Var t, int b) {
  return Monomial::variable(q, a) * Monomial::variable(t, b);
}

struct QtTerm {
  int coeff, qexp, texp;
};

inline Polynomial qt_poly(Var q, Var t, std::initializer_list<QtTerm> terms) {
  Polynomial p;
  for (const auto& term : terms) p.add_term(qt_mono(q, term.qexp, t, term.texp), term.coeff);
  return p;
}

// The printed weighted Cartan matrix of the three-vertex quiver: every
// entry has denominator 1 - q^6 t^5.
inline Matrix<RationalFunction> golden_example33_cartan(Var q, Var t) {
  std::vector<CycleFactor> den{CycleFactor{qt_mono(q, 6, t, 5), +1}};
  auto entry = [&](std::initializer_list<QtTerm> terms) {
    return RationalFunction(qt_poly(q, t, terms), den);
  };
  Matrix<RationalFunction> m(3, 3);
  m.at(0, 0) = entry({{1, 0, 0}});
  m.at(0, 1) = entry({{1, 1, 1}, {1, 4, 3}});
  m.at(0, 2) = entry({{1, 2, 2}, {1, 5, 4}});
  m.at(1, 0) = entry({{1, 2, 2}, {1, 5, 4}});
  m.at(1, 1) = entry({{1, 0, 0}, {1, 3, 2}, {1, 3, 3}, {1, 6, 5}});
  m.at(1, 2) = entry({{2, 1, 1}, {1, 4, 3}, {1, 4, 4}});
  m.at(2, 0) = entry({{1, 1, 1}, {1, 4, 3}});
  m.at(2, 1) = entry({{1, 2, 1}, {1, 2, 2}, {2, 5, 4}});
  m.at(2, 2) = entry({{1, 0, 0}, {1, 3, 2}, {1, 3, 3}, {1, 6, 5}});
  return m;
}

// The printed Cartan matrix of its dual: all entries are polynomials.
inline Matrix<RationalFunction> golden_example33_dual_cartan(Var q, Var t) {
  auto entry = [&](std::initializer_list<QtTerm> terms) {
    return RationalFunction(qt_poly(q, t, terms));
  };
  Matrix<RationalFunction> m(3, 3);
  m.at(0, 0) = entry({{1, 0, 0}, {1, 6, 5}});
  m.at(0, 1) = entry({{1, 1, 1}, {1, 4, 3}});
  m.at(0, 2) = entry({{1, 2, 2}, {1, 5, 4}});
  m.at(1, 0) = entry({{1, 2, 2}, {1, 5, 4}});
  m.at(1, 1) = entry({{1, 0, 0}, {1, 3, 2}});
  m.at(1, 2) = entry({{2, 1, 1}, {1, 4, 3}});
  m.at(2, 0) = entry({{1, 1, 1}, {1, 4, 3}});
  m.at(2, 1) = entry({{1, 2, 1}});
  m.at(2, 2) = entry({{1, 0, 0}, {1, 3, 2}});
  return m;
}

struct CorpusQuiver {
  LocallyGentleQuiver lgq;
  VarTable vars;
  WeightFunction weights;  // generic
  uint64_t seed;
};

// Deterministic corpus: up to 6 vertices and 2n <= 12 arrows, generic
// weights. Same index, same quiver, on every platform.
inline CorpusQuiver corpus_member(int i) {
  int n = (i % 6) + 1;
  int max_arrows = (i / 6) % (2 * n + 1);
  uint64_t seed = 1000 + static_cast<uint64_t>(i);
  CorpusQuiver c{random_locally_gentle(n, max_arrows, seed), VarTable{}, WeightFunction{}, seed};
  c.weights = generic_weights(c.lgq.quiver(), c.vars);
  return c;
}

inline std::vector<CorpusQuiver> corpus_range(int first, int count) {
  std::vector<CorpusQuiver> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = first; i < first + count; ++i) out.push_back(corpus_member(i));
  return out;
}

inline std::vector<CorpusQuiver> corpus(int count) { return corpus_range(0, count); }

}  // namespace fixtures

#endif
