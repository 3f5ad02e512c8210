#include <algorithm>
#include <set>
#include <stdexcept>

#include "cgsb/window.hpp"

namespace cgsb {

namespace {

struct Builtin {
  const char* name;
  const char* text;
};

const Builtin kBuiltins[] = {
    {"ex00", R"cgsb(# One generator a with locality N = 2 and a single defining relation.
algebra {
  N = 2
  generators = a
}
relations {
  f = a (1) a - a (0) D a
}
)cgsb"},
    {"ex00-basis", R"cgsb(# The reduced basis obtained by completing ex00-one.cgsb.
algebra {
  N = 2
  generators = a
}
relations {
  f = a (1) a - a (0) D a
  g = a (0) a (0) a
}
)cgsb"},
    {"bfk04", R"cgsb(# A basis of the same ideal as ex00-two.cgsb that is not reduced.
algebra {
  N = 2
  generators = a
}
relations {
  f1 = a (1) a - a (0) D a
  f2 = a (0) a (0) a
  f3 = a (0) a (1) a
  f4 = a (1) a (0) a
  f5 = a (1) a (1) a
}
)cgsb"},
    {"virasoro", R"cgsb(# Loop Virasoro Lie conformal algebra, N = 2.
algebra {
  N = 2
  families = L
  order = abs-then-signed
}
table {
  L_i [0] L_j = -D L_{i+j}
  L_i [1] L_j = -2 * L_{i+j}
}
relations {
  s0[i, j | i != 0] = L_i (0) L_j - L_0 (0) L_{i+j}
  s1[i, j] = L_i (1) L_j + L_{i+j}
}
options {
  window = 3
  relation-multiplier = 3
}
)cgsb"},
    {"heisenberg-virasoro", R"cgsb(# Loop Heisenberg-Virasoro Lie conformal algebra, N = 2.
algebra {
  N = 2
  families = H, L
  rank = H < L
  order = abs-then-signed
}
table {
  L_i [0] L_j = D L_{i+j}
  L_i [1] L_j = 2 * L_{i+j}
  L_i [0] H_j = D H_{i+j}
  L_i [1] H_j = H_{i+j}
  H_i [0] H_j = 0
  H_i [1] H_j = 0
}
relations {
  s0[i, j | i != 0] = L_i (0) L_j - L_0 (0) L_{i+j}
  s1[i, j] = L_i (1) L_j - L_{i+j}
  g0[i, j] = L_i (0) H_j + H_j (1) D L_i - 2 * H_j (0) L_i - D H_{i+j}
  g1[i, j] = L_i (1) H_j + H_j (1) L_i - H_{i+j}
  q0[i, j, k | abs(i) >= abs(j) and i > 0 > j or i > j > 0 or i < j < 0] = H_i (0) L_{j+k} - H_{i+j} (0) L_k + H_j (0) L_{i+k} - H_0 (0) L_{i+j+k}
  q1[i, j | i != 0] = H_i (1) L_j - H_0 (1) L_{i+j}
  r0[i, j | i != 0] = H_i (0) H_j - H_0 (0) H_{i+j}
  r1[i, j] = H_i (1) H_j
}
options {
  window = 2
  relation-multiplier = 4
}
)cgsb"},
    {"heisenberg-virasoro-amended", R"cgsb(# Loop Heisenberg-Virasoro with the q0 side condition widened to admit i = j.
# Every composition in window 2 is trivial with relation-multiplier 5; at 4, two
# remainders reach indices outside the reduction window.
algebra {
  N = 2
  families = H, L
  rank = H < L
  order = abs-then-signed
}
table {
  L_i [0] L_j = D L_{i+j}
  L_i [1] L_j = 2 * L_{i+j}
  L_i [0] H_j = D H_{i+j}
  L_i [1] H_j = H_{i+j}
  H_i [0] H_j = 0
  H_i [1] H_j = 0
}
relations {
  s0[i, j | i != 0] = L_i (0) L_j - L_0 (0) L_{i+j}
  s1[i, j] = L_i (1) L_j - L_{i+j}
  g0[i, j] = L_i (0) H_j + H_j (1) D L_i - 2 * H_j (0) L_i - D H_{i+j}
  g1[i, j] = L_i (1) H_j + H_j (1) L_i - H_{i+j}
  q0[i, j, k | abs(i) >= abs(j) and i > 0 > j or i >= j > 0 or i <= j < 0] = H_i (0) L_{j+k} - H_{i+j} (0) L_k + H_j (0) L_{i+k} - H_0 (0) L_{i+j+k}
  q1[i, j | i != 0] = H_i (1) L_j - H_0 (1) L_{i+j}
  r0[i, j | i != 0] = H_i (0) H_j - H_0 (0) H_{i+j}
  r1[i, j] = H_i (1) H_j
}
options {
  window = 2
  relation-multiplier = 4
}
)cgsb"},
};

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.push_back(b.name);
  return out;
}

std::string builtin_text(const std::string& name) {
  for (const auto& b : kBuiltins)
    if (name == b.name) return b.text;
  throw std::invalid_argument("unknown built-in example '" + name + "'");
}

Presentation builtin(const std::string& name) { return parse_presentation(builtin_text(name)); }

std::vector<NormalWord> expected_irr(const std::string& name, const Signature& sig, std::int64_t W,
                                     std::size_t max_length, std::uint32_t max_dpow) {
  const bool lhv = name == "heisenberg-virasoro";
  const bool amended = name == "heisenberg-virasoro-amended";
  if (!lhv && !amended && name != "virasoro") throw std::invalid_argument("no closed-form Irr family for '" + name + "'");
  std::set<NormalWord> out;
  std::vector<Letter> ls;
  std::vector<std::uint32_t> js;
  auto push = [&](Letter l, std::uint32_t j) {
    ls.push_back(l);
    js.push_back(j);
  };
  auto emit = [&](Letter last) {
    if (ls.size() + 1 > max_length) return;
    std::vector<Letter> word = ls;
    word.push_back(last);
    for (std::uint32_t t = 0; t <= max_dpow; ++t) out.insert(NormalWord(word, js, t));
  };
  auto reset = [&] {
    ls.clear();
    js.clear();
  };
  const std::size_t n = max_length;
  for (std::int64_t i = -W; i <= W; ++i) {
    Letter Li = sig.letter("L", i);
    if (!lhv && !amended) {
      // L_0(0) ... L_0(0) D^t L_i
      for (std::size_t l = 0; l < n; ++l, reset()) {
        for (std::size_t a = 0; a < l; ++a) push(sig.letter("L", 0), 0);
        emit(Li);
      }
      continue;
    }
    Letter H0 = sig.letter("H", 0), Hm1 = sig.letter("H", -1), Hi = sig.letter("H", i), L0 = sig.letter("L", 0);
    if (lhv) {
      // H_0(0) ... H_0(n) (k letters) L_0(0) ... (l letters) D^t L_i, n in {0, 1}
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; k + l < n; ++l)
          for (std::uint32_t last = 0; last <= (k ? 1u : 0u); ++last, reset()) {
            for (std::size_t a = 0; a < k; ++a) push(H0, a + 1 == k ? last : 0);
            for (std::size_t a = 0; a < l; ++a) push(L0, 0);
            emit(Li);
          }
      emit(Hi);
      push(H0, 0), emit(Hi), reset();
      push(Hm1, 0), emit(Li), reset();
      continue;
    }
    // H_0(0)^a D^t H_i and H_0(0)^a X L_0(0)^l D^t L_i with X empty, H_0(1) or H_-1(0)
    for (std::size_t a = 0; a < n; ++a, reset()) {
      for (std::size_t b = 0; b < a; ++b) push(H0, 0);
      emit(Hi);
    }
    for (int x = 0; x < 3; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t l = 0; a + l < n; ++l, reset()) {
          for (std::size_t b = 0; b < a; ++b) push(H0, 0);
          if (x == 1) push(H0, 1);
          if (x == 2) push(Hm1, 0);
          for (std::size_t b = 0; b < l; ++b) push(L0, 0);
          emit(Li);
        }
  }
  return {out.begin(), out.end()};
}

}  // namespace cgsb
