#include "diagram.hpp"

#include <algorithm>
#include <string>

namespace hg {

void validate_diagram(const HeegaardDiagram& h) {
  if (h.genus < 1) throw std::invalid_argument("diagram: genus must be >= 1");
  if (static_cast<int>(h.beta_words.size()) != h.genus) {
    throw std::invalid_argument("diagram: need exactly genus beta words");
  }
  for (const auto& word : h.beta_words) {
    for (const IntersectionPoint& p : word) {
      if (p.alpha < 0 || p.alpha >= h.genus) {
        throw std::invalid_argument("diagram: alpha index out of range");
      }
      if (p.sign != 1 && p.sign != -1) {
        throw std::invalid_argument("diagram: point sign must be +1 or -1");
      }
    }
  }
}

Presentation presentation_of(const HeegaardDiagram& h) {
  validate_diagram(h);
  Presentation p;
  p.num_generators = h.genus;
  p.relators.reserve(h.beta_words.size());
  for (const auto& word : h.beta_words) {
    Word r;
    r.reserve(word.size());
    for (const IntersectionPoint& pt : word) {
      r.push_back(Letter{pt.alpha, pt.sign});
    }
    p.relators.push_back(std::move(r));
  }
  return p;
}

IntMatrix count_matrix(const HeegaardDiagram& h) {
  validate_diagram(h);
  IntMatrix c(h.genus, h.genus);
  for (int j = 0; j < h.genus; ++j) {
    for (const IntersectionPoint& p : h.beta_words[j]) c.at(p.alpha, j) += 1;
  }
  return c;
}

IntMatrix algebraic_matrix(const HeegaardDiagram& h) {
  validate_diagram(h);
  IntMatrix a(h.genus, h.genus);
  for (int j = 0; j < h.genus; ++j) {
    for (const IntersectionPoint& p : h.beta_words[j]) a.at(p.alpha, j) += p.sign;
  }
  return a;
}

std::optional<long long> h1_order(const HeegaardDiagram& h) {
  const long long det = det_exact(algebraic_matrix(h));
  if (det == 0) return std::nullopt;
  return det < 0 ? -det : det;
}

namespace {

int parity_sign(const Perm& sigma) {
  return perm_sign(sigma) == Sign::Plus ? 1 : -1;
}

struct GeneratorScan {
  const HeegaardDiagram& h;
  long long cap;
  // points[i][j]: positions in beta word j of the alpha_i points.
  std::vector<std::vector<std::vector<int>>> points;
  std::vector<Generator> out;
  Perm sigma;
  std::vector<char> col_used;

  explicit GeneratorScan(const HeegaardDiagram& d, long long limit)
      : h(d),
        cap(limit),
        points(d.genus, std::vector<std::vector<int>>(d.genus)),
        sigma(static_cast<size_t>(d.genus)),
        col_used(static_cast<size_t>(d.genus), 0) {
    for (int j = 0; j < d.genus; ++j) {
      const auto& word = d.beta_words[j];
      for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        points[word[pos].alpha][j].push_back(pos);
      }
    }
  }

  void emit_choices() {
    const int g = h.genus;
    const int sgn = parity_sign(sigma);
    std::vector<int> choice(g, 0);  // index into points[i][sigma[i]]
    for (;;) {
      Generator gen;
      gen.sigma = sigma;
      gen.positions.resize(g);
      int grading = sgn;
      for (int i = 0; i < g; ++i) {
        const int pos = points[i][sigma[i]][choice[i]];
        gen.positions[i] = pos;
        grading *= h.beta_words[sigma[i]][pos].sign;
      }
      gen.grading = grading;
      if (static_cast<long long>(out.size()) >= cap) {
        throw ResourceLimitError("generators: more than " +
                                 std::to_string(cap) + " generators");
      }
      out.push_back(std::move(gen));
      // Odometer over choices, rightmost fastest, giving lexicographic order.
      int i = g - 1;
      while (i >= 0 &&
             choice[i] + 1 == static_cast<int>(points[i][sigma[i]].size())) {
        choice[i] = 0;
        --i;
      }
      if (i < 0) return;
      ++choice[i];
    }
  }

  void walk(int row) {
    const int g = h.genus;
    if (row == g) {
      emit_choices();
      return;
    }
    for (int j = 0; j < g; ++j) {
      if (col_used[j] || points[row][j].empty()) continue;
      col_used[j] = 1;
      sigma[row] = j;
      walk(row + 1);
      col_used[j] = 0;
    }
  }
};

}  // namespace

std::vector<Generator> generators(const HeegaardDiagram& h, long long cap) {
  validate_diagram(h);
  if (cap < 1) throw std::invalid_argument("generators: cap must be positive");
  GeneratorScan scan(h, cap);
  scan.walk(0);
  return std::move(scan.out);
}

long long euler_characteristic(const HeegaardDiagram& h, long long cap) {
  long long chi = 0;
  for (const Generator& g : generators(h, cap)) chi += g.grading;
  return chi;
}

StrongReport check_strong(const HeegaardDiagram& h, long long cap) {
  StrongReport r;
  r.det = det_exact(algebraic_matrix(h));
  if (r.det != 0) r.h1 = r.det < 0 ? -r.det : r.det;
  const auto gens = generators(h, cap);
  r.generator_count = static_cast<long long>(gens.size());
  for (const Generator& g : gens) {
    if (g.grading > 0) {
      ++r.plus_gradings;
    } else {
      ++r.minus_gradings;
    }
  }
  r.gradings_uniform = r.plus_gradings == 0 || r.minus_gradings == 0;
  r.euler_characteristic = r.plus_gradings - r.minus_gradings;
  r.is_strong = r.h1.has_value() && r.generator_count == *r.h1;
  return r;
}

HeegaardDiagram lens_diagram(long long p) {
  if (p < 1) throw std::invalid_argument("lens_diagram: p must be >= 1");
  HeegaardDiagram h;
  h.genus = 1;
  h.beta_words.emplace_back(static_cast<size_t>(p), IntersectionPoint{0, 1});
  return h;
}

HeegaardDiagram flip_alpha_orientation(const HeegaardDiagram& h, int alpha) {
  validate_diagram(h);
  if (alpha < 0 || alpha >= h.genus) {
    throw std::invalid_argument("flip_alpha_orientation: index out of range");
  }
  HeegaardDiagram out = h;
  for (auto& word : out.beta_words) {
    for (IntersectionPoint& p : word) {
      if (p.alpha == alpha) p.sign = -p.sign;
    }
  }
  return out;
}

HeegaardDiagram rotate_beta_word(const HeegaardDiagram& h, int j, int k) {
  validate_diagram(h);
  if (j < 0 || j >= h.genus) {
    throw std::invalid_argument("rotate_beta_word: index out of range");
  }
  HeegaardDiagram out = h;
  auto& word = out.beta_words[j];
  if (!word.empty()) {
    const int n = static_cast<int>(word.size());
    int shift = ((k % n) + n) % n;
    std::rotate(word.begin(), word.begin() + shift, word.end());
  }
  return out;
}

}  // namespace hg
